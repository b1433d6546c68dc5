#include "morphfrac/adaptivity.hpp"

#include <algorithm>
#include <cmath>

namespace mf {

std::vector<FlagPoint> flags_from_broken_bonds(const std::vector<int>& newly_broken,
                                               const BondTable& table, const Mesh& mesh,
                                               const FlagPointSet& flags, double t,
                                               double r_in, double r_out) {
    std::vector<FlagPoint> out;
    std::vector<int> elems;
    for (int bi : newly_broken) {
        elems.push_back(table.bonds[bi].elem_a);
        elems.push_back(table.bonds[bi].elem_b);
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int eid : elems) {
        if (flags.element_flagged(eid)) continue;
        out.push_back({mesh.elements[eid].centroid, t, r_in, r_out, eid});
    }
    return out;
}

double von_mises(double s11, double s22, double s33, double s12, double s23, double s31,
                 bool literal_shear_sum) {
    const double d1 = s11 - s22, d2 = s22 - s33, d3 = s33 - s11;
    const double shear = literal_shear_sum
                             ? (s12 + s23 + s31) * (s12 + s23 + s31)
                             : s12 * s12 + s23 * s23 + s31 * s31;
    return std::sqrt(0.5 * (d1 * d1 + d2 * d2 + d3 * d3 + 6.0 * shear));
}

std::vector<FlagPoint> flags_from_strength(const Mesh& mesh, const std::vector<double>& u,
                                           const MorphingField& field, const BondTable& table,
                                           const SymTensor3& e0, const Criterion& crit,
                                           const FlagPointSet& flags, double t,
                                           double r_in, double r_out) {
    const auto sv = von_mises_field(mesh, u, field, table, e0, crit.literal_shear_sum);
    std::vector<FlagPoint> out;
    for (const auto& e : mesh.elements) {
        if (flags.element_flagged(e.id)) continue;
        if (sv[e.id] >= crit.sigma_crit) out.push_back({e.centroid, t, r_in, r_out, e.id});
    }
    return out;
}

std::vector<double> von_mises_field(const Mesh& mesh, const std::vector<double>& u,
                                    const MorphingField& field, const BondTable& table,
                                    const SymTensor3& e0, bool literal_shear_sum) {
    std::vector<double> out(mesh.elements.size(), 0.0);
    for (const auto& e : mesh.elements) {
        const Vec2 cparam = e.n_nodes == 3 ? Vec2{1.0 / 3.0, 1.0 / 3.0} : Vec2{0.0, 0.0};
        const auto eps = element_strain(mesh, e.id, cparam, u);
        const SymTensor3 d = effective_stiffness(e.id, field.alpha_at_centroid(e.id), field,
                                                 table, mesh, e0);
        const auto s = d.apply(eps);
        out[e.id] = von_mises(s[0], s[1], 0.0, s[2], 0.0, 0.0, literal_shear_sum);
    }
    return out;
}

ExpansionEvent expand(MorphingField& field, const std::vector<FlagPoint>& new_flags,
                      const Mesh& mesh, const FlagPointSet& all_flags) {
    ExpansionEvent ev;
    ev.new_flags = new_flags;
    if (new_flags.empty()) return ev;
    ev.alpha_changed = merge_alpha(field, new_flags);

    // Candidate CE elements: anything a new flag's full-weight disk can reach.
    std::vector<int> candidates;
    std::vector<Vec2> centroids;
    centroids.reserve(mesh.elements.size());
    for (const auto& e : mesh.elements) centroids.push_back(e.centroid);
    SpatialHash grid;
    grid.build(centroids, std::max(mesh.avg_dx(), 1e-12));
    for (const auto& flag : new_flags) {
        grid.for_each_in_radius(flag.pos, flag.r_in + 2.0 * mesh.avg_dx(), [&](int eid) {
            if (mesh.elements[eid].kind == ElemKind::CE) candidates.push_back(eid);
        });
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Fully-PD test: alpha = 1 at the centroid and at every vertex, evaluated
    // analytically against the whole flag history.
    auto alpha_analytic = [&](const Vec2& x) {
        double a = 0.0;
        for (const auto& p : all_flags.points) {
            a = std::max(a, alpha_for_flag(x, p));
            if (a >= 1.0) break;
        }
        for (const auto& p : new_flags) {
            a = std::max(a, alpha_for_flag(x, p));
            if (a >= 1.0) break;
        }
        return a;
    };
    for (int eid : candidates) {
        const Element& e = mesh.elements[eid];
        if (field.alpha_at_centroid(eid) < 1.0) continue;
        bool all_one = true;
        for (int i = 0; i < e.n_nodes && all_one; ++i)
            all_one = alpha_analytic(mesh.nodes[e.nodes[i]].pos) >= 1.0;
        if (all_one) ev.convert_ids.push_back(eid);
    }
    ev.kappa_alpha = !ev.convert_ids.empty() || !ev.alpha_changed.empty();
    return ev;
}

RadiusCheck check_expansion_radius(double r_p, double min_edge, double dt, double c_rayleigh) {
    RadiusCheck rc;
    rc.violates_min_edge = r_p < min_edge;
    rc.violates_wave_bound = r_p < c_rayleigh * dt;
    rc.ok = !rc.violates_min_edge && !rc.violates_wave_bound;
    return rc;
}

}  // namespace mf
