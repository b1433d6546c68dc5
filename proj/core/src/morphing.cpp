#include "morphfrac/morphing.hpp"

#include <algorithm>
#include <cmath>

#include "morphfrac/error.hpp"

namespace mf {

void MorphingField::build(const Mesh& mesh) {
    positions_.clear();
    centroid_of_.assign(mesh.elements.size(), -1);
    quad_of_.assign(mesh.elements.size(), {-1, -1, -1, -1});
    for (const auto& e : mesh.elements) {
        const int ci = static_cast<int>(positions_.size());
        centroid_of_[e.id] = ci;
        positions_.push_back(e.centroid);
        for (int q = 0; q < e.n_quad; ++q) {
            if (e.n_nodes == 3) {
                quad_of_[e.id][q] = ci;  // triangle quad point is the centroid
            } else {
                quad_of_[e.id][q] = static_cast<int>(positions_.size());
                positions_.push_back(e.quad[q].pos);
            }
        }
    }
    alpha_.assign(positions_.size(), 0.0);
    // cell size on the scale of an element; queries are O(neighborhood)
    grid_.build(positions_, std::max(mesh.avg_dx(), 1e-12));
    revision_ = 0;
}

bool MorphingField::raise(int point, double value) {
    if (value > alpha_[point]) {
        alpha_[point] = std::min(value, 1.0);
        return true;
    }
    return false;
}

double cubic_transition(double d, double r_in, double r_out) {
    if (r_out <= r_in) fail(ErrorKind::Parameter, "cubic_transition: r_out must exceed r_in");
    const double h = r_out - r_in;
    const double f = 1.0 + (d - r_in) * (d - r_in) * (2.0 * d - 3.0 * r_out + r_in) / (h * h * h);
    return std::clamp(f, 0.0, 1.0);
}

double alpha_for_flag(const Vec2& x, const FlagPoint& p) {
    const double d = (x - p.pos).norm();
    if (d <= p.r_in) return 1.0;
    if (d >= p.r_out) return 0.0;
    return cubic_transition(d, p.r_in, p.r_out);
}

std::vector<int> merge_alpha(MorphingField& field, std::span<const FlagPoint> new_flags) {
    std::vector<int> changed;
    for (const auto& flag : new_flags) {
        field.grid().for_each_in_radius(flag.pos, flag.r_out, [&](int pt) {
            const double a = alpha_for_flag(field.positions()[pt], flag);
            if (field.raise(pt, a)) changed.push_back(pt);
        });
    }
    std::sort(changed.begin(), changed.end());
    changed.erase(std::unique(changed.begin(), changed.end()), changed.end());
    if (!changed.empty()) field.bump_revision();
    return changed;
}

SymTensor3 effective_stiffness(int elem, double alpha_x, const MorphingField& field,
                               const BondTable& table, const Mesh& mesh,
                               const SymTensor3& e0, double psd_abort_fraction) {
    // Discrete form of the stiffness-degradation integral: the bond fan of the
    // element samples the horizon, far-endpoint areas are the weights.
    SymTensor3 m{};
    for (int bi : table.by_element[elem]) {
        const Bond& b = table.bonds[bi];
        const bool a_side = b.elem_a == elem;
        const int far_elem = a_side ? b.elem_b : b.elem_a;
        const int far_qp = a_side ? b.qp_b : b.qp_a;
        const double w_far = a_side ? b.w_b : b.w_a;
        const double alpha_far = table.mode == PdQuadrature::Centroid
                                     ? field.alpha_at_centroid(far_elem)
                                     : field.alpha_at_quad(far_elem, far_qp);
        const double abar = 0.5 * (alpha_x + alpha_far);
        if (abar == 0.0) continue;
        const double f = abar * b.c0 * w_far;
        const double xx = b.xi.x * b.xi.x, yy = b.xi.y * b.xi.y, xy = b.xi.x * b.xi.y;
        m.at(0, 0) += f * xx * xx;
        m.at(1, 1) += f * yy * yy;
        m.at(0, 1) += f * xx * yy;
        m.at(2, 2) += f * xx * yy;
        m.at(0, 2) += f * xx * xy;
        m.at(1, 2) += f * yy * xy;
    }
    SymTensor3 e = e0 - m * 0.5;
    const double min_eig = e.clip_to_psd();
    if (min_eig < -psd_abort_fraction * e0.frobenius_norm())
        fail(ErrorKind::Assembly,
             "effective stiffness at element " + std::to_string(elem) +
                 " is non-PSD beyond the clip tolerance (min eigenvalue " +
                 std::to_string(min_eig) + ")");
    return e;
}

Region classify(int point, const MorphingField& field, double delta) {
    bool all_zero = field.alpha(point) == 0.0;
    bool all_one = field.alpha(point) == 1.0;
    field.grid().for_each_in_radius(field.positions()[point], delta, [&](int q) {
        const double a = field.alpha(q);
        if (a != 0.0) all_zero = false;
        if (a != 1.0) all_one = false;
    });
    if (all_zero) return Region::Omega1;
    if (all_one) return Region::Omega2;
    return Region::OmegaM;
}

}  // namespace mf
