#include "morphfrac/bonds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "morphfrac/error.hpp"

namespace mf {

void MaterialParams::resolve(double avg_dx, std::optional<double> g0_n_per_mm) {
    if (E <= 0 || rho <= 0) fail(ErrorKind::Parameter, "material: E and rho must be positive");
    if (delta <= 0) delta = 3.0 * avg_dx;
    if (l <= 0) l = delta / 15.0;
    tau0 = calibrate_tau0(E, nu, delta, l);
    if (g0_n_per_mm) {
        if (s_crit > 0)
            fail(ErrorKind::Parameter,
                 "material: give either critical_stretch or energy_release_rate, not both");
        s_crit = critical_stretch_from_g0(*g0_n_per_mm, tau0, l, delta);
    }
}

int BondTable::n_intact() const {
    int n = 0;
    for (const auto& b : bonds) n += b.mu;
    return n;
}

void BondTable::bind_material(const MaterialParams& mat) {
    for (auto& b : bonds) b.c0 = micro_modulus_c0(b.r, mat.tau0, mat.l);
}

int pd_point_count(const Mesh& mesh, const BondTable& table, int elem) {
    return table.mode == PdQuadrature::Centroid ? 1 : mesh.elements[elem].n_quad;
}

Vec2 pd_point_position(const Mesh& mesh, const BondTable& table, int elem, int pd_idx) {
    const Element& e = mesh.elements[elem];
    if (table.mode == PdQuadrature::Centroid) return e.centroid;
    return e.quad[pd_idx].pos;
}

double pd_point_weight(const Mesh& mesh, const BondTable& table, int elem, int pd_idx) {
    const Element& e = mesh.elements[elem];
    if (table.mode == PdQuadrature::Centroid) return e.area;
    return e.quad[pd_idx].weight;
}

Vec2 pd_point_param(const Mesh& mesh, const BondTable& table, int elem, int pd_idx) {
    const Element& e = mesh.elements[elem];
    if (table.mode == PdQuadrature::Centroid)
        return e.n_nodes == 3 ? Vec2{1.0 / 3.0, 1.0 / 3.0} : Vec2{0.0, 0.0};
    return e.quad[pd_idx].param;
}

BondTable find_bond_candidates(const Mesh& mesh, double delta, PdQuadrature mode) {
    if (delta <= 0) fail(ErrorKind::Parameter, "find_bond_candidates: delta must be positive");
    BondTable table;
    table.mode = mode;
    table.delta = delta;

    // flat list of pd points
    struct Pt {
        int elem, idx;
        Vec2 pos;
        double w;
    };
    std::vector<Pt> pts;
    std::vector<Vec2> positions;
    for (const auto& e : mesh.elements) {
        const int n = mode == PdQuadrature::Centroid ? 1 : e.n_quad;
        for (int k = 0; k < n; ++k) {
            Pt p;
            p.elem = e.id;
            p.idx = k;
            p.pos = mode == PdQuadrature::Centroid ? e.centroid : e.quad[k].pos;
            p.w = mode == PdQuadrature::Centroid ? e.area : e.quad[k].weight;
            pts.push_back(p);
            positions.push_back(p.pos);
        }
    }

    SpatialHash grid;
    grid.build(positions, delta);
    const double r2max = delta * delta * (1.0 + 1e-12);

    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        grid.for_each_in_radius(pts[i].pos, delta * (1.0 + 1e-12), [&](int j) {
            if (j <= i) return;                       // unordered pairs once
            if (pts[j].elem == pts[i].elem) return;   // distinct elements only
            const Vec2 xi = pts[j].pos - pts[i].pos;
            if (xi.norm2() > r2max) return;
            for (const auto& slit : mesh.slits) {
                if (segments_properly_intersect(pts[i].pos, pts[j].pos, slit.a, slit.b))
                    return;
            }
            Bond b;
            b.elem_a = pts[i].elem;
            b.qp_a = pts[i].idx;
            b.elem_b = pts[j].elem;
            b.qp_b = pts[j].idx;
            b.xi = xi;
            b.r = xi.norm();
            b.c0 = 0.0;
            b.w_a = pts[i].w;
            b.w_b = pts[j].w;
            b.mu = 1;
            b.in_matrix = 0;
            table.bonds.push_back(b);
        });
    }

    table.by_element.assign(mesh.elements.size(), {});
    for (int bi = 0; bi < static_cast<int>(table.bonds.size()); ++bi) {
        table.by_element[table.bonds[bi].elem_a].push_back(bi);
        table.by_element[table.bonds[bi].elem_b].push_back(bi);
    }
    return table;
}

double micro_modulus_c0(double r, double tau0, double l) {
    return tau0 * std::exp(-r / l);
}

double radial_kernel_moment(int n, double delta, double l) {
    // I_n = -l * delta^n * exp(-delta/l) + n*l*I_{n-1},  I_0 = l*(1 - exp(-delta/l))
    const double ex = std::exp(-delta / l);
    double in = l * (1.0 - ex);
    double dpow = 1.0;
    for (int k = 1; k <= n; ++k) {
        dpow *= delta;
        in = -l * dpow * ex + k * l * in;
    }
    return in;
}

double calibrate_tau0(double E, double nu, double delta, double l) {
    if (std::abs(nu - 1.0 / 3.0) > 1e-9)
        fail(ErrorKind::Calibration,
             "bond-based plane stress requires nu = 1/3, got " + std::to_string(nu));
    if (E <= 0 || delta <= 0 || l <= 0)
        fail(ErrorKind::Parameter, "calibrate_tau0: E, delta, l must be positive");
    // The fourth-order bond moment must carry the full stiffness twice over:
    // pairwise energy splits between endpoints, so the per-point PD density is
    // (1/4) eps:M:eps against the continuum (1/2) eps:E0:eps.
    const double i5 = radial_kernel_moment(5, delta, l);
    return 2.0 * E / (1.0 - nu * nu) / (0.75 * std::numbers::pi * i5);
}

double critical_stretch_from_g0(double g0, double tau0, double l, double delta) {
    if (g0 < 0 || tau0 <= 0 || l <= 0 || delta <= 0)
        fail(ErrorKind::Parameter, "critical_stretch_from_g0: bad inputs");
    if (g0 == 0.0) return 0.0;
    // Integrating the crossing-bond dissipation over a unit crack line:
    //   g0 = s^2 * tau0 * int_0^delta r^6 exp(-r/l) dr
    const double i6 = radial_kernel_moment(6, delta, l);
    return std::sqrt(g0 / (tau0 * i6));
}

double bond_stretch(const Vec2& xi, const Vec2& eta) {
    const double r = xi.norm();
    if (r <= 0.0) fail(ErrorKind::Parameter, "bond_stretch: zero-length bond");
    return ((xi + eta).norm() - r) / r;
}

std::vector<int> apply_failure(BondTable& table, const Mesh& mesh,
                               const std::vector<double>& u, double s_crit,
                               const std::vector<bool>* active) {
    std::vector<int> broken;
    for (int bi = 0; bi < static_cast<int>(table.bonds.size()); ++bi) {
        Bond& b = table.bonds[bi];
        if (!b.mu) continue;
        if (active && !(*active)[bi]) continue;
        const Vec2 ua = displacement_at_param(mesh, b.elem_a,
                                              pd_point_param(mesh, table, b.elem_a, b.qp_a), u);
        const Vec2 ub = displacement_at_param(mesh, b.elem_b,
                                              pd_point_param(mesh, table, b.elem_b, b.qp_b), u);
        if (bond_stretch(b.xi, ub - ua) >= s_crit) {
            b.mu = 0;
            broken.push_back(bi);
        }
    }
    return broken;
}

DamageValue damage(int elem, const BondTable& table, double s_crit) {
    DamageValue d;
    const auto& incident = table.by_element[elem];
    if (incident.empty()) return d;  // undefined: report 0 with flag
    double wsum = 0.0, wintact = 0.0;
    for (int bi : incident) {
        const Bond& b = table.bonds[bi];
        const double w = 0.5 * b.c0 * s_crit * s_crit * b.r * b.r * b.r * b.r;
        wsum += w;
        wintact += b.mu * w;
    }
    d.defined = true;
    d.phi = wsum > 0 ? 1.0 - wintact / wsum : 0.0;
    return d;
}

}  // namespace mf
