#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "morphfrac/mesh.hpp"

namespace mf {

/// Material block in N / mm / s / MPa units (densities t/mm^3, unit thickness).
struct MaterialParams {
    double E = 0.0;          // Young's modulus, MPa
    double nu = 1.0 / 3.0;   // Poisson ratio (bond-based 2D constraint)
    double rho = 0.0;        // density, t/mm^3
    double delta = 0.0;      // horizon, mm (default 3 * avg element size)
    double l = 0.0;          // kernel decay length, mm (default delta / 15)
    double tau0 = 0.0;       // micro-modulus coefficient, set by calibrate()
    double s_crit = 0.0;     // critical stretch
    double sigma_crit = 0.0; // strength, MPa (strength criterion only)

    /// Fills delta/l defaults from the mesh size, calibrates tau0, and derives
    /// s_crit from g0 when given. g0 in N/mm (J/mm^2 * 1000).
    void resolve(double avg_dx, std::optional<double> g0_n_per_mm);
};

struct Bond {
    int elem_a, qp_a;
    int elem_b, qp_b;
    Vec2 xi;         // reference offset a -> b, mm
    double r;        // |xi|
    double c0;       // micro-modulus at r (filled by bind_material)
    double w_a, w_b; // endpoint quadrature weights, mm^2
    std::uint8_t mu;        // 1 intact, 0 broken (transitions 1 -> 0 only)
    std::uint8_t in_matrix; // contribution currently present in K_pd
};

enum class PdQuadrature : std::uint8_t { Centroid, Gauss };

struct BondTable {
    std::vector<Bond> bonds;
    std::vector<std::vector<int>> by_element;  // element id -> incident bond indices
    PdQuadrature mode = PdQuadrature::Centroid;
    double delta = 0.0;

    /// PD quadrature point indices of an element under the table's mode.
    /// Centroid mode uses quad point 0 only for triangles and a dedicated
    /// centroid entry otherwise (see pd_point_* helpers in bonds.cpp).
    void bind_material(const MaterialParams& mat);
    int n_intact() const;
};

/// PD quadrature point position and weight for (elem, local pd index).
Vec2 pd_point_position(const Mesh& mesh, const BondTable& table, int elem, int pd_idx);
double pd_point_weight(const Mesh& mesh, const BondTable& table, int elem, int pd_idx);
int pd_point_count(const Mesh& mesh, const BondTable& table, int elem);
/// Parent coordinates of the pd point (for displacement interpolation).
Vec2 pd_point_param(const Mesh& mesh, const BondTable& table, int elem, int pd_idx);

/// All quadrature-point pairs from distinct elements within the horizon whose
/// connecting segment does not properly cross a slit.
BondTable find_bond_candidates(const Mesh& mesh, double delta,
                               PdQuadrature mode = PdQuadrature::Centroid);

/// tau0 * exp(-r / l)
double micro_modulus_c0(double r, double tau0, double l);

/// int_0^delta r^n exp(-r/l) dr, closed form.
double radial_kernel_moment(int n, double delta, double l);

/// tau0 such that the bond moment tensor carries the full plane-stress
/// stiffness: the hybrid energy density with alpha == 1 then matches the
/// intact continuum energy density pointwise. Requires nu == 1/3.
double calibrate_tau0(double E, double nu, double delta, double l);

/// Critical stretch from the energy release rate (N/mm): the dissipation of
/// all bonds crossing a unit crack line equals g0.
double critical_stretch_from_g0(double g0, double tau0, double l, double delta);

/// Geometrically exact relative elongation (|eta + xi| - |xi|) / |xi|.
double bond_stretch(const Vec2& xi, const Vec2& eta);

/// Breaks every intact bond whose current stretch reaches s_crit. When
/// `active` is given, bonds with active[b] == false are skipped (bonds outside
/// the PD subdomain carry no stiffness and cannot fail). Returns the indices
/// broken by this call, ascending.
std::vector<int> apply_failure(BondTable& table, const Mesh& mesh,
                               const std::vector<double>& u, double s_crit,
                               const std::vector<bool>* active = nullptr);

struct DamageValue {
    double phi = 0.0;
    bool defined = false;  // false when the point has no bonds
};

/// 1 - (sum mu * w_crit) / (sum w_crit) over the element's bonds,
/// w_crit = 0.5 * c0 * s_crit^2 * r^4.
DamageValue damage(int elem, const BondTable& table, double s_crit);

}  // namespace mf
