#pragma once
#include <array>
#include <vector>

#include "morphfrac/bonds.hpp"
#include "morphfrac/mesh.hpp"
#include "morphfrac/morphing.hpp"
#include "morphfrac/scenarios.hpp"
#include "morphfrac/sparse.hpp"

namespace mf {

/// Node <-> global dof bijection: node n owns dofs (2n, 2n+1).
struct DofMap {
    int n_nodes = 0;
    int total_dofs() const { return 2 * n_nodes; }
    int dof(int node, int comp) const { return 2 * node + comp; }
};

/// Strain-displacement rows (exx, eyy, gxy) at one quadrature point.
struct BMatrix {
    std::array<std::array<double, 8>, 3> b{};
    int n_cols = 0;  // 2 * n_nodes
};
BMatrix element_bmatrix(const Mesh& mesh, int elem, const Vec2& param);

/// Strain (exx, eyy, gxy) at parent coordinates `param` of the element.
std::array<double, 3> element_strain(const Mesh& mesh, int elem, const Vec2& param,
                                     const std::vector<double>& u);

enum class MassMode { Consistent, Lumped };

SparseSym assemble_mass(const Mesh& mesh, double rho, MassMode mode);
/// Row-sum lumped masses per dof.
std::vector<double> lumped_mass_vector(const Mesh& mesh, double rho);

/// FE stiffness with the morphing-degraded stiffness tensor at each
/// quadrature point.
SparseSym assemble_ccm_stiffness(const Mesh& mesh, const MorphingField& field,
                                 const BondTable& table, const SymTensor3& e0,
                                 double psd_abort_fraction = 0.25);

/// Pair stiffness of every intact bond, weighted by the alpha half-sum of its
/// endpoints. Marks included bonds in the table.
SparseSym assemble_pd_stiffness(const Mesh& mesh, BondTable& table,
                                const MorphingField& field);

/// Removes the listed bonds' contributions in place; equals reassembly with
/// those bonds dropped as long as alpha is unchanged since assembly.
void subtract_broken_bonds(SparseSym& k_pd, const Mesh& mesh, BondTable& table,
                           const MorphingField& field, const std::vector<int>& bond_ids);

// ---- loads ----------------------------------------------------------------

enum class EdgeSelector { Left, Right, Top, Bottom, HoleRim };
enum class LoadKind { None, NormalStep, NormalRamp, Explosion };

struct LoadProgram {
    LoadKind kind = LoadKind::None;
    std::vector<EdgeSelector> edges;
    double magnitude = 0.0;  // sigma0 / P0, MPa
    double t0 = 0.0;         // ramp duration, s
    ExplosionParams explosion;
    Vec2 rim_center;
    double rim_radius = 0.0;
    Vec2 body_force;  // N/mm^3

    /// Signed traction magnitude along the outward normal at time t.
    double traction(double t) const;

    bool operator==(const LoadProgram&) const = default;
};

struct BoundLoad {
    LoadProgram program;
    std::vector<std::pair<int, int>> edges;  // (element, local edge)
};

/// Resolves the program's selectors to boundary edges. Empty selection fails.
BoundLoad bind_load(const Mesh& mesh, const LoadProgram& program);

/// Consistent nodal forces from the bound tractions and body force at time t.
std::vector<double> assemble_load(const Mesh& mesh, const BoundLoad& load, double t);

// ---- conversion bookkeeping ------------------------------------------------

/// Rebuilds a per-dof state vector after a conversion event: every new node
/// inherits the values of the node it was copied from.
std::vector<double> remap_state(const std::vector<double>& u, const NodeMap& map);

}  // namespace mf
