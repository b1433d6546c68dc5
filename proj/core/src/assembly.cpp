#include "morphfrac/assembly.hpp"

#include <algorithm>
#include <cmath>

#include "morphfrac/error.hpp"

namespace mf {

BMatrix element_bmatrix(const Mesh& mesh, int elem, const Vec2& param) {
    const Element& e = mesh.elements[elem];
    BMatrix bm;
    bm.n_cols = 2 * e.n_nodes;
    double dndx[4], dndy[4];
    if (e.n_nodes == 3) {
        const Vec2 p0 = mesh.nodes[e.nodes[0]].pos;
        const Vec2 p1 = mesh.nodes[e.nodes[1]].pos;
        const Vec2 p2 = mesh.nodes[e.nodes[2]].pos;
        const double inv2a = 1.0 / (2.0 * e.area);
        dndx[0] = (p1.y - p2.y) * inv2a;
        dndy[0] = (p2.x - p1.x) * inv2a;
        dndx[1] = (p2.y - p0.y) * inv2a;
        dndy[1] = (p0.x - p2.x) * inv2a;
        dndx[2] = (p0.y - p1.y) * inv2a;
        dndy[2] = (p1.x - p0.x) * inv2a;
    } else {
        const double xi = param.x, eta = param.y;
        const double dxi[4] = {-0.25 * (1 - eta), 0.25 * (1 - eta), 0.25 * (1 + eta),
                               -0.25 * (1 + eta)};
        const double deta[4] = {-0.25 * (1 - xi), -0.25 * (1 + xi), 0.25 * (1 + xi),
                                0.25 * (1 - xi)};
        double j00 = 0, j01 = 0, j10 = 0, j11 = 0;
        for (int k = 0; k < 4; ++k) {
            const Vec2 p = mesh.nodes[e.nodes[k]].pos;
            j00 += dxi[k] * p.x;
            j01 += dxi[k] * p.y;
            j10 += deta[k] * p.x;
            j11 += deta[k] * p.y;
        }
        const double det = j00 * j11 - j01 * j10;
        const double i00 = j11 / det, i01 = -j01 / det, i10 = -j10 / det, i11 = j00 / det;
        for (int k = 0; k < 4; ++k) {
            dndx[k] = i00 * dxi[k] + i01 * deta[k];
            dndy[k] = i10 * dxi[k] + i11 * deta[k];
        }
    }
    for (int k = 0; k < e.n_nodes; ++k) {
        bm.b[0][2 * k] = dndx[k];
        bm.b[1][2 * k + 1] = dndy[k];
        bm.b[2][2 * k] = dndy[k];
        bm.b[2][2 * k + 1] = dndx[k];
    }
    return bm;
}

std::array<double, 3> element_strain(const Mesh& mesh, int elem, const Vec2& param,
                                     const std::vector<double>& u) {
    const Element& e = mesh.elements[elem];
    const BMatrix bm = element_bmatrix(mesh, elem, param);
    std::array<double, 3> eps{};
    for (int k = 0; k < e.n_nodes; ++k) {
        const int n = e.nodes[k];
        for (int r = 0; r < 3; ++r)
            eps[r] += bm.b[r][2 * k] * u[2 * n] + bm.b[r][2 * k + 1] * u[2 * n + 1];
    }
    return eps;
}

SparseSym assemble_mass(const Mesh& mesh, double rho, MassMode mode) {
    if (rho <= 0) fail(ErrorKind::Parameter, "assemble_mass: density must be positive");
    SparseSym m(2 * static_cast<int>(mesh.nodes.size()));
    for (const auto& e : mesh.elements) {
        double me[4][4] = {};
        if (e.n_nodes == 3) {
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) me[a][b] = rho * e.area / 12.0 * (a == b ? 2.0 : 1.0);
        } else {
            for (int q = 0; q < e.n_quad; ++q) {
                const auto n = shape_values(e, e.quad[q].param);
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b) me[a][b] += rho * n[a] * n[b] * e.quad[q].weight;
            }
        }
        if (mode == MassMode::Lumped) {
            for (int a = 0; a < e.n_nodes; ++a) {
                double row = 0.0;
                for (int b = 0; b < e.n_nodes; ++b) row += me[a][b];
                for (int c = 0; c < 2; ++c)
                    m.add(2 * e.nodes[a] + c, 2 * e.nodes[a] + c, row);
            }
        } else {
            for (int a = 0; a < e.n_nodes; ++a) {
                for (int b = 0; b < e.n_nodes; ++b) {
                    const int ga = e.nodes[a], gb = e.nodes[b];
                    for (int c = 0; c < 2; ++c) {
                        const int gi = 2 * ga + c, gj = 2 * gb + c;
                        if (gi <= gj) m.add(gi, gj, me[a][b]);
                    }
                }
            }
        }
    }
    return m;
}

std::vector<double> lumped_mass_vector(const Mesh& mesh, double rho) {
    std::vector<double> diag(2 * mesh.nodes.size(), 0.0);
    for (const auto& e : mesh.elements) {
        if (e.n_nodes == 3) {
            for (int a = 0; a < 3; ++a) {
                const double v = rho * e.area / 3.0;
                diag[2 * e.nodes[a]] += v;
                diag[2 * e.nodes[a] + 1] += v;
            }
        } else {
            for (int a = 0; a < 4; ++a) {
                double row = 0.0;
                for (int q = 0; q < e.n_quad; ++q) {
                    const auto n = shape_values(e, e.quad[q].param);
                    for (int b = 0; b < 4; ++b) row += rho * n[a] * n[b] * e.quad[q].weight;
                }
                diag[2 * e.nodes[a]] += row;
                diag[2 * e.nodes[a] + 1] += row;
            }
        }
    }
    return diag;
}

SparseSym assemble_ccm_stiffness(const Mesh& mesh, const MorphingField& field,
                                 const BondTable& table, const SymTensor3& e0,
                                 double psd_abort_fraction) {
    SparseSym k(2 * static_cast<int>(mesh.nodes.size()));
    for (const auto& e : mesh.elements) {
        double ke[8][8] = {};
        for (int q = 0; q < e.n_quad; ++q) {
            const double alpha_x = field.alpha_at_quad(e.id, q);
            const SymTensor3 d = effective_stiffness(e.id, alpha_x, field, table, mesh, e0,
                                                     psd_abort_fraction);
            const BMatrix bm = element_bmatrix(mesh, e.id, e.quad[q].param);
            const double w = e.quad[q].weight;
            // ke += B^T D B w
            double db[3][8] = {};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < bm.n_cols; ++c)
                    for (int s = 0; s < 3; ++s) db[r][c] += d.at(r, s) * bm.b[s][c];
            for (int i = 0; i < bm.n_cols; ++i)
                for (int j = 0; j < bm.n_cols; ++j) {
                    double v = 0.0;
                    for (int r = 0; r < 3; ++r) v += bm.b[r][i] * db[r][j];
                    ke[i][j] += v * w;
                }
        }
        for (int i = 0; i < 2 * e.n_nodes; ++i) {
            const int gi = 2 * e.nodes[i / 2] + i % 2;
            for (int j = 0; j < 2 * e.n_nodes; ++j) {
                const int gj = 2 * e.nodes[j / 2] + j % 2;
                if (gi <= gj) k.add(gi, gj, ke[i][j]);
            }
        }
    }
    return k;
}

namespace {

double bond_alpha_half_sum(const BondTable& table, const MorphingField& field, const Bond& b) {
    if (table.mode == PdQuadrature::Centroid)
        return 0.5 * (field.alpha_at_centroid(b.elem_a) + field.alpha_at_centroid(b.elem_b));
    return 0.5 * (field.alpha_at_quad(b.elem_a, b.qp_a) + field.alpha_at_quad(b.elem_b, b.qp_b));
}

/// Adds sign * (pair stiffness of bond) into K.
void accumulate_bond(SparseSym& k, const Mesh& mesh, const BondTable& table, const Bond& b,
                     double abar, double sign) {
    const double f = sign * abar * b.c0 * b.w_a * b.w_b;
    if (f == 0.0) return;
    const Element& ea = mesh.elements[b.elem_a];
    const Element& eb = mesh.elements[b.elem_b];
    const auto na = shape_values(ea, pd_point_param(mesh, table, b.elem_a, b.qp_a));
    const auto nb = shape_values(eb, pd_point_param(mesh, table, b.elem_b, b.qp_b));

    // combined scalar coefficients: eta = sum s_p u_p
    int gnode[8];
    double s[8];
    int n = 0;
    for (int i = 0; i < ea.n_nodes; ++i) {
        gnode[n] = ea.nodes[i];
        s[n++] = -na[i];
    }
    for (int i = 0; i < eb.n_nodes; ++i) {
        gnode[n] = eb.nodes[i];
        s[n++] = nb[i];
    }
    const double xx = f * b.xi.x * b.xi.x;
    const double xy = f * b.xi.x * b.xi.y;
    const double yy = f * b.xi.y * b.xi.y;
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            const double sp = s[p] * s[q];
            const int gp = gnode[p], gq = gnode[q];
            const int i0 = 2 * gp, j0 = 2 * gq;
            if (i0 <= j0) k.add(i0, j0, sp * xx);
            if (i0 <= j0 + 1) k.add(i0, j0 + 1, sp * xy);
            if (i0 + 1 <= j0) k.add(i0 + 1, j0, sp * xy);
            if (i0 + 1 <= j0 + 1) k.add(i0 + 1, j0 + 1, sp * yy);
        }
    }
}

}  // namespace

SparseSym assemble_pd_stiffness(const Mesh& mesh, BondTable& table, const MorphingField& field) {
    SparseSym k(2 * static_cast<int>(mesh.nodes.size()));
    for (auto& b : table.bonds) {
        b.in_matrix = b.mu;
        if (!b.mu) continue;
        accumulate_bond(k, mesh, table, b, bond_alpha_half_sum(table, field, b), +1.0);
    }
    return k;
}

void subtract_broken_bonds(SparseSym& k_pd, const Mesh& mesh, BondTable& table,
                           const MorphingField& field, const std::vector<int>& bond_ids) {
    for (int bi : bond_ids) {
        Bond& b = table.bonds[bi];
        if (!b.in_matrix)
            fail(ErrorKind::Consistency,
                 "subtract_broken_bonds: bond " + std::to_string(bi) + " already subtracted");
        accumulate_bond(k_pd, mesh, table, b, bond_alpha_half_sum(table, field, b), -1.0);
        b.in_matrix = 0;
    }
}

double LoadProgram::traction(double t) const {
    switch (kind) {
        case LoadKind::None:
            return 0.0;
        case LoadKind::NormalStep:
            return t >= 0.0 ? magnitude : 0.0;
        case LoadKind::NormalRamp:
            return ramp_traction(t, magnitude, t0);
        case LoadKind::Explosion:
            return -explosion.value(t);  // pressure acts against the outward normal
    }
    return 0.0;
}

BoundLoad bind_load(const Mesh& mesh, const LoadProgram& program) {
    BoundLoad bound;
    bound.program = program;
    if (program.kind == LoadKind::None && program.body_force.norm2() == 0.0) return bound;

    const Vec2 lo = mesh.bbox_lo(), hi = mesh.bbox_hi();
    const double tol = 1e-6 * mesh.diameter() + 1e-12;
    for (const auto& [eid, le] : mesh.boundary_edges()) {
        auto [n1, n2] = mesh.edge_nodes(eid, le);
        const Vec2 p1 = mesh.nodes[n1].pos, p2 = mesh.nodes[n2].pos;
        for (EdgeSelector sel : program.edges) {
            bool take = false;
            switch (sel) {
                case EdgeSelector::Left:
                    take = std::abs(p1.x - lo.x) < tol && std::abs(p2.x - lo.x) < tol;
                    break;
                case EdgeSelector::Right:
                    take = std::abs(p1.x - hi.x) < tol && std::abs(p2.x - hi.x) < tol;
                    break;
                case EdgeSelector::Bottom:
                    take = std::abs(p1.y - lo.y) < tol && std::abs(p2.y - lo.y) < tol;
                    break;
                case EdgeSelector::Top:
                    take = std::abs(p1.y - hi.y) < tol && std::abs(p2.y - hi.y) < tol;
                    break;
                case EdgeSelector::HoleRim: {
                    const double rmax = program.rim_radius + 0.35 * mesh.avg_dx();
                    take = (p1 - program.rim_center).norm() <= rmax &&
                           (p2 - program.rim_center).norm() <= rmax;
                    break;
                }
            }
            if (take) {
                bound.edges.emplace_back(eid, le);
                break;
            }
        }
    }
    if (!program.edges.empty() && bound.edges.empty())
        fail(ErrorKind::Binding, "load program: boundary selector resolved to no edges");
    return bound;
}

std::vector<double> assemble_load(const Mesh& mesh, const BoundLoad& load, double t) {
    std::vector<double> f(2 * mesh.nodes.size(), 0.0);
    const double sigma = load.program.traction(t);
    if (sigma != 0.0) {
        for (const auto& [eid, le] : load.edges) {
            auto [n1, n2] = mesh.edge_nodes(eid, le);
            const Vec2 p1 = mesh.nodes[n1].pos, p2 = mesh.nodes[n2].pos;
            const Vec2 d = p2 - p1;
            const double len = d.norm();
            const Vec2 normal{d.y / len, -d.x / len};  // outward for CCW elements
            const Vec2 tr = normal * sigma;
            // uniform traction splits half-half between the edge nodes
            f[2 * n1] += 0.5 * tr.x * len;
            f[2 * n1 + 1] += 0.5 * tr.y * len;
            f[2 * n2] += 0.5 * tr.x * len;
            f[2 * n2 + 1] += 0.5 * tr.y * len;
        }
    }
    const Vec2 b = load.program.body_force;
    if (b.norm2() > 0.0) {
        for (const auto& e : mesh.elements) {
            for (int q = 0; q < e.n_quad; ++q) {
                const auto n = shape_values(e, e.quad[q].param);
                for (int a = 0; a < e.n_nodes; ++a) {
                    f[2 * e.nodes[a]] += n[a] * b.x * e.quad[q].weight;
                    f[2 * e.nodes[a] + 1] += n[a] * b.y * e.quad[q].weight;
                }
            }
        }
    }
    return f;
}

std::vector<double> remap_state(const std::vector<double>& u, const NodeMap& map) {
    std::vector<double> out(2 * map.source_of_node.size());
    for (size_t n = 0; n < map.source_of_node.size(); ++n) {
        const int src = map.source_of_node[n];
        out[2 * n] = u[2 * src];
        out[2 * n + 1] = u[2 * src + 1];
    }
    return out;
}

}  // namespace mf
