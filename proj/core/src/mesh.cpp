#include "morphfrac/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "morphfrac/error.hpp"

namespace mf {

namespace {

constexpr double kGauss = 0.5773502691896257;  // 1/sqrt(3)

double polygon_area(const Mesh& m, const Element& e) {
    double a = 0.0;
    for (int i = 0; i < e.n_nodes; ++i) {
        const Vec2& p = m.nodes[e.nodes[i]].pos;
        const Vec2& q = m.nodes[e.nodes[(i + 1) % e.n_nodes]].pos;
        a += p.cross(q);
    }
    return 0.5 * a;
}

void build_quadrature(const Mesh& m, Element& e) {
    if (e.n_nodes == 3) {
        const Vec2 p0 = m.nodes[e.nodes[0]].pos;
        const Vec2 p1 = m.nodes[e.nodes[1]].pos;
        const Vec2 p2 = m.nodes[e.nodes[2]].pos;
        e.centroid = (p0 + p1 + p2) / 3.0;
        e.n_quad = 1;
        e.quad[0] = {e.centroid, e.area, {1.0 / 3.0, 1.0 / 3.0}};
    } else {
        const Vec2 p[4] = {m.nodes[e.nodes[0]].pos, m.nodes[e.nodes[1]].pos,
                           m.nodes[e.nodes[2]].pos, m.nodes[e.nodes[3]].pos};
        // area-weighted centroid of the quad (split into two triangles)
        const double a1 = 0.5 * (p[1] - p[0]).cross(p[2] - p[0]);
        const double a2 = 0.5 * (p[2] - p[0]).cross(p[3] - p[0]);
        const Vec2 c1 = (p[0] + p[1] + p[2]) / 3.0;
        const Vec2 c2 = (p[0] + p[2] + p[3]) / 3.0;
        e.centroid = (c1 * a1 + c2 * a2) / (a1 + a2);
        e.n_quad = 4;
        const double gp[2] = {-kGauss, kGauss};
        int q = 0;
        for (int j = 0; j < 2; ++j) {
            for (int i = 0; i < 2; ++i) {
                const double xi = gp[i], eta = gp[j];
                const double n[4] = {0.25 * (1 - xi) * (1 - eta), 0.25 * (1 + xi) * (1 - eta),
                                     0.25 * (1 + xi) * (1 + eta), 0.25 * (1 - xi) * (1 + eta)};
                Vec2 pos;
                for (int k = 0; k < 4; ++k) pos += p[k] * n[k];
                // Jacobian of the bilinear map
                const double dxi[4] = {-0.25 * (1 - eta), 0.25 * (1 - eta),
                                       0.25 * (1 + eta), -0.25 * (1 + eta)};
                const double deta[4] = {-0.25 * (1 - xi), -0.25 * (1 + xi),
                                        0.25 * (1 + xi), 0.25 * (1 - xi)};
                double j00 = 0, j01 = 0, j10 = 0, j11 = 0;
                for (int k = 0; k < 4; ++k) {
                    j00 += dxi[k] * p[k].x;
                    j01 += dxi[k] * p[k].y;
                    j10 += deta[k] * p[k].x;
                    j11 += deta[k] * p[k].y;
                }
                const double detj = j00 * j11 - j01 * j10;
                if (detj <= 0.0)
                    fail(ErrorKind::Geometry, "element " + std::to_string(e.id) +
                                                  ": non-positive Jacobian");
                e.quad[q++] = {pos, detj, {xi, eta}};
            }
        }
    }
}

}  // namespace

void Mesh::finalize() {
    if (elements.empty()) {
        avg_dx_ = min_edge_ = total_area_ = 0.0;
        return;
    }
    min_edge_ = std::numeric_limits<double>::max();
    total_area_ = 0.0;
    double sum_sqrt_area = 0.0;
    bbox_lo_ = {std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    bbox_hi_ = {std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (auto& e : elements) {
        e.area = polygon_area(*this, e);
        if (e.area <= 0.0)
            fail(ErrorKind::Geometry,
                 "element " + std::to_string(e.id) + ": non-positive area");
        build_quadrature(*this, e);
        total_area_ += e.area;
        sum_sqrt_area += std::sqrt(e.area);
        for (int i = 0; i < e.n_nodes; ++i) {
            const Vec2& p = nodes[e.nodes[i]].pos;
            const Vec2& q = nodes[e.nodes[(i + 1) % e.n_nodes]].pos;
            min_edge_ = std::min(min_edge_, (q - p).norm());
        }
    }
    for (const auto& n : nodes) {
        bbox_lo_.x = std::min(bbox_lo_.x, n.pos.x);
        bbox_lo_.y = std::min(bbox_lo_.y, n.pos.y);
        bbox_hi_.x = std::max(bbox_hi_.x, n.pos.x);
        bbox_hi_.y = std::max(bbox_hi_.y, n.pos.y);
    }
    avg_dx_ = sum_sqrt_area / static_cast<double>(elements.size());
}

std::pair<int, int> Mesh::edge_nodes(int eid, int le) const {
    const Element& e = elements[eid];
    return {e.nodes[le], e.nodes[(le + 1) % e.n_nodes]};
}

std::vector<bool> Mesh::boundary_node_mask() const {
    std::vector<bool> mask(nodes.size(), false);
    for (const auto& [eid, le] : boundary_edges()) {
        auto [a, b] = edge_nodes(eid, le);
        mask[a] = mask[b] = true;
    }
    return mask;
}

std::vector<std::pair<int, int>> Mesh::boundary_edges() const {
    // Edges are matched by node ids; DE edges never pair up, so also match by
    // site pairs to keep internal DE-DE interfaces off the boundary list.
    std::map<std::pair<int, int>, int> edge_count;
    auto site_key = [&](int a, int b) {
        int sa = nodes[a].site, sb = nodes[b].site;
        if (sa > sb) std::swap(sa, sb);
        return std::make_pair(sa, sb);
    };
    for (const auto& e : elements) {
        for (int i = 0; i < e.n_nodes; ++i) {
            edge_count[site_key(e.nodes[i], e.nodes[(i + 1) % e.n_nodes])]++;
        }
    }
    std::vector<std::pair<int, int>> result;
    for (const auto& e : elements) {
        for (int i = 0; i < e.n_nodes; ++i) {
            if (edge_count[site_key(e.nodes[i], e.nodes[(i + 1) % e.n_nodes])] == 1)
                result.emplace_back(e.id, i);
        }
    }
    return result;
}

Mesh generate_structured_quad_mesh(const Vec2& lo, const Vec2& hi, double spacing) {
    if (spacing <= 0.0) fail(ErrorKind::Parameter, "mesh spacing must be positive");
    if (hi.x <= lo.x || hi.y <= lo.y)
        fail(ErrorKind::Parameter, "mesh rectangle must have positive area");
    const int nx = static_cast<int>(std::lround((hi.x - lo.x) / spacing));
    const int ny = static_cast<int>(std::lround((hi.y - lo.y) / spacing));
    if (nx < 1 || ny < 1) fail(ErrorKind::Parameter, "spacing larger than rectangle");

    Mesh m;
    m.nodes.reserve(static_cast<size_t>(nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            const int id = j * (nx + 1) + i;
            m.nodes.push_back({id, {lo.x + i * spacing, lo.y + j * spacing}, id});
        }
    }
    m.elements.reserve(static_cast<size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            Element e;
            e.id = j * nx + i;
            e.n_nodes = 4;
            e.nodes = {j * (nx + 1) + i, j * (nx + 1) + i + 1,
                       (j + 1) * (nx + 1) + i + 1, (j + 1) * (nx + 1) + i};
            m.elements.push_back(e);
        }
    }
    m.finalize();
    return m;
}

double min_edge_length(const Mesh& mesh) {
    if (mesh.elements.empty()) fail(ErrorKind::Parameter, "min_edge_length: empty mesh");
    return mesh.min_edge();
}

void insert_pre_notch(Mesh& mesh, const Segment& seg) {
    const double len = seg.length();
    const double tol = 1e-9 * std::max(len, mesh.avg_dx());
    if (len <= tol) return;  // zero-length slit: no-op

    const Vec2 dir = (seg.b - seg.a) / len;

    // Nodes on the segment, with their parameter along it.
    struct Hit {
        int node;
        double t;
    };
    std::vector<Hit> hits;
    for (const auto& n : mesh.nodes) {
        const Vec2 d = n.pos - seg.a;
        const double t = d.dot(dir) / len;
        if (t < -tol / len || t > 1.0 + tol / len) continue;
        if (std::abs(d.cross(dir)) <= tol) hits.push_back({n.id, t});
    }
    if (hits.empty())
        fail(ErrorKind::Geometry, "pre-notch segment does not touch any mesh node");

    const auto boundary = mesh.boundary_node_mask();
    const double t_eps = 0.5 * mesh.avg_dx() / len;  // endpoint band in parameter space

    // Duplicate interior nodes; segment end nodes are duplicated only when they
    // sit on the domain boundary (open slit mouth), interior ends stay single
    // (crack tip).
    std::vector<int> to_split;
    for (const Hit& h : hits) {
        const bool at_end = h.t < t_eps || h.t > 1.0 - t_eps;
        if (!at_end || boundary[h.node]) to_split.push_back(h.node);
    }
    if (to_split.empty())
        fail(ErrorKind::Geometry, "pre-notch segment resolves to no splittable nodes");
    std::sort(to_split.begin(), to_split.end());

    // Incidence: node -> elements referencing it.
    std::vector<std::vector<int>> incident(mesh.nodes.size());
    for (const auto& e : mesh.elements)
        for (int i = 0; i < e.n_nodes; ++i) incident[e.nodes[i]].push_back(e.id);

    for (int nid : to_split) {
        std::vector<int> left, right;
        for (int eid : incident[nid]) {
            const double side = dir.cross(mesh.elements[eid].centroid - seg.a);
            if (side > 0)
                left.push_back(eid);
            else if (side < 0)
                right.push_back(eid);
            else
                fail(ErrorKind::Geometry,
                     "pre-notch crosses the interior of element " + std::to_string(eid));
        }
        if (left.empty() || right.empty()) continue;  // slit along the boundary here
        // left keeps the original node, right gets a duplicate
        Node dup = mesh.nodes[nid];
        dup.id = static_cast<int>(mesh.nodes.size());
        mesh.nodes.push_back(dup);
        for (int eid : right) {
            Element& e = mesh.elements[eid];
            for (int i = 0; i < e.n_nodes; ++i)
                if (e.nodes[i] == nid) e.nodes[i] = dup.id;
        }
    }

    mesh.slits.push_back(seg);
    mesh.finalize();
}

void punch_holes(Mesh& mesh, const std::vector<Pore>& pores) {
    if (pores.empty()) return;
    std::vector<Element> kept;
    kept.reserve(mesh.elements.size());
    for (const auto& e : mesh.elements) {
        bool inside = false;
        for (const auto& p : pores) {
            if ((e.centroid - p.center).norm() <= p.radius) {
                inside = true;
                break;
            }
        }
        if (!inside) kept.push_back(e);
    }
    if (kept.size() == mesh.elements.size()) return;
    mesh.elements = std::move(kept);
    for (size_t i = 0; i < mesh.elements.size(); ++i)
        mesh.elements[i].id = static_cast<int>(i);

    // drop orphaned nodes
    std::vector<int> new_id(mesh.nodes.size(), -1);
    for (const auto& e : mesh.elements)
        for (int i = 0; i < e.n_nodes; ++i) new_id[e.nodes[i]] = 0;
    std::vector<Node> nodes;
    for (size_t i = 0; i < mesh.nodes.size(); ++i) {
        if (new_id[i] == 0) {
            new_id[i] = static_cast<int>(nodes.size());
            Node n = mesh.nodes[i];
            n.id = new_id[i];
            nodes.push_back(n);
        }
    }
    for (auto& e : mesh.elements)
        for (int i = 0; i < e.n_nodes; ++i) e.nodes[i] = new_id[e.nodes[i]];
    mesh.nodes = std::move(nodes);
    mesh.finalize();
}

NodeMap convert_to_discrete(Mesh& mesh, const std::vector<int>& element_ids) {
    NodeMap map;
    std::vector<int> ids = element_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<int> targets;
    for (int id : ids) {
        if (id < 0 || id >= static_cast<int>(mesh.elements.size()))
            fail(ErrorKind::Parameter, "convert_to_discrete: bad element id " + std::to_string(id));
        if (mesh.elements[id].kind == ElemKind::CE) targets.push_back(id);
    }
    if (targets.empty()) return map;

    const size_t n_old = mesh.nodes.size();
    // copies[old] -> list of (pre-compaction) duplicate ids
    std::vector<std::vector<int>> copies(n_old);

    for (int eid : targets) {
        Element& e = mesh.elements[eid];
        for (int i = 0; i < e.n_nodes; ++i) {
            const int old = e.nodes[i];
            Node dup = mesh.nodes[old];
            dup.id = static_cast<int>(mesh.nodes.size());
            mesh.nodes.push_back(dup);
            copies[old].push_back(dup.id);
            e.nodes[i] = dup.id;
        }
        e.kind = ElemKind::DE;
    }

    // Compact: drop nodes no longer referenced by any element.
    std::vector<bool> used(mesh.nodes.size(), false);
    for (const auto& e : mesh.elements)
        for (int i = 0; i < e.n_nodes; ++i) used[e.nodes[i]] = true;

    std::vector<int> new_id(mesh.nodes.size(), -1);
    std::vector<Node> nodes;
    nodes.reserve(mesh.nodes.size());
    map.source_of_node.reserve(mesh.nodes.size());
    for (size_t i = 0; i < mesh.nodes.size(); ++i) {
        if (!used[i]) continue;
        new_id[i] = static_cast<int>(nodes.size());
        Node n = mesh.nodes[i];
        n.id = new_id[i];
        nodes.push_back(n);
        // a duplicate carries the state of the old node it copies; a surviving
        // old node carries its own
        map.source_of_node.push_back(i < n_old ? static_cast<int>(i) : -1);
    }
    for (size_t old = 0; old < n_old; ++old) {
        for (int dup : copies[old]) {
            if (new_id[dup] >= 0) map.source_of_node[new_id[dup]] = static_cast<int>(old);
        }
        if (copies[old].empty()) continue;
        std::vector<int> mapped;
        if (new_id[old] >= 0) mapped.push_back(new_id[old]);
        for (int dup : copies[old])
            if (new_id[dup] >= 0) mapped.push_back(new_id[dup]);
        map.duplicates.emplace_back(static_cast<int>(old), std::move(mapped));
    }
    for (auto& e : mesh.elements)
        for (int i = 0; i < e.n_nodes; ++i) e.nodes[i] = new_id[e.nodes[i]];
    mesh.nodes = std::move(nodes);
    // Geometry is untouched by conversion; refresh bbox/metrics only.
    mesh.finalize();
    return map;
}

std::array<double, 4> shape_values(const Element& e, const Vec2& param) {
    std::array<double, 4> n{};
    if (e.n_nodes == 3) {
        n[0] = 1.0 - param.x - param.y;
        n[1] = param.x;
        n[2] = param.y;
    } else {
        const double xi = param.x, eta = param.y;
        n[0] = 0.25 * (1 - xi) * (1 - eta);
        n[1] = 0.25 * (1 + xi) * (1 - eta);
        n[2] = 0.25 * (1 + xi) * (1 + eta);
        n[3] = 0.25 * (1 - xi) * (1 + eta);
    }
    return n;
}

Vec2 displacement_at(const Mesh& mesh, int elem, int qp, const std::vector<double>& u) {
    return displacement_at_param(mesh, elem, mesh.elements[elem].quad[qp].param, u);
}

Vec2 displacement_at_param(const Mesh& mesh, int elem, const Vec2& param,
                           const std::vector<double>& u) {
    const Element& e = mesh.elements[elem];
    const auto n = shape_values(e, param);
    Vec2 d;
    for (int i = 0; i < e.n_nodes; ++i) {
        const int nid = e.nodes[i];
        d.x += n[i] * u[2 * nid];
        d.y += n[i] * u[2 * nid + 1];
    }
    return d;
}

}  // namespace mf
