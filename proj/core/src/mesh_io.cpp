#include "morphfrac/mesh_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "morphfrac/error.hpp"

namespace mf {

namespace {
[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& what) {
    fail(ErrorKind::Parse, path + ":" + std::to_string(line) + ": " + what);
}
}  // namespace

Mesh load_unstructured_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open mesh file: " + path);

    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line()) parse_fail(path, lineno, "missing header");
    std::istringstream hs(line);
    std::string kw1, kw2;
    size_t n_nodes = 0, n_elems = 0;
    hs >> kw1 >> n_nodes >> kw2 >> n_elems;
    if (kw1 != "nodes" || kw2 != "elements" || hs.fail())
        parse_fail(path, lineno, "expected header `nodes N elements M`");

    Mesh m;
    m.nodes.reserve(n_nodes);
    std::set<int> seen_nodes;
    for (size_t i = 0; i < n_nodes; ++i) {
        if (!next_line()) parse_fail(path, lineno, "unexpected end of node list");
        std::istringstream ls(line);
        int id;
        double x, y;
        ls >> id >> x >> y;
        if (ls.fail()) parse_fail(path, lineno, "bad node line");
        if (id != static_cast<int>(i))
            parse_fail(path, lineno, "node ids must be contiguous from 0");
        if (!seen_nodes.insert(id).second) parse_fail(path, lineno, "duplicate node id");
        m.nodes.push_back({id, {x, y}, id});
    }

    m.elements.reserve(n_elems);
    std::set<int> seen_elems;
    for (size_t i = 0; i < n_elems; ++i) {
        if (!next_line()) parse_fail(path, lineno, "unexpected end of element list");
        std::istringstream ls(line);
        int id;
        std::string kind;
        ls >> id >> kind;
        if (ls.fail()) parse_fail(path, lineno, "bad element line");
        if (!seen_elems.insert(id).second)
            parse_fail(path, lineno, "duplicate element id " + std::to_string(id));
        Element e;
        e.id = static_cast<int>(i);
        if (kind == "n3")
            e.n_nodes = 3;
        else if (kind == "n4")
            e.n_nodes = 4;
        else
            parse_fail(path, lineno, "element kind must be n3 or n4, got `" + kind + "`");
        for (int k = 0; k < e.n_nodes; ++k) {
            int v;
            ls >> v;
            if (ls.fail()) parse_fail(path, lineno, "too few vertices for " + kind);
            if (v < 0 || v >= static_cast<int>(m.nodes.size()))
                parse_fail(path, lineno, "vertex id out of range");
            e.nodes[k] = v;
        }
        m.elements.push_back(e);
    }
    m.finalize();  // throws geometry error on inverted elements
    return m;
}

void save_mesh(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot write mesh file: " + path);
    out << "nodes " << mesh.nodes.size() << " elements " << mesh.elements.size() << "\n";
    out.precision(17);
    for (const auto& n : mesh.nodes) out << n.id << " " << n.pos.x << " " << n.pos.y << "\n";
    for (const auto& e : mesh.elements) {
        out << e.id << " " << (e.n_nodes == 3 ? "n3" : "n4");
        for (int i = 0; i < e.n_nodes; ++i) out << " " << e.nodes[i];
        out << "\n";
    }
}

Mesh make_annulus_mesh(double r_inner, double r_outer, double target_dx) {
    if (r_inner <= 0 || r_outer <= r_inner || target_dx <= 0)
        fail(ErrorKind::Parameter, "make_annulus_mesh: need 0 < r_inner < r_outer, dx > 0");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    Mesh m;
    auto add_node = [&](double r, double theta) {
        const int id = static_cast<int>(m.nodes.size());
        m.nodes.push_back({id, {r * std::cos(theta), r * std::sin(theta)}, id});
        return id;
    };
    auto add_elem = [&](int n, std::array<int, 4> vs) {
        Element e;
        e.id = static_cast<int>(m.elements.size());
        e.n_nodes = n;
        e.nodes = vs;
        m.elements.push_back(e);
    };

    int n_theta = std::max(16, 4 * static_cast<int>(std::lround(two_pi * r_inner / target_dx / 4.0)));
    double r = r_inner;
    std::vector<int> ring;
    for (int i = 0; i < n_theta; ++i) ring.push_back(add_node(r, two_pi * i / n_theta));

    while (r < r_outer - 1e-9) {
        double dr = std::min(target_dx, r_outer - r);
        if (r_outer - (r + dr) < 0.5 * target_dx) dr = r_outer - r;  // absorb sliver
        const double r_next = r + dr;
        const double arc = two_pi * r / n_theta;
        if (arc > 1.45 * target_dx) {
            // transition ring: sector count doubles, three triangles per sector
            const int n2 = 2 * n_theta;
            std::vector<int> outer(n2);
            for (int j = 0; j < n2; ++j) outer[j] = add_node(r_next, two_pi * j / n2);
            for (int i = 0; i < n_theta; ++i) {
                const int i1 = (i + 1) % n_theta;
                const int o0 = outer[2 * i], o1 = outer[2 * i + 1], o2 = outer[(2 * i + 2) % n2];
                add_elem(3, {ring[i], o0, o1, -1});
                add_elem(3, {ring[i], o1, ring[i1], -1});
                add_elem(3, {ring[i1], o1, o2, -1});
            }
            ring = std::move(outer);
            n_theta = n2;
        } else {
            std::vector<int> outer(n_theta);
            for (int i = 0; i < n_theta; ++i) outer[i] = add_node(r_next, two_pi * i / n_theta);
            for (int i = 0; i < n_theta; ++i) {
                const int i1 = (i + 1) % n_theta;
                add_elem(4, {ring[i], outer[i], outer[i1], ring[i1]});
            }
            ring = std::move(outer);
        }
        r = r_next;
    }
    m.finalize();
    return m;
}

}  // namespace mf
