#include "morphfrac/snapshot.hpp"

#include <fstream>

#include "morphfrac/error.hpp"

namespace mf {

void write_snapshot(const std::string& path, const Mesh& mesh, const std::vector<double>& u,
                    const std::vector<double>& phi, const std::vector<double>& alpha,
                    const std::vector<double>& von_mises) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot write snapshot: " + path);
    out.precision(12);

    out << "# vtk DataFile Version 3.0\n";
    out << "morphfrac snapshot\n";
    out << "ASCII\n";
    out << "DATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << mesh.nodes.size() << " double\n";
    for (const auto& n : mesh.nodes) out << n.pos.x << " " << n.pos.y << " 0\n";

    size_t list_size = 0;
    for (const auto& e : mesh.elements) list_size += 1 + e.n_nodes;
    out << "CELLS " << mesh.elements.size() << " " << list_size << "\n";
    for (const auto& e : mesh.elements) {
        out << e.n_nodes;
        for (int i = 0; i < e.n_nodes; ++i) out << " " << e.nodes[i];
        out << "\n";
    }
    out << "CELL_TYPES " << mesh.elements.size() << "\n";
    for (const auto& e : mesh.elements) out << (e.n_nodes == 3 ? 5 : 9) << "\n";

    out << "POINT_DATA " << mesh.nodes.size() << "\n";
    out << "VECTORS displacement double\n";
    for (size_t i = 0; i < mesh.nodes.size(); ++i)
        out << u[2 * i] << " " << u[2 * i + 1] << " 0\n";

    out << "CELL_DATA " << mesh.elements.size() << "\n";
    auto scalars = [&](const char* name, auto&& value) {
        out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (const auto& e : mesh.elements) out << value(e.id) << "\n";
    };
    scalars("damage", [&](int i) { return phi[i]; });
    scalars("alpha", [&](int i) { return alpha[i]; });
    out << "SCALARS element_kind int 1\nLOOKUP_TABLE default\n";
    for (const auto& e : mesh.elements) out << (e.kind == ElemKind::DE ? 1 : 0) << "\n";
    scalars("von_mises", [&](int i) { return von_mises[i]; });
}

}  // namespace mf
