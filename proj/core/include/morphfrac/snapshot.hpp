#pragma once
#include <string>
#include <vector>

#include "morphfrac/mesh.hpp"

namespace mf {

/// Legacy-VTK unstructured grid, ASCII: point displacements plus per-cell
/// damage, alpha, element kind and von Mises stress.
void write_snapshot(const std::string& path, const Mesh& mesh, const std::vector<double>& u,
                    const std::vector<double>& phi, const std::vector<double>& alpha,
                    const std::vector<double>& von_mises);

}  // namespace mf
