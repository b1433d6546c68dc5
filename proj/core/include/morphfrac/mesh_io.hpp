#pragma once
#include <string>

#include "morphfrac/mesh.hpp"

namespace mf {

/// Text format: `nodes N elements M`, then N lines `id x y`, then M lines
/// `id kind(n3|n4) v1 v2 v3 [v4]`. Slits come from the scenario config.
Mesh load_unstructured_mesh(const std::string& path);
void save_mesh(const Mesh& mesh, const std::string& path);

/// Polar-grid annulus (quads, with triangle transition rings where the sector
/// count doubles). Produces the disk-with-hole geometry of the blast scenario;
/// also writable with save_mesh for use as an imported mesh.
Mesh make_annulus_mesh(double r_inner, double r_outer, double target_dx);

}  // namespace mf
