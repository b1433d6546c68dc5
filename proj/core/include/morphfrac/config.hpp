#pragma once
#include <optional>
#include <string>
#include <vector>

#include "morphfrac/adaptivity.hpp"
#include "morphfrac/assembly.hpp"
#include "morphfrac/integrator.hpp"
#include "morphfrac/mesh.hpp"

namespace mf {

struct GeometrySpec {
    enum class Kind { Rect, File, Disk } kind = Kind::Rect;
    Vec2 origin{0, 0};
    Vec2 size{0, 0};
    double spacing = 0.0;       // rect grid, or disk target element size
    std::string mesh_file;      // Kind::File
    double inner_diameter = 0;  // Kind::Disk
    double outer_diameter = 0;
    std::string pores_file;     // optional `x y radius` punch list
    std::optional<Segment> notch;
    bool operator==(const GeometrySpec&) const = default;
};

struct MaterialSpec {
    double youngs_modulus = 0.0;    // MPa
    double poisson_ratio = 1.0 / 3.0;
    double density = 0.0;           // t/mm^3
    std::optional<double> horizon;  // mm; default 3 * avg element size
    std::optional<double> characteristic_length;  // mm; default horizon / 15
    std::optional<double> energy_release_rate;    // J/mm^2
    std::optional<double> critical_stretch;
    std::optional<double> strength;  // MPa
    bool operator==(const MaterialSpec&) const = default;
};

struct NumericsSpec {
    std::optional<double> dt;     // s; default dt_safety * dt_cr
    double dt_safety = 0.5;
    double total_time = 0.0;      // s
    std::optional<double> flag_inner_radius;  // default 2 * delta
    std::optional<double> flag_outer_radius;  // default 4 * delta
    PdQuadrature pd_quadrature = PdQuadrature::Centroid;
    bool operator==(const NumericsSpec&) const = default;
};

struct OutputSpec {
    int every = 25;
    double crack_damage_threshold = 0.35;
    bool operator==(const OutputSpec&) const = default;
};

struct InitialFlagSpec {
    Vec2 pos;
    double r1 = 0, r2 = 0;
    bool operator==(const InitialFlagSpec&) const = default;
};

/// Fixed-coupling seeding: alpha = 1 for |x - x0| <= half_inner, cubic decay
/// to zero at half_outer.
struct StripSpec {
    double x0 = 0, half_inner = 0, half_outer = 0;
    bool operator==(const StripSpec&) const = default;
};

struct EdgeFixSpec {
    EdgeSelector edge;
    int comp;  // 0 = x, 1 = y
    bool operator==(const EdgeFixSpec&) const = default;
};
struct PinSpec {
    Vec2 pos;  // nearest node
    int comp;
    bool operator==(const PinSpec&) const = default;
};

struct ScenarioConfig {
    std::string name;
    GeometrySpec geometry;
    MaterialSpec material;
    Criterion criterion;
    LoadProgram load;
    std::vector<EdgeFixSpec> edge_fixes;
    std::vector<PinSpec> pins;
    NumericsSpec numerics;
    OutputSpec output;
    std::vector<InitialFlagSpec> initial_flags;
    std::optional<StripSpec> initial_strip;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Config with the mesh built and every default resolved and validated.
struct ResolvedScenario {
    ScenarioConfig config;
    Mesh mesh;
    MaterialParams material;
    WaveSpeeds speeds;
    double dt = 0.0;
    double dt_cr = 0.0;
    double total_time = 0.0;
    double flag_r_in = 0.0;
    double flag_r_out = 0.0;
};

/// Raw file -> config. Throws parse errors with file:line.
ScenarioConfig parse_config_file(const std::string& path);

/// Builds the mesh, fills defaults, and checks every constraint; error
/// messages name the violated constraint.
ResolvedScenario resolve_scenario(const ScenarioConfig& cfg);

/// parse + resolve + validate in one call.
ResolvedScenario parse_config(const std::string& path);

std::string serialize_config(const ScenarioConfig& cfg);

/// Serialized config plus an informational [resolved] section (ignored when
/// reparsed).
void write_resolved_config(const ResolvedScenario& rs, const std::string& path);

/// The paper's three benchmarks plus a desk-scale variant of each. Data file
/// paths (pore layouts) are taken relative to `data_dir`.
std::vector<ScenarioConfig> builtin_scenarios(const std::string& data_dir = "data");

}  // namespace mf
