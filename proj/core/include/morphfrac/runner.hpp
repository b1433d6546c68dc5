#pragma once
#include <optional>
#include <string>
#include <vector>

#include "morphfrac/adaptivity.hpp"
#include "morphfrac/config.hpp"
#include "morphfrac/crack.hpp"

namespace mf {

struct RunOptions {
    std::string out_dir;        // empty: no files written
    long max_steps = -1;        // cap on step count (< 0: run to total_time)
    std::optional<CriterionMode> criterion_override;
    bool quiet = true;
};

struct TimingRow {
    long step;
    double t;
    int n_dofs;
    long n_broken;  // cumulative
    double wall_ms;
};

struct EventRow {
    long step;
    int n_new_flags;
    int n_converted;
    int n_dofs_after;
};

enum class RunStatus { Ok, Unstable };

struct RunResult {
    RunStatus status = RunStatus::Ok;
    std::string message;
    long steps_done = 0;
    double total_wall_s = 0.0;

    Mesh mesh;
    MorphingField field;
    BondTable table;
    FlagPointSet flags;
    MaterialParams material;
    std::vector<double> u;              // final displacements
    std::vector<double> phi;            // final per-element damage
    std::vector<double> alpha_centroid; // final per-element alpha

    std::vector<TimingRow> timing;
    std::vector<EventRow> events;
    CrackTracker crack{0.0};

    std::optional<std::pair<long, Vec2>> first_broken;  // step, bond midpoint
    std::optional<Vec2> first_flag_pos;
    long total_broken = 0;
    int pd_dofs_final = 0;     // dofs on DE elements
    double pd_area_final = 0;  // total DE element area
};

RunResult run_simulation(const ResolvedScenario& scenario, const RunOptions& options);

}  // namespace mf
