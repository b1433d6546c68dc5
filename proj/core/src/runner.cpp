#include "morphfrac/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>

#include "morphfrac/assembly.hpp"
#include "morphfrac/error.hpp"
#include "morphfrac/integrator.hpp"
#include "morphfrac/snapshot.hpp"

namespace mf {

namespace {

std::string zero_pad(long v, int width) {
    std::string s = std::to_string(v);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

/// Fixed dofs from the geometric selectors; re-resolved after each conversion
/// so duplicates at a gripped site stay gripped.
std::vector<int> resolve_constraints(const Mesh& mesh, const ScenarioConfig& cfg) {
    std::set<int> dofs;
    const Vec2 lo = mesh.bbox_lo(), hi = mesh.bbox_hi();
    const double tol = 1e-6 * mesh.diameter() + 1e-12;
    for (const auto& fix : cfg.edge_fixes) {
        for (const auto& n : mesh.nodes) {
            bool take = false;
            switch (fix.edge) {
                case EdgeSelector::Left: take = std::abs(n.pos.x - lo.x) < tol; break;
                case EdgeSelector::Right: take = std::abs(n.pos.x - hi.x) < tol; break;
                case EdgeSelector::Bottom: take = std::abs(n.pos.y - lo.y) < tol; break;
                case EdgeSelector::Top: take = std::abs(n.pos.y - hi.y) < tol; break;
                case EdgeSelector::HoleRim: break;  // not meaningful as a fix
            }
            if (take) dofs.insert(2 * n.id + fix.comp);
        }
    }
    for (const auto& pin : cfg.pins) {
        int best = -1;
        double bd = std::numeric_limits<double>::max();
        for (const auto& n : mesh.nodes) {
            const double d = (n.pos - pin.pos).norm2();
            if (d < bd || (d == bd && n.id < best)) {
                bd = d;
                best = n.id;
            }
        }
        if (best >= 0) dofs.insert(2 * best + pin.comp);
    }
    return {dofs.begin(), dofs.end()};
}

}  // namespace

RunResult run_simulation(const ResolvedScenario& scenario, const RunOptions& options) {
    using clock = std::chrono::steady_clock;
    const auto run_start = clock::now();

    RunResult res;
    res.mesh = scenario.mesh;
    res.material = scenario.material;
    Mesh& mesh = res.mesh;
    const MaterialParams& mat = res.material;
    const ScenarioConfig& cfg = scenario.config;
    const double dt = scenario.dt;
    const double r_in = scenario.flag_r_in;
    const double r_out = scenario.flag_r_out;

    Criterion criterion = cfg.criterion;
    if (options.criterion_override) criterion.mode = *options.criterion_override;
    criterion.s_crit = mat.s_crit;
    criterion.sigma_crit = mat.sigma_crit;

    const SymTensor3 e0 = isotropic_plane_stress(mat.E, mat.nu);

    // ---- morphing field and initial PD seeding -----------------------------
    MorphingField& field = res.field;
    field.build(mesh);
    FlagPointSet& flags = res.flags;

    std::vector<FlagPoint> initial_flags;
    if (criterion.mode != CriterionMode::Strength) {
        for (const auto& f : cfg.initial_flags)
            initial_flags.push_back({f.pos, 0.0, f.r1, f.r2, -1});
    }
    for (const auto& f : initial_flags) flags.add(f);
    merge_alpha(field, initial_flags);

    auto strip_alpha = [&](const Vec2& p) -> double {
        if (!cfg.initial_strip) return 0.0;
        const double d = std::abs(p.x - cfg.initial_strip->x0);
        if (d <= cfg.initial_strip->half_inner) return 1.0;
        if (d >= cfg.initial_strip->half_outer) return 0.0;
        return cubic_transition(d, cfg.initial_strip->half_inner, cfg.initial_strip->half_outer);
    };
    if (cfg.initial_strip) {
        for (int p = 0; p < field.n_points(); ++p) field.raise(p, strip_alpha(field.positions()[p]));
        field.bump_revision();
    }

    // analytic alpha for element-vertex coverage tests at setup
    auto alpha_analytic = [&](const Vec2& x) {
        double a = strip_alpha(x);
        for (const auto& f : initial_flags) a = std::max(a, alpha_for_flag(x, f));
        return a;
    };
    std::vector<int> initial_convert;
    for (const auto& e : mesh.elements) {
        if (field.alpha_at_centroid(e.id) < 1.0) continue;
        bool all = true;
        for (int i = 0; i < e.n_nodes && all; ++i)
            all = alpha_analytic(mesh.nodes[e.nodes[i]].pos) >= 1.0;
        if (all) initial_convert.push_back(e.id);
    }
    convert_to_discrete(mesh, initial_convert);

    // ---- bonds, operators, loads -------------------------------------------
    BondTable& table = res.table;
    table = find_bond_candidates(mesh, mat.delta, cfg.numerics.pd_quadrature);
    table.bind_material(mat);

    BoundLoad load = bind_load(mesh, cfg.load);
    std::vector<int> fixed_dofs = resolve_constraints(mesh, cfg);

    std::vector<double> lumped = lumped_mass_vector(mesh, mat.rho);
    SparseSym k_ccm = assemble_ccm_stiffness(mesh, field, table, e0);
    SparseSym k_pd = assemble_pd_stiffness(mesh, table, field);
    const SparseSym* ks[2] = {&k_ccm, &k_pd};

    auto refresh_active = [&](std::vector<bool>& active) {
        active.assign(table.bonds.size(), false);
        for (size_t bi = 0; bi < table.bonds.size(); ++bi) {
            const Bond& b = table.bonds[bi];
            const double abar =
                table.mode == PdQuadrature::Centroid
                    ? 0.5 * (field.alpha_at_centroid(b.elem_a) + field.alpha_at_centroid(b.elem_b))
                    : 0.5 * (field.alpha_at_quad(b.elem_a, b.qp_a) +
                             field.alpha_at_quad(b.elem_b, b.qp_b));
            active[bi] = abar > 0.0;
        }
    };
    std::vector<bool> active_bonds;
    refresh_active(active_bonds);

    const long n_steps_total =
        options.max_steps >= 0
            ? std::min<long>(options.max_steps,
                             static_cast<long>(std::ceil(scenario.total_time / dt)))
            : static_cast<long>(std::ceil(scenario.total_time / dt));

    CentralDifference stepper;
    {
        std::vector<double> u0(2 * mesh.nodes.size(), 0.0), v0 = u0;
        stepper.init(std::move(u0), std::move(v0), assemble_load(mesh, load, 0.0), lumped, ks, dt);
    }

    // ---- output lanes -------------------------------------------------------
    const bool writing = !options.out_dir.empty();
    std::filesystem::path out_dir(options.out_dir);
    if (writing) std::filesystem::create_directories(out_dir);

    std::vector<Vec2> crack_seeds;
    for (const auto& f : cfg.initial_flags) crack_seeds.push_back(f.pos);
    for (const auto& s : mesh.slits) {
        // a slit endpoint strictly inside the domain is a crack tip seed
        const Vec2 lo = mesh.bbox_lo(), hi = mesh.bbox_hi();
        const double tol = 1e-6 * mesh.diameter();
        for (const Vec2& p : {s.a, s.b}) {
            if (p.x > lo.x + tol && p.x < hi.x - tol && p.y > lo.y + tol && p.y < hi.y - tol)
                crack_seeds.push_back(p);
        }
    }
    res.crack = CrackTracker(6.0 * mesh.avg_dx());

    auto compute_phi = [&]() {
        std::vector<double> phi(mesh.elements.size(), 0.0);
        for (const auto& e : mesh.elements) phi[e.id] = damage(e.id, table, mat.s_crit).phi;
        return phi;
    };

    auto emit_frame = [&](long step, double t) {
        const auto phi = compute_phi();
        auto tips = extract_crack_tips(mesh, phi, cfg.output.crack_damage_threshold, crack_seeds);
        res.crack.add_frame(step, t, tips);
        if (writing) {
            std::vector<double> alpha(mesh.elements.size());
            for (const auto& e : mesh.elements) alpha[e.id] = field.alpha_at_centroid(e.id);
            const auto sv = von_mises_field(mesh, stepper.u(), field, table, e0,
                                            criterion.literal_shear_sum);
            write_snapshot((out_dir / ("snap_" + zero_pad(step, 6) + ".vtk")).string(), mesh,
                           stepper.u(), phi, alpha, sv);
        }
    };

    // ---- main loop (remap -> scan/update -> effective load -> solve) -------
    std::vector<int> pending_convert;
    bool need_rebuild = false;
    std::optional<EventRow> deferred_event;
    long step = 0;

    for (step = 0; step < n_steps_total; ++step) {
        const auto wall0 = clock::now();
        const double t = static_cast<double>(step) * dt;

        // (4) apply last step's expansion: remap dofs, then rebuild operators
        if (!pending_convert.empty() || need_rebuild) {
            if (!pending_convert.empty()) {
                const NodeMap conv = convert_to_discrete(mesh, pending_convert);
                if (!conv.empty()) {
                    std::vector<double> up = remap_state(stepper.u_prev(), conv);
                    std::vector<double> uc = remap_state(stepper.u(), conv);
                    lumped = lumped_mass_vector(mesh, mat.rho);
                    stepper.reset_state(std::move(up), std::move(uc), lumped);
                    fixed_dofs = resolve_constraints(mesh, cfg);
                }
                pending_convert.clear();
            }
            k_ccm = assemble_ccm_stiffness(mesh, field, table, e0);
            k_pd = assemble_pd_stiffness(mesh, table, field);
            refresh_active(active_bonds);
            need_rebuild = false;
            if (deferred_event) {
                deferred_event->n_dofs_after = stepper.dofs();
                res.events.push_back(*deferred_event);
                deferred_event.reset();
            }
        }

        // (6) bond failure scan, stiffness update, criterion scan, alpha update
        const auto newly_broken =
            apply_failure(table, mesh, stepper.u(), criterion.s_crit, &active_bonds);
        if (!newly_broken.empty()) {
            subtract_broken_bonds(k_pd, mesh, table, field, newly_broken);
            if (!res.first_broken) {
                const Bond& b = table.bonds[newly_broken.front()];
                const Vec2 mid = (pd_point_position(mesh, table, b.elem_a, b.qp_a) +
                                  pd_point_position(mesh, table, b.elem_b, b.qp_b)) *
                                 0.5;
                res.first_broken = {step, mid};
            }
            res.total_broken += static_cast<long>(newly_broken.size());
        }

        std::vector<FlagPoint> new_flags;
        if (criterion.mode == CriterionMode::BrokenBond) {
            new_flags =
                flags_from_broken_bonds(newly_broken, table, mesh, flags, t, r_in, r_out);
        } else if (criterion.mode == CriterionMode::Strength) {
            new_flags = flags_from_strength(mesh, stepper.u(), field, table, e0, criterion,
                                            flags, t, r_in, r_out);
        }
        if (!new_flags.empty()) {
            if (!res.first_flag_pos) res.first_flag_pos = new_flags.front().pos;
            ExpansionEvent ev = expand(field, new_flags, mesh, flags);
            for (const auto& f : new_flags) flags.add(f);
            if (ev.kappa_alpha) {
                need_rebuild = true;
                pending_convert = ev.convert_ids;
            }
            EventRow row{step, static_cast<int>(new_flags.size()),
                         static_cast<int>(ev.convert_ids.size()), stepper.dofs()};
            if (ev.convert_ids.empty())
                res.events.push_back(row);
            else
                deferred_event = row;  // dof count settles at next step's remap
        }

        // (7)+(8) effective load and solve
        const std::vector<double> f = assemble_load(mesh, load, t);
        stepper.step(ks, f, fixed_dofs);

        // (9) post-processing on the output cadence
        if (step % cfg.output.every == 0) emit_frame(step, t);

        // (10) bookkeeping and stability guard
        const double wall_ms =
            std::chrono::duration<double, std::milli>(clock::now() - wall0).count();
        res.timing.push_back({step, t, stepper.dofs(), res.total_broken, wall_ms});
        if (!options.quiet)
            std::cout << "step " << step << " t " << t << " n_dofs " << stepper.dofs()
                      << " n_broken_bonds " << res.total_broken << " wall_ms " << wall_ms
                      << "\n";
        if (stepper.max_abs_u() > 1e3 * mesh.diameter()) {
            res.status = RunStatus::Unstable;
            res.message = "instability: |u| exceeded 1000 x domain diameter at step " +
                          std::to_string(step);
            ++step;
            break;
        }
    }

    if (deferred_event) res.events.push_back(*deferred_event);
    emit_frame(step, static_cast<double>(step) * dt);
    res.crack.finalize();
    res.steps_done = step;
    res.u = stepper.u();
    res.phi = compute_phi();
    res.alpha_centroid.resize(mesh.elements.size());
    for (const auto& e : mesh.elements) res.alpha_centroid[e.id] = field.alpha_at_centroid(e.id);

    std::set<int> pd_nodes;
    for (const auto& e : mesh.elements) {
        if (e.kind == ElemKind::DE) {
            res.pd_area_final += e.area;
            for (int i = 0; i < e.n_nodes; ++i) pd_nodes.insert(e.nodes[i]);
        }
    }
    res.pd_dofs_final = 2 * static_cast<int>(pd_nodes.size());

    if (writing) {
        {
            std::ofstream out(out_dir / "timing.csv");
            out << "step,t,n_dofs,n_broken,wall_ms\n";
            out.precision(12);
            for (const auto& r : res.timing)
                out << r.step << "," << r.t << "," << r.n_dofs << "," << r.n_broken << ","
                    << r.wall_ms << "\n";
        }
        {
            std::ofstream out(out_dir / "crack_series.csv");
            out << "step,t,tip_id,x,y,v_c\n";
            out.precision(12);
            for (const auto& fr : res.crack.frames())
                for (const auto& tip : fr.tips)
                    out << fr.step << "," << fr.t << "," << tip.id << "," << tip.pos.x << ","
                        << tip.pos.y << "," << tip.speed << "\n";
        }
        {
            std::ofstream out(out_dir / "events.log");
            for (const auto& ev : res.events)
                out << ev.step << " " << ev.n_new_flags << " " << ev.n_converted << " "
                    << ev.n_dofs_after << "\n";
        }
    }

    res.total_wall_s = std::chrono::duration<double>(clock::now() - run_start).count();
    return res;
}

}  // namespace mf
