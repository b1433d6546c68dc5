#include "morphfrac/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "morphfrac/error.hpp"
#include "morphfrac/mesh_io.hpp"

namespace mf {

namespace {

[[noreturn]] void cfg_fail(const std::string& where, const std::string& what) {
    fail(ErrorKind::Parse, where + ": " + what);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

double to_double(const std::string& s, const std::string& where) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        cfg_fail(where, "expected a number, got `" + s + "`");
    }
}

EdgeSelector edge_from_string(const std::string& s, const std::string& where) {
    if (s == "left") return EdgeSelector::Left;
    if (s == "right") return EdgeSelector::Right;
    if (s == "top") return EdgeSelector::Top;
    if (s == "bottom") return EdgeSelector::Bottom;
    if (s == "hole_rim") return EdgeSelector::HoleRim;
    cfg_fail(where, "unknown edge selector `" + s + "`");
}

std::string edge_to_string(EdgeSelector e) {
    switch (e) {
        case EdgeSelector::Left: return "left";
        case EdgeSelector::Right: return "right";
        case EdgeSelector::Top: return "top";
        case EdgeSelector::Bottom: return "bottom";
        case EdgeSelector::HoleRim: return "hole_rim";
    }
    return "?";
}

int comp_from_string(const std::string& s, const std::string& where) {
    if (s == "x") return 0;
    if (s == "y") return 1;
    cfg_fail(where, "component must be x or y, got `" + s + "`");
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open config file: " + path);
    const std::filesystem::path dir = std::filesystem::path(path).parent_path();
    auto rel = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? p : (dir / fp).string();
    };

    ScenarioConfig cfg;
    bool saw_criterion = false;
    std::string section;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = path + ":" + std::to_string(lineno);
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks[0].front() == '[') {
            section = toks[0].substr(1, toks[0].size() - 2);
            if (section == "criterion") saw_criterion = true;
            continue;
        }
        // key = v1 v2 ...
        if (toks.size() < 3 || toks[1] != "=") cfg_fail(where, "expected `key = value`");
        const std::string key = toks[0];
        std::vector<std::string> v(toks.begin() + 2, toks.end());
        auto need = [&](size_t n) {
            if (v.size() != n)
                cfg_fail(where, "key `" + key + "` expects " + std::to_string(n) + " value(s)");
        };
        auto num = [&](size_t i) { return to_double(v[i], where); };

        if (section.empty()) {
            if (key == "name") {
                need(1);
                cfg.name = v[0];
            } else {
                cfg_fail(where, "unknown top-level key `" + key + "`");
            }
        } else if (section == "geometry") {
            auto& g = cfg.geometry;
            if (key == "kind") {
                need(1);
                if (v[0] == "rect") g.kind = GeometrySpec::Kind::Rect;
                else if (v[0] == "file") g.kind = GeometrySpec::Kind::File;
                else if (v[0] == "disk") g.kind = GeometrySpec::Kind::Disk;
                else cfg_fail(where, "geometry kind must be rect|file|disk");
            } else if (key == "origin") { need(2); g.origin = {num(0), num(1)}; }
            else if (key == "size") { need(2); g.size = {num(0), num(1)}; }
            else if (key == "spacing") { need(1); g.spacing = num(0); }
            else if (key == "mesh_file") { need(1); g.mesh_file = rel(v[0]); }
            else if (key == "inner_diameter") { need(1); g.inner_diameter = num(0); }
            else if (key == "outer_diameter") { need(1); g.outer_diameter = num(0); }
            else if (key == "pores_file") { need(1); g.pores_file = rel(v[0]); }
            else if (key == "notch") { need(4); g.notch = Segment{{num(0), num(1)}, {num(2), num(3)}}; }
            else cfg_fail(where, "unknown geometry key `" + key + "`");
        } else if (section == "material") {
            auto& m = cfg.material;
            if (key == "youngs_modulus") { need(1); m.youngs_modulus = num(0); }
            else if (key == "poisson_ratio") { need(1); m.poisson_ratio = num(0); }
            else if (key == "density") { need(1); m.density = num(0); }
            else if (key == "horizon") { need(1); m.horizon = num(0); }
            else if (key == "characteristic_length") { need(1); m.characteristic_length = num(0); }
            else if (key == "energy_release_rate") { need(1); m.energy_release_rate = num(0); }
            else if (key == "critical_stretch") { need(1); m.critical_stretch = num(0); }
            else if (key == "strength") { need(1); m.strength = num(0); }
            else cfg_fail(where, "unknown material key `" + key + "`");
        } else if (section == "criterion") {
            if (key == "mode") {
                need(1);
                if (v[0] == "broken_bond") cfg.criterion.mode = CriterionMode::BrokenBond;
                else if (v[0] == "strength") cfg.criterion.mode = CriterionMode::Strength;
                else if (v[0] == "none") cfg.criterion.mode = CriterionMode::None;
                else cfg_fail(where, "criterion mode must be broken_bond|strength|none");
            } else if (key == "literal_shear_sum") {
                need(1);
                cfg.criterion.literal_shear_sum = v[0] == "true";
            } else cfg_fail(where, "unknown criterion key `" + key + "`");
        } else if (section == "load") {
            auto& l = cfg.load;
            if (key == "kind") {
                need(1);
                if (v[0] == "normal_step") l.kind = LoadKind::NormalStep;
                else if (v[0] == "normal_ramp") l.kind = LoadKind::NormalRamp;
                else if (v[0] == "explosion") l.kind = LoadKind::Explosion;
                else if (v[0] == "none") l.kind = LoadKind::None;
                else cfg_fail(where, "load kind must be normal_step|normal_ramp|explosion|none");
            } else if (key == "magnitude") { need(1); l.magnitude = num(0); }
            else if (key == "t0") { need(1); l.t0 = num(0); }
            else if (key == "m_u") { need(1); l.explosion.m_u = num(0); }
            else if (key == "m_d") { need(1); l.explosion.m_d = num(0); }
            else if (key == "alpha1") { need(1); l.explosion.alpha1 = num(0); }
            else if (key == "alpha2") { need(1); l.explosion.alpha2 = num(0); }
            else if (key == "edges") {
                for (const auto& e : v) l.edges.push_back(edge_from_string(e, where));
            } else if (key == "rim_center") { need(2); l.rim_center = {num(0), num(1)}; }
            else if (key == "rim_radius") { need(1); l.rim_radius = num(0); }
            else if (key == "body_force") { need(2); l.body_force = {num(0), num(1)}; }
            else cfg_fail(where, "unknown load key `" + key + "`");
        } else if (section == "numerics") {
            auto& n = cfg.numerics;
            if (key == "dt") { need(1); n.dt = num(0); }
            else if (key == "dt_safety") { need(1); n.dt_safety = num(0); }
            else if (key == "total_time") { need(1); n.total_time = num(0); }
            else if (key == "flag_inner_radius") { need(1); n.flag_inner_radius = num(0); }
            else if (key == "flag_outer_radius") { need(1); n.flag_outer_radius = num(0); }
            else if (key == "pd_quadrature") {
                need(1);
                if (v[0] == "centroid") n.pd_quadrature = PdQuadrature::Centroid;
                else if (v[0] == "gauss") n.pd_quadrature = PdQuadrature::Gauss;
                else cfg_fail(where, "pd_quadrature must be centroid|gauss");
            } else cfg_fail(where, "unknown numerics key `" + key + "`");
        } else if (section == "output") {
            if (key == "every") { need(1); cfg.output.every = static_cast<int>(num(0)); }
            else if (key == "crack_damage_threshold") { need(1); cfg.output.crack_damage_threshold = num(0); }
            else cfg_fail(where, "unknown output key `" + key + "`");
        } else if (section == "initial_flags") {
            if (key == "flag") {
                need(4);
                cfg.initial_flags.push_back({{num(0), num(1)}, num(2), num(3)});
            } else cfg_fail(where, "unknown initial_flags key `" + key + "`");
        } else if (section == "initial_alpha") {
            if (key == "strip") {
                need(3);
                cfg.initial_strip = StripSpec{num(0), num(1), num(2)};
            } else cfg_fail(where, "unknown initial_alpha key `" + key + "`");
        } else if (section == "bc") {
            if (key == "fix") {
                need(2);
                cfg.edge_fixes.push_back({edge_from_string(v[0], where), comp_from_string(v[1], where)});
            } else if (key == "pin") {
                need(3);
                cfg.pins.push_back({{num(0), num(1)}, comp_from_string(v[2], where)});
            } else cfg_fail(where, "unknown bc key `" + key + "`");
        } else if (section == "resolved") {
            // informational echo section; ignored on reparse
        } else {
            cfg_fail(where, "unknown section [" + section + "]");
        }
    }
    if (!saw_criterion)
        fail(ErrorKind::Validation, path + ": missing [criterion] section");
    return cfg;
}

ResolvedScenario resolve_scenario(const ScenarioConfig& cfg) {
    ResolvedScenario rs;
    rs.config = cfg;

    // geometry
    const auto& g = cfg.geometry;
    switch (g.kind) {
        case GeometrySpec::Kind::Rect:
            rs.mesh = generate_structured_quad_mesh(g.origin, g.origin + g.size, g.spacing);
            break;
        case GeometrySpec::Kind::File:
            if (g.mesh_file.empty())
                fail(ErrorKind::Validation, "geometry: mesh_file required for kind=file");
            rs.mesh = load_unstructured_mesh(g.mesh_file);
            break;
        case GeometrySpec::Kind::Disk:
            rs.mesh = make_annulus_mesh(0.5 * g.inner_diameter, 0.5 * g.outer_diameter, g.spacing);
            break;
    }
    if (!g.pores_file.empty()) {
        std::ifstream in(g.pores_file);
        if (!in) fail(ErrorKind::Io, "cannot open pores file: " + g.pores_file);
        std::vector<Pore> pores;
        double x, y, r;
        while (in >> x >> y >> r) pores.push_back({{x, y}, r});
        punch_holes(rs.mesh, pores);
    }
    if (g.notch) insert_pre_notch(rs.mesh, *g.notch);

    // material
    const auto& m = cfg.material;
    if (m.youngs_modulus <= 0) fail(ErrorKind::Validation, "material: youngs_modulus missing");
    if (m.density <= 0) fail(ErrorKind::Validation, "material: density missing");
    rs.material.E = m.youngs_modulus;
    rs.material.nu = m.poisson_ratio;
    rs.material.rho = m.density;
    rs.material.delta = m.horizon.value_or(0.0);
    rs.material.l = m.characteristic_length.value_or(0.0);
    rs.material.s_crit = m.critical_stretch.value_or(0.0);
    rs.material.sigma_crit = m.strength.value_or(0.0);
    std::optional<double> g0_n_per_mm;
    if (m.energy_release_rate) g0_n_per_mm = *m.energy_release_rate * 1000.0;  // J/mm^2 -> N/mm
    rs.material.resolve(rs.mesh.avg_dx(), g0_n_per_mm);
    if (rs.material.s_crit <= 0)
        fail(ErrorKind::Validation,
             "material: critical_stretch (or energy_release_rate) required");
    if (cfg.criterion.mode == CriterionMode::Strength && rs.material.sigma_crit <= 0)
        fail(ErrorKind::Validation, "material: strength required for the strength criterion");

    // numerics
    rs.speeds = wave_speeds(rs.material.E, rs.material.nu, rs.material.rho);
    rs.dt_cr = critical_dt(rs.mesh, rs.material.E, rs.material.rho);
    rs.dt = cfg.numerics.dt.value_or(cfg.numerics.dt_safety * rs.dt_cr);
    rs.total_time = cfg.numerics.total_time;
    if (rs.total_time <= 0) fail(ErrorKind::Validation, "numerics: total_time must be positive");
    if (rs.dt > rs.dt_cr)
        fail(ErrorKind::Validation, "numerics: violated `dt <= dt_cr` (dt_cr = " +
                                        std::to_string(rs.dt_cr) + " s)");
    const double delta = rs.material.delta;
    rs.flag_r_in = cfg.numerics.flag_inner_radius.value_or(2.0 * delta);
    rs.flag_r_out = cfg.numerics.flag_outer_radius.value_or(4.0 * delta);

    // constraint checks, each named after the rule it enforces
    if (cfg.criterion.mode == CriterionMode::BrokenBond && cfg.initial_flags.empty())
        fail(ErrorKind::Validation,
             "criterion: broken_bond mode requires a nonempty initial flag set");
    for (const auto& fl : cfg.initial_flags) {
        if (fl.r1 < delta)
            fail(ErrorKind::Validation, "initial flag: violated `r1 >= delta` (delta = " +
                                            std::to_string(delta) + " mm)");
        if (fl.r2 - fl.r1 < 2.0 * delta)
            fail(ErrorKind::Validation, "initial flag: violated `r2 - r1 >= 2*delta`");
    }
    if (rs.flag_r_in < delta)
        fail(ErrorKind::Validation, "numerics: violated `r_p >= delta`");
    if (rs.flag_r_out - rs.flag_r_in < 2.0 * delta)
        fail(ErrorKind::Validation, "numerics: violated `R_p - r_p >= 2*delta`");
    const auto rc = check_expansion_radius(rs.flag_r_in, rs.mesh.min_edge(), rs.dt, rs.speeds.c_r);
    if (rc.violates_min_edge)
        fail(ErrorKind::Validation, "numerics: violated `r_p >= L` (smallest edge L = " +
                                        std::to_string(rs.mesh.min_edge()) + " mm)");
    if (rc.violates_wave_bound)
        fail(ErrorKind::Validation, "numerics: violated `r_p >= C_R * dt`");
    if (cfg.output.every < 1) fail(ErrorKind::Validation, "output: every must be >= 1");
    return rs;
}

ResolvedScenario parse_config(const std::string& path) {
    return resolve_scenario(parse_config_file(path));
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream os;
    os << "name = " << cfg.name << "\n\n[geometry]\n";
    const auto& g = cfg.geometry;
    switch (g.kind) {
        case GeometrySpec::Kind::Rect:
            os << "kind = rect\norigin = " << fmt(g.origin.x) << " " << fmt(g.origin.y)
               << "\nsize = " << fmt(g.size.x) << " " << fmt(g.size.y)
               << "\nspacing = " << fmt(g.spacing) << "\n";
            break;
        case GeometrySpec::Kind::File:
            os << "kind = file\nmesh_file = " << g.mesh_file << "\n";
            break;
        case GeometrySpec::Kind::Disk:
            os << "kind = disk\ninner_diameter = " << fmt(g.inner_diameter)
               << "\nouter_diameter = " << fmt(g.outer_diameter)
               << "\nspacing = " << fmt(g.spacing) << "\n";
            break;
    }
    if (!g.pores_file.empty()) os << "pores_file = " << g.pores_file << "\n";
    if (g.notch)
        os << "notch = " << fmt(g.notch->a.x) << " " << fmt(g.notch->a.y) << " "
           << fmt(g.notch->b.x) << " " << fmt(g.notch->b.y) << "\n";

    const auto& m = cfg.material;
    os << "\n[material]\n";
    os << "youngs_modulus = " << fmt(m.youngs_modulus) << "\n";
    os << "poisson_ratio = " << fmt(m.poisson_ratio) << "\n";
    os << "density = " << fmt(m.density) << "\n";
    if (m.horizon) os << "horizon = " << fmt(*m.horizon) << "\n";
    if (m.characteristic_length)
        os << "characteristic_length = " << fmt(*m.characteristic_length) << "\n";
    if (m.energy_release_rate)
        os << "energy_release_rate = " << fmt(*m.energy_release_rate) << "\n";
    if (m.critical_stretch) os << "critical_stretch = " << fmt(*m.critical_stretch) << "\n";
    if (m.strength) os << "strength = " << fmt(*m.strength) << "\n";

    os << "\n[criterion]\nmode = ";
    switch (cfg.criterion.mode) {
        case CriterionMode::BrokenBond: os << "broken_bond\n"; break;
        case CriterionMode::Strength: os << "strength\n"; break;
        case CriterionMode::None: os << "none\n"; break;
    }
    if (cfg.criterion.literal_shear_sum) os << "literal_shear_sum = true\n";

    const auto& l = cfg.load;
    os << "\n[load]\nkind = ";
    switch (l.kind) {
        case LoadKind::NormalStep: os << "normal_step\n"; break;
        case LoadKind::NormalRamp: os << "normal_ramp\n"; break;
        case LoadKind::Explosion: os << "explosion\n"; break;
        case LoadKind::None: os << "none\n"; break;
    }
    if (l.kind != LoadKind::None) {
        if (l.kind == LoadKind::Explosion) {
            os << "magnitude = " << fmt(l.magnitude) << "\n";
            os << "m_u = " << fmt(l.explosion.m_u) << "\nm_d = " << fmt(l.explosion.m_d) << "\n";
            os << "alpha1 = " << fmt(l.explosion.alpha1) << "\nalpha2 = " << fmt(l.explosion.alpha2)
               << "\n";
        } else {
            os << "magnitude = " << fmt(l.magnitude) << "\n";
            if (l.kind == LoadKind::NormalRamp) os << "t0 = " << fmt(l.t0) << "\n";
        }
        if (!l.edges.empty()) {
            os << "edges =";
            for (auto e : l.edges) os << " " << edge_to_string(e);
            os << "\n";
        }
        if (l.rim_radius > 0) {
            os << "rim_center = " << fmt(l.rim_center.x) << " " << fmt(l.rim_center.y) << "\n";
            os << "rim_radius = " << fmt(l.rim_radius) << "\n";
        }
    }
    if (l.body_force.norm2() > 0)
        os << "body_force = " << fmt(l.body_force.x) << " " << fmt(l.body_force.y) << "\n";

    if (!cfg.edge_fixes.empty() || !cfg.pins.empty()) {
        os << "\n[bc]\n";
        for (const auto& f : cfg.edge_fixes)
            os << "fix = " << edge_to_string(f.edge) << " " << (f.comp == 0 ? "x" : "y") << "\n";
        for (const auto& p : cfg.pins)
            os << "pin = " << fmt(p.pos.x) << " " << fmt(p.pos.y) << " "
               << (p.comp == 0 ? "x" : "y") << "\n";
    }

    const auto& n = cfg.numerics;
    os << "\n[numerics]\n";
    if (n.dt) os << "dt = " << fmt(*n.dt) << "\n";
    if (n.dt_safety != 0.5) os << "dt_safety = " << fmt(n.dt_safety) << "\n";
    os << "total_time = " << fmt(n.total_time) << "\n";
    if (n.flag_inner_radius) os << "flag_inner_radius = " << fmt(*n.flag_inner_radius) << "\n";
    if (n.flag_outer_radius) os << "flag_outer_radius = " << fmt(*n.flag_outer_radius) << "\n";
    if (n.pd_quadrature == PdQuadrature::Gauss) os << "pd_quadrature = gauss\n";

    os << "\n[output]\nevery = " << cfg.output.every << "\n";
    os << "crack_damage_threshold = " << fmt(cfg.output.crack_damage_threshold) << "\n";

    if (!cfg.initial_flags.empty()) {
        os << "\n[initial_flags]\n";
        for (const auto& f : cfg.initial_flags)
            os << "flag = " << fmt(f.pos.x) << " " << fmt(f.pos.y) << " " << fmt(f.r1) << " "
               << fmt(f.r2) << "\n";
    }
    if (cfg.initial_strip) {
        os << "\n[initial_alpha]\nstrip = " << fmt(cfg.initial_strip->x0) << " "
           << fmt(cfg.initial_strip->half_inner) << " " << fmt(cfg.initial_strip->half_outer)
           << "\n";
    }
    return os.str();
}

void write_resolved_config(const ResolvedScenario& rs, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot write resolved config: " + path);
    out << serialize_config(rs.config);
    out << "\n[resolved]\n";
    out << "avg_dx = " << fmt(rs.mesh.avg_dx()) << "\n";
    out << "min_edge = " << fmt(rs.mesh.min_edge()) << "\n";
    out << "n_nodes = " << rs.mesh.nodes.size() << "\n";
    out << "n_elements = " << rs.mesh.elements.size() << "\n";
    out << "delta = " << fmt(rs.material.delta) << "\n";
    out << "characteristic_length = " << fmt(rs.material.l) << "\n";
    out << "tau0 = " << fmt(rs.material.tau0) << "\n";
    out << "s_crit = " << fmt(rs.material.s_crit) << "\n";
    out << "dt = " << fmt(rs.dt) << "\n";
    out << "dt_cr = " << fmt(rs.dt_cr) << "\n";
    out << "sound_speed = " << fmt(rs.speeds.c) << "\n";
    out << "shear_speed = " << fmt(rs.speeds.c_s) << "\n";
    out << "rayleigh_speed = " << fmt(rs.speeds.c_r) << "\n";
    out << "flag_inner_radius = " << fmt(rs.flag_r_in) << "\n";
    out << "flag_outer_radius = " << fmt(rs.flag_r_out) << "\n";
}

std::vector<ScenarioConfig> builtin_scenarios(const std::string& data_dir) {
    std::vector<ScenarioConfig> out;

    auto glass = []() {
        MaterialSpec m;
        m.youngs_modulus = 72e3;
        m.poisson_ratio = 1.0 / 3.0;
        m.density = 2.44e-9;
        m.energy_release_rate = 1.35e-4;
        return m;
    };

    // pre-notched rectangular plate under transverse tension: crack branching
    {
        ScenarioConfig c;
        c.name = "branch_plate";
        c.geometry.kind = GeometrySpec::Kind::Rect;
        c.geometry.origin = {0, 0};
        c.geometry.size = {100, 100};  // outer dimensions are config-driven
        c.geometry.spacing = 0.5;
        c.geometry.notch = Segment{{50, 0}, {50, 50}};
        c.material = glass();
        c.criterion.mode = CriterionMode::BrokenBond;
        c.load.kind = LoadKind::NormalStep;
        c.load.magnitude = 14.0;
        c.load.edges = {EdgeSelector::Left, EdgeSelector::Right};
        c.numerics.dt = 4e-8;
        c.numerics.total_time = 3.84e-5;
        c.initial_flags.push_back({{50, 50}, 6.0, 12.0});
        out.push_back(c);

        c.name = "branch_plate_desk";
        c.geometry.spacing = 1.0;
        c.numerics.dt = 8e-8;
        out.push_back(c);
    }

    // disk with center hole under an explosion load on the rim
    {
        ScenarioConfig c;
        c.name = "blast_disk";
        c.geometry.kind = GeometrySpec::Kind::Disk;
        c.geometry.inner_diameter = 6.45;
        c.geometry.outer_diameter = 144.0;
        c.geometry.spacing = 0.5;
        c.material.youngs_modulus = 72e3;
        c.material.poisson_ratio = 1.0 / 3.0;
        c.material.density = 2.70e-9;
        c.material.energy_release_rate = 2.217e-2;
        c.criterion.mode = CriterionMode::BrokenBond;
        c.load.kind = LoadKind::Explosion;
        c.load.magnitude = 500.0;
        c.load.explosion.p0 = 500.0;
        c.load.explosion.m_u = 9e5;
        c.load.explosion.m_d = 1e5;
        c.load.edges = {EdgeSelector::HoleRim};
        c.load.rim_center = {0, 0};
        c.load.rim_radius = 3.225;
        c.numerics.dt = 5e-8;
        c.numerics.total_time = 5e-5;
        c.initial_flags.push_back({{0, 0}, 6.0, 12.0});
        out.push_back(c);

        c.name = "blast_disk_desk";
        c.geometry.spacing = 1.0;
        c.numerics.dt = 1e-7;
        out.push_back(c);
    }

    // plate with random pores under a ramped tensile load, strength-driven
    {
        ScenarioConfig c;
        c.name = "porous_plate";
        c.geometry.kind = GeometrySpec::Kind::Rect;
        c.geometry.origin = {0, 0};
        c.geometry.size = {100, 100};
        c.geometry.spacing = 0.5;
        c.geometry.pores_file = data_dir + "/pores_31.txt";
        c.material.youngs_modulus = 3.26e3;
        c.material.poisson_ratio = 1.0 / 3.0;
        c.material.density = 1.10e-9;
        c.material.critical_stretch = 0.03;
        c.material.strength = 62.86;
        c.criterion.mode = CriterionMode::Strength;
        c.load.kind = LoadKind::NormalRamp;
        c.load.magnitude = 12.0;
        c.load.t0 = 5e-6;
        c.load.edges = {EdgeSelector::Top};
        c.edge_fixes.push_back({EdgeSelector::Bottom, 1});
        c.pins.push_back({{0, 0}, 0});
        c.numerics.dt = 1e-8;
        c.numerics.total_time = 2e-5;
        out.push_back(c);

        c.name = "porous_plate_desk";
        c.geometry.size = {80, 60};
        c.geometry.spacing = 1.0;
        c.geometry.pores_file = data_dir + "/pores_desk8.txt";
        c.load.magnitude = 45.0;
        c.load.t0 = 2e-6;
        c.numerics.dt = 2e-7;
        c.numerics.total_time = 2.5e-5;
        out.push_back(c);
    }
    return out;
}

}  // namespace mf
