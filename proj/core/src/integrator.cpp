#include "morphfrac/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace mf {

WaveSpeeds wave_speeds(double E, double nu, double rho) {
    if (E <= 0 || rho <= 0) fail(ErrorKind::Parameter, "wave_speeds: E, rho must be positive");
    if (nu < 0 || nu >= 0.5) fail(ErrorKind::Parameter, "wave_speeds: need 0 <= nu < 0.5");
    WaveSpeeds w;
    w.c = std::sqrt(E / rho);
    w.c_s = std::sqrt(1.0 / (2.0 * (1.0 + nu))) * w.c;
    w.c_r = (0.862 + 1.14 * nu) / (1.0 + nu) * w.c_s;
    return w;
}

double rayleigh_factor(double nu) {
    return (0.862 + 1.14 * nu) / (1.0 + nu) * std::sqrt(1.0 / (2.0 * (1.0 + nu)));
}

double critical_dt(const Mesh& mesh, double E, double rho) {
    return min_edge_length(mesh) / std::sqrt(E / rho);
}

void apply_operators(std::span<const SparseSym* const> ks, std::span<const double> x,
                     std::span<double> y) {
    std::fill(y.begin(), y.end(), 0.0);
    std::vector<double> tmp(y.size());
    for (const SparseSym* k : ks) {
        k->matvec(x, tmp);
        for (size_t i = 0; i < y.size(); ++i) y[i] += tmp[i];
    }
}

std::vector<double> bootstrap(const std::vector<double>& u0, const std::vector<double>& v0,
                              const std::vector<double>& f0, const std::vector<double>& lumped_m,
                              const SparseSym& k, double dt) {
    const SparseSym* ks[] = {&k};
    return bootstrap(u0, v0, f0, lumped_m, ks, dt);
}

std::vector<double> bootstrap(const std::vector<double>& u0, const std::vector<double>& v0,
                              const std::vector<double>& f0, const std::vector<double>& lumped_m,
                              std::span<const SparseSym* const> k, double dt) {
    const size_t n = u0.size();
    std::vector<double> ku(n);
    apply_operators(k, u0, ku);
    std::vector<double> um(n);
    for (size_t i = 0; i < n; ++i) {
        if (lumped_m[i] <= 0.0)
            fail(ErrorKind::Singularity, "bootstrap: zero lumped mass at dof " + std::to_string(i));
        const double a0 = (f0[i] - ku[i]) / lumped_m[i];
        um[i] = u0[i] - dt * v0[i] + 0.5 * dt * dt * a0;
    }
    return um;
}

void CentralDifference::init(std::vector<double> u0, std::vector<double> v0,
                             const std::vector<double>& f0, std::vector<double> lumped_m,
                             const SparseSym& k, double dt) {
    const SparseSym* ks[] = {&k};
    init(std::move(u0), std::move(v0), f0, std::move(lumped_m), ks, dt);
}

void CentralDifference::init(std::vector<double> u0, std::vector<double> v0,
                             const std::vector<double>& f0, std::vector<double> lumped_m,
                             std::span<const SparseSym* const> k, double dt) {
    dt_ = dt;
    step_count_ = 0;
    u_prev_ = bootstrap(u0, v0, f0, lumped_m, k, dt);
    u_curr_ = std::move(u0);
    mass_ = std::move(lumped_m);
    v_last_ = std::move(v0);
}

void CentralDifference::reset_state(std::vector<double> u_prev, std::vector<double> u_curr,
                                    std::vector<double> lumped_m) {
    if (u_prev.size() != u_curr.size() || u_curr.size() != lumped_m.size())
        fail(ErrorKind::Consistency, "reset_state: dof dimensions disagree");
    u_prev_ = std::move(u_prev);
    u_curr_ = std::move(u_curr);
    mass_ = std::move(lumped_m);
    v_last_.assign(u_curr_.size(), 0.0);
}

void CentralDifference::step(const SparseSym& k, const std::vector<double>& f,
                             const std::vector<int>& fixed_dofs,
                             const std::vector<double>* fixed_values) {
    const SparseSym* ks[] = {&k};
    step(ks, f, fixed_dofs, fixed_values);
}

void CentralDifference::step(std::span<const SparseSym* const> k, const std::vector<double>& f,
                             const std::vector<int>& fixed_dofs,
                             const std::vector<double>* fixed_values) {
    const size_t n = u_curr_.size();
    if (f.size() != n || mass_.size() != n)
        fail(ErrorKind::Consistency, "step: operator/state dimensions disagree (missed remap?)");
    for (const SparseSym* kk : k)
        if (static_cast<size_t>(kk->dim()) != n)
            fail(ErrorKind::Consistency,
                 "step: operator/state dimensions disagree (missed remap?)");
    std::vector<double> ku(n);
    apply_operators(k, u_curr_, ku);
    std::vector<double> u_next(n);
    const double dt2 = dt_ * dt_;
    for (size_t i = 0; i < n; ++i) {
        const double mhat = mass_[i] / dt2;
        u_next[i] = (f[i] - ku[i]) / mhat + 2.0 * u_curr_[i] - u_prev_[i];
    }
    for (size_t c = 0; c < fixed_dofs.size(); ++c)
        u_next[fixed_dofs[c]] = fixed_values ? (*fixed_values)[c] : 0.0;

    // velocity at time t, available once u(t+dt) exists
    if (v_last_.size() != n) v_last_.assign(n, 0.0);
    for (size_t i = 0; i < n; ++i) v_last_[i] = (u_next[i] - u_prev_[i]) / (2.0 * dt_);

    u_prev_ = std::move(u_curr_);
    u_curr_ = std::move(u_next);
    ++step_count_;
}

double CentralDifference::max_abs_u() const {
    double m = 0.0;
    for (double v : u_curr_) m = std::max(m, std::abs(v));
    return m;
}

double CentralDifference::kinetic_energy() const {
    double e = 0.0;
    for (size_t i = 0; i < v_last_.size(); ++i) e += 0.5 * mass_[i] * v_last_[i] * v_last_[i];
    return e;
}

}  // namespace mf
