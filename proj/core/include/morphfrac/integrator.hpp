#pragma once
#include <span>
#include <vector>

#include "morphfrac/error.hpp"
#include "morphfrac/mesh.hpp"
#include "morphfrac/sparse.hpp"

namespace mf {

struct WaveSpeeds {
    double c = 0.0;    // sound speed sqrt(E/rho), mm/s
    double c_s = 0.0;  // shear wave speed
    double c_r = 0.0;  // Rayleigh wave speed
};

WaveSpeeds wave_speeds(double E, double nu, double rho);

/// Rayleigh-to-sound speed ratio; below 1 for nu in [0, 0.5).
double rayleigh_factor(double nu);

/// Stability bound of the central-difference scheme: smallest edge over the
/// sound speed.
double critical_dt(const Mesh& mesh, double E, double rho);

/// y = (sum of ks) x
void apply_operators(std::span<const SparseSym* const> ks, std::span<const double> x,
                     std::span<double> y);

/// Fictitious previous-step displacement from the initial conditions:
/// u(-dt) = u0 - dt v0 + dt^2/2 a0 with a0 = M^-1 (F0 - K u0).
std::vector<double> bootstrap(const std::vector<double>& u0, const std::vector<double>& v0,
                              const std::vector<double>& f0, const std::vector<double>& lumped_m,
                              std::span<const SparseSym* const> k, double dt);
std::vector<double> bootstrap(const std::vector<double>& u0, const std::vector<double>& v0,
                              const std::vector<double>& f0, const std::vector<double>& lumped_m,
                              const SparseSym& k, double dt);

/// Explicit central-difference stepper over a lumped-mass system. The
/// stiffness operator is owned by the caller and may change between steps
/// (bond subtraction, rebuilds); dof resizes go through reset_state.
class CentralDifference {
  public:
    void init(std::vector<double> u0, std::vector<double> v0, const std::vector<double>& f0,
              std::vector<double> lumped_m, std::span<const SparseSym* const> k, double dt);
    void init(std::vector<double> u0, std::vector<double> v0, const std::vector<double>& f0,
              std::vector<double> lumped_m, const SparseSym& k, double dt);

    /// Replaces state after a dof remap. u_prev/u_curr must match the new mass.
    void reset_state(std::vector<double> u_prev, std::vector<double> u_curr,
                     std::vector<double> lumped_m);

    /// Advances one step under load f, overwriting prescribed dofs afterwards.
    void step(std::span<const SparseSym* const> k, const std::vector<double>& f,
              const std::vector<int>& fixed_dofs = {},
              const std::vector<double>* fixed_values = nullptr);
    void step(const SparseSym& k, const std::vector<double>& f,
              const std::vector<int>& fixed_dofs = {},
              const std::vector<double>* fixed_values = nullptr);

    double t() const { return static_cast<double>(step_count_) * dt_; }
    long step_count() const { return step_count_; }
    double dt() const { return dt_; }
    int dofs() const { return static_cast<int>(u_curr_.size()); }

    const std::vector<double>& u() const { return u_curr_; }
    const std::vector<double>& u_prev() const { return u_prev_; }
    const std::vector<double>& mass() const { return mass_; }

    /// Central-difference velocity at the step just completed (t - dt).
    const std::vector<double>& velocity_prev_step() const { return v_last_; }

    double max_abs_u() const;
    double kinetic_energy() const;  // from velocity_prev_step

  private:
    std::vector<double> u_prev_, u_curr_, mass_, v_last_;
    double dt_ = 0.0;
    long step_count_ = 0;
};

}  // namespace mf
