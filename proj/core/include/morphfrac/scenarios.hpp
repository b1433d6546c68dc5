#pragma once

namespace mf {

/// Linear ramp to sigma0 over t0, constant afterwards.
double ramp_traction(double t, double sigma0, double t0);

/// Blast pressure pulse P0 * P_u(t) * P_d(t): a super-Gaussian rise factor
/// and a Gaussian decay factor, parameterized by the peak rise and decay
/// rates. The derived constants place P(0)/P0 near alpha1 and the peak near
/// t_d at P0 * (1 - alpha2).
struct ExplosionParams {
    double p0 = 0.0;      // peak pressure, MPa
    double m_u = 0.0;     // max rise rate, 1/s
    double m_d = 0.0;     // max decay rate, 1/s
    double alpha1 = 1e-7;
    double alpha2 = 1e-3;
    // derived
    int g = 0;
    double t_u = 0.0;
    double t_d = 0.0;

    void derive();
    double value(double t) const;

    bool operator==(const ExplosionParams&) const = default;
};

double explosion_load(double t, double p0, double m_u, double m_d,
                      double alpha1 = 1e-7, double alpha2 = 1e-3);

}  // namespace mf
