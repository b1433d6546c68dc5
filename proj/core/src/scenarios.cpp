#include "morphfrac/scenarios.hpp"

#include <cmath>

#include "morphfrac/error.hpp"

namespace mf {

double ramp_traction(double t, double sigma0, double t0) {
    if (t < 0.0 || t0 <= 0.0) fail(ErrorKind::Parameter, "ramp_traction: need t >= 0, t0 > 0");
    return t <= t0 ? sigma0 * t / t0 : sigma0;
}

void ExplosionParams::derive() {
    if (m_u <= 0 || m_d <= 0) fail(ErrorKind::Parameter, "explosion load: rates must be positive");
    if (alpha1 <= 0 || alpha1 >= 1 || alpha2 <= 0 || alpha2 >= 1)
        fail(ErrorKind::Parameter, "explosion load: alpha1, alpha2 must be in (0,1)");
    const double sqrt2e = std::sqrt(2.0 * std::exp(1.0));
    g = static_cast<int>(std::lround(sqrt2e * m_u / m_d));
    const double k = std::exp(1.0) / (2.0 * g) * m_u;
    const double a = std::pow(-std::log(alpha1), 1.0 / (2.0 * g));
    const double b = std::pow(-std::log(1.0 - alpha2), 1.0 / (2.0 * g));
    t_u = a / k;
    t_d = (a - b) / k;
}

double ExplosionParams::value(double t) const {
    const double k = std::exp(1.0) / (2.0 * g) * m_u;
    const double sqrt2e = std::sqrt(2.0 * std::exp(1.0));
    const double pu = std::exp(-std::pow(std::abs(k * (t - t_u)), 2.0 * g));
    const double xd = 0.5 * sqrt2e * m_d * (t - t_d);
    const double pd = std::exp(-xd * xd);
    return p0 * pu * pd;
}

double explosion_load(double t, double p0, double m_u, double m_d,
                      double alpha1, double alpha2) {
    ExplosionParams p;
    p.p0 = p0;
    p.m_u = m_u;
    p.m_d = m_d;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    p.derive();
    return p.value(t);
}

}  // namespace mf
