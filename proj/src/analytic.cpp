#include "ballistic/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ballistic {

namespace {

void check_time(double t) {
    if (t < 0.0) throw std::domain_error("analytic fields are defined for t >= 0");
}

}  // namespace

double sigma_of_t(const SlitSpec& slit, const PhysicalParams& params, double t) {
    check_time(t);
    const double u0 = params.diffusion_const / slit.sigma0;
    const double ratio = u0 * t / slit.sigma0;
    return slit.sigma0 * std::sqrt(1.0 + ratio * ratio);
}

double gaussian_density(const SlitSpec& slit, const PhysicalParams& params, double x, double t) {
    const double sigma = sigma_of_t(slit, params, t);
    const double xi = x - slit.centre - slit.vx * t;
    const double arg = xi / sigma;
    return std::exp(-0.5 * arg * arg) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
}

std::pair<double, double> kinematic_fields(const SlitSpec& slit, const PhysicalParams& params,
                                           double x, double t) {
    check_time(t);
    const double u0 = params.diffusion_const / slit.sigma0;
    const double sigma = sigma_of_t(slit, params, t);
    const double sigma2 = sigma * sigma;
    const double xi = x - slit.centre - slit.vx * t;
    const double v_tot = slit.vx + xi * u0 * u0 * t / sigma2;
    const double a_tot = xi * u0 * u0 * slit.sigma0 * slit.sigma0 / (sigma2 * sigma2);
    return {v_tot, a_tot};
}

double osmotic_velocity(const SlitSpec& slit, const PhysicalParams& params, double x, double t) {
    check_time(t);
    const double sigma = sigma_of_t(slit, params, t);
    const double xi = x - slit.centre - slit.vx * t;
    return xi * params.hbar / (2.0 * params.mass * sigma * sigma);
}

double phase_of(const SlitSpec& slit, const PhysicalParams& params, double total_energy,
                double x, double t) {
    check_time(t);
    const double u0 = params.diffusion_const / slit.sigma0;
    const double sigma = sigma_of_t(slit, params, t);
    const double xr = x - slit.centre;          // relative to the slit centre
    const double xi = xr - slit.vx * t;
    const double m = params.mass;
    const double spread = 0.5 * m * u0 * u0 * (xi / sigma) * (xi / sigma) * t;
    return (m * slit.vx * xr + spread - m * slit.vx * slit.vx * t - total_energy * t) /
           params.hbar;
}

double phase_difference(const SlitSpec& slit_i, const SlitSpec& slit_j,
                        const PhysicalParams& params, double total_energy, double x, double t) {
    const double psi_i = phase_of(slit_i, params, total_energy, x, t) + slit_i.phase_shift(t);
    const double psi_j = phase_of(slit_j, params, total_energy, x, t) + slit_j.phase_shift(t);
    return psi_j - psi_i;
}

KinematicSample sample_kinematics(const SlitSpec& slit, const PhysicalParams& params,
                                  double total_energy, double x, double t) {
    KinematicSample s;
    s.x = x;
    s.t = t;
    s.density = gaussian_density(slit, params, x, t);
    const auto [v, a] = kinematic_fields(slit, params, x, t);
    s.v_tot = v;
    s.a_tot = a;
    s.u = osmotic_velocity(slit, params, x, t);
    s.phase = phase_of(slit, params, total_energy, x, t);
    return s;
}

}  // namespace ballistic
