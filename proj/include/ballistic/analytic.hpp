#pragma once

#include <utility>

#include "ballistic/phys.hpp"

namespace ballistic {

// Closed-form fields of a single freely dispersing Gaussian channel.
// All take the lab coordinate x [m] and time t >= 0 [s].

struct KinematicSample {
    double x = 0.0;
    double t = 0.0;
    double density = 0.0;  // 1/m
    double v_tot = 0.0;    // m/s
    double a_tot = 0.0;    // m/s^2
    double u = 0.0;        // osmotic velocity, m/s
    double phase = 0.0;    // rad
};

// sigma(t) = sigma0 sqrt(1 + u0^2 t^2 / sigma0^2). Throws std::domain_error for t < 0.
double sigma_of_t(const SlitSpec& slit, const PhysicalParams& params, double t);

// Normalized spreading Gaussian centred at x0 + vx t.
double gaussian_density(const SlitSpec& slit, const PhysicalParams& params, double x, double t);

// Averaged total velocity and acceleration fields of the packet:
//   v_tot = vx + (x - x0 - vx t) u0^2 t / sigma^2(t)
//   a_tot = (x - x0 - vx t) u0^2 sigma0^2 / sigma^4(t)
std::pair<double, double> kinematic_fields(const SlitSpec& slit, const PhysicalParams& params,
                                           double x, double t);

// u = -(hbar/2m) dP/dx / P = (x - x0 - vx t) hbar / (2 m sigma^2(t))
double osmotic_velocity(const SlitSpec& slit, const PhysicalParams& params, double x, double t);

// Action phase of the channel for a common total energy E:
//   phi = (1/hbar) [ m v (x-x0) + (m u0^2/2) ((x-x0-v t)/sigma)^2 t - m v^2 t - E t ]
double phase_of(const SlitSpec& slit, const PhysicalParams& params, double total_energy,
                double x, double t);

// phi_ij = [phi_j + dphi_j(t)] - [phi_i + dphi_i(t)]; the E t term cancels.
double phase_difference(const SlitSpec& slit_i, const SlitSpec& slit_j,
                        const PhysicalParams& params, double total_energy, double x, double t);

KinematicSample sample_kinematics(const SlitSpec& slit, const PhysicalParams& params,
                                  double total_energy, double x, double t);

}  // namespace ballistic
