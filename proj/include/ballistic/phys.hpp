#pragma once

#include <utility>
#include <vector>

namespace ballistic {

// Reduced Planck constant [J s], fixed.
inline constexpr double kHbar = 1.054571817e-34;

// Global physical constants of one simulation: particle mass, the derived
// diffusion constant D = hbar/(2m) and the forward velocity v_y = hbar k_y/m
// obtained from the de Broglie wavelength.
struct PhysicalParams {
    double mass = 0.0;              // kg
    double hbar = kHbar;            // J s
    double diffusion_const = 0.0;   // m^2/s
    double wavelength = 0.0;        // m
    double forward_velocity = 0.0;  // m/s

    bool operator==(const PhysicalParams&) const = default;
};

// Piecewise-linear map t -> value, clamped to the first/last node outside the
// sampled interval. Default constructed: constant zero.
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;
    explicit PiecewiseLinear(std::vector<std::pair<double, double>> points);

    static PiecewiseLinear constant(double value);
    // 0 for t < t1, linear rise to final_value at t2, constant afterwards.
    static PiecewiseLinear ramp(double t1, double t2, double final_value);

    double operator()(double t) const;
    bool is_zero() const;
    const std::vector<std::pair<double, double>>& points() const { return points_; }

    bool operator==(const PiecewiseLinear&) const = default;

private:
    std::vector<std::pair<double, double>> points_;
};

// One Gaussian channel: centre, initial half-width, transverse drift,
// statistical weight and transmission factor of an attenuator in front of it.
struct SlitSpec {
    double centre = 0.0;        // m
    double sigma0 = 0.0;        // m
    double vx = 0.0;            // m/s
    double weight = 1.0;        // dimensionless, >= 0
    double transmission = 1.0;  // dimensionless, in [0, 1]
    PiecewiseLinear phase_shift;  // rad, applied on top of the action phase

    bool operator==(const SlitSpec&) const = default;
};

// Uniform space-time lattice. nx spatial nodes, nt time nodes (nt - 1 steps).
struct GridSpec {
    double x_min = 0.0;  // m
    double x_max = 0.0;  // m
    int nx = 0;
    double dt = 0.0;     // s
    int nt = 0;

    double dx() const { return (x_max - x_min) / (nx - 1); }
    double x(int i) const { return x_min + i * dx(); }
    double t(int k) const { return k * dt; }

    bool operator==(const GridSpec&) const = default;
};

struct DerivedSlitQuantities {
    double u0 = 0.0;      // m/s, initial velocity spread D/sigma0
    double t_kink = 0.0;  // s, sigma0^2/D; sigma(t_kink) = sqrt(2) sigma0
};

// D = hbar/(2m), v_y = hbar k_y/m with k_y = 2 pi/wavelength.
// Throws std::invalid_argument on non-positive input.
PhysicalParams derive_params(double mass, double wavelength);

DerivedSlitQuantities derive_slit(const SlitSpec& slit, const PhysicalParams& params);

// Throw std::invalid_argument if the record violates its invariants.
void validate(const SlitSpec& slit);
void validate(const GridSpec& grid);

}  // namespace ballistic
