#include "ballistic/phys.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ballistic {

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<double, double>> points)
    : points_(std::move(points)) {
    if (!std::is_sorted(points_.begin(), points_.end(),
                        [](const auto& a, const auto& b) { return a.first < b.first; })) {
        throw std::invalid_argument("PiecewiseLinear: nodes must be sorted in t");
    }
}

PiecewiseLinear PiecewiseLinear::constant(double value) {
    if (value == 0.0) return PiecewiseLinear{};
    return PiecewiseLinear({{0.0, value}});
}

PiecewiseLinear PiecewiseLinear::ramp(double t1, double t2, double final_value) {
    if (!(t2 > t1)) throw std::invalid_argument("PiecewiseLinear::ramp: t2 must exceed t1");
    return PiecewiseLinear({{t1, 0.0}, {t2, final_value}});
}

double PiecewiseLinear::operator()(double t) const {
    if (points_.empty()) return 0.0;
    if (t <= points_.front().first) return points_.front().second;
    if (t >= points_.back().first) return points_.back().second;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (t <= points_[i].first) {
            const auto& [ta, va] = points_[i - 1];
            const auto& [tb, vb] = points_[i];
            return va + (vb - va) * (t - ta) / (tb - ta);
        }
    }
    return points_.back().second;
}

bool PiecewiseLinear::is_zero() const {
    return std::all_of(points_.begin(), points_.end(),
                       [](const auto& p) { return p.second == 0.0; });
}

PhysicalParams derive_params(double mass, double wavelength) {
    if (!(mass > 0.0)) throw std::invalid_argument("derive_params: mass must be positive");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("derive_params: wavelength must be positive");
    PhysicalParams p;
    p.mass = mass;
    p.hbar = kHbar;
    p.diffusion_const = p.hbar / (2.0 * mass);
    p.wavelength = wavelength;
    const double k_y = 2.0 * std::numbers::pi / wavelength;
    p.forward_velocity = p.hbar * k_y / mass;
    return p;
}

DerivedSlitQuantities derive_slit(const SlitSpec& slit, const PhysicalParams& params) {
    validate(slit);
    DerivedSlitQuantities q;
    q.u0 = params.diffusion_const / slit.sigma0;
    q.t_kink = slit.sigma0 * slit.sigma0 / params.diffusion_const;
    return q;
}

void validate(const SlitSpec& slit) {
    if (!(slit.sigma0 > 0.0)) throw std::invalid_argument("SlitSpec: sigma0 must be positive");
    if (!(slit.weight >= 0.0)) throw std::invalid_argument("SlitSpec: weight must be >= 0");
    if (!(slit.transmission >= 0.0 && slit.transmission <= 1.0))
        throw std::invalid_argument("SlitSpec: transmission must lie in [0, 1]");
}

void validate(const GridSpec& grid) {
    if (!(grid.x_max > grid.x_min)) throw std::invalid_argument("GridSpec: x_max must exceed x_min");
    if (grid.nx < 3) throw std::invalid_argument("GridSpec: nx must be >= 3");
    if (!(grid.dt > 0.0)) throw std::invalid_argument("GridSpec: dt must be positive");
    if (grid.nt < 1) throw std::invalid_argument("GridSpec: nt must be >= 1");
}

}  // namespace ballistic
