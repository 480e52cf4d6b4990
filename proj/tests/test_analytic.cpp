#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <vector>

#include "ballistic/analytic.hpp"

using namespace ballistic;

namespace {

// scaled units with D = 1
PhysicalParams unit_params() { return derive_params(0.5 * kHbar, 1.0); }

SlitSpec unit_slit(double centre = 0.0, double sigma0 = 1.0, double vx = 0.0) {
    SlitSpec s;
    s.centre = centre;
    s.sigma0 = sigma0;
    s.vx = vx;
    return s;
}

// composite Simpson quadrature oracle
template <class F>
double simpson(F f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("sigma_of_t: identity at t=0, sqrt(2) at the kink, sqrt(5) beyond") {
    const auto p = unit_params();
    const auto s = unit_slit();
    CHECK(sigma_of_t(s, p, 0.0) == 1.0);
    const double t_kink = derive_slit(s, p).t_kink;
    CHECK(sigma_of_t(s, p, t_kink) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sigma_of_t(s, p, 2.0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK_THROWS_AS(sigma_of_t(s, p, -1.0), std::domain_error);
    // monotone
    double last = 0.0;
    for (double t = 0.0; t < 5.0; t += 0.25) {
        const double cur = sigma_of_t(s, p, t);
        CHECK(cur >= last);
        last = cur;
    }
}

TEST_CASE("gaussian_density: peak value and unit mass over +-8 sigma") {
    const auto p = unit_params();
    const auto s = unit_slit(0.3, 1.2, 0.7);
    const double t = 1.7;
    const double sigma = sigma_of_t(s, p, t);
    const double centre = s.centre + s.vx * t;
    CHECK(gaussian_density(s, p, centre, t) ==
          doctest::Approx(1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma)).epsilon(1e-12));

    const double mass = simpson([&](double x) { return gaussian_density(s, p, x, t); },
                                centre - 8.0 * sigma, centre + 8.0 * sigma, 4000);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gaussian_density second moment tracks sigma^2(t) (quadrature oracle)") {
    const auto p = unit_params();
    const auto s = unit_slit();
    for (double t : {0.0, 0.5, 2.0}) {
        const double sigma = sigma_of_t(s, p, t);
        const double m2 = simpson([&](double x) { return x * x * gaussian_density(s, p, x, t); },
                                  -10.0 * sigma, 10.0 * sigma, 8000);
        CHECK(m2 == doctest::Approx(sigma * sigma).epsilon(1e-8));
    }
}

TEST_CASE("kinematic_fields: centre line carries pure drift, zero acceleration") {
    const auto p = unit_params();
    const auto s = unit_slit(-0.4, 0.9, 0.31);
    const double t = 1.3;
    const auto [v, a] = kinematic_fields(s, p, s.centre + s.vx * t, t);
    CHECK(v == doctest::Approx(s.vx).epsilon(1e-12));
    CHECK(a == doctest::Approx(0.0));
    // t = 0: the u0^2 t factor kills the spreading part of v for any x,
    // while the acceleration starts at xi u0^2 / sigma0^2
    const auto [v0, a0] = kinematic_fields(s, p, 2.9, 0.0);
    CHECK(v0 == doctest::Approx(s.vx));
    const double u0 = p.diffusion_const / s.sigma0;
    CHECK(a0 == doctest::Approx((2.9 - s.centre) * u0 * u0 / (s.sigma0 * s.sigma0)));
}

TEST_CASE("a_tot equals dv/dt along a spreading trajectory (central-difference oracle)") {
    const auto p = unit_params();
    const auto s = unit_slit(0.0, 1.0, 0.2);
    const double xi0 = 0.8;
    auto x_tot = [&](double t) {
        return s.centre + s.vx * t + xi0 * sigma_of_t(s, p, t) / s.sigma0;
    };
    auto v_along = [&](double t) { return kinematic_fields(s, p, x_tot(t), t).first; };
    const double t = 1.1, h = 1e-4;
    const double dv_dt = (v_along(t + h) - v_along(t - h)) / (2.0 * h);
    const double a = kinematic_fields(s, p, x_tot(t), t).second;
    CHECK(a == doctest::Approx(dv_dt).epsilon(1e-6));
}

TEST_CASE("osmotic velocity: zero at the centre, matches -(hbar/m) dR/R (fd oracle)") {
    const auto p = unit_params();
    const auto s = unit_slit(0.5, 1.1, -0.2);
    const double t = 0.9;
    CHECK(osmotic_velocity(s, p, s.centre + s.vx * t, t) == doctest::Approx(0.0));

    const double h = 1e-5;
    for (double x : {-1.0, 0.2, 2.4}) {
        const double r0 = std::sqrt(gaussian_density(s, p, x - h, t));
        const double r1 = std::sqrt(gaussian_density(s, p, x + h, t));
        const double r = std::sqrt(gaussian_density(s, p, x, t));
        const double u_fd = -(p.hbar / p.mass) * (r1 - r0) / (2.0 * h) / r;
        CHECK(osmotic_velocity(s, p, x, t) == doctest::Approx(u_fd).epsilon(1e-6));
    }
}

TEST_CASE("weighted mean of u vanishes over +-8 sigma") {
    const auto p = unit_params();
    const auto s = unit_slit(0.0, 1.0, 0.0);
    const double t = 1.4;
    const double sigma = sigma_of_t(s, p, t);
    const double mean = simpson(
        [&](double x) { return osmotic_velocity(s, p, x, t) * gaussian_density(s, p, x, t); },
        -8.0 * sigma, 8.0 * sigma, 4000);
    CHECK(std::abs(mean) < 1e-9);
}

TEST_CASE("weighted means of dP/P and d2P/P vanish over +-8 sigma") {
    const auto p = unit_params();
    const auto s = unit_slit();
    const double t = 0.8;
    const double sigma = sigma_of_t(s, p, t);
    // P <dP/P> = integral of dP; P <d2P/P> = integral of d2P (both analytic)
    auto dP = [&](double x) {
        return -x / (sigma * sigma) * gaussian_density(s, p, x, t);
    };
    auto d2P = [&](double x) {
        const double s2 = sigma * sigma;
        return (x * x / (s2 * s2) - 1.0 / s2) * gaussian_density(s, p, x, t);
    };
    CHECK(std::abs(simpson(dP, -8.0 * sigma, 8.0 * sigma, 4000)) < 1e-8);
    CHECK(std::abs(simpson(d2P, -8.0 * sigma, 8.0 * sigma, 4000)) < 1e-8);
}

TEST_CASE("probability between vt and vt + xi(t) is conserved") {
    const auto p = unit_params();
    const auto s = unit_slit(0.0, 1.0, 0.4);
    const double xi0 = 1.3;
    auto window_mass = [&](double t) {
        const double lo = s.centre + s.vx * t;
        const double hi = lo + xi0 * sigma_of_t(s, p, t) / s.sigma0;
        return simpson([&](double x) { return gaussian_density(s, p, x, t); }, lo, hi, 4000);
    };
    const double ref = window_mass(0.0);
    for (double t : {0.3, 1.0, 2.5})
        CHECK(window_mass(t) == doctest::Approx(ref).epsilon(1e-6));
}

TEST_CASE("phase: time-only term at the centre with v=0") {
    const auto p = unit_params();
    const auto s = unit_slit(0.7);
    const double e = 0.3;
    for (double t : {0.2, 1.9})
        CHECK(phase_of(s, p, e, s.centre, t) == doctest::Approx(-e * t / p.hbar));
}

TEST_CASE("phase matches quadrature of the velocity integral (Simpson oracle)") {
    const auto p = unit_params();
    const auto s = unit_slit(0.0, 1.0, 0.5);
    const double e = 0.0, t = 1.2;
    const double u0 = p.diffusion_const / s.sigma0;
    for (double x : {0.9, 2.3}) {
        // S = m int_{vt}^{x} [v + u0^2 t xi / sigma^2] dx' - E t, xi = x' - v t
        auto integrand = [&](double xp) {
            const double sigma2 = s.sigma0 * s.sigma0 + u0 * u0 * t * t;
            return p.mass * (s.vx + u0 * u0 * t * (xp - s.vx * t) / sigma2);
        };
        const double action = simpson(integrand, s.vx * t, x, 2000) - e * t;
        CHECK(phase_of(s, p, e, x, t) == doctest::Approx(action / p.hbar).epsilon(1e-8));
    }
}

TEST_CASE("phase difference: symmetric zero, uniform shift, equal-E cancellation") {
    const auto p = unit_params();
    const auto a = unit_slit(-2.0);
    const auto b = unit_slit(2.0);
    const double mid = 0.0;
    CHECK(phase_difference(a, b, p, 0.0, mid, 1.0) == doctest::Approx(0.0));

    // identical slits: difference vanishes everywhere, any common E
    const auto c = unit_slit(1.0), d = unit_slit(1.0);
    for (double x : {-1.0, 0.5})
        CHECK(phase_difference(c, d, p, 7.7, x, 1.3) == doctest::Approx(0.0));

    // a constant pi shifter on slit i lowers phi_ij by pi
    auto a_shift = a;
    a_shift.phase_shift = PiecewiseLinear::constant(std::numbers::pi);
    for (double x : {-3.0, 0.4, 2.2}) {
        const double base = phase_difference(a, b, p, 0.0, x, 0.8);
        const double shifted = phase_difference(a_shift, b, p, 0.0, x, 0.8);
        CHECK(shifted == doctest::Approx(base - std::numbers::pi).epsilon(1e-12));
    }
}

TEST_CASE("phase difference equals direct subtraction for unequal widths") {
    const auto p = unit_params();
    const auto wide = unit_slit(-1.5, 2.0);
    const auto narrow = unit_slit(1.5, 1.0);
    bool nonzero = false;
    for (double x : {-2.0, -0.3, 0.9, 2.7}) {
        const double direct = phase_of(narrow, p, 0.0, x, 1.1) - phase_of(wide, p, 0.0, x, 1.1);
        const double diff = phase_difference(wide, narrow, p, 0.0, x, 1.1);
        CHECK(diff == doctest::Approx(direct).epsilon(1e-12));
        if (std::abs(diff) > 1e-6) nonzero = true;
        // antisymmetry
        CHECK(phase_difference(narrow, wide, p, 0.0, x, 1.1) ==
              doctest::Approx(-diff).epsilon(1e-12));
    }
    CHECK(nonzero);  // unequal widths leave an asymmetric field
}

TEST_CASE("xi(t)/xi(0) follows sigma(t)/sigma0 when integrating xdot = v_tot") {
    const auto p = unit_params();
    const auto s = unit_slit(0.0, 1.0, 0.0);
    for (double xi0 : {0.5, 1.0, 2.0}) {
        // RK4 on xdot = v_tot(x, t)
        double x = s.centre + xi0;
        const double t_end = 2.0;
        const int n = 4000;
        const double h = t_end / n;
        for (int k = 0; k < n; ++k) {
            const double t = k * h;
            auto f = [&](double xx, double tt) { return kinematic_fields(s, p, xx, tt).first; };
            const double k1 = f(x, t);
            const double k2 = f(x + 0.5 * h * k1, t + 0.5 * h);
            const double k3 = f(x + 0.5 * h * k2, t + 0.5 * h);
            const double k4 = f(x + h * k3, t + h);
            x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        const double expected = s.centre + xi0 * sigma_of_t(s, p, t_end) / s.sigma0;
        CHECK(x == doctest::Approx(expected).epsilon(1e-4));
    }
}

TEST_CASE("phase difference matches the expanded two-slit form") {
    // phi_12 = (m/hbar)[v2 (x-x02) - v1 (x-x01) - (v2^2 - v1^2) t] - dphi_1(t)
    //        + (m t / 2 hbar)[u02^2 xi2^2/sigma2^2 - u01^2 xi1^2/sigma1^2]
    const auto p = unit_params();
    auto one = unit_slit(-1.2, 1.5, 0.4);
    auto two = unit_slit(1.8, 0.9, -0.25);
    one.phase_shift = PiecewiseLinear::ramp(0.2, 0.8, 2.5);
    const double u01 = p.diffusion_const / one.sigma0;
    const double u02 = p.diffusion_const / two.sigma0;
    for (double t : {0.0, 0.5, 1.7}) {
        const double s1 = sigma_of_t(one, p, t), s2 = sigma_of_t(two, p, t);
        for (double x : {-2.0, 0.3, 2.6}) {
            const double xi1 = x - one.centre - one.vx * t;
            const double xi2 = x - two.centre - two.vx * t;
            const double expanded =
                p.mass / p.hbar *
                    (two.vx * (x - two.centre) - one.vx * (x - one.centre) -
                     (two.vx * two.vx - one.vx * one.vx) * t) -
                one.phase_shift(t) +
                p.mass * t / (2.0 * p.hbar) *
                    (u02 * u02 * xi2 * xi2 / (s2 * s2) - u01 * u01 * xi1 * xi1 / (s1 * s1));
            CHECK(phase_difference(one, two, p, 0.0, x, t) ==
                  doctest::Approx(expanded).epsilon(1e-12));
        }
    }
}
