#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "ballistic/phys.hpp"

using namespace ballistic;

TEST_CASE("derive_params: neutron forward velocity from h/(lambda m)") {
    const double mass = 1.675e-27;
    const auto p = derive_params(mass, 1e-9);
    const double h = 2.0 * std::numbers::pi * kHbar;
    CHECK(p.forward_velocity == doctest::Approx(h / (1e-9 * mass)).epsilon(1e-12));
    CHECK(p.forward_velocity == doctest::Approx(3.956e2).epsilon(2e-3));
    CHECK(p.diffusion_const == kHbar / (2.0 * mass));
}

TEST_CASE("derive_params: mass hbar/2 gives unit diffusion constant") {
    const auto p = derive_params(0.5 * kHbar, 1.0);
    CHECK(p.diffusion_const == 1.0);
}

TEST_CASE("derive_params rejects non-positive input") {
    CHECK_THROWS_AS(derive_params(0.0, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(derive_params(1e-27, -1.0), std::invalid_argument);
}

TEST_CASE("derived slit quantities satisfy u0 sigma0 = D and t_kink D = sigma0^2") {
    const auto p = derive_params(1.675e-27, 1.8e-9);
    SlitSpec slit;
    for (double sigma0 : {1e-10, 7.33e-6, 0.42}) {
        slit.sigma0 = sigma0;
        const auto q = derive_slit(slit, p);
        CHECK(q.u0 * sigma0 == doctest::Approx(p.diffusion_const).epsilon(1e-15));
        CHECK(q.t_kink * p.diffusion_const == doctest::Approx(sigma0 * sigma0).epsilon(1e-15));
    }
}

TEST_CASE("derive_params is pure") {
    const auto a = derive_params(1.675e-27, 1e-9);
    const auto b = derive_params(1.675e-27, 1e-9);
    CHECK(a == b);
}

TEST_CASE("slit and grid validation") {
    SlitSpec slit;
    slit.sigma0 = 0.0;
    CHECK_THROWS_AS(validate(slit), std::invalid_argument);
    slit.sigma0 = 1.0;
    slit.transmission = 1.5;
    CHECK_THROWS_AS(validate(slit), std::invalid_argument);
    slit.transmission = 1.0;
    slit.weight = -1.0;
    CHECK_THROWS_AS(validate(slit), std::invalid_argument);

    GridSpec grid{0.0, 1.0, 11, 0.1, 10};
    CHECK_NOTHROW(validate(grid));
    CHECK(grid.dx() == doctest::Approx(0.1));
    grid.nx = 2;
    CHECK_THROWS_AS(validate(grid), std::invalid_argument);
}

TEST_CASE("piecewise-linear ramp accumulates between t1 and t2") {
    const auto ramp = PiecewiseLinear::ramp(1.0, 3.0, 3.0 * std::numbers::pi);
    CHECK(ramp(0.0) == 0.0);
    CHECK(ramp(1.0) == 0.0);
    CHECK(ramp(2.0) == doctest::Approx(1.5 * std::numbers::pi));
    CHECK(ramp(3.0) == doctest::Approx(3.0 * std::numbers::pi));
    CHECK(ramp(99.0) == doctest::Approx(3.0 * std::numbers::pi));
}
