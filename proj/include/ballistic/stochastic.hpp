#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ballistic {

// Seeded xorshift64* stream; standard normals by Box-Muller. One stream per
// ensemble member, keyed by (seed, stream index), reproducible everywhere.
class NormalRng {
public:
    NormalRng(std::uint64_t seed, std::uint64_t stream);
    double uniform01();  // in (0, 1)
    double normal();
    static const char* name() { return "xorshift64star+box-muller"; }

private:
    std::uint64_t next_u64();
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

struct WalkerConfig {
    double mass = 1.0;          // kg
    double zeta = 1.0;          // 1/s, friction
    double lambda_noise = 1.0;  // N^2 s, white-noise strength
    double dt = 1e-3;           // s
    int n_steps = 1000;
    int n_ensemble = 100;
    std::uint64_t rng_seed = 1;
    double u0 = 0.0;            // initial velocity, shared by all members
    int record_stride = 1;      // store every record_stride-th step
};

struct BouncerConfig {
    double mass = 1.0;    // kg
    double omega0 = 1.0;  // rad/s; driven at resonance
    double gamma = 1.0;   // 1/s
    double F0 = 1.0;      // N
    double dt = 1e-3;     // s
    int n_steps = 10000;
    double x0 = 0.0;      // initial displacement
    double v0 = 0.0;      // initial velocity
};

// Velocity/position samples of every ensemble member at the recorded nodes.
struct WalkerEnsemble {
    double dt = 0.0;
    int stride = 1;
    std::vector<double> times;
    std::vector<std::vector<double>> u;  // [member][sample]
    std::vector<std::vector<double>> x;
};

// Euler-Maruyama integration of m du = -m zeta u dt + f dt with
// <f f> = lambda delta:  u += -zeta u dt + sqrt(lambda dt)/m N(0,1).
WalkerEnsemble simulate_walker(const WalkerConfig& cfg);

// Linear fit of <x^2>(t) over t >= t_min; returns the slope (compare 2D with
// D = lambda/(2 zeta^2 m^2)). Throws std::runtime_error when the window is
// too short.
double estimate_msd_slope(const WalkerEnsemble& ens, double t_min);

struct BouncerRun {
    std::vector<double> t, x, v;
    double fitted_amplitude = 0.0;  // r of the stationary solution
    double fitted_phase = 0.0;      // rad, relative to the cos driving
};

// RK4 integration of m x'' + m omega0^2 x + 2 gamma m x' = F0 cos(omega0 t),
// started at rest; amplitude and phase fitted after the transient.
BouncerRun simulate_bouncer(const BouncerConfig& cfg);

struct WorkEnergyReport {
    double w_bouncer_sim = 0.0;       // integral of 2 gamma m xdot^2 over one period
    double w_bouncer_analytic = 0.0;  // 2 pi gamma m omega0 r^2 = 2 pi gamma hbar_eff
    double w_walker_sim = 0.0;        // tau m zeta <u^2>
    double w_walker_analytic = 0.0;   // 2 tau zeta E_zp, with E_zp = lambda/(4 zeta m)
    double ratio = 0.0;               // w_walker_sim / w_bouncer_sim
    double hbar_eff = 0.0;            // m r^2 omega0 from the fitted amplitude
    double mean_u_sq = 0.0;
    double fitted_r = 0.0;
    std::string generator;            // RNG recorded for reproducibility
};

// Runs both subsystems over the common period tau = 2 pi / omega0 and
// reports the energy throughput of each. Requires equal masses.
WorkEnergyReport work_energy_balance(const WalkerConfig& walker, const BouncerConfig& bouncer);

}  // namespace ballistic
