#include "ballistic/stochastic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ballistic {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void validate(const WalkerConfig& cfg) {
    if (!(cfg.mass > 0.0 && cfg.zeta > 0.0 && cfg.lambda_noise >= 0.0 && cfg.dt > 0.0))
        throw std::invalid_argument("WalkerConfig: mass, zeta, dt must be positive");
    if (cfg.n_steps < 1 || cfg.n_ensemble < 1 || cfg.record_stride < 1)
        throw std::invalid_argument("WalkerConfig: counts must be positive");
    if (!(cfg.zeta * cfg.dt < 0.1))
        throw std::invalid_argument("WalkerConfig: zeta*dt must stay below 0.1");
}

void validate(const BouncerConfig& cfg) {
    if (!(cfg.mass > 0.0 && cfg.omega0 > 0.0 && cfg.gamma > 0.0 && cfg.dt > 0.0))
        throw std::invalid_argument("BouncerConfig: mass, omega0, gamma, dt must be positive");
    if (cfg.n_steps < 1) throw std::invalid_argument("BouncerConfig: n_steps must be positive");
}

}  // namespace

NormalRng::NormalRng(std::uint64_t seed, std::uint64_t stream) {
    state_ = splitmix64(seed ^ splitmix64(stream));
    if (state_ == 0) state_ = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t NormalRng::next_u64() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dULL;
}

double NormalRng::uniform01() {
    return (next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

double NormalRng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform01()));
    const double theta = 2.0 * std::numbers::pi * uniform01();
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

WalkerEnsemble simulate_walker(const WalkerConfig& cfg) {
    validate(cfg);
    WalkerEnsemble ens;
    ens.dt = cfg.dt;
    ens.stride = cfg.record_stride;
    const int n_samples = cfg.n_steps / cfg.record_stride + 1;
    ens.times.resize(n_samples);
    for (int s = 0; s < n_samples; ++s) ens.times[s] = s * cfg.record_stride * cfg.dt;
    ens.u.assign(cfg.n_ensemble, std::vector<double>(n_samples));
    ens.x.assign(cfg.n_ensemble, std::vector<double>(n_samples));

    const double kick = std::sqrt(cfg.lambda_noise * cfg.dt) / cfg.mass;
    for (int m = 0; m < cfg.n_ensemble; ++m) {
        NormalRng rng(cfg.rng_seed, static_cast<std::uint64_t>(m));
        double u = cfg.u0, x = 0.0;
        ens.u[m][0] = u;
        ens.x[m][0] = x;
        int sample = 1;
        for (int k = 1; k <= cfg.n_steps; ++k) {
            u += -cfg.zeta * u * cfg.dt + kick * rng.normal();
            x += u * cfg.dt;
            if (k % cfg.record_stride == 0) {
                ens.u[m][sample] = u;
                ens.x[m][sample] = x;
                ++sample;
            }
        }
    }
    return ens;
}

double estimate_msd_slope(const WalkerEnsemble& ens, double t_min) {
    std::vector<double> ts, msd;
    for (std::size_t s = 0; s < ens.times.size(); ++s) {
        if (ens.times[s] < t_min) continue;
        double acc = 0.0;
        for (const auto& member : ens.x) acc += member[s] * member[s];
        ts.push_back(ens.times[s]);
        msd.push_back(acc / ens.x.size());
    }
    if (ts.size() < 8 || ts.back() - ts.front() < 0.5 * t_min)
        throw std::runtime_error("estimate_msd_slope: fit window too short");
    // least squares slope
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    const double n = static_cast<double>(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        st += ts[i];
        sy += msd[i];
        stt += ts[i] * ts[i];
        sty += ts[i] * msd[i];
    }
    return (n * sty - st * sy) / (n * stt - st * st);
}

BouncerRun simulate_bouncer(const BouncerConfig& cfg) {
    validate(cfg);
    BouncerRun run;
    run.t.resize(cfg.n_steps + 1);
    run.x.resize(cfg.n_steps + 1);
    run.v.resize(cfg.n_steps + 1);

    const double w0 = cfg.omega0;
    auto acc = [&](double t, double x, double v) {
        return cfg.F0 * std::cos(w0 * t) / cfg.mass - w0 * w0 * x - 2.0 * cfg.gamma * v;
    };

    double x = cfg.x0, v = cfg.v0;
    run.t[0] = 0.0;
    run.x[0] = x;
    run.v[0] = v;
    for (int k = 0; k < cfg.n_steps; ++k) {
        const double t = k * cfg.dt, h = cfg.dt;
        const double k1x = v, k1v = acc(t, x, v);
        const double k2x = v + 0.5 * h * k1v, k2v = acc(t + 0.5 * h, x + 0.5 * h * k1x, v + 0.5 * h * k1v);
        const double k3x = v + 0.5 * h * k2v, k3v = acc(t + 0.5 * h, x + 0.5 * h * k2x, v + 0.5 * h * k2v);
        const double k4x = v + h * k3v, k4v = acc(t + h, x + h * k3x, v + h * k3v);
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        run.t[k + 1] = t + h;
        run.x[k + 1] = x;
        run.v[k + 1] = v;
    }

    // quadrature fit x = A cos(w0 t) + B sin(w0 t) over whole periods after the transient
    const double t_cut = 10.0 / cfg.gamma;
    const double tau = 2.0 * std::numbers::pi / w0;
    const double t_total = cfg.n_steps * cfg.dt;
    const int periods = static_cast<int>((t_total - t_cut) / tau);
    if (periods < 1) throw std::runtime_error("simulate_bouncer: run shorter than the transient");
    const double t0 = t_total - periods * tau;
    double sa = 0.0, sb = 0.0;
    int count = 0;
    for (int k = 0; k <= cfg.n_steps; ++k) {
        if (run.t[k] < t0) continue;
        sa += run.x[k] * std::cos(w0 * run.t[k]);
        sb += run.x[k] * std::sin(w0 * run.t[k]);
        ++count;
    }
    const double a = 2.0 * sa / count, b = 2.0 * sb / count;
    run.fitted_amplitude = std::hypot(a, b);
    run.fitted_phase = std::atan2(-b, a);
    return run;
}

WorkEnergyReport work_energy_balance(const WalkerConfig& walker, const BouncerConfig& bouncer) {
    if (walker.mass != bouncer.mass)
        throw std::invalid_argument("work_energy_balance: configs must share the mass");

    WorkEnergyReport rep;
    rep.generator = NormalRng::name();
    const double tau = 2.0 * std::numbers::pi / bouncer.omega0;

    // bouncer: integrate 2 gamma m xdot^2 over the last whole period
    const BouncerRun run = simulate_bouncer(bouncer);
    const double t_total = bouncer.n_steps * bouncer.dt;
    const double t_begin = t_total - tau;
    if (t_begin < 10.0 / bouncer.gamma)
        throw std::invalid_argument("work_energy_balance: bouncer run too short for a clean period");
    double w_b = 0.0;
    for (std::size_t k = 0; k + 1 < run.t.size(); ++k) {
        if (run.t[k] < t_begin) continue;
        const double f0 = 2.0 * bouncer.gamma * bouncer.mass * run.v[k] * run.v[k];
        const double f1 = 2.0 * bouncer.gamma * bouncer.mass * run.v[k + 1] * run.v[k + 1];
        w_b += 0.5 * (f0 + f1) * bouncer.dt;
    }
    rep.w_bouncer_sim = w_b;
    rep.fitted_r = run.fitted_amplitude;
    rep.hbar_eff = bouncer.mass * run.fitted_amplitude * run.fitted_amplitude * bouncer.omega0;
    rep.w_bouncer_analytic = 2.0 * std::numbers::pi * bouncer.gamma * rep.hbar_eff;

    // walker: stationary <u^2> after the transient
    const WalkerEnsemble ens = simulate_walker(walker);
    const double t_cut = 10.0 / walker.zeta;
    double acc = 0.0;
    long n_acc = 0;
    for (const auto& member : ens.u)
        for (std::size_t s = 0; s < ens.times.size(); ++s) {
            if (ens.times[s] < t_cut) continue;
            acc += member[s] * member[s];
            ++n_acc;
        }
    if (n_acc == 0) throw std::runtime_error("work_energy_balance: walker run shorter than transient");
    rep.mean_u_sq = acc / n_acc;
    rep.w_walker_sim = tau * walker.mass * walker.zeta * rep.mean_u_sq;
    const double e_zp = walker.lambda_noise / (4.0 * walker.zeta * walker.mass);
    rep.w_walker_analytic = 2.0 * tau * walker.zeta * e_zp;
    rep.ratio = rep.w_walker_sim / rep.w_bouncer_sim;
    return rep;
}

}  // namespace ballistic
