#include "ballistic/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ballistic/analytic.hpp"
#include "ballistic/solver.hpp"

namespace ballistic {

namespace {

double interp(const std::vector<double>& values, const GridSpec& grid, double x) {
    const double s = std::clamp((x - grid.x_min) / grid.dx(), 0.0, double(grid.nx - 1));
    const int i = std::min(static_cast<int>(s), grid.nx - 2);
    const double f = s - i;
    return values[i] * (1.0 - f) + values[i + 1] * f;
}

// trapezoid integral of sampled (x, y) data
double trapezoid_xy(const std::vector<double>& x, const std::vector<double>& y) {
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        acc += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return acc;
}

std::vector<double> seed_per_slit(const ScenarioConfig& cfg, const PhysicalParams& params,
                                  std::vector<int>& sources) {
    const int per_slit = std::max(1, cfg.trajectories.count / static_cast<int>(cfg.slits.size()));
    std::vector<std::pair<double, int>> tagged;
    for (std::size_t s = 0; s < cfg.slits.size(); ++s) {
        // quantiles of this slit's own initial Gaussian
        CombinedFrame unit;
        unit.p_tot.resize(cfg.grid.nx);
        for (int i = 0; i < cfg.grid.nx; ++i)
            unit.p_tot[i] = gaussian_density(cfg.slits[s], params, cfg.grid.x(i), 0.0);
        const auto seeds = seed_equal_flux(unit, cfg.grid, per_slit);
        for (double x : seeds) tagged.emplace_back(x, static_cast<int>(s));
    }
    std::sort(tagged.begin(), tagged.end());
    std::vector<double> seeds;
    seeds.reserve(tagged.size());
    sources.clear();
    for (const auto& [x, s] : tagged) {
        seeds.push_back(x);
        sources.push_back(s);
    }
    return seeds;
}

// analytic coherent/incoherent total density at (x, t)
double analytic_p_tot(const std::vector<SlitSpec>& slits, const PhysicalParams& params, double x,
                      double t, Coherence coherence) {
    if (coherence == Coherence::Incoherent) {
        double acc = 0.0;
        for (const auto& slit : slits)
            acc += slit.weight * slit.transmission * gaussian_density(slit, params, x, t);
        return acc;
    }
    double re = 0.0, im = 0.0;
    for (const auto& slit : slits) {
        const double r =
            std::sqrt(slit.weight * slit.transmission * gaussian_density(slit, params, x, t));
        const double psi = phase_of(slit, params, 0.0, x, t) + slit.phase_shift(t);
        re += r * std::cos(psi);
        im += r * std::sin(psi);
    }
    return re * re + im * im;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    ScenarioResult result;
    result.params = derive_params(cfg.mass, cfg.wavelength);

    std::vector<SlitEvolver> evolvers;
    evolvers.reserve(cfg.slits.size());
    for (std::size_t s = 0; s < cfg.slits.size(); ++s)
        evolvers.emplace_back(cfg.slits[s], result.params, cfg.grid, cfg.scheme,
                              static_cast<int>(s));

    result.frames.reserve(cfg.grid.nt);
    std::vector<SlitField> fields(cfg.slits.size());
    for (int k = 0; k < cfg.grid.nt; ++k) {
        if (k > 0)
            for (auto& e : evolvers) e.advance();
        for (std::size_t s = 0; s < cfg.slits.size(); ++s) fields[s] = evolvers[s].field();
        const ChannelSet ch = build_channels(fields, cfg.slits, result.params, cfg.grid);
        result.frames.push_back(combine(ch, cfg.coherence, k));
    }
    for (const auto& e : evolvers) {
        result.unstable = result.unstable || e.unstable();
        result.domain_warning = result.domain_warning || e.domain_warning();
    }

    if (cfg.trajectories.enabled) {
        std::vector<double> seeds;
        std::vector<int> sources;
        switch (cfg.trajectories.mode) {
            case Seeding::Equidistant: {
                const double span = cfg.trajectories.span > 0.0
                                        ? cfg.trajectories.span
                                        : 0.5 * (cfg.grid.x_max - cfg.grid.x_min);
                seeds = seed_equidistant(result.frames.front(), cfg.grid, cfg.trajectories.count,
                                         span);
                break;
            }
            case Seeding::EqualFlux:
                seeds = seed_equal_flux(result.frames.front(), cfg.grid, cfg.trajectories.count);
                break;
            case Seeding::PerSlitEqualCount:
                seeds = seed_per_slit(cfg, result.params, sources);
                break;
        }
        result.trajectories = advance_trajectories(seeds, result.frames, cfg.grid);
        result.trajectories.seeding = cfg.trajectories.mode;
        if (!sources.empty()) result.trajectories.source_slit = sources;
    }

    // forward screen: frame whose mapped y = v_y t is nearest the requested distance
    int screen_index = cfg.grid.nt - 1;
    if (cfg.screen_distance > 0.0) {
        const double t_screen = cfg.screen_distance / result.params.forward_velocity;
        screen_index = std::clamp(static_cast<int>(std::lround(t_screen / cfg.grid.dt)), 0,
                                  cfg.grid.nt - 1);
    }
    result.screen.orientation = ScreenOrientation::Forward;
    result.screen.position = cfg.screen_distance > 0.0
                                 ? cfg.screen_distance
                                 : result.params.forward_velocity * cfg.grid.t(screen_index);
    result.screen.coordinate.resize(cfg.grid.nx);
    for (int i = 0; i < cfg.grid.nx; ++i) result.screen.coordinate[i] = cfg.grid.x(i);
    result.screen.accumulated = result.frames[screen_index].p_tot;

    if (cfg.side_screen)
        result.side_screen =
            side_screen_flux(result.frames, cfg.side_screen_x, cfg.grid, result.params);
    return result;
}

std::vector<double> pattern_correlation(const std::vector<CombinedFrame>& frames,
                                        const GridSpec& grid, double shift, double window_lo,
                                        double window_hi) {
    if (frames.empty()) throw std::invalid_argument("pattern_correlation: no frames");
    std::vector<int> nodes;
    for (int i = 0; i < grid.nx; ++i)
        if (grid.x(i) >= window_lo && grid.x(i) <= window_hi) nodes.push_back(i);
    if (nodes.size() < 8) throw std::invalid_argument("pattern_correlation: window too narrow");

    std::vector<double> ref(nodes.size());
    for (std::size_t n = 0; n < nodes.size(); ++n)
        ref[n] = interp(frames.front().p_tot, grid, grid.x(nodes[n]) - shift);
    const double ref_mean = std::accumulate(ref.begin(), ref.end(), 0.0) / ref.size();
    double ref_var = 0.0;
    for (double& v : ref) {
        v -= ref_mean;
        ref_var += v * v;
    }

    std::vector<double> corr(frames.size(), 0.0);
    for (std::size_t k = 0; k < frames.size(); ++k) {
        double mean = 0.0;
        for (int i : nodes) mean += frames[k].p_tot[i];
        mean /= nodes.size();
        double dot = 0.0, var = 0.0;
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            const double v = frames[k].p_tot[nodes[n]] - mean;
            dot += v * ref[n];
            var += v * v;
        }
        corr[k] = (var > 0.0 && ref_var > 0.0) ? dot / std::sqrt(var * ref_var) : 0.0;
    }
    return corr;
}

TalbotResult talbot_distance_estimate(const std::vector<CombinedFrame>& frames,
                                      const GridSpec& grid, const PhysicalParams& params,
                                      double grating_period, double window_lo, double window_hi) {
    const auto corr =
        pattern_correlation(frames, grid, grating_period / 2.0, window_lo, window_hi);
    // strongest local maximum, then the earliest one of comparable height
    // (fractional revivals correlate too, but weaker than the full one)
    double c_best = 0.0;
    for (std::size_t k = 1; k + 1 < corr.size(); ++k)
        if (corr[k] >= corr[k - 1] && corr[k] >= corr[k + 1]) c_best = std::max(c_best, corr[k]);
    if (c_best <= 0.9)
        throw std::runtime_error("talbot_distance_estimate: no correlation peak above 0.9");
    int best = -1;
    for (std::size_t k = 1; k + 1 < corr.size(); ++k) {
        if (corr[k] >= corr[k - 1] && corr[k] >= corr[k + 1] && corr[k] > 0.9 &&
            corr[k] >= c_best - 0.005) {
            best = static_cast<int>(k);
            break;
        }
    }
    TalbotResult res;
    res.t_t_steps = best;
    res.y_t_observed = params.forward_velocity * grid.t(best);
    res.z_t_formula = grating_period * grating_period / params.wavelength;
    return res;
}

std::vector<double> attenuated_intensity(AttenuationMode mode, double a,
                                         const std::vector<double>& p1,
                                         const std::vector<double>& phi) {
    if (!(a >= 0.0 && a <= 1.0))
        throw std::out_of_range("attenuated_intensity: a must lie in [0, 1]");
    if (p1.size() != phi.size())
        throw std::invalid_argument("attenuated_intensity: grids must share shape");
    const double contrast = mode == AttenuationMode::Deterministic ? 2.0 * a : 2.0 * std::sqrt(a);
    std::vector<double> out(p1.size());
    for (std::size_t i = 0; i < p1.size(); ++i)
        out[i] = p1[i] * (1.0 + a + contrast * std::cos(phi[i]));
    return out;
}

namespace {

struct Extrema {
    std::vector<int> maxima, minima;
};

Extrema find_extrema(const std::vector<double>& v) {
    Extrema e;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] > v[i - 1] && v[i] >= v[i + 1]) e.maxima.push_back(static_cast<int>(i));
        if (v[i] < v[i - 1] && v[i] <= v[i + 1]) e.minima.push_back(static_cast<int>(i));
    }
    return e;
}

// |sum v e^{-i k x}|: the fringe amplitude at wavenumber k. The smooth
// envelope decays at the window edges, so its spectrum does not leak here.
double demod_amplitude(const std::vector<double>& x, const std::vector<double>& v, double k) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        re += v[i] * std::cos(k * x[i]);
        im += v[i] * std::sin(k * x[i]);
    }
    return std::hypot(re, im);
}

}  // namespace

double visibility_estimate(const ScreenRecord& screen) {
    const auto& v = screen.accumulated;
    const auto& x = screen.coordinate;

    // fringe structure: extrema of the oscillation left after dividing out a
    // log-quadratic envelope; extrema of the raw curve as a fallback. Without
    // the detrending a weak modulation riding a sloped envelope leaves too
    // few, badly placed extrema to seed the fringe period.
    const double peak = *std::max_element(v.begin(), v.end());
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, b0 = 0, b1 = 0, b2 = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 1e-6 * peak) continue;
        const double w = std::log(v[i]);
        const double xi = x[i], xi2 = xi * xi;
        s0 += 1; s1 += xi; s2 += xi2; s3 += xi * xi2; s4 += xi2 * xi2;
        b0 += w; b1 += w * xi; b2 += w * xi2;
    }
    double m[3][4] = {{s0, s1, s2, b0}, {s1, s2, s3, b1}, {s2, s3, s4, b2}};
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        std::swap(m[c], m[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == c || m[c][c] == 0.0) continue;
            const double f = m[r][c] / m[c][c];
            for (int cc = c; cc < 4; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    std::vector<double> rx, rv;  // residual on the carried nodes only
    if (m[0][0] != 0.0 && m[1][1] != 0.0 && m[2][2] != 0.0) {
        const double a0 = m[0][3] / m[0][0], a1 = m[1][3] / m[1][1], a2 = m[2][3] / m[2][2];
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] <= 1e-6 * peak) continue;
            rx.push_back(x[i]);
            rv.push_back(v[i] / std::exp(a0 + a1 * x[i] + a2 * x[i] * x[i]) - 1.0);
        }
    }
    Extrema ext = find_extrema(rv);
    const std::vector<double>* ex = &rx;
    if (ext.maxima.size() + ext.minima.size() < 3) {
        ext = find_extrema(v);
        ex = &x;
    }
    if (ext.maxima.size() + ext.minima.size() < 3)
        throw std::runtime_error("visibility_estimate: fewer than three extrema");

    // fringe frequency from the extrema spacing, then refined on the data
    std::vector<int> all;
    all.insert(all.end(), ext.maxima.begin(), ext.maxima.end());
    all.insert(all.end(), ext.minima.begin(), ext.minima.end());
    std::sort(all.begin(), all.end());
    double gap = 0.0;
    for (std::size_t i = 1; i < all.size(); ++i) gap += (*ex)[all[i]] - (*ex)[all[i - 1]];
    gap /= (all.size() - 1);
    const double k0 = std::numbers::pi / gap;

    double lo = 0.7 * k0, hi = 1.3 * k0;
    for (int it = 0; it < 60; ++it) {  // golden-section on the demodulated amplitude
        const double m1 = lo + 0.381966 * (hi - lo);
        const double m2 = hi - 0.381966 * (hi - lo);
        if (demod_amplitude(x, v, m1) < demod_amplitude(x, v, m2))
            lo = m1;
        else
            hi = m2;
    }
    const double k = 0.5 * (lo + hi);

    double sum = 0.0;
    for (double vi : v) sum += vi;
    const double visibility = 2.0 * demod_amplitude(x, v, k) / sum;
    return std::min(visibility, 1.0);
}

double fringe_spacing_estimate(const ScreenRecord& screen) {
    const auto& v = screen.accumulated;
    const auto& x = screen.coordinate;
    const auto ext = find_extrema(v);
    if (ext.maxima.size() < 3)
        throw std::runtime_error("fringe_spacing_estimate: fewer than three maxima");

    // parabolic refinement of each maximum position
    std::vector<double> pos;
    for (int i : ext.maxima) {
        const double denom = v[i - 1] - 2.0 * v[i] + v[i + 1];
        double offset = 0.0;
        if (denom != 0.0) offset = 0.5 * (v[i - 1] - v[i + 1]) / denom;
        pos.push_back(x[i] + offset * (x[i + 1] - x[i]));
    }
    // centre = intensity-weighted mean
    double mass = 0.0, first = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        mass += v[i];
        first += v[i] * x[i];
    }
    const double centre = first / mass;
    std::size_t c = 0;
    for (std::size_t i = 1; i < pos.size(); ++i)
        if (std::abs(pos[i] - centre) < std::abs(pos[c] - centre)) c = i;
    double acc = 0.0;
    int n = 0;
    if (c > 0) {
        acc += pos[c] - pos[c - 1];
        ++n;
    }
    if (c + 1 < pos.size()) {
        acc += pos[c + 1] - pos[c];
        ++n;
    }
    return acc / n;
}

ScreenRecord side_screen_flux(const std::vector<CombinedFrame>& frames, double x_s,
                              const GridSpec& grid, const PhysicalParams& params) {
    if (!(x_s >= grid.x_min && x_s <= grid.x_max))
        throw std::invalid_argument("side_screen_flux: x_s outside the grid");
    ScreenRecord rec;
    rec.orientation = ScreenOrientation::Sideways;
    rec.position = x_s;
    rec.coordinate.resize(frames.size());
    rec.accumulated.resize(frames.size());
    for (std::size_t k = 0; k < frames.size(); ++k) {
        rec.coordinate[k] = params.forward_velocity * frames[k].t;
        const double j = interp(frames[k].j_tot, grid, x_s);
        const double w = (k == 0 || k + 1 == frames.size()) ? 0.5 : 1.0;  // trapezoid in t
        rec.accumulated[k] = w * j * grid.dt;
    }
    return rec;
}

double sweep_completion_time(const std::vector<SlitSpec>& slits, const PhysicalParams& params,
                             double x_s, Coherence coherence) {
    if (slits.size() < 2)
        throw std::invalid_argument("sweep_completion_time: two slits required");
    double weak_mass = slits.back().weight * slits.back().transmission;
    for (const auto& s : slits) weak_mass = std::min(weak_mass, s.weight * s.transmission);

    auto right_mass = [&](double t) {
        double sigma_max = 0.0;
        double centre_max = slits.front().centre;
        for (const auto& s : slits) {
            sigma_max = std::max(sigma_max, sigma_of_t(s, params, t));
            centre_max = std::max(centre_max, s.centre + s.vx * t);
        }
        const double hi = centre_max + 10.0 * sigma_max;
        if (hi <= x_s) return 0.0;
        const int n = 6000;
        double acc = 0.0;
        double prev = analytic_p_tot(slits, params, x_s, t, coherence);
        const double h = (hi - x_s) / n;
        for (int i = 1; i <= n; ++i) {
            const double cur = analytic_p_tot(slits, params, x_s + i * h, t, coherence);
            acc += 0.5 * (prev + cur) * h;
            prev = cur;
        }
        return acc;
    };

    // bracket the crossing, then bisect
    double t_lo = 0.0;
    double t_hi = 1.0;
    for (const auto& s : slits)
        t_hi = std::max(t_hi, derive_slit(s, params).t_kink);
    while (right_mass(t_hi) < weak_mass) {
        t_lo = t_hi;
        t_hi *= 2.0;
        if (t_hi > 1e12) throw std::runtime_error("sweep_completion_time: no completion found");
    }
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (right_mass(mid) < weak_mass)
            t_lo = mid;
        else
            t_hi = mid;
    }
    return 0.5 * (t_lo + t_hi);
}

double calibrate_sigma0(const std::vector<std::pair<double, double>>& measured,
                        const CalibrationSetup& setup) {
    if (measured.size() < 16)
        throw std::invalid_argument("calibrate_sigma0: measured curve too sparse");
    if (setup.slit_widths.size() != setup.slit_centres.size() || setup.slit_widths.size() < 2)
        throw std::invalid_argument("calibrate_sigma0: need at least two slits");

    std::vector<double> xs(measured.size()), ys(measured.size());
    for (std::size_t i = 0; i < measured.size(); ++i) {
        xs[i] = measured[i].first;
        ys[i] = measured[i].second;
    }

    // the curve must span at least five fringes of lambda L / d
    double d_mean = 0.0;
    for (std::size_t i = 1; i < setup.slit_centres.size(); ++i)
        d_mean += setup.slit_centres[i] - setup.slit_centres[i - 1];
    d_mean /= (setup.slit_centres.size() - 1);
    const double fringe = setup.wavelength * setup.screen_distance / d_mean;
    if (xs.back() - xs.front() < 5.0 * fringe)
        throw std::invalid_argument("calibrate_sigma0: curve covers fewer than five fringes");

    const double y_area = trapezoid_xy(xs, ys);
    if (!(y_area > 0.0)) throw std::runtime_error("calibrate_sigma0: degenerate measured curve");
    double y_var = 0.0;
    for (double y : ys) y_var += (y - y_area / (xs.back() - xs.front())) *
                                 (y - y_area / (xs.back() - xs.front()));
    if (y_var <= 1e-20 * y_area * y_area)
        throw std::runtime_error("calibrate_sigma0: measured curve has no structure");

    const PhysicalParams params = derive_params(setup.mass, setup.wavelength);
    const double t_screen = setup.screen_distance / params.forward_velocity;

    double best_ratio = setup.ratio_lo, best_err = 0.0;
    bool first = true;
    std::vector<double> sim(xs.size());
    std::vector<double> errs;
    for (double ratio = setup.ratio_lo; ratio <= setup.ratio_hi + 1e-12;
         ratio += setup.ratio_step) {
        std::vector<SlitSpec> slits(setup.slit_widths.size());
        for (std::size_t s = 0; s < slits.size(); ++s) {
            slits[s].centre = setup.slit_centres[s];
            slits[s].sigma0 = ratio * setup.slit_widths[s];
        }
        for (std::size_t i = 0; i < xs.size(); ++i)
            sim[i] = analytic_p_tot(slits, params, xs[i], t_screen, Coherence::Coherent);
        const double area = trapezoid_xy(xs, sim);
        double err = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double diff = sim[i] / area - ys[i] / y_area;
            err += diff * diff;
        }
        errs.push_back(err);
        if (first || err < best_err) {
            best_err = err;
            best_ratio = ratio;
            first = false;
        }
    }
    if (best_ratio <= setup.ratio_lo + 1e-12 || best_ratio >= setup.ratio_hi - 1e-12)
        throw std::runtime_error("calibrate_sigma0: no interior minimum in the ratio range");
    return best_ratio;
}

// --- scenario builders -----------------------------------------------------

ScenarioConfig talbot_scenario(int n_slits, double grating_period, double wavelength, double mass,
                               double sigma0, int nt) {
    if (n_slits < 2) throw std::invalid_argument("talbot_scenario: at least two slits");
    ScenarioConfig cfg;
    cfg.mass = mass;
    cfg.wavelength = wavelength;
    if (sigma0 <= 0.0) sigma0 = grating_period / 8.0;

    const PhysicalParams params = derive_params(mass, wavelength);
    const double z_t = grating_period * grating_period / wavelength;
    const double t_talbot = z_t / params.forward_velocity;
    cfg.grid.dt = t_talbot / 150.0;
    cfg.grid.nt = nt;

    const double u0 = params.diffusion_const / sigma0;
    const double t_end = (nt - 1) * cfg.grid.dt;
    const double sigma_end = sigma0 * std::sqrt(1.0 + u0 * u0 * t_end * t_end / (sigma0 * sigma0));
    const double half_span = 0.5 * (n_slits - 1) * grating_period;
    const double half_domain = half_span + 8.5 * sigma_end;
    const double dx = grating_period / 28.0;
    const int half_nodes = static_cast<int>(std::ceil(half_domain / dx));
    cfg.grid.nx = 2 * half_nodes + 1;
    cfg.grid.x_min = -half_nodes * dx;
    cfg.grid.x_max = half_nodes * dx;

    for (int s = 0; s < n_slits; ++s) {
        SlitSpec slit;
        slit.centre = -half_span + s * grating_period;
        slit.sigma0 = sigma0;
        cfg.slits.push_back(slit);
    }
    return cfg;
}

ScenarioConfig neutron_double_slit_scenario(int nt, int nx) {
    ScenarioConfig cfg;
    cfg.mass = 1.675e-27;
    cfg.wavelength = 1.8e-9;
    cfg.screen_distance = 5.0;

    const PhysicalParams params = derive_params(cfg.mass, cfg.wavelength);
    const double t_screen = cfg.screen_distance / params.forward_velocity;
    cfg.grid.nt = nt;
    cfg.grid.dt = t_screen / (nt - 1);

    const double width = 22e-6, separation = 200e-6;
    const double sigma0 = width / 3.0;
    const double u0 = params.diffusion_const / sigma0;
    const double sigma_end = sigma0 * std::sqrt(1.0 + u0 * u0 * t_screen * t_screen /
                                                          (sigma0 * sigma0));
    const double half_domain = 0.5 * separation + 8.0 * sigma_end;
    cfg.grid.nx = nx;
    cfg.grid.x_min = -half_domain;
    cfg.grid.x_max = half_domain;

    for (double centre : {-0.5 * separation, 0.5 * separation}) {
        SlitSpec slit;
        slit.centre = centre;
        slit.sigma0 = sigma0;
        cfg.slits.push_back(slit);
    }
    return cfg;
}

ScenarioConfig sweeper_scenario(double a, Coherence coherence, int nt, int nx) {
    // the swept channel travels to ~6 sigma on the weak side; keep it clear
    // of the reflecting wall
    ScenarioConfig cfg;
    cfg.mass = 1.675e-27;
    cfg.wavelength = 1.8e-9;
    cfg.coherence = coherence;

    const double width = 22e-6, separation = 200e-6;
    const double sigma0 = width / 3.0;
    SlitSpec strong, weak;
    strong.centre = -0.5 * separation;
    strong.sigma0 = sigma0;
    weak.centre = 0.5 * separation;
    weak.sigma0 = sigma0;
    weak.transmission = a;
    cfg.slits = {strong, weak};

    const PhysicalParams params = derive_params(cfg.mass, cfg.wavelength);
    cfg.side_screen = true;
    cfg.side_screen_x = weak.centre + 7.0 * sigma0;

    const double t_end =
        sweep_completion_time(cfg.slits, params, cfg.side_screen_x, coherence);
    cfg.grid.nt = nt;
    cfg.grid.dt = t_end / (nt - 1);

    const double u0 = params.diffusion_const / sigma0;
    const double sigma_end = sigma0 * std::sqrt(1.0 + u0 * u0 * t_end * t_end / (sigma0 * sigma0));
    cfg.grid.nx = nx;
    cfg.grid.x_min = strong.centre - 8.0 * sigma_end;
    cfg.grid.x_max = strong.centre + 11.0 * sigma_end;
    return cfg;
}

ScenarioConfig symmetric_double_slit_scenario(double phase_shift, double t1_frac, double t2_frac) {
    ScenarioConfig cfg;
    cfg.mass = 0.5 * kHbar;  // scaled units: D = 1
    cfg.wavelength = 1.0;

    const double sigma0 = 1.0;  // t_kink = 1
    const double separation = 8.0;
    const double t_end = 3.0;
    cfg.grid.nt = 301;
    cfg.grid.dt = t_end / (cfg.grid.nt - 1);
    const double sigma_end = sigma0 * std::sqrt(1.0 + t_end * t_end);
    const double half_domain = 0.5 * separation + 8.0 * sigma_end;
    cfg.grid.nx = 1201;
    cfg.grid.x_min = -half_domain;
    cfg.grid.x_max = half_domain;

    for (double centre : {-0.5 * separation, 0.5 * separation}) {
        SlitSpec slit;
        slit.centre = centre;
        slit.sigma0 = sigma0;
        cfg.slits.push_back(slit);
    }
    if (phase_shift != 0.0)
        cfg.slits.front().phase_shift =
            PiecewiseLinear::ramp(t1_frac * t_end, t2_frac * t_end, phase_shift);
    return cfg;
}

}  // namespace ballistic
