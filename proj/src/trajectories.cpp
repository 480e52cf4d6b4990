#include "ballistic/trajectories.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ballistic {

namespace {

double interp(const std::vector<double>& values, const GridSpec& grid, double x) {
    const double s = std::clamp((x - grid.x_min) / grid.dx(), 0.0, double(grid.nx - 1));
    const int i = std::min(static_cast<int>(s), grid.nx - 2);
    const double f = s - i;
    return values[i] * (1.0 - f) + values[i + 1] * f;
}

}  // namespace

std::vector<double> seed_equidistant(const CombinedFrame& frame0, const GridSpec& grid, int n,
                                     double span) {
    if (n < 1) throw std::invalid_argument("seed_equidistant: n must be >= 1");
    if (!(span >= 0.0)) throw std::invalid_argument("seed_equidistant: span must be >= 0");
    // centre of mass of the initial density
    double mass = 0.0, first = 0.0;
    for (int i = 0; i < grid.nx; ++i) {
        const double w = (i == 0 || i == grid.nx - 1) ? 0.5 : 1.0;
        mass += w * frame0.p_tot[i];
        first += w * frame0.p_tot[i] * grid.x(i);
    }
    if (!(mass > 0.0)) throw std::runtime_error("seed_equidistant: degenerate density");
    const double centre = first / mass;
    if (centre - span / 2.0 < grid.x_min || centre + span / 2.0 > grid.x_max)
        throw std::out_of_range("seed_equidistant: span exceeds the grid");
    std::vector<double> seeds(n);
    if (n == 1) {
        seeds[0] = centre;
        return seeds;
    }
    for (int k = 0; k < n; ++k)
        seeds[k] = centre - span / 2.0 + span * k / (n - 1);
    return seeds;
}

std::vector<double> seed_equal_flux(const CombinedFrame& frame0, const GridSpec& grid, int n) {
    if (n < 2) throw std::invalid_argument("seed_equal_flux: n must be >= 2");
    const int nx = grid.nx;
    std::vector<double> cdf(nx, 0.0);
    for (int i = 1; i < nx; ++i)
        cdf[i] = cdf[i - 1] + 0.5 * (frame0.p_tot[i - 1] + frame0.p_tot[i]) * grid.dx();
    const double total = cdf.back();
    if (!(total > 0.0) || !std::isfinite(total))
        throw std::runtime_error("seed_equal_flux: degenerate density");
    std::vector<double> seeds(n);
    int i = 1;
    for (int k = 0; k < n; ++k) {
        const double target = total * (k + 1) / (n + 1);
        while (i < nx - 1 && cdf[i] < target) ++i;
        const double c0 = cdf[i - 1], c1 = cdf[i];
        const double f = c1 > c0 ? (target - c0) / (c1 - c0) : 0.5;
        seeds[k] = grid.x(i - 1) + f * grid.dx();
    }
    return seeds;
}

TrajectorySet advance_trajectories(const std::vector<double>& seeds,
                                   const std::vector<CombinedFrame>& frames,
                                   const GridSpec& grid) {
    if (frames.size() != static_cast<std::size_t>(grid.nt))
        throw std::invalid_argument("advance_trajectories: frames must cover all time nodes");
    const int nt = grid.nt;
    const int np = static_cast<int>(seeds.size());

    TrajectorySet ts;
    ts.paths.assign(np, std::vector<double>(nt));
    ts.times.resize(nt);
    ts.source_slit.assign(np, -1);
    ts.truncated_at.assign(np, -1);
    for (int k = 0; k < nt; ++k) ts.times[k] = frames[k].t;

    for (int p = 0; p < np; ++p) {
        double x = std::clamp(seeds[p], grid.x_min, grid.x_max);
        ts.paths[p][0] = x;
        bool frozen = false;
        for (int k = 0; k + 1 < nt; ++k) {
            if (!frozen) {
                const double density = interp(frames[k].p_tot, grid, x);
                if (!(density > 0.0)) {
                    // no defined velocity here; freeze and flag
                    ts.truncated_at[p] = k;
                    frozen = true;
                }
            }
            if (frozen) {
                ts.paths[p][k + 1] = x;
                continue;
            }
            const double v0 = interp(frames[k].v_tot, grid, x);
            const double x_mid = std::clamp(x + 0.5 * grid.dt * v0, grid.x_min, grid.x_max);
            const double v_mid = 0.5 * (interp(frames[k].v_tot, grid, x_mid) +
                                        interp(frames[k + 1].v_tot, grid, x_mid));
            x = std::clamp(x + grid.dt * v_mid, grid.x_min, grid.x_max);
            ts.paths[p][k + 1] = x;
        }
    }
    return ts;
}

int count_crossings(const TrajectorySet& ts) {
    if (ts.paths.size() < 2)
        throw std::invalid_argument("count_crossings: at least two paths required");
    int inversions = 0;
    const std::size_t nt = ts.times.size();
    for (std::size_t k = 0; k < nt; ++k)
        for (std::size_t p = 0; p + 1 < ts.paths.size(); ++p)
            if (ts.paths[p][k] > ts.paths[p + 1][k]) ++inversions;
    return inversions;
}

}  // namespace ballistic
