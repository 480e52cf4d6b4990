#pragma once

#include <vector>

#include "ballistic/currents.hpp"
#include "ballistic/phys.hpp"

namespace ballistic {

enum class Seeding { Equidistant, EqualFlux, PerSlitEqualCount };

// Averaged sample paths, one position per time node.
struct TrajectorySet {
    std::vector<std::vector<double>> paths;  // [path][frame] -> x
    std::vector<double> times;               // frame times
    std::vector<int> source_slit;            // per path; -1 when unassigned
    std::vector<int> truncated_at;           // frame index after which the path is frozen; -1 if never
    Seeding seeding = Seeding::Equidistant;
};

// n seeds uniformly spaced across span, centred on the density's mean.
// Throws std::out_of_range when the span leaves the grid.
std::vector<double> seed_equidistant(const CombinedFrame& frame0, const GridSpec& grid, int n,
                                     double span);

// Seeds at the k/(n+1) quantiles of the initial cumulative distribution so
// the flux between neighbours is equal. Requires n >= 2.
std::vector<double> seed_equal_flux(const CombinedFrame& frame0, const GridSpec& grid, int n);

// Explicit midpoint integration of xdot = v_tot(x, t) with bilinear
// interpolation of v_tot in x and t. Positions are clamped to the grid; a
// path entering a region of vanishing density is frozen and flagged.
TrajectorySet advance_trajectories(const std::vector<double>& seeds,
                                   const std::vector<CombinedFrame>& frames, const GridSpec& grid);

// Adjacent-path order inversions summed over all time nodes.
int count_crossings(const TrajectorySet& ts);

}  // namespace ballistic
