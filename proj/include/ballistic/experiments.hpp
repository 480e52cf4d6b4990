#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ballistic/config.hpp"
#include "ballistic/currents.hpp"
#include "ballistic/phys.hpp"
#include "ballistic/trajectories.hpp"

namespace ballistic {

enum class ScreenOrientation { Forward, Sideways };

// Accumulated probability (forward) or flux per time step (sideways).
struct ScreenRecord {
    ScreenOrientation orientation = ScreenOrientation::Forward;
    std::vector<double> coordinate;   // x on a forward screen, y = v_y t on a sideways screen
    std::vector<double> accumulated;
    double position = 0.0;            // L or x_s
};

struct TalbotResult {
    double y_t_observed = 0.0;  // m
    double z_t_formula = 0.0;   // m, d^2/lambda
    int t_t_steps = 0;
};

struct ScenarioResult {
    PhysicalParams params;
    std::vector<CombinedFrame> frames;
    TrajectorySet trajectories;
    ScreenRecord screen;
    std::optional<ScreenRecord> side_screen;
    bool unstable = false;
    bool domain_warning = false;
};

// Full pipeline: initial Gaussians -> per-slit evolution -> phases ->
// combination -> trajectories and screens.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

// Earliest local maximum (above 0.9) of the normalized cross-correlation
// between P(., t) and the initial pattern shifted by half a grating period,
// evaluated over [window_lo, window_hi]. Throws std::runtime_error when no
// such recurrence exists.
TalbotResult talbot_distance_estimate(const std::vector<CombinedFrame>& frames,
                                      const GridSpec& grid, const PhysicalParams& params,
                                      double grating_period, double window_lo, double window_hi);

// Zero-mean normalized correlation of each frame with the initial pattern
// shifted by `shift`, over [window_lo, window_hi].
std::vector<double> pattern_correlation(const std::vector<CombinedFrame>& frames,
                                        const GridSpec& grid, double shift, double window_lo,
                                        double window_hi);

enum class AttenuationMode { Deterministic, Stochastic };

// Chopper-type: P1 (1 + a + 2 a cos phi). Foil-type: P1 (1 + a + 2 sqrt(a) cos phi).
std::vector<double> attenuated_intensity(AttenuationMode mode, double a,
                                         const std::vector<double>& p1,
                                         const std::vector<double>& phi);

// Fringe contrast (I_max - I_min)/(I_max + I_min) of the central fringes.
// The extrema are taken at a common envelope point by demodulating the
// pattern at the fringe frequency, which keeps the estimate free of the
// envelope's slope. Requires at least three extrema.
double visibility_estimate(const ScreenRecord& screen);

// Mean distance of neighbouring intensity maxima around the pattern centre.
double fringe_spacing_estimate(const ScreenRecord& screen);

// Flux J_x(x_s, t) dt accumulated per time step on a screen parallel to the
// forward direction, mapped to y = v_y t.
ScreenRecord side_screen_flux(const std::vector<CombinedFrame>& frames, double x_s,
                              const GridSpec& grid, const PhysicalParams& params);

// Time at which the probability beyond x_s first equals the weak beam's
// weight (the sweep has carried the attenuated beam past x_s), computed from
// the closed-form fields by bisection.
double sweep_completion_time(const std::vector<SlitSpec>& slits, const PhysicalParams& params,
                             double x_s, Coherence coherence = Coherence::Coherent);

struct CalibrationSetup {
    double wavelength = 0.0;       // m
    double mass = 0.0;             // kg
    double screen_distance = 0.0;  // m
    std::vector<double> slit_widths;   // full widths, m
    std::vector<double> slit_centres;  // m
    double ratio_lo = 0.2;
    double ratio_hi = 0.5;
    double ratio_step = 0.005;
};

// Grid search over sigma0/width minimizing the L2 distance between the
// simulated and the measured screen profile (both area-normalized). Throws
// std::runtime_error when no interior minimum exists.
double calibrate_sigma0(const std::vector<std::pair<double, double>>& measured,
                        const CalibrationSetup& setup);

// --- scenario builders -----------------------------------------------------

// N-slit grating with period d; time resolution of ~150 steps per Talbot
// time, runs over a bit more than two Talbot distances.
ScenarioConfig talbot_scenario(int n_slits, double grating_period, double wavelength, double mass,
                               double sigma0 = 0.0, int nt = 400);

// Cold-neutron double slit: 22 um wide Gaussian slits 200 um apart,
// recorded 5 m downstream.
ScenarioConfig neutron_double_slit_scenario(int nt = 400, int nx = 1601);

// Same geometry with slit 2 attenuated by a (amplitude sqrt(a)); sideways
// screen just beyond the weak slit, run until the sweep completes.
ScenarioConfig sweeper_scenario(double a, Coherence coherence = Coherence::Coherent, int nt = 600,
                                int nx = 2601);

// Symmetric double slit in scaled units with moderate dispersion; optional
// phase-shift ramp at slit 1.
ScenarioConfig symmetric_double_slit_scenario(double phase_shift = 0.0, double t1_frac = 0.0,
                                              double t2_frac = 0.0);

}  // namespace ballistic
