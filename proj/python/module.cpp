// Python bindings for the ballistic-diffusion simulation core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ballistic/analytic.hpp"
#include "ballistic/config.hpp"
#include "ballistic/currents.hpp"
#include "ballistic/experiments.hpp"
#include "ballistic/output.hpp"
#include "ballistic/phys.hpp"
#include "ballistic/solver.hpp"
#include "ballistic/stochastic.hpp"
#include "ballistic/trajectories.hpp"

namespace py = pybind11;
using namespace ballistic;

PYBIND11_MODULE(ballistic, m) {
    m.doc() = "Gaussian slit systems under ballistic diffusion: solvers, current "
              "rules, trajectories and the bouncer-walker toy model";

    m.attr("HBAR") = kHbar;

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def(py::init<>())
        .def_readwrite("mass", &PhysicalParams::mass)
        .def_readwrite("hbar", &PhysicalParams::hbar)
        .def_readwrite("diffusion_const", &PhysicalParams::diffusion_const)
        .def_readwrite("wavelength", &PhysicalParams::wavelength)
        .def_readwrite("forward_velocity", &PhysicalParams::forward_velocity);

    py::class_<PiecewiseLinear>(m, "PiecewiseLinear")
        .def(py::init<>())
        .def_static("constant", &PiecewiseLinear::constant)
        .def_static("ramp", &PiecewiseLinear::ramp)
        .def("__call__", &PiecewiseLinear::operator());

    py::class_<SlitSpec>(m, "SlitSpec")
        .def(py::init<>())
        .def_readwrite("centre", &SlitSpec::centre)
        .def_readwrite("sigma0", &SlitSpec::sigma0)
        .def_readwrite("vx", &SlitSpec::vx)
        .def_readwrite("weight", &SlitSpec::weight)
        .def_readwrite("transmission", &SlitSpec::transmission)
        .def_readwrite("phase_shift", &SlitSpec::phase_shift);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("x_min", &GridSpec::x_min)
        .def_readwrite("x_max", &GridSpec::x_max)
        .def_readwrite("nx", &GridSpec::nx)
        .def_readwrite("dt", &GridSpec::dt)
        .def_readwrite("nt", &GridSpec::nt)
        .def("dx", &GridSpec::dx)
        .def("x", &GridSpec::x)
        .def("t", &GridSpec::t);

    py::class_<DerivedSlitQuantities>(m, "DerivedSlitQuantities")
        .def_readonly("u0", &DerivedSlitQuantities::u0)
        .def_readonly("t_kink", &DerivedSlitQuantities::t_kink);

    m.def("derive_params", &derive_params, py::arg("mass"), py::arg("wavelength"));
    m.def("derive_slit", &derive_slit);

    m.def("sigma_of_t", &sigma_of_t);
    m.def("gaussian_density", &gaussian_density);
    m.def("kinematic_fields", &kinematic_fields);
    m.def("osmotic_velocity", &osmotic_velocity);
    m.def("phase_of", &phase_of);
    m.def("phase_difference", &phase_difference);

    py::class_<KinematicSample>(m, "KinematicSample")
        .def_readonly("x", &KinematicSample::x)
        .def_readonly("t", &KinematicSample::t)
        .def_readonly("density", &KinematicSample::density)
        .def_readonly("v_tot", &KinematicSample::v_tot)
        .def_readonly("a_tot", &KinematicSample::a_tot)
        .def_readonly("u", &KinematicSample::u)
        .def_readonly("phase", &KinematicSample::phase);
    m.def("sample_kinematics", &sample_kinematics);

    py::enum_<Scheme>(m, "Scheme")
        .value("EXPLICIT", Scheme::Explicit)
        .value("CRANK_NICOLSON", Scheme::CrankNicolson);
    py::enum_<Coherence>(m, "Coherence")
        .value("COHERENT", Coherence::Coherent)
        .value("INCOHERENT", Coherence::Incoherent);
    py::enum_<Seeding>(m, "Seeding")
        .value("EQUIDISTANT", Seeding::Equidistant)
        .value("EQUAL_FLUX", Seeding::EqualFlux)
        .value("PER_SLIT", Seeding::PerSlitEqualCount);

    py::class_<SlitField>(m, "SlitField")
        .def_readonly("values", &SlitField::values)
        .def_readonly("t_index", &SlitField::t_index)
        .def_readonly("slit_id", &SlitField::slit_id);

    py::class_<SlitEvolution>(m, "SlitEvolution")
        .def_readonly("frames", &SlitEvolution::frames)
        .def_readonly("unstable", &SlitEvolution::unstable)
        .def_readonly("domain_warning", &SlitEvolution::domain_warning);

    m.def("max_stable_dt", &max_stable_dt);
    m.def("evolve_slit", &evolve_slit, py::arg("slit"), py::arg("params"), py::arg("grid"),
          py::arg("scheme"), py::arg("allow_unstable") = false);
    m.def("solve_tridiagonal",
          [](const std::vector<double>& lower, const std::vector<double>& diag,
             const std::vector<double>& upper, const std::vector<double>& rhs) {
              return solve_tridiagonal(lower, diag, upper, rhs);
          });

    py::class_<CombinedFrame>(m, "CombinedFrame")
        .def_readonly("t_index", &CombinedFrame::t_index)
        .def_readonly("t", &CombinedFrame::t)
        .def_readonly("p_tot", &CombinedFrame::p_tot)
        .def_readonly("j_tot", &CombinedFrame::j_tot)
        .def_readonly("v_tot", &CombinedFrame::v_tot);

    py::class_<ChannelSet>(m, "ChannelSet")
        .def_readonly("t", &ChannelSet::t)
        .def_readonly("amplitude", &ChannelSet::amplitude)
        .def_readonly("convective", &ChannelSet::convective)
        .def_readonly("osmotic", &ChannelSet::osmotic)
        .def_readonly("phase", &ChannelSet::phase)
        .def("pair_phase", &ChannelSet::pair_phase)
        .def("n_slits", &ChannelSet::n_slits);

    m.def("build_channels", &build_channels);
    m.def("relational_intensities", &relational_intensities);
    m.def("total_intensity", &total_intensity);
    m.def("total_current", &total_current);
    m.def("emergent_velocity", &emergent_velocity);
    m.def("entangling_current", &entangling_current);

    py::class_<TrajectorySet>(m, "TrajectorySet")
        .def_readonly("paths", &TrajectorySet::paths)
        .def_readonly("times", &TrajectorySet::times)
        .def_readonly("source_slit", &TrajectorySet::source_slit)
        .def_readonly("truncated_at", &TrajectorySet::truncated_at);

    m.def("seed_equidistant", &seed_equidistant);
    m.def("seed_equal_flux", &seed_equal_flux);
    m.def("advance_trajectories", &advance_trajectories);
    m.def("count_crossings", &count_crossings);

    py::class_<TrajectoryRequest>(m, "TrajectoryRequest")
        .def(py::init<>())
        .def_readwrite("enabled", &TrajectoryRequest::enabled)
        .def_readwrite("mode", &TrajectoryRequest::mode)
        .def_readwrite("count", &TrajectoryRequest::count)
        .def_readwrite("span", &TrajectoryRequest::span);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("mass", &ScenarioConfig::mass)
        .def_readwrite("wavelength", &ScenarioConfig::wavelength)
        .def_readwrite("grid", &ScenarioConfig::grid)
        .def_readwrite("slits", &ScenarioConfig::slits)
        .def_readwrite("scheme", &ScenarioConfig::scheme)
        .def_readwrite("coherence", &ScenarioConfig::coherence)
        .def_readwrite("trajectories", &ScenarioConfig::trajectories)
        .def_readwrite("screen_distance", &ScenarioConfig::screen_distance)
        .def_readwrite("side_screen", &ScenarioConfig::side_screen)
        .def_readwrite("side_screen_x", &ScenarioConfig::side_screen_x);

    m.def("parse_config", &parse_config);
    m.def("serialize_config", &serialize_config);
    m.def("load_config_file", &load_config_file);

    py::enum_<ScreenOrientation>(m, "ScreenOrientation")
        .value("FORWARD", ScreenOrientation::Forward)
        .value("SIDEWAYS", ScreenOrientation::Sideways);
    py::enum_<AttenuationMode>(m, "AttenuationMode")
        .value("DETERMINISTIC", AttenuationMode::Deterministic)
        .value("STOCHASTIC", AttenuationMode::Stochastic);

    py::class_<ScreenRecord>(m, "ScreenRecord")
        .def(py::init<>())
        .def_readwrite("orientation", &ScreenRecord::orientation)
        .def_readwrite("coordinate", &ScreenRecord::coordinate)
        .def_readwrite("accumulated", &ScreenRecord::accumulated)
        .def_readwrite("position", &ScreenRecord::position);

    py::class_<TalbotResult>(m, "TalbotResult")
        .def_readonly("y_t_observed", &TalbotResult::y_t_observed)
        .def_readonly("z_t_formula", &TalbotResult::z_t_formula)
        .def_readonly("t_t_steps", &TalbotResult::t_t_steps);

    py::class_<ScenarioResult>(m, "ScenarioResult")
        .def_readonly("params", &ScenarioResult::params)
        .def_readonly("frames", &ScenarioResult::frames)
        .def_readonly("trajectories", &ScenarioResult::trajectories)
        .def_readonly("screen", &ScenarioResult::screen)
        .def_readonly("side_screen", &ScenarioResult::side_screen)
        .def_readonly("unstable", &ScenarioResult::unstable)
        .def_readonly("domain_warning", &ScenarioResult::domain_warning);

    m.def("run_scenario", &run_scenario, py::call_guard<py::gil_scoped_release>());
    m.def("talbot_distance_estimate", &talbot_distance_estimate);
    m.def("pattern_correlation", &pattern_correlation);
    m.def("attenuated_intensity", &attenuated_intensity);
    m.def("visibility_estimate", &visibility_estimate);
    m.def("fringe_spacing_estimate", &fringe_spacing_estimate);
    m.def("side_screen_flux", &side_screen_flux);
    m.def("sweep_completion_time", &sweep_completion_time, py::arg("slits"), py::arg("params"),
          py::arg("x_s"), py::arg("coherence") = Coherence::Coherent);

    py::class_<CalibrationSetup>(m, "CalibrationSetup")
        .def(py::init<>())
        .def_readwrite("wavelength", &CalibrationSetup::wavelength)
        .def_readwrite("mass", &CalibrationSetup::mass)
        .def_readwrite("screen_distance", &CalibrationSetup::screen_distance)
        .def_readwrite("slit_widths", &CalibrationSetup::slit_widths)
        .def_readwrite("slit_centres", &CalibrationSetup::slit_centres)
        .def_readwrite("ratio_lo", &CalibrationSetup::ratio_lo)
        .def_readwrite("ratio_hi", &CalibrationSetup::ratio_hi)
        .def_readwrite("ratio_step", &CalibrationSetup::ratio_step);
    m.def("calibrate_sigma0", &calibrate_sigma0);

    m.def("talbot_scenario", &talbot_scenario, py::arg("n_slits"), py::arg("grating_period"),
          py::arg("wavelength"), py::arg("mass"), py::arg("sigma0") = 0.0, py::arg("nt") = 400);
    m.def("neutron_double_slit_scenario", &neutron_double_slit_scenario, py::arg("nt") = 400,
          py::arg("nx") = 1601);
    m.def("sweeper_scenario", &sweeper_scenario, py::arg("a"),
          py::arg("coherence") = Coherence::Coherent, py::arg("nt") = 600, py::arg("nx") = 2601);
    m.def("symmetric_double_slit_scenario", &symmetric_double_slit_scenario,
          py::arg("phase_shift") = 0.0, py::arg("t1_frac") = 0.0, py::arg("t2_frac") = 0.0);

    py::class_<WalkerConfig>(m, "WalkerConfig")
        .def(py::init<>())
        .def_readwrite("mass", &WalkerConfig::mass)
        .def_readwrite("zeta", &WalkerConfig::zeta)
        .def_readwrite("lambda_noise", &WalkerConfig::lambda_noise)
        .def_readwrite("dt", &WalkerConfig::dt)
        .def_readwrite("n_steps", &WalkerConfig::n_steps)
        .def_readwrite("n_ensemble", &WalkerConfig::n_ensemble)
        .def_readwrite("rng_seed", &WalkerConfig::rng_seed)
        .def_readwrite("u0", &WalkerConfig::u0)
        .def_readwrite("record_stride", &WalkerConfig::record_stride);

    py::class_<BouncerConfig>(m, "BouncerConfig")
        .def(py::init<>())
        .def_readwrite("mass", &BouncerConfig::mass)
        .def_readwrite("omega0", &BouncerConfig::omega0)
        .def_readwrite("gamma", &BouncerConfig::gamma)
        .def_readwrite("F0", &BouncerConfig::F0)
        .def_readwrite("dt", &BouncerConfig::dt)
        .def_readwrite("n_steps", &BouncerConfig::n_steps)
        .def_readwrite("x0", &BouncerConfig::x0)
        .def_readwrite("v0", &BouncerConfig::v0);

    py::class_<WalkerEnsemble>(m, "WalkerEnsemble")
        .def_readonly("times", &WalkerEnsemble::times)
        .def_readonly("u", &WalkerEnsemble::u)
        .def_readonly("x", &WalkerEnsemble::x);

    py::class_<BouncerRun>(m, "BouncerRun")
        .def_readonly("t", &BouncerRun::t)
        .def_readonly("x", &BouncerRun::x)
        .def_readonly("v", &BouncerRun::v)
        .def_readonly("fitted_amplitude", &BouncerRun::fitted_amplitude)
        .def_readonly("fitted_phase", &BouncerRun::fitted_phase);

    py::class_<WorkEnergyReport>(m, "WorkEnergyReport")
        .def_readonly("w_bouncer_sim", &WorkEnergyReport::w_bouncer_sim)
        .def_readonly("w_bouncer_analytic", &WorkEnergyReport::w_bouncer_analytic)
        .def_readonly("w_walker_sim", &WorkEnergyReport::w_walker_sim)
        .def_readonly("w_walker_analytic", &WorkEnergyReport::w_walker_analytic)
        .def_readonly("ratio", &WorkEnergyReport::ratio)
        .def_readonly("hbar_eff", &WorkEnergyReport::hbar_eff)
        .def_readonly("mean_u_sq", &WorkEnergyReport::mean_u_sq)
        .def_readonly("fitted_r", &WorkEnergyReport::fitted_r)
        .def_readonly("generator", &WorkEnergyReport::generator);

    m.def("simulate_walker", &simulate_walker, py::call_guard<py::gil_scoped_release>());
    m.def("estimate_msd_slope", &estimate_msd_slope);
    m.def("simulate_bouncer", &simulate_bouncer);
    m.def("work_energy_balance", &work_energy_balance,
          py::call_guard<py::gil_scoped_release>());

    m.def("field_csv", &field_csv);
    m.def("heatmap_pgm", [](const std::vector<CombinedFrame>& frames, double gamma) {
        const auto bytes = heatmap_pgm(frames, gamma);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    }, py::arg("frames"), py::arg("gamma") = 0.5);
}
