#pragma once

#include <string>
#include <vector>

#include "ballistic/currents.hpp"
#include "ballistic/phys.hpp"
#include "ballistic/solver.hpp"
#include "ballistic/trajectories.hpp"

namespace ballistic {

enum class OutputKind { FieldCsv, TrajCsv, Heatmap, ScreenCsv };

struct TrajectoryRequest {
    bool enabled = false;
    Seeding mode = Seeding::EqualFlux;
    int count = 0;
    double span = 0.0;  // equidistant seeding only

    bool operator==(const TrajectoryRequest&) const = default;
};

// Full description of one simulation run.
struct ScenarioConfig {
    double mass = 0.0;        // kg
    double wavelength = 0.0;  // m
    GridSpec grid;
    std::vector<SlitSpec> slits;
    Scheme scheme = Scheme::CrankNicolson;
    Coherence coherence = Coherence::Coherent;
    TrajectoryRequest trajectories;
    std::vector<OutputKind> outputs;
    double screen_distance = 0.0;  // forward screen at y = L; 0 records the last frame
    double side_screen_x = 0.0;    // sideways screen position; active when side_screen
    bool side_screen = false;
    std::uint64_t seed = 0;        // reserved for stochastic extensions; recorded in outputs

    bool operator==(const ScenarioConfig&) const = default;
};

// Line-oriented `key = value` text with [params], [grid], [run] sections and
// one repeatable [slit] section per slit. Unknown keys and duplicate
// sections are errors; messages carry the offending line number or key.
ScenarioConfig parse_config(const std::string& text);
std::string serialize_config(const ScenarioConfig& cfg);
ScenarioConfig load_config_file(const std::string& path);

void validate(const ScenarioConfig& cfg);

}  // namespace ballistic
