#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ballistic/currents.hpp"
#include "ballistic/trajectories.hpp"

namespace ballistic {

struct ScreenRecord;  // experiments.hpp

// CSV with header t_index,x_index,t,x,P_tot,J_tot,v_tot; row-major by t then
// x, 17 significant digits, LF line endings.
std::string field_csv(const std::vector<CombinedFrame>& frames, const GridSpec& grid);
void write_field_csv(const std::vector<CombinedFrame>& frames, const GridSpec& grid,
                     const std::string& path);

std::string trajectory_csv(const TrajectorySet& ts);
void write_trajectory_csv(const TrajectorySet& ts, const std::string& path);

// Binary portable graymap (P5, maxval 255), width nx, height = frame count,
// row 0 holding the latest time; pixel = round(255 (P/P_max)^gamma).
std::vector<std::uint8_t> heatmap_pgm(const std::vector<CombinedFrame>& frames, double gamma = 0.5);
void write_heatmap(const std::vector<CombinedFrame>& frames, const std::string& path,
                   double gamma = 0.5);

}  // namespace ballistic
