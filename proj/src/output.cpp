#include "ballistic/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ballistic {

namespace {

void append_g17(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void write_bytes(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace

std::string field_csv(const std::vector<CombinedFrame>& frames, const GridSpec& grid) {
    if (frames.empty()) throw std::invalid_argument("field_csv: no frames");
    std::string out = "t_index,x_index,t,x,P_tot,J_tot,v_tot\n";
    for (const auto& frame : frames) {
        for (int i = 0; i < grid.nx; ++i) {
            out += std::to_string(frame.t_index);
            out += ',';
            out += std::to_string(i);
            out += ',';
            append_g17(out, frame.t);
            out += ',';
            append_g17(out, grid.x(i));
            out += ',';
            append_g17(out, frame.p_tot[i]);
            out += ',';
            append_g17(out, frame.j_tot[i]);
            out += ',';
            append_g17(out, frame.v_tot[i]);
            out += '\n';
        }
    }
    return out;
}

void write_field_csv(const std::vector<CombinedFrame>& frames, const GridSpec& grid,
                     const std::string& path) {
    const std::string csv = field_csv(frames, grid);
    write_bytes(path, csv.data(), csv.size());
}

std::string trajectory_csv(const TrajectorySet& ts) {
    std::string out = "path,point,t,x,source_slit\n";
    for (std::size_t p = 0; p < ts.paths.size(); ++p) {
        for (std::size_t k = 0; k < ts.times.size(); ++k) {
            out += std::to_string(p);
            out += ',';
            out += std::to_string(k);
            out += ',';
            append_g17(out, ts.times[k]);
            out += ',';
            append_g17(out, ts.paths[p][k]);
            out += ',';
            out += std::to_string(ts.source_slit[p]);
            out += '\n';
        }
    }
    return out;
}

void write_trajectory_csv(const TrajectorySet& ts, const std::string& path) {
    const std::string csv = trajectory_csv(ts);
    write_bytes(path, csv.data(), csv.size());
}

std::vector<std::uint8_t> heatmap_pgm(const std::vector<CombinedFrame>& frames, double gamma) {
    if (frames.empty()) throw std::invalid_argument("heatmap_pgm: no frames");
    const int width = static_cast<int>(frames.front().p_tot.size());
    const int height = static_cast<int>(frames.size());

    double peak = 0.0;
    for (const auto& f : frames)
        peak = std::max(peak, *std::max_element(f.p_tot.begin(), f.p_tot.end()));
    if (!(peak > 0.0)) peak = 1.0;

    std::string header = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + static_cast<std::size_t>(width) * height);
    for (int row = 0; row < height; ++row) {
        const auto& f = frames[height - 1 - row];  // latest time on top
        for (int i = 0; i < width; ++i) {
            const double v = std::max(f.p_tot[i], 0.0) / peak;
            const double g = std::pow(v, gamma);
            out.push_back(static_cast<std::uint8_t>(std::lround(255.0 * g)));
        }
    }
    return out;
}

void write_heatmap(const std::vector<CombinedFrame>& frames, const std::string& path,
                   double gamma) {
    const auto pgm = heatmap_pgm(frames, gamma);
    write_bytes(path, pgm.data(), pgm.size());
}

}  // namespace ballistic
