#include "ballistic/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ballistic {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": " + what);
}

double to_double(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size()) fail(line, "trailing characters after number '" + v + "'");
        return d;
    } catch (const std::invalid_argument&) {
        fail(line, "expected a number, got '" + v + "'");
    } catch (const std::out_of_range&) {
        fail(line, "number out of range: '" + v + "'");
    }
}

int to_int(const std::string& v, int line) {
    const double d = to_double(v, line);
    const int i = static_cast<int>(d);
    if (d != static_cast<double>(i)) fail(line, "expected an integer, got '" + v + "'");
    return i;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct PendingSlit {
    SlitSpec slit;
    double phase_final = 0.0, phase_t1 = 0.0, phase_t2 = 0.0;
    bool has_phase = false;
};

const char* output_name(OutputKind k) {
    switch (k) {
        case OutputKind::FieldCsv: return "field-csv";
        case OutputKind::TrajCsv: return "traj-csv";
        case OutputKind::Heatmap: return "heatmap";
        case OutputKind::ScreenCsv: return "screen-csv";
    }
    return "";
}

OutputKind parse_output(const std::string& v, int line) {
    if (v == "field-csv") return OutputKind::FieldCsv;
    if (v == "traj-csv") return OutputKind::TrajCsv;
    if (v == "heatmap") return OutputKind::Heatmap;
    if (v == "screen-csv") return OutputKind::ScreenCsv;
    fail(line, "unknown output '" + v + "'");
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig cfg;
    std::vector<PendingSlit> slits;
    enum class Section { None, Params, Grid, Run, Slit } section = Section::None;
    bool seen_params = false, seen_grid = false, seen_run = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (const auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
        s = trim(s);
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated section header");
            const std::string name = trim(s.substr(1, s.size() - 2));
            if (name == "params") {
                if (seen_params) fail(line, "duplicate [params] section");
                seen_params = true;
                section = Section::Params;
            } else if (name == "grid") {
                if (seen_grid) fail(line, "duplicate [grid] section");
                seen_grid = true;
                section = Section::Grid;
            } else if (name == "run") {
                if (seen_run) fail(line, "duplicate [run] section");
                seen_run = true;
                section = Section::Run;
            } else if (name == "slit") {
                slits.push_back({});
                section = Section::Slit;
            } else {
                fail(line, "unknown section [" + name + "]");
            }
            continue;
        }

        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty()) fail(line, "expected 'key = value'");

        switch (section) {
            case Section::None:
                fail(line, "key '" + key + "' outside any section");
            case Section::Params:
                if (key == "mass")
                    cfg.mass = to_double(value, line);
                else if (key == "wavelength")
                    cfg.wavelength = to_double(value, line);
                else
                    fail(line, "unknown [params] key '" + key + "'");
                break;
            case Section::Grid:
                if (key == "x_min")
                    cfg.grid.x_min = to_double(value, line);
                else if (key == "x_max")
                    cfg.grid.x_max = to_double(value, line);
                else if (key == "nx")
                    cfg.grid.nx = to_int(value, line);
                else if (key == "dt")
                    cfg.grid.dt = to_double(value, line);
                else if (key == "nt")
                    cfg.grid.nt = to_int(value, line);
                else
                    fail(line, "unknown [grid] key '" + key + "'");
                break;
            case Section::Slit: {
                auto& p = slits.back();
                if (key == "centre")
                    p.slit.centre = to_double(value, line);
                else if (key == "sigma0")
                    p.slit.sigma0 = to_double(value, line);
                else if (key == "vx")
                    p.slit.vx = to_double(value, line);
                else if (key == "weight")
                    p.slit.weight = to_double(value, line);
                else if (key == "transmission")
                    p.slit.transmission = to_double(value, line);
                else if (key == "phase_shift") {
                    p.phase_final = to_double(value, line);
                    p.has_phase = true;
                } else if (key == "phase_t1")
                    p.phase_t1 = to_double(value, line);
                else if (key == "phase_t2")
                    p.phase_t2 = to_double(value, line);
                else
                    fail(line, "unknown [slit] key '" + key + "'");
                break;
            }
            case Section::Run:
                if (key == "scheme") {
                    if (value == "explicit")
                        cfg.scheme = Scheme::Explicit;
                    else if (value == "crank-nicolson")
                        cfg.scheme = Scheme::CrankNicolson;
                    else
                        fail(line, "scheme must be 'explicit' or 'crank-nicolson'");
                } else if (key == "coherence") {
                    if (value == "coherent")
                        cfg.coherence = Coherence::Coherent;
                    else if (value == "incoherent")
                        cfg.coherence = Coherence::Incoherent;
                    else
                        fail(line, "coherence must be 'coherent' or 'incoherent'");
                } else if (key == "trajectory_mode") {
                    cfg.trajectories.enabled = true;
                    if (value == "equidistant")
                        cfg.trajectories.mode = Seeding::Equidistant;
                    else if (value == "equal-flux")
                        cfg.trajectories.mode = Seeding::EqualFlux;
                    else if (value == "per-slit")
                        cfg.trajectories.mode = Seeding::PerSlitEqualCount;
                    else if (value == "none")
                        cfg.trajectories.enabled = false;
                    else
                        fail(line, "trajectory_mode must be equidistant, equal-flux, per-slit or none");
                } else if (key == "trajectory_count")
                    cfg.trajectories.count = to_int(value, line);
                else if (key == "trajectory_span")
                    cfg.trajectories.span = to_double(value, line);
                else if (key == "screen_distance")
                    cfg.screen_distance = to_double(value, line);
                else if (key == "side_screen_x") {
                    cfg.side_screen_x = to_double(value, line);
                    cfg.side_screen = true;
                } else if (key == "seed")
                    cfg.seed = static_cast<std::uint64_t>(to_double(value, line));
                else if (key == "outputs") {
                    std::stringstream items(value);
                    std::string item;
                    while (std::getline(items, item, ','))
                        cfg.outputs.push_back(parse_output(trim(item), line));
                } else
                    fail(line, "unknown [run] key '" + key + "'");
                break;
        }
    }

    for (auto& p : slits) {
        if (p.has_phase) {
            if (p.phase_t2 > p.phase_t1)
                p.slit.phase_shift = PiecewiseLinear::ramp(p.phase_t1, p.phase_t2, p.phase_final);
            else
                p.slit.phase_shift = PiecewiseLinear::constant(p.phase_final);
        }
        cfg.slits.push_back(std::move(p.slit));
    }
    validate(cfg);
    return cfg;
}

void validate(const ScenarioConfig& cfg) {
    if (!(cfg.mass > 0.0)) throw std::invalid_argument("config key 'mass': must be positive");
    if (!(cfg.wavelength > 0.0))
        throw std::invalid_argument("config key 'wavelength': must be positive");
    validate(cfg.grid);
    if (cfg.slits.empty()) throw std::invalid_argument("config: at least one [slit] required");
    for (const auto& slit : cfg.slits) ballistic::validate(slit);
    if (cfg.trajectories.enabled && cfg.trajectories.count < 1)
        throw std::invalid_argument("config key 'trajectory_count': must be positive");
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "[params]\n";
    out << "mass = " << fmt(cfg.mass) << "\n";
    out << "wavelength = " << fmt(cfg.wavelength) << "\n\n";
    out << "[grid]\n";
    out << "x_min = " << fmt(cfg.grid.x_min) << "\n";
    out << "x_max = " << fmt(cfg.grid.x_max) << "\n";
    out << "nx = " << cfg.grid.nx << "\n";
    out << "dt = " << fmt(cfg.grid.dt) << "\n";
    out << "nt = " << cfg.grid.nt << "\n\n";
    for (const auto& slit : cfg.slits) {
        out << "[slit]\n";
        out << "centre = " << fmt(slit.centre) << "\n";
        out << "sigma0 = " << fmt(slit.sigma0) << "\n";
        out << "vx = " << fmt(slit.vx) << "\n";
        out << "weight = " << fmt(slit.weight) << "\n";
        out << "transmission = " << fmt(slit.transmission) << "\n";
        const auto& pts = slit.phase_shift.points();
        if (pts.size() == 2) {
            out << "phase_shift = " << fmt(pts[1].second) << "\n";
            out << "phase_t1 = " << fmt(pts[0].first) << "\n";
            out << "phase_t2 = " << fmt(pts[1].first) << "\n";
        } else if (pts.size() == 1) {
            out << "phase_shift = " << fmt(pts[0].second) << "\n";
        }
        out << "\n";
    }
    out << "[run]\n";
    out << "scheme = " << (cfg.scheme == Scheme::Explicit ? "explicit" : "crank-nicolson") << "\n";
    out << "coherence = " << (cfg.coherence == Coherence::Coherent ? "coherent" : "incoherent")
        << "\n";
    if (cfg.trajectories.enabled) {
        const char* mode = cfg.trajectories.mode == Seeding::Equidistant   ? "equidistant"
                           : cfg.trajectories.mode == Seeding::EqualFlux   ? "equal-flux"
                                                                           : "per-slit";
        out << "trajectory_mode = " << mode << "\n";
        out << "trajectory_count = " << cfg.trajectories.count << "\n";
        if (cfg.trajectories.span > 0.0)
            out << "trajectory_span = " << fmt(cfg.trajectories.span) << "\n";
    }
    if (cfg.screen_distance > 0.0)
        out << "screen_distance = " << fmt(cfg.screen_distance) << "\n";
    if (cfg.side_screen) out << "side_screen_x = " << fmt(cfg.side_screen_x) << "\n";
    if (cfg.seed != 0) out << "seed = " << cfg.seed << "\n";
    if (!cfg.outputs.empty()) {
        out << "outputs = ";
        for (std::size_t i = 0; i < cfg.outputs.size(); ++i)
            out << (i ? ", " : "") << output_name(cfg.outputs[i]);
        out << "\n";
    }
    return out.str();
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace ballistic
