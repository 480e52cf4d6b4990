#include "ballistic/currents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ballistic/analytic.hpp"

namespace ballistic {

namespace {

constexpr double kAmplitudeFloor = 1e-300;  // below this R, fall back to closed forms
constexpr double kDensityFloor = 1e-30;     // fraction of peak below which v_tot is propagated

// Linear interpolation of a sampled field at x; zero outside the grid.
double sample_shifted(const std::vector<double>& values, const GridSpec& grid, double x) {
    const double s = (x - grid.x_min) / grid.dx();
    if (s <= 0.0) return s < 0.0 ? 0.0 : values.front();
    const auto n = static_cast<int>(values.size());
    if (s >= n - 1) return s > n - 1 ? 0.0 : values.back();
    const int i = static_cast<int>(s);
    const double f = s - i;
    return values[i] * (1.0 - f) + values[i + 1] * f;
}

}  // namespace

ChannelSet build_channels(const std::vector<SlitField>& fields,
                          const std::vector<SlitSpec>& slits, const PhysicalParams& params,
                          const GridSpec& grid) {
    if (fields.size() != slits.size() || fields.empty())
        throw std::invalid_argument("build_channels: one field per slit required");
    const int t_index = fields.front().t_index;
    for (const auto& f : fields) {
        if (static_cast<int>(f.values.size()) != grid.nx)
            throw std::invalid_argument("build_channels: field does not match grid");
        if (f.t_index != t_index)
            throw std::invalid_argument("build_channels: fields at different time nodes");
    }

    const double t = grid.t(t_index);
    const int n = grid.nx;
    const int ns = static_cast<int>(slits.size());

    ChannelSet ch;
    ch.grid = grid;
    ch.t = t;
    ch.amplitude.assign(ns, std::vector<double>(n));
    ch.convective.assign(ns, std::vector<double>(n));
    ch.osmotic.assign(ns, std::vector<double>(n));
    ch.phase.assign(ns, std::vector<double>(n));

    for (int s = 0; s < ns; ++s) {
        const SlitSpec& slit = slits[s];
        validate(slit);
        const double shift = slit.vx * t;
        const double scale = slit.weight * slit.transmission;
        auto& amp = ch.amplitude[s];
        for (int i = 0; i < n; ++i) {
            const double p = shift == 0.0 ? fields[s].values[i]
                                          : sample_shifted(fields[s].values, grid, grid.x(i) - shift);
            amp[i] = std::sqrt(scale * std::max(p, 0.0));
        }
        const double dphi = slit.phase_shift(t);
        for (int i = 0; i < n; ++i) {
            const double x = grid.x(i);
            ch.convective[s][i] = kinematic_fields(slit, params, x, t).first;
            ch.phase[s][i] = phase_of(slit, params, 0.0, x, t) + dphi;
        }
        // u_i = -(hbar/m) dR/dx / R via central differences
        const double inv2dx = 1.0 / (2.0 * grid.dx());
        const double c = -params.hbar / params.mass;
        for (int i = 0; i < n; ++i) {
            const double r = amp[i];
            if (r < kAmplitudeFloor) {
                ch.osmotic[s][i] = osmotic_velocity(slit, params, grid.x(i), t);
                continue;
            }
            double dr;
            if (i == 0)
                dr = (amp[1] - amp[0]) / grid.dx();
            else if (i == n - 1)
                dr = (amp[n - 1] - amp[n - 2]) / grid.dx();
            else
                dr = (amp[i + 1] - amp[i - 1]) * inv2dx;
            ch.osmotic[s][i] = c * dr / r;
        }
    }
    return ch;
}

namespace {

// per-slit cos/sin caches; pairwise factors follow from the angle identities
struct PhaseTrig {
    std::vector<std::vector<double>> cs, sn;
    explicit PhaseTrig(const ChannelSet& ch) {
        const int ns = ch.n_slits();
        const int n = ch.grid.nx;
        cs.assign(ns, std::vector<double>(n));
        sn.assign(ns, std::vector<double>(n));
        for (int i = 0; i < ns; ++i)
            for (int k = 0; k < n; ++k) {
                cs[i][k] = std::cos(ch.phase[i][k]);
                sn[i][k] = std::sin(ch.phase[i][k]);
            }
    }
    // cos(psi_j - psi_i), sin(psi_j - psi_i)
    double cos_ij(int i, int j, int k) const { return cs[i][k] * cs[j][k] + sn[i][k] * sn[j][k]; }
    double sin_ij(int i, int j, int k) const { return sn[j][k] * cs[i][k] - cs[j][k] * sn[i][k]; }
};

}  // namespace

std::vector<std::vector<double>> relational_intensities(const ChannelSet& ch) {
    const int ns = ch.n_slits();
    const int n = ch.grid.nx;
    const PhaseTrig trig(ch);
    std::vector<std::vector<double>> out(2 * ns, std::vector<double>(n, 0.0));
    for (int i = 0; i < ns; ++i) {
        auto& pv = out[2 * i];
        auto& pu = out[2 * i + 1];
        for (int k = 0; k < n; ++k) {
            const double ri = ch.amplitude[i][k];
            double v_acc = ri * ri;
            double u_acc = 0.0;
            for (int j = 0; j < ns; ++j) {
                if (j == i) continue;
                const double cross = ri * ch.amplitude[j][k];
                v_acc += cross * trig.cos_ij(i, j, k);
                u_acc += cross * trig.sin_ij(i, j, k);
            }
            pv[k] = v_acc;
            pu[k] = u_acc;
        }
    }
    return out;
}

std::vector<double> total_intensity(const ChannelSet& ch, Coherence coherence) {
    const int ns = ch.n_slits();
    const int n = ch.grid.nx;
    std::vector<double> p(n, 0.0);
    if (coherence == Coherence::Incoherent) {
        for (int i = 0; i < ns; ++i)
            for (int k = 0; k < n; ++k) p[k] += ch.amplitude[i][k] * ch.amplitude[i][k];
        return p;
    }
    for (int k = 0; k < n; ++k) {
        double re = 0.0, im = 0.0;
        for (int i = 0; i < ns; ++i) {
            re += ch.amplitude[i][k] * std::cos(ch.phase[i][k]);
            im += ch.amplitude[i][k] * std::sin(ch.phase[i][k]);
        }
        p[k] = re * re + im * im;
    }
    return p;
}

std::vector<double> total_current(const ChannelSet& ch, Coherence coherence) {
    const int ns = ch.n_slits();
    const int n = ch.grid.nx;
    std::vector<double> j(n, 0.0);
    const bool coherent = coherence == Coherence::Coherent;
    const PhaseTrig trig(ch);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int a = 0; a < ns; ++a) {
            const double ra = ch.amplitude[a][k];
            acc += ra * ra * ch.convective[a][k];
            for (int b = a + 1; b < ns; ++b) {
                const double cross = ra * ch.amplitude[b][k];
                const double du = ch.osmotic[a][k] - ch.osmotic[b][k];
                if (coherent) {
                    acc += cross *
                           ((ch.convective[a][k] + ch.convective[b][k]) * trig.cos_ij(a, b, k) +
                            du * trig.sin_ij(a, b, k));
                } else {
                    acc += cross * du;
                }
            }
        }
        j[k] = acc;
    }
    return j;
}

std::vector<double> emergent_velocity(const std::vector<double>& p_tot,
                                      const std::vector<double>& j_tot) {
    if (p_tot.size() != j_tot.size() || p_tot.empty())
        throw std::invalid_argument("emergent_velocity: grids must share shape");
    const double peak = *std::max_element(p_tot.begin(), p_tot.end());
    if (!(peak > 0.0)) throw std::runtime_error("emergent_velocity: degenerate density field");
    const double floor = kDensityFloor * peak;
    const int n = static_cast<int>(p_tot.size());
    std::vector<double> v(n);
    std::vector<char> valid(n, 0);
    for (int i = 0; i < n; ++i) {
        if (p_tot[i] > floor) {
            v[i] = j_tot[i] / p_tot[i];
            valid[i] = 1;
        }
    }
    // nearest valid node on each side, then pick the closer one
    std::vector<int> left(n, -1), right(n, -1);
    for (int i = 0, last = -1; i < n; ++i) {
        if (valid[i]) last = i;
        left[i] = last;
    }
    for (int i = n - 1, next = -1; i >= 0; --i) {
        if (valid[i]) next = i;
        right[i] = next;
    }
    for (int i = 0; i < n; ++i) {
        if (valid[i]) continue;
        const int l = left[i], r = right[i];
        if (l < 0)
            v[i] = v[r];
        else if (r < 0)
            v[i] = v[l];
        else
            v[i] = (i - l <= r - i) ? v[l] : v[r];
    }
    return v;
}

std::vector<double> entangling_current(const ChannelSet& ch) {
    const int ns = ch.n_slits();
    if (ns < 2) throw std::invalid_argument("entangling_current: at least two slits required");
    const int n = ch.grid.nx;
    const PhaseTrig trig(ch);
    std::vector<double> je(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int a = 0; a < ns; ++a)
            for (int b = a + 1; b < ns; ++b)
                acc += ch.amplitude[a][k] * ch.amplitude[b][k] *
                       (ch.osmotic[a][k] - ch.osmotic[b][k]) * trig.sin_ij(a, b, k);
        je[k] = acc;
    }
    return je;
}

std::vector<double> entangling_current_gradient_form(const ChannelSet& ch,
                                                     const PhysicalParams& params) {
    const int ns = ch.n_slits();
    if (ns < 2)
        throw std::invalid_argument("entangling_current_gradient_form: at least two slits required");
    const int n = ch.grid.nx;
    const double inv2dx = 1.0 / (2.0 * ch.grid.dx());
    const double c = params.hbar / params.mass;

    auto gradient = [&](const std::vector<double>& r, int k) {
        if (k == 0) return (r[1] - r[0]) * 2.0 * inv2dx;
        if (k == n - 1) return (r[n - 1] - r[n - 2]) * 2.0 * inv2dx;
        return (r[k + 1] - r[k - 1]) * inv2dx;
    };

    std::vector<double> je(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int a = 0; a < ns; ++a)
            for (int b = a + 1; b < ns; ++b) {
                const double term = ch.amplitude[a][k] * gradient(ch.amplitude[b], k) -
                                    ch.amplitude[b][k] * gradient(ch.amplitude[a], k);
                acc += c * term * std::sin(ch.pair_phase(a, b, k));
            }
        je[k] = acc;
    }
    return je;
}

CombinedFrame combine(const ChannelSet& ch, Coherence coherence, int t_index) {
    CombinedFrame frame;
    frame.t_index = t_index;
    frame.t = ch.t;
    frame.p_tot = total_intensity(ch, coherence);
    frame.j_tot = total_current(ch, coherence);
    frame.v_tot = emergent_velocity(frame.p_tot, frame.j_tot);
    return frame;
}

}  // namespace ballistic
