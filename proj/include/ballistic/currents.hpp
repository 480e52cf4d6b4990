#pragma once

#include <vector>

#include "ballistic/phys.hpp"
#include "ballistic/solver.hpp"

namespace ballistic {

enum class Coherence { Coherent, Incoherent };

// Per-slit channel grids at one instant: weighted amplitudes R_i, convective
// velocities v_i, osmotic velocities u_i and the channel phases psi_i whose
// pairwise differences phi_ij = psi_j - psi_i enter all interference terms.
struct ChannelSet {
    GridSpec grid;
    double t = 0.0;
    std::vector<std::vector<double>> amplitude;   // R_i = sqrt(weight a P_i)
    std::vector<std::vector<double>> convective;  // v_i, m/s
    std::vector<std::vector<double>> osmotic;     // u_i, m/s
    std::vector<std::vector<double>> phase;       // psi_i, rad

    int n_slits() const { return static_cast<int>(amplitude.size()); }
    double pair_phase(int i, int j, int node) const {
        return phase[j][node] - phase[i][node];
    }
};

// Combined fields at one instant.
struct CombinedFrame {
    int t_index = 0;
    double t = 0.0;
    std::vector<double> p_tot;  // 1/m
    std::vector<double> j_tot;  // 1/s
    std::vector<double> v_tot;  // m/s
};

// Assemble channels from per-slit numeric fields at a common time node.
// Fields are sampled into the lab frame (shifted by vx t); u_i comes from
// central differences of R_i with the closed form as fallback where R_i
// underflows. Throws on mismatched grids or time nodes.
ChannelSet build_channels(const std::vector<SlitField>& fields,
                          const std::vector<SlitSpec>& slits, const PhysicalParams& params,
                          const GridSpec& grid);

// Channel grids in the order w_1 = v_1, w_2 = u_1, w_3 = v_2, ...:
//   P_{v_i} = R_i^2 + sum_{j != i} R_i R_j cos phi_ij
//   P_{u_i} = sum_{j != i} R_i R_j sin phi_ij   (may be negative)
std::vector<std::vector<double>> relational_intensities(const ChannelSet& ch);

// Coherent: squared coherent amplitude sum (perfect-square form of the
// pairwise cosine law). Incoherent: sum of R_i^2.
std::vector<double> total_intensity(const ChannelSet& ch, Coherence coherence);

// J_tot = sum_i ( R_i^2 v_i + sum_{j>i} R_i R_j [ (v_i+v_j) cos phi_ij
//        + (u_i-u_j) sin phi_ij ] ); incoherent runs keep only the
//        (u_i-u_j) family with the sine factor set to one.
std::vector<double> total_current(const ChannelSet& ch, Coherence coherence);

// v_tot = J/P where P exceeds 1e-30 * peak, nearest valid value elsewhere.
// Throws std::runtime_error if the density vanishes everywhere.
std::vector<double> emergent_velocity(const std::vector<double>& p_tot,
                                      const std::vector<double>& j_tot);

// J_e = sum_{i<j} R_i R_j (u_i - u_j) sin phi_ij. Requires >= 2 slits.
std::vector<double> entangling_current(const ChannelSet& ch);

// Same grid through the (hbar/m)(R_i dR_j - R_j dR_i) sin phi_ij route with
// numeric derivatives; used as the cross-check of entangling_current.
std::vector<double> entangling_current_gradient_form(const ChannelSet& ch,
                                                     const PhysicalParams& params);

CombinedFrame combine(const ChannelSet& ch, Coherence coherence, int t_index);

}  // namespace ballistic
