#pragma once

#include <span>
#include <vector>

#include "ballistic/phys.hpp"

namespace ballistic {

enum class Scheme { Explicit, CrankNicolson };

// One slit's density on the grid at a single time node. The field is stored
// in the slit's co-moving frame (pure spreading, centred at the slit);
// transverse drift vx enters only when channels are assembled.
struct SlitField {
    std::vector<double> values;  // P, 1/m
    int t_index = 0;
    int slit_id = 0;
    Scheme scheme = Scheme::CrankNicolson;
};

// Largest explicit step for a run of nt time nodes:
//   dt_max = dx sigma0 / (D sqrt(2 T_max)),  T_max = nt.
double max_stable_dt(const GridSpec& grid, const SlitSpec& slit, const PhysicalParams& params);

// Forward step of the coupled-map lattice with the diffusion coefficient
// taken at the new node, D_{T+1} = D^2 (T+1) dt / sigma0^2; mirrored end
// nodes. Refuses dt above the stability bound unless allow_unstable is set.
SlitField step_explicit(const SlitField& field, const SlitSpec& slit,
                        const PhysicalParams& params, const GridSpec& grid,
                        bool allow_unstable = false);

// Thomas elimination for a tridiagonal system; lower/upper hold n-1 entries.
// Throws std::runtime_error on a vanishing pivot.
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

// Implicit half-averaged step, unconditionally stable. d_t uses the
// diffusion coefficient at the half node T+1/2; both boundary rows carry the
// doubled off-diagonal of the mirrored nodes.
SlitField step_crank_nicolson(const SlitField& field, const SlitSpec& slit,
                              const PhysicalParams& params, const GridSpec& grid);

struct SlitEvolution {
    std::vector<SlitField> frames;  // nt frames, t_index 0 .. nt-1
    bool unstable = false;          // some node dropped below -1e-6 * peak
    bool domain_warning = false;    // boundary density above 1e-12 * peak
};

// Evolve one slit from the initial Gaussian through all nt nodes. Each slit
// carries its own D_t via its own sigma0.
SlitEvolution evolve_slit(const SlitSpec& slit, const PhysicalParams& params,
                          const GridSpec& grid, Scheme scheme, bool allow_unstable = false);

// Initial frame, P(x, 0) centred on the slit.
SlitField initial_field(const SlitSpec& slit, const PhysicalParams& params, const GridSpec& grid,
                        Scheme scheme, int slit_id = 0);

// Stepwise driver used when full per-slit histories would be too large.
class SlitEvolver {
public:
    SlitEvolver(SlitSpec slit, PhysicalParams params, GridSpec grid, Scheme scheme, int slit_id,
                bool allow_unstable = false);

    const SlitField& field() const { return field_; }
    const SlitSpec& slit() const { return slit_; }
    void advance();  // one time step
    bool unstable() const { return unstable_; }
    bool domain_warning() const { return domain_warning_; }

private:
    void inspect();

    SlitSpec slit_;
    PhysicalParams params_;
    GridSpec grid_;
    Scheme scheme_;
    bool allow_unstable_;
    SlitField field_;
    bool unstable_ = false;
    bool domain_warning_ = false;
};

// Trapezoid integral of a sampled field over the grid.
double trapezoid_mass(std::span<const double> values, double dx);

}  // namespace ballistic
