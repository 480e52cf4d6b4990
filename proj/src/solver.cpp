#include "ballistic/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ballistic/analytic.hpp"

namespace ballistic {

namespace {

constexpr double kNegativeTol = 1e-6;    // fraction of peak flagging instability
constexpr double kBoundaryTol = 1e-12;   // fraction of peak warning about a narrow domain

// D_t(t) = D^2 t / sigma0^2
double diffusion_coefficient(const SlitSpec& slit, const PhysicalParams& params, double t) {
    const double d = params.diffusion_const;
    return d * d * t / (slit.sigma0 * slit.sigma0);
}

}  // namespace

double trapezoid_mass(std::span<const double> values, double dx) {
    if (values.size() < 2) return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * dx;
}

double max_stable_dt(const GridSpec& grid, const SlitSpec& slit, const PhysicalParams& params) {
    // grid.dt plays no role here; the bound is what dt may be set to
    if (!(grid.x_max > grid.x_min) || grid.nx < 3 || grid.nt < 1)
        throw std::invalid_argument("max_stable_dt: invalid grid");
    validate(slit);
    return grid.dx() * slit.sigma0 /
           (params.diffusion_const * std::sqrt(2.0 * static_cast<double>(grid.nt)));
}

SlitField step_explicit(const SlitField& field, const SlitSpec& slit,
                        const PhysicalParams& params, const GridSpec& grid, bool allow_unstable) {
    if (static_cast<int>(field.values.size()) != grid.nx)
        throw std::invalid_argument("step_explicit: field does not match grid");
    if (!allow_unstable && grid.dt > max_stable_dt(grid, slit, params) * (1.0 + 1e-12))
        throw std::runtime_error("step_explicit: dt exceeds the stability bound");

    const double t_new = grid.t(field.t_index + 1);
    const double d = diffusion_coefficient(slit, params, t_new) * grid.dt / (grid.dx() * grid.dx());

    SlitField next;
    next.values.resize(field.values.size());
    next.t_index = field.t_index + 1;
    next.slit_id = field.slit_id;
    next.scheme = Scheme::Explicit;

    const auto& p = field.values;
    const int n = grid.nx;
    next.values[0] = p[0] + d * (2.0 * p[1] - 2.0 * p[0]);
    for (int i = 1; i < n - 1; ++i)
        next.values[i] = p[i] + d * (p[i + 1] - 2.0 * p[i] + p[i - 1]);
    next.values[n - 1] = p[n - 1] + d * (2.0 * p[n - 2] - 2.0 * p[n - 1]);
    return next;
}

std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs) {
    const std::size_t n = diag.size();
    if (n == 0 || rhs.size() != n || lower.size() != n - 1 || upper.size() != n - 1)
        throw std::invalid_argument("solve_tridiagonal: inconsistent band sizes");

    std::vector<double> c(n - 1), d(n);
    double pivot = diag[0];
    if (pivot == 0.0) throw std::runtime_error("solve_tridiagonal: singular system (zero pivot)");
    if (n > 1) c[0] = upper[0] / pivot;
    d[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = diag[i] - lower[i - 1] * c[i - 1];
        if (pivot == 0.0)
            throw std::runtime_error("solve_tridiagonal: singular system (zero pivot)");
        if (i < n - 1) c[i] = upper[i] / pivot;
        d[i] = (rhs[i] - lower[i - 1] * d[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
    return d;
}

SlitField step_crank_nicolson(const SlitField& field, const SlitSpec& slit,
                              const PhysicalParams& params, const GridSpec& grid) {
    if (static_cast<int>(field.values.size()) != grid.nx)
        throw std::invalid_argument("step_crank_nicolson: field does not match grid");

    const double t_half = grid.t(field.t_index) + 0.5 * grid.dt;
    const double d = diffusion_coefficient(slit, params, t_half) * grid.dt / (grid.dx() * grid.dx());

    const int n = grid.nx;
    std::vector<double> lower(n - 1, -d), diag(n, 2.0 + 2.0 * d), upper(n - 1, -d), rhs(n);
    upper[0] = -2.0 * d;       // mirrored left node
    lower[n - 2] = -2.0 * d;   // mirrored right node

    const auto& p = field.values;
    rhs[0] = (2.0 - 2.0 * d) * p[0] + 2.0 * d * p[1];
    for (int i = 1; i < n - 1; ++i)
        rhs[i] = d * p[i - 1] + (2.0 - 2.0 * d) * p[i] + d * p[i + 1];
    rhs[n - 1] = 2.0 * d * p[n - 2] + (2.0 - 2.0 * d) * p[n - 1];

    SlitField next;
    next.values = solve_tridiagonal(lower, diag, upper, rhs);
    next.t_index = field.t_index + 1;
    next.slit_id = field.slit_id;
    next.scheme = Scheme::CrankNicolson;
    return next;
}

SlitField initial_field(const SlitSpec& slit, const PhysicalParams& params, const GridSpec& grid,
                        Scheme scheme, int slit_id) {
    validate(slit);
    validate(grid);
    SlitField f;
    f.values.resize(grid.nx);
    f.t_index = 0;
    f.slit_id = slit_id;
    f.scheme = scheme;
    // co-moving frame: drift is applied at sampling time
    SlitSpec centred = slit;
    centred.vx = 0.0;
    for (int i = 0; i < grid.nx; ++i)
        f.values[i] = gaussian_density(centred, params, grid.x(i), 0.0);
    return f;
}

SlitEvolver::SlitEvolver(SlitSpec slit, PhysicalParams params, GridSpec grid, Scheme scheme,
                         int slit_id, bool allow_unstable)
    : slit_(std::move(slit)),
      params_(params),
      grid_(grid),
      scheme_(scheme),
      allow_unstable_(allow_unstable),
      field_(initial_field(slit_, params_, grid_, scheme, slit_id)) {
    inspect();
}

void SlitEvolver::advance() {
    field_ = scheme_ == Scheme::Explicit
                 ? step_explicit(field_, slit_, params_, grid_, allow_unstable_)
                 : step_crank_nicolson(field_, slit_, params_, grid_);
    inspect();
}

void SlitEvolver::inspect() {
    const auto [lo, hi] = std::minmax_element(field_.values.begin(), field_.values.end());
    const double peak = *hi;
    if (*lo < -kNegativeTol * peak) unstable_ = true;
    const double edge = std::max(field_.values.front(), field_.values.back());
    if (edge > kBoundaryTol * peak) domain_warning_ = true;
}

SlitEvolution evolve_slit(const SlitSpec& slit, const PhysicalParams& params, const GridSpec& grid,
                          Scheme scheme, bool allow_unstable) {
    SlitEvolver evolver(slit, params, grid, scheme, 0, allow_unstable);
    SlitEvolution out;
    out.frames.reserve(grid.nt);
    out.frames.push_back(evolver.field());
    for (int k = 1; k < grid.nt; ++k) {
        evolver.advance();
        out.frames.push_back(evolver.field());
    }
    out.unstable = evolver.unstable();
    out.domain_warning = evolver.domain_warning();
    return out;
}

}  // namespace ballistic
