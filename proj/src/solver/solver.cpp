#include "dlv/solver/solver.hpp"

#include "dlv/errors.hpp"
#include "dlv/solutions/field.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

namespace dlv {

namespace {

double diffusivity(const SystemParams& p, int i) { return i == 0 ? p.d1 : (i == 1 ? p.d2 : p.d3); }

std::vector<double>& comp(FieldState& s, int i) { return i == 0 ? s.u : (i == 1 ? s.v : s.w); }
const std::vector<double>& comp(const FieldState& s, int i) { return i == 0 ? s.u : (i == 1 ? s.v : s.w); }

// a * du/dx for velocity component a, central or upwind.
inline double advect(double a, double um, double u0, double up, double h, Convection scheme)
{
    if (scheme == Convection::central) return a * (up - um) / (2.0 * h);
    return a > 0.0 ? a * (u0 - um) / h : a * (up - u0) / h;
}

// y + c * k, elementwise.
void axpy(const FieldState& y, double c, const FieldState& k, FieldState& out)
{
    for (int i = 0; i < 3; ++i) {
        const auto& a = comp(y, i);
        const auto& b = comp(k, i);
        auto& o = comp(out, i);
        o.resize(a.size());
        for (std::size_t n = 0; n < a.size(); ++n) o[n] = a[n] + c * b[n];
    }
}

} // namespace

void Grid2D::validate(bool radial) const
{
    if (nx < 8 || (!radial && ny < 8)) throw ParameterError("grid needs at least 8 nodes per direction");
    if (!(x.hi > x.lo) || (!radial && !(y.hi > y.lo))) throw ParameterError("grid ranges must be non-empty");
    if (radial && !(x.lo > 0.0)) throw ParameterError("radial grid must keep r > 0");
}

bool FieldState::finite() const
{
    for (const auto* a : {&u, &v, &w})
        for (double x : *a)
            if (!std::isfinite(x)) return false;
    return true;
}

std::string to_string(Convection c) { return c == Convection::upwind ? "upwind" : "central"; }

std::optional<Convection> convection_from_string(const std::string& s)
{
    if (s == "central") return Convection::central;
    if (s == "upwind") return Convection::upwind;
    return std::nullopt;
}

Discretization::Discretization(const SystemSpec& spec, Grid2D grid, Convection scheme)
    : spec_(spec), grid_(grid), scheme_(scheme)
{
    spec.params.validate();
    switch (spec.kind) {
    case SystemKind::pde_full:
        if (!spec.stream) throw ParameterError("pde_full needs a stream function");
        k_ = spec.params.k;
        break;
    case SystemKind::pde_rotated_free: k_ = 1.0; break;
    case SystemKind::pde_radial:
        radial_ = true;
        k_ = 1.0;
        break;
    default: throw ParameterError("the solver handles pde_full, pde_rotated_free and pde_radial");
    }
    grid_.validate(radial_);
    for (std::size_t n = 0; n < size(); ++n)
        if (on_boundary(n)) boundary_.push_back(n);

    if (radial_) {
        for (int s = 0; s < 3; ++s) {
            c_[s].resize(grid_.nx);
            for (int i = 0; i < grid_.nx; ++i) {
                c_[s][i] = (diffusivity(spec.params, s) + spec.params.alpha) / grid_.x_at(i);
                max_speed_ = std::max(max_speed_, std::abs(c_[s][i]));
            }
        }
        return;
    }
    a_.assign(size(), 0.0);
    b_.assign(size(), 0.0);
    for (int j = 0; j < grid_.ny && spec.kind == SystemKind::pde_full; ++j)
        for (int i = 0; i < grid_.nx; ++i) {
            const double x = grid_.x_at(i), y = grid_.y_at(j);
            if (!spec.stream->valid(x, y)) throw ParameterError("stream function singular on the grid");
            const Jet2 psi = spec.stream->jet(x, y);
            const auto n = grid_.index(i, j);
            a_[n] = psi.d_y();
            b_[n] = -psi.d_x();
            max_speed_ = std::max(max_speed_, std::hypot(a_[n], b_[n]));
        }
    for (auto* v : {&ax_, &by_, &ap_, &am_, &bp_, &bm_}) v->resize(size());
    for (std::size_t n = 0; n < size(); ++n) {
        ax_[n] = a_[n] / (2.0 * grid_.hx());
        by_[n] = b_[n] / (2.0 * grid_.hy());
        ap_[n] = std::max(a_[n], 0.0) / grid_.hx();
        am_[n] = std::min(a_[n], 0.0) / grid_.hx();
        bp_[n] = std::max(b_[n], 0.0) / grid_.hy();
        bm_[n] = std::min(b_[n], 0.0) / grid_.hy();
    }
}

bool Discretization::on_boundary(std::size_t n) const
{
    if (radial_) return n == 0 || n + 1 == static_cast<std::size_t>(grid_.nx);
    const int i = static_cast<int>(n % grid_.nx), j = static_cast<int>(n / grid_.nx);
    return i == 0 || j == 0 || i == grid_.nx - 1 || j == grid_.ny - 1;
}

Point Discretization::node(std::size_t n, double t) const
{
    if (radial_) return {t, grid_.x_at(static_cast<int>(n)), 0.0};
    return {t, grid_.x_at(static_cast<int>(n % grid_.nx)), grid_.y_at(static_cast<int>(n / grid_.nx))};
}

FieldState Discretization::rhs(const FieldState& s) const
{
    FieldState out;
    rhs(s, out);
    return out;
}

void Discretization::rhs(const FieldState& s, FieldState& out) const
{
    const std::size_t N = size();
    out.time = s.time;
    for (int c = 0; c < 3; ++c) {
        auto& o = comp(out, c);
        if (o.size() != N) o.assign(N, 0.0);
        for (std::size_t n : boundary_) o[n] = 0.0;
    }
    const double sign[3] = {-1.0, -1.0, 1.0};

    if (radial_) {
        const double h = grid_.hx();
        for (int c = 0; c < 3; ++c) {
            const double d = diffusivity(spec_.params, c);
            const auto& q = comp(s, c);
            auto& o = comp(out, c);
            for (int i = 1; i + 1 < grid_.nx; ++i) {
                const double lap = (q[i + 1] - 2.0 * q[i] + q[i - 1]) / (h * h);
                // + c u_r is transport with velocity -c.
                const double drift = -advect(-c_[c][i], q[i - 1], q[i], q[i + 1], h, scheme_);
                o[i] = d * lap + drift + sign[c] * k_ * s.u[i] * s.v[i];
            }
        }
        return;
    }

    const int nx = grid_.nx, ny = grid_.ny;
    const double hx = grid_.hx(), hy = grid_.hy();
    const double ihx2 = 1.0 / (hx * hx), ihy2 = 1.0 / (hy * hy);
    const double* u = s.u.data();
    const double* v = s.v.data();
    for (int c = 0; c < 3; ++c) {
        const double d = diffusivity(spec_.params, c);
        const double kr = sign[c] * k_;
        const double* q = comp(s, c).data();
        double* o = comp(out, c).data();
        for (int j = 1; j < ny - 1; ++j) {
            const std::size_t row = static_cast<std::size_t>(j) * nx;
            if (scheme_ == Convection::central) {
                const double* ax = ax_.data() + row;
                const double* by = by_.data() + row;
                for (std::size_t n = row + 1; n < row + nx - 1; ++n) {
                    const double q0 = q[n];
                    const double lap = (q[n + 1] + q[n - 1] - 2.0 * q0) * ihx2 + (q[n + nx] + q[n - nx] - 2.0 * q0) * ihy2;
                    const double conv = ax[n - row] * (q[n + 1] - q[n - 1]) + by[n - row] * (q[n + nx] - q[n - nx]);
                    o[n] = d * lap - conv + kr * u[n] * v[n];
                }
            } else {
                // Backward differences carry the positive velocity parts, forward ones the negative.
                const double *ap = ap_.data(), *am = am_.data(), *bp = bp_.data(), *bm = bm_.data();
                for (std::size_t n = row + 1; n < row + nx - 1; ++n) {
                    const double q0 = q[n];
                    const double lap = (q[n + 1] + q[n - 1] - 2.0 * q0) * ihx2 + (q[n + nx] + q[n - nx] - 2.0 * q0) * ihy2;
                    const double conv = ap[n] * (q0 - q[n - 1]) + am[n] * (q[n + 1] - q0) + bp[n] * (q0 - q[n - nx]) +
                                        bm[n] * (q[n + nx] - q0);
                    o[n] = d * lap - conv + kr * u[n] * v[n];
                }
            }
        }
    }
}

double Discretization::stable_dt(double cfl) const
{
    if (!(cfl > 0.0)) throw ParameterError("cfl must be positive");
    const auto& p = spec_.params;
    const double h = radial_ ? grid_.hx() : std::min(grid_.hx(), grid_.hy());
    double dt = cfl * h * h / (4.0 * std::max({p.d1, p.d2, p.d3}));
    if (max_speed_ > 0.0) dt = std::min(dt, h / max_speed_);
    return dt;
}

BoundaryClosure exact_boundary(const Discretization& disc, const Field3& exact)
{
    std::vector<std::size_t> nodes;
    for (std::size_t n = 0; n < disc.size(); ++n)
        if (disc.on_boundary(n)) nodes.push_back(n);
    return [&disc, &exact, nodes](FieldState& s) {
        for (std::size_t n : nodes) {
            const auto e = exact.values(disc.node(n, s.time));
            s.u[n] = e[0];
            s.v[n] = e[1];
            s.w[n] = e[2];
        }
    };
}

BoundaryClosure no_flux_boundary(const Discretization& disc)
{
    const auto& g = disc.grid();
    std::vector<std::pair<std::size_t, std::size_t>> copies;
    for (std::size_t n = 0; n < disc.size(); ++n) {
        if (!disc.on_boundary(n)) continue;
        if (disc.radial()) {
            copies.emplace_back(n, n == 0 ? 1 : n - 1);
            continue;
        }
        const int i = static_cast<int>(n % g.nx), j = static_cast<int>(n / g.nx);
        copies.emplace_back(n, g.index(std::clamp(i, 1, g.nx - 2), std::clamp(j, 1, g.ny - 2)));
    }
    return [copies](FieldState& s) {
        for (auto [to, from] : copies) {
            s.u[to] = s.u[from];
            s.v[to] = s.v[from];
            s.w[to] = s.w[from];
        }
    };
}

namespace {

struct Workspace {
    FieldState k1, k2, k3, k4, y;
};

// RK4 in place, reusing the stage buffers between calls.
void advance(const Discretization& disc, FieldState& s, double dt, const BoundaryClosure& bc)
{
    thread_local Workspace ws;
    auto& [k1, k2, k3, k4, y] = ws;
    const double t = s.time;
    disc.rhs(s, k1);
    axpy(s, 0.5 * dt, k1, y);
    y.time = t + 0.5 * dt;
    if (bc) bc(y);
    disc.rhs(y, k2);
    axpy(s, 0.5 * dt, k2, y);
    if (bc) bc(y);
    disc.rhs(y, k3);
    axpy(s, dt, k3, y);
    y.time = t + dt;
    if (bc) bc(y);
    disc.rhs(y, k4);

    s.time = t + dt;
    for (int c = 0; c < 3; ++c) {
        const double *b1 = comp(k1, c).data(), *b2 = comp(k2, c).data(), *b3 = comp(k3, c).data(),
                     *b4 = comp(k4, c).data();
        auto& o = comp(s, c);
        for (std::size_t n = 0; n < o.size(); ++n) o[n] += dt / 6.0 * (b1[n] + 2.0 * (b2[n] + b3[n]) + b4[n]);
    }
    if (bc) bc(s);
    if (!s.finite()) throw SolverError("solver state became non-finite (time step above the stability bound?)");
}

} // namespace

FieldState step(const Discretization& disc, const FieldState& s, double dt, const BoundaryClosure& bc)
{
    FieldState out = s;
    advance(disc, out, dt, bc);
    return out;
}

FieldState sample_state(const Discretization& disc, const Field3& f, double t)
{
    FieldState s;
    s.time = t;
    const std::size_t N = disc.size();
    s.u.resize(N);
    s.v.resize(N);
    s.w.resize(N);
    for (std::size_t n = 0; n < N; ++n) {
        const auto e = f.values(disc.node(n, t));
        s.u[n] = e[0];
        s.v[n] = e[1];
        s.w[n] = e[2];
    }
    return s;
}

ErrorNorms error_norms(const Discretization& disc, const FieldState& s, const Field3& exact)
{
    ErrorNorms e;
    const auto ref = sample_state(disc, exact, s.time);
    const double cell = disc.radial() ? disc.grid().hx() : disc.grid().hx() * disc.grid().hy();
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) {
        const auto &a = comp(s, c), &b = comp(ref, c);
        for (std::size_t n = 0; n < a.size(); ++n) {
            const double d = std::abs(a[n] - b[n]);
            e.linf = std::max(e.linf, d);
            sum += d * d;
        }
    }
    e.l2 = std::sqrt(sum * cell);
    return e;
}

SimulationResult simulate(const SimulationConfig& cfg)
{
    if (!(cfg.t_end > cfg.t_start)) throw ParameterError("simulate needs t_end > t_start");
    if (cfg.frames < 1) throw ParameterError("simulate needs at least one frame");
    if (!cfg.exact.field) throw ParameterError("simulate needs an exact solution");
    const Discretization disc(cfg.exact.target, cfg.grid, cfg.scheme);
    const Field3& exact = *cfg.exact.field;
    for (double t : {cfg.t_start, 0.5 * (cfg.t_start + cfg.t_end), cfg.t_end})
        for (std::size_t n = 0; n < disc.size(); ++n)
            if (!exact.valid(disc.node(n, t), 0.0))
                throw ParameterError("the exact solution is singular inside the simulation box");

    SimulationResult res;
    res.grid = disc.grid();
    res.radial = disc.radial();
    const double span = cfg.t_end - cfg.t_start;
    res.steps = std::max(1L, static_cast<long>(std::ceil(span / disc.stable_dt(cfg.cfl))));
    res.steps = (res.steps + cfg.frames - 1) / cfg.frames * cfg.frames;
    res.dt = span / res.steps;
    const long per_frame = res.steps / cfg.frames;

    const auto bc = cfg.no_flux ? no_flux_boundary(disc) : exact_boundary(disc, exact);
    FieldState s = sample_state(disc, exact, cfg.t_start);
    if (cfg.no_flux) bc(s);
    for (long n = 1; n <= res.steps; ++n) {
        advance(disc, s, res.dt, bc);
        if (n == res.steps) s.time = cfg.t_end;
        if (n % per_frame == 0) res.frames.push_back(s);
    }
    res.error = error_norms(disc, s, exact);
    return res;
}

ConvergenceReport convergence_study(const SimulationConfig& config, int levels)
{
    if (levels < 3) throw ParameterError("convergence_study needs at least 3 levels");
    if (config.no_flux) throw ParameterError("convergence studies need exact boundary traces");
    ConvergenceReport rep;
    SimulationConfig cfg = config;
    cfg.frames = 1;
    for (int l = 0; l < levels; ++l) {
        const auto r = simulate(cfg);
        rep.levels.push_back({cfg.grid.nx, cfg.grid.ny, r.dt, r.steps, r.error});
        cfg.grid.nx = 2 * (cfg.grid.nx - 1) + 1;
        cfg.grid.ny = 2 * (cfg.grid.ny - 1) + 1;
    }
    for (std::size_t l = 0; l + 1 < rep.levels.size(); ++l) {
        const auto &a = rep.levels[l].error, &b = rep.levels[l + 1].error;
        rep.orders_linf.push_back(std::log2(a.linf / b.linf));
        rep.orders_l2.push_back(std::log2(a.l2 / b.l2));
    }
    return rep;
}

ExactSolution heat_kernel_solution(const SystemParams& params, double tau, double x0, double y0)
{
    params.validate();
    if (!(tau > 0.0)) throw ParameterError("heat kernel needs tau > 0");
    ExactSolution out;
    out.label = "heat kernel";
    out.params = params;
    out.target.kind = SystemKind::pde_full;
    out.target.params = params;
    out.target.stream = std::make_shared<StreamFunction>(
        StreamFunction::custom_formula("0", [](auto x, auto) { return 0.0 * x; }));
    const double d1 = params.d1, d3 = params.d3;
    auto f = [=](auto t, auto x, auto y) {
        using T = decltype(x);
        const T r2 = (x - x0) * (x - x0) + (y - y0) * (y - y0);
        auto kernel = [&](double d) {
            const T s = 4.0 * d * (t + tau);
            return exp(-r2 / s) / (std::numbers::pi * s);
        };
        return Triple<T>{kernel(d1), T(0.0), kernel(d3)};
    };
    out.field = make_formula_field(f, [tau](const Point& p, double) { return p.t + tau > 0.0; });
    out.domain = {42, 500, {0.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}, 0.0};
    return out;
}

void write_csv(std::ostream& os, const Discretization& disc, const std::vector<FieldState>& frames)
{
    os << "t,x,y,u,v,w\n" << std::setprecision(15);
    for (const auto& f : frames)
        for (std::size_t n = 0; n < disc.size(); ++n) {
            const Point p = disc.node(n, f.time);
            os << p.t << ',' << p.x << ',' << p.y << ',' << f.u[n] << ',' << f.v[n] << ',' << f.w[n] << '\n';
        }
}

} // namespace dlv
