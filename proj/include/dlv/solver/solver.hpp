#pragma once

#include "dlv/numerics/sampling.hpp"
#include "dlv/residual/system.hpp"
#include "dlv/solutions/catalog.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dlv {

/// Uniform node grid including the boundary. Nodes are stored row-major:
/// index(i, j) = j * nx + i with i along x. Radial problems use the x
/// range as the r interval and ignore ny.
struct Grid2D {
    int nx = 33;
    int ny = 33;
    Range x{0.0, 1.0};
    Range y{0.0, 1.0};

    double hx() const { return (x.hi - x.lo) / (nx - 1); }
    double hy() const { return (y.hi - y.lo) / (ny - 1); }
    double x_at(int i) const { return x.lo + i * hx(); }
    double y_at(int j) const { return y.lo + j * hy(); }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }

    /// Throws ParameterError unless nx, ny >= 8 and the ranges are non-empty.
    void validate(bool radial = false) const;
};

struct FieldState {
    double time = 0.0;
    std::vector<double> u, v, w;

    bool finite() const;
};

enum class Convection { central, upwind };

std::string to_string(Convection c);
std::optional<Convection> convection_from_string(const std::string& s);

/// Spatial discretisation of a plane or radial system on a grid. Plane
/// kinds: pde_full (convection from the stream, reaction k u v) and
/// pde_rotated_free (no convection, reaction u v). Radial kind: pde_radial
/// with u_t = d u_rr + (d + alpha)/r u_r -+ u v on the x range of the grid.
class Discretization {
public:
    Discretization(const SystemSpec& spec, Grid2D grid, Convection scheme = Convection::central);

    bool radial() const { return radial_; }
    const Grid2D& grid() const { return grid_; }
    std::size_t size() const { return radial_ ? grid_.nx : static_cast<std::size_t>(grid_.nx) * grid_.ny; }
    bool on_boundary(std::size_t n) const;
    Point node(std::size_t n, double t) const;

    /// Time derivative at interior nodes; boundary entries are zero.
    FieldState rhs(const FieldState& s) const;
    void rhs(const FieldState& s, FieldState& out) const;

    /// cfl min(hx^2, hy^2) / (4 max d), capped by min(hx, hy) / max|U|.
    double stable_dt(double cfl) const;

private:
    SystemSpec spec_;
    Grid2D grid_;
    Convection scheme_;
    bool radial_ = false;
    double k_ = 1.0;
    std::vector<double> a_, b_;            // plane velocity (Psi_y, -Psi_x) at the nodes
    std::vector<double> ax_, by_;          // the same divided by 2 hx and 2 hy
    std::vector<double> ap_, am_, bp_, bm_; // positive and negative parts over hx and hy
    std::array<std::vector<double>, 3> c_; // radial drift (d_i + alpha) / r per species
    double max_speed_ = 0.0;
    std::vector<std::size_t> boundary_;
};

/// Overwrites the boundary nodes of a state at its time.
using BoundaryClosure = std::function<void(FieldState&)>;

/// Dirichlet traces of an exact solution.
BoundaryClosure exact_boundary(const Discretization& disc, const Field3& exact);

/// Zero normal gradient: each boundary node copies its nearest interior
/// node. First order; meant for exploratory runs, not convergence studies.
BoundaryClosure no_flux_boundary(const Discretization& disc);

/// One classical RK4 step; boundary nodes are reset by `bc` after every
/// stage. Throws SolverError when the new state is not finite.
FieldState step(const Discretization& disc, const FieldState& s, double dt, const BoundaryClosure& bc);

/// Samples an exact solution on the grid nodes.
FieldState sample_state(const Discretization& disc, const Field3& f, double t);

struct ErrorNorms {
    double linf = 0.0;
    double l2 = 0.0;
};

/// Max and grid-weighted L2 difference over all components and nodes.
ErrorNorms error_norms(const Discretization& disc, const FieldState& s, const Field3& exact);

struct SimulationConfig {
    ExactSolution exact; // initial data, boundary traces, reference and target system
    Grid2D grid;
    double t_start = 0.0;
    double t_end = 0.3;
    double cfl = 0.4;
    Convection scheme = Convection::central;
    int frames = 1; // states recorded at equal time intervals (the last is t_end)
    bool no_flux = false; // no-flux walls instead of exact Dirichlet traces
};

struct SimulationResult {
    Grid2D grid;
    bool radial = false;
    double dt = 0.0;
    long steps = 0;
    std::vector<FieldState> frames;
    ErrorNorms error;
};

/// Runs the method of lines from the exact initial state. Throws
/// ParameterError if the exact solution is singular somewhere on the grid
/// during the run.
SimulationResult simulate(const SimulationConfig& config);

struct ConvergenceLevel {
    int nx = 0;
    int ny = 0;
    double dt = 0.0;
    long steps = 0;
    ErrorNorms error;
};

struct ConvergenceReport {
    std::vector<ConvergenceLevel> levels;
    std::vector<double> orders_linf; // log2(e_k / e_{k+1})
    std::vector<double> orders_l2;
};

/// Runs `levels` >= 3 grids, doubling the resolution from config.grid.
ConvergenceReport convergence_study(const SimulationConfig& config, int levels);

/// Decoupled heat kernels: u = d1-kernel, v = 0, w = d3-kernel with a zero
/// stream, so the reaction vanishes identically.
ExactSolution heat_kernel_solution(const SystemParams& params, double tau, double x0 = 0.0, double y0 = 0.0);

/// CSV rows t,x,y,u,v,w for every node of every frame.
void write_csv(std::ostream& os, const Discretization& disc, const std::vector<FieldState>& frames);

} // namespace dlv
