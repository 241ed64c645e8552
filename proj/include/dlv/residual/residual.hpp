#pragma once

#include "dlv/numerics/fd.hpp"
#include "dlv/numerics/sampling.hpp"
#include "dlv/residual/system.hpp"
#include "dlv/solutions/field.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dlv {

enum class DiffMode { ad, fd };

/// A residual component together with its normaliser
/// 1 + max |additive term|.
struct ScaledResidual {
    double value = 0.0;
    double scale = 1.0;

    double relative() const { return std::abs(value) / scale; }
};

/// PDE residuals from precomputed jets (no validity checks).
Triple<ScaledResidual> pde_residual_terms(const SystemSpec& spec, const Triple<Jet2>& u,
                                          const Point& p);

/// Residuals of the three equations of `spec` for `sol` at `p`. In fd mode
/// the solution's derivatives come from fd_jet over its values; the stream
/// is always differentiated exactly. Throws DomainError at invalid points.
Triple<double> pde_residual(const SystemSpec& spec, const Field3& sol, const Point& p,
                            DiffMode mode = DiffMode::ad, const FdStep& step = {});

/// One-variable profile: components as third-order jets in z.
using Profile = std::function<std::vector<Jet1>(const Jet1& z)>;

std::vector<ScaledResidual> ode_residual_terms(const SystemSpec& spec,
                                               const std::vector<Jet1>& comps, double z);

/// The printed left-hand sides of the ODE kind at `z`.
std::vector<double> ode_residual(const SystemSpec& spec, const Profile& profile, double z);

/// Fourth-order differences of a profile's values (third derivative second order).
std::vector<Jet1> fd_profile(const Profile& profile, double z, double h);

struct ResidualReport {
    std::string system;
    std::string solution;
    SampleSpec samples;
    std::string mode = "both";
    double tolerance = 0.0;
    double max_abs = 0.0;
    double max_rel = 0.0;
    Point worst_point;
    int fd_points = 0;
    double fd_max_rel = 0.0;      // |R_fd(h) - R_ad| / scale
    double fd_max_rel_half = 0.0; // same at h/2
    bool fd_consistent = true;
    bool pass = false;
};

/// Floor below which FD/AD disagreement counts as roundoff.
inline constexpr double fd_noise_floor = 1e-6;

/// AD residuals at every sample plus an FD cross-check on every tenth
/// sample at steps h and h/2. Passes iff the AD maximum relative residual
/// is below `tol` and, at every checked point, the FD discrepancy at h/2 is
/// at most max(fd_noise_floor, discrepancy(h)/4).
ResidualReport certify(const SystemSpec& spec, const Field3& sol, const SampleSpec& samples,
                       double tol, const std::string& label = "", double margin = 1e-2);

/// Same contract for ODE kinds; samples use the x range as the z range.
ResidualReport certify_profile(const SystemSpec& spec, const Profile& profile,
                               const SampleSpec& samples, double tol,
                               const std::string& label = "",
                               std::function<bool(double z, double margin)> valid = {});

} // namespace dlv
