#pragma once

#include "dlv/stream/stream_function.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dlv {

/// Diffusivities, kinetic constant and the radial convection strength.
struct SystemParams {
    double d1 = 1.0;
    double d2 = 1.0;
    double d3 = 1.0;
    double k = 1.0;
    double alpha = 0.0;

    /// Throws ParameterError unless d1, d2, d3, k > 0 and alpha is finite.
    void validate() const;
};

/// Every PDE and ODE form that solutions can be certified against.
///
/// Point slots for the PDE kinds:
///   pde_full, pde_rotated_free, pde_stationary: (t, x, y)
///   pde_radial:             (t, r, -)
///   pde_reduced_selfsim:    (-, omega1 = r^2/t, omega2 = phi + beta ln r)
///   pde_reduced_wave:       (-, omega = t - t0 x, y)
///   pde_reduced_polar:      (-, omega1 = x^2 + y^2, omega2 = t + t0 arctan(y/x))
///   pde_fisher:             (t, x, -), first component only
enum class SystemKind {
    pde_full,
    pde_rotated_free,
    pde_radial,
    pde_stationary,
    pde_reduced_selfsim,
    pde_reduced_wave,
    pde_reduced_polar,
    pde_fisher,
    ode_steady_radial,
    ode_selfsim,
    ode_planewave,
    ode_f,
    ode_fisher_wave,
    ode_travel,
    ode_f_emden,
    ode_f_alpha,
    ode_f3,
};

struct SystemKindInfo {
    SystemKind kind;
    std::string name;
    bool is_pde;
    int components;
    std::string description;
    std::vector<std::string> constants; // kind-specific constants it reads
};

const std::vector<SystemKindInfo>& system_kinds();
const SystemKindInfo& info(SystemKind kind);
std::string to_string(SystemKind kind);
std::optional<SystemKind> system_kind_from_string(const std::string& s);

/// Which equations are checked, with which parameters.
struct SystemSpec {
    SystemKind kind = SystemKind::pde_full;
    SystemParams params;
    /// Kind-specific constants: beta, t0, b21, b20, b1, b0, C, C0, C1, alpha1, alpha2.
    std::map<std::string, double> constants;
    /// Required for pde_full only.
    std::shared_ptr<const StreamFunction> stream;

    double constant(const std::string& key, double fallback = 0.0) const
    {
        auto it = constants.find(key);
        return it == constants.end() ? fallback : it->second;
    }
};

/// pde_full with the Psi = x^2 + y^2 stream and k = 1.
SystemSpec linear_flow_system(const SystemParams& p);

} // namespace dlv
