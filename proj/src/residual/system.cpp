#include "dlv/residual/system.hpp"

#include "dlv/errors.hpp"

#include <cmath>

namespace dlv {

void SystemParams::validate() const
{
    for (double d : {d1, d2, d3, k})
        if (!(d > 0.0) || !std::isfinite(d))
            throw ParameterError("diffusivities and k must be positive and finite");
    if (!std::isfinite(alpha)) throw ParameterError("alpha must be finite");
}

const std::vector<SystemKindInfo>& system_kinds()
{
    using K = SystemKind;
    static const std::vector<SystemKindInfo> table{
        {K::pde_full, "pde_full", true, 3,
         "u_t + Psi_y u_x - Psi_x u_y = d1 Lap u - k u v (and v, w with +k u v)", {}},
        {K::pde_rotated_free, "pde_rotated_free", true, 3,
         "convection-free system in the rotating frame, k = 1", {}},
        {K::pde_radial, "pde_radial", true, 3,
         "u_t = d1 u_rr + (d1 + alpha)/r u_r - u v (radially symmetric, k = 1)", {}},
        {K::pde_stationary, "pde_stationary", true, 3, "d1 Lap u - u v = 0, ..., d3 Lap w + u v = 0",
         {}},
        {K::pde_reduced_selfsim, "pde_reduced_selfsim", true, 3,
         "reduction by u = U(omega1, omega2)/t, omega1 = r^2/t, omega2 = phi + beta ln r", {"beta"}},
        {K::pde_reduced_wave, "pde_reduced_wave", true, 3,
         "reduction by u = U(omega, y), omega = t - t0 x", {"t0"}},
        {K::pde_reduced_polar, "pde_reduced_polar", true, 3,
         "reduction by omega1 = x^2 + y^2, omega2 = t + t0 arctan(y/x)", {"t0"}},
        {K::pde_fisher, "pde_fisher", true, 1, "u_t = dstar u_xx + u (b0 - u)", {"dstar", "b0"}},
        {K::ode_steady_radial, "ode_steady_radial", false, 3,
         "d1 u'' + (d1 + alpha)/r u' - u v = 0, ..., d3 w'' + (d3 + alpha)/r w' + u v = 0", {}},
        {K::ode_selfsim, "ode_selfsim", false, 3,
         "4 d1 w U'' + (4 d1 + 2 alpha + w) U' + U (1 - V) = 0, ...", {}},
        {K::ode_planewave, "ode_planewave", false, 3,
         "d1* U'' = U V, d2* V'' = U V, d3* W'' = -U V, di* = di (alpha1^2 + alpha2^2)",
         {"alpha1", "alpha2"}},
        {K::ode_f, "ode_f", false, 1, "d1* d2* U'' = U (d1* U + b21 w + b20)",
         {"alpha1", "alpha2", "b21", "b20"}},
        {K::ode_fisher_wave, "ode_fisher_wave", false, 1,
         "d* U'' - alpha1 U' = U (U - b1 exp(alpha1 z / d*) - b0), d* = d1 (t0^2 alpha1^2 + alpha2^2)",
         {"alpha1", "alpha2", "t0", "b1", "b0"}},
        {K::ode_travel, "ode_travel", false, 3,
         "di* U'' - alpha1 U' = U V (third: -U V), di* = di (t0^2 alpha1^2 + alpha2^2)",
         {"alpha1", "alpha2", "t0"}},
        {K::ode_f_emden, "ode_f_emden", false, 1, "r f'' + f' - r f^2 + C0/d2 r f = 0", {"C0"}},
        {K::ode_f_alpha, "ode_f_alpha", false, 1,
         "r f'' + (1 + alpha) f' - r f^2 - (C1 r^-alpha + C0) r f = 0", {"C0", "C1"}},
        {K::ode_f3, "ode_f3", false, 1, "third-order equation for f in the steady radial reduction",
         {"C"}},
    };
    return table;
}

const SystemKindInfo& info(SystemKind kind)
{
    for (const auto& i : system_kinds())
        if (i.kind == kind) return i;
    throw ParameterError("unknown system kind");
}

std::string to_string(SystemKind kind) { return info(kind).name; }

std::optional<SystemKind> system_kind_from_string(const std::string& s)
{
    for (const auto& i : system_kinds())
        if (i.name == s) return i.kind;
    return std::nullopt;
}

SystemSpec linear_flow_system(const SystemParams& p)
{
    SystemSpec spec;
    spec.kind = SystemKind::pde_full;
    spec.params = p;
    spec.params.k = 1.0;
    spec.stream = std::make_shared<StreamFunction>(make_case(StreamCase::case10));
    return spec;
}

} // namespace dlv
