#pragma once

#include "dlv/solutions/catalog.hpp"
#include "dlv/symmetry/generator.hpp"

namespace dlv {

enum class EquivalenceKind { scaling_rotation, swap };

std::string to_string(EquivalenceKind k);
std::optional<EquivalenceKind> equivalence_kind_from_string(const std::string& s);

/// t* = alpha0 t + t0, (x*, y*) = M (x, y) + (x0, y0) with
/// M = [[alpha1, alpha2], [-sign alpha2, sign alpha1]],
/// (u*, v*, w*) = (alpha3 u, alpha3 v, alpha3 w + H(t, x, y)).
/// The system maps to d*_i = A d_i / alpha0, k* = k / (alpha0 alpha3) and
/// Psi* = sign A / alpha0 Psi + psi0, where A = alpha1^2 + alpha2^2.
/// H must solve H_t + Psi_y H_x - Psi_x H_y = d3 (H_xx + H_yy).
struct EquivalenceParams {
    double alpha0 = 1.0;
    double alpha1 = 1.0;
    double alpha2 = 0.0;
    double alpha3 = 1.0;
    double t0 = 0.0;
    double x0 = 0.0;
    double y0 = 0.0;
    double psi0 = 0.0;
    int sign = 1;
    CoeffFn H;
};

/// The transformed system; scaling_rotation needs a pde_full spec.
SystemSpec transform_system(EquivalenceKind kind, const EquivalenceParams& params, const SystemSpec& system);

/// The transformed solution together with its transformed target. Radial
/// and rotated-frame solutions are first lifted to the lab frame. Throws
/// ParameterError on alpha0 <= 0, alpha3 <= 0, A = 0, sign not +-1, or an
/// H that fails its equation at sampled points.
ExactSolution equivalence_transform(EquivalenceKind kind, const EquivalenceParams& params,
                                    const ExactSolution& sol);

enum class FrameDirection { to_rotated, to_lab };

/// Change between the lab frame and the frame rotating with the case-10
/// flow, (x*, y*) = (x sin2t + y cos2t, y sin2t - x cos2t). to_rotated needs
/// a lab solution of the case-10 system; to_lab accepts rotated and radial
/// solutions and returns lab ones unchanged.
ExactSolution rotating_frame(FrameDirection direction, const ExactSolution& sol);

} // namespace dlv
