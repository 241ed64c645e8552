#pragma once

#include "dlv/numerics/sampling.hpp"
#include "dlv/residual/residual.hpp"
#include "dlv/residual/system.hpp"
#include "dlv/solutions/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dlv {

enum class SolutionId {
    S_WEIER,
    S_RATIONAL,
    S_SEC,
    S_TANH,
    S_COTH,
    S_STEADY_RAT,
    S_STEADY_SEC,
    S_SS_A,
    S_SS_B,
    S_SS_N,
    S_ZERO,
    S_UV0,
};

std::string to_string(SolutionId id);
std::optional<SolutionId> solution_id_from_string(const std::string& s);

/// Coordinates a solution is written in.
///  lab:     (t, x, y) of the system with convection
///  rotated: (t, x*, y*) after the time-dependent rotation, no convection
///  radial:  (t, r) of the radially symmetric reduction
enum class Frame { lab, rotated, radial };
std::string to_string(Frame f);

using Constants = std::map<std::string, double>;

struct SolutionInfo {
    SolutionId id;
    std::string name;
    Frame frame; // frame of make_solution's result
    std::string target;
    std::vector<std::string> constants;
    std::vector<std::string> conditions;
    std::string singular_set;
};

const std::vector<SolutionInfo>& list_solutions();
const SolutionInfo& solution_info(SolutionId id);

/// A closed-form triple with its parameters, frame, target system and domain.
struct ExactSolution {
    SolutionId id = SolutionId::S_ZERO;
    std::string label;
    SystemParams params;
    Constants constants;
    Frame frame = Frame::lab;
    SystemSpec target;
    FieldPtr field;
    /// Default sampling box for certification.
    SampleSpec domain;
    /// Default clearance from singular sets (phase or radius units).
    double margin = 1e-2;

    /// Jets at p; throws DomainError where validity fails with zero margin.
    Triple<Jet2> evaluate(const Point& p) const;
    Triple<double> values(const Point& p) const;
    bool validity(const Point& p) const { return validity(p, margin); }
    bool validity(const Point& p, double m) const { return field->valid(p, m); }
};

/// Parameters and constants for which every side condition holds.
SystemParams default_params(SolutionId id);
Constants default_constants(SolutionId id);

/// Builds a catalog entry; missing constants take their defaults.
/// Plane-wave ids (S_WEIER ... S_COTH) come lifted to the lab frame,
/// radial ids in the radial frame, trivial ids in the lab frame.
/// Throws ParameterError when a side condition is violated.
ExactSolution make_solution(SolutionId id, const SystemParams& params, const Constants& constants);
ExactSolution make_solution(SolutionId id);

/// Plane-wave ids as stated before the frame change (target: pde_rotated_free).
ExactSolution rotated_profile(SolutionId id, const SystemParams& params, const Constants& constants);

/// rotated -> lab through x* = x sin2t + y cos2t, y* = y sin2t - x cos2t;
/// radial -> lab on r = sqrt(x^2 + y^2) with the row-1 stream
/// Psi = (x^2+y^2)^2 + alpha arctan(x/y); lab is returned unchanged.
ExactSolution to_lab_frame(const ExactSolution& sol);

/// Multiplies the components by `factors` (negative controls).
ExactSolution perturbed(const ExactSolution& sol, Triple<double> factors);

/// Jacobian map of the rotating-frame change at a lab point: jets of
/// (t, x*, y*) with respect to (t, x, y), and the inverse map.
Triple<Jet2> lab_to_rotated_map(const Point& p);
Triple<Jet2> rotated_to_lab_map(const Point& p);

/// Travelling front u = b0 (1 + C exp(kappa (x - c t)))^-2 of
/// u_t = d* u_xx + b0 u - u^2 with kappa = sqrt(b0 / (6 d*)), c = 5 sqrt(b0 d* / 6).
struct FisherFront {
    SystemSpec target; // pde_fisher
    FieldPtr field;    // (u, 0, 0) on slots (t, x)
    double kappa = 0.0;
    double speed = 0.0;
};
FisherFront fisher_front(double b0, double dstar, double C);

// ODE profiles -------------------------------------------------------------

struct NamedProfile {
    std::string name;
    SystemSpec target;
    Profile profile;
    Range z;
    std::function<bool(double z, double margin)> valid;
};

/// Profiles of the reduced ODEs: Weierstrass and sec^2 plane waves, the
/// travelling Fisher front, the power-law f of the steady reduction, the
/// sec/sech pair, the steady radial triples and the self-similar triples.
std::vector<NamedProfile> profile_catalog();

} // namespace dlv
