#pragma once

#include "dlv/residual/system.hpp"
#include "dlv/stream/stream_function.hpp"
#include "dlv/symmetry/generator.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace dlv {

/// A function of time on jets; empty means zero.
using TimeFn = std::function<Jet2(const Jet2& t)>;

template <typename F>
TimeFn time_fn(F f)
{
    return [f](const Jet2& t) { return Jet2(f(t)); };
}

inline double eval(const TimeFn& f, double t) { return f ? f(Jet2(t)).v : 0.0; }

/// Parameters of the general symmetry template
///   xi^0 = 2 c0 t + t0,  xi^1 = c0 x + p0(t) y + p1(t),  xi^2 = c0 y - p0(t) x + p2(t),
///   eta^1 = -2 c0 u,  eta^2 = -2 c0 v,  eta^3 = c1 u + c2 v + (c1 + c2 - 2 c0) w + H,
/// together with the function q(t) of the integrated condition on Psi.
struct DeParams {
    double c0 = 0.0;
    double t0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    TimeFn p0, p1, p2, q;
    CoeffFn H;
};

LieGenerator template_generator(const DeParams& de, std::string label);

/// One symmetry of a classification row: the operator as printed and the
/// template parameters that reproduce it.
struct ClassifiedGenerator {
    LieGenerator printed;
    DeParams de;
    bool principal = false;
};

struct ClassificationCase {
    StreamCase id;
    std::shared_ptr<const StreamFunction> stream;
    SystemParams system;
    std::vector<ClassifiedGenerator> generators;
};

/// The row's additional operators plus the principal ones: d_t, 1 d_w,
/// (u+w) d_w when d1 = d3, (v+w) d_w when d2 = d3, and for case 10 also
/// H d_w with H = x sin 2t + y cos 2t.
ClassificationCase builtin_generators(StreamCase id, const StreamParams& params = {},
                                      const FChoice& f = {}, const SystemParams& system = {});

/// The named basis of the case-10 algebra: P1, P2, J12, Pt, D.
struct Case10Algebra {
    LieGenerator P1, P2, J12, Pt, D;
};
Case10Algebra case10_algebra();

/// Left sides of the two second-order conditions and of the integrated
/// condition on Psi, with exact Psi derivatives and differenced p_i'(t).
struct DeResidual {
    double e4 = 0.0;
    double e5 = 0.0;
    double e7 = 0.0;
    double max_abs() const;
};
DeResidual determining_residual(const StreamFunction& stream, const DeParams& de, double t, double x,
                                double y);

/// The q(t) that makes the integrated condition hold at (t, x, y).
double solve_q(const StreamFunction& stream, const DeParams& de, double t, double x, double y);

/// Residual of H_t + Psi_y H_x - Psi_x H_y - d3 (H_xx + H_yy) at (t, x, y).
double h_residual(const StreamFunction& stream, const CoeffFn& H, double d3, const Point& p);

struct GeneratorReport {
    std::string label;
    double max_de_residual = 0.0;  // max over samples of |E4|, |E5|, |E7|
    double q_spread = 0.0;         // max |solve_q - q(t)| over samples
    double template_diff = 0.0;    // printed vs template coefficient distance
    double h_residual = 0.0;       // condition on H
    bool d_relations = true;       // (d1 - d3) c1 = 0 and (d2 - d3) c2 = 0
    bool pass = false;
};

struct CaseReport {
    StreamCase id;
    int samples = 0;
    std::uint64_t seed = 42;
    std::vector<GeneratorReport> generators;
    double max_de_residual = 0.0;
    bool pass = false;
};

inline constexpr double de_tolerance = 1e-10;

/// Checks every generator of the row at `n_samples` seeded points with
/// x, y in [-3, 3] and t in [-1, 1] (margin 0.3 from singular sets).
CaseReport verify_case(StreamCase id, const StreamParams& params = {}, const FChoice& f = {},
                       const SystemParams& system = {}, int n_samples = 200, std::uint64_t seed = 42);

} // namespace dlv
