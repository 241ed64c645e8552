#pragma once

#include "dlv/numerics/jet.hpp"
#include "dlv/numerics/sampling.hpp"
#include "dlv/solutions/catalog.hpp"

#include <array>
#include <functional>
#include <string>

namespace dlv {

/// A coefficient as a function of (t, x, y), evaluated on coordinate jets so
/// that compositions carry derivatives. An empty function means zero.
using CoeffFn = std::function<Jet2(const Triple<Jet2>& X)>;

/// Wraps a generic `(auto t, auto x, auto y)` expression as a CoeffFn.
template <typename F>
CoeffFn coeff(F f)
{
    return [f](const Triple<Jet2>& X) { return Jet2(f(X[0], X[1], X[2])); };
}

inline Jet2 eval(const CoeffFn& f, const Triple<Jet2>& X) { return f ? f(X) : Jet2(0.0); }
inline double eval(const CoeffFn& f, const Point& p)
{
    return f ? f({Jet2(p.t), Jet2(p.x), Jet2(p.y)}).v : 0.0;
}

/// Extended point (t, x, y, u, v, w).
using ExtPoint = std::array<double, 6>;

/// A projectable point symmetry
///   xi^0 d_t + xi^1 d_x + xi^2 d_y + sum_i eta^i d_{u_i},
/// with eta^i = sum_j a[i][j](t,x,y) u_j + b[i](t,x,y).
struct LieGenerator {
    std::string label;
    std::array<CoeffFn, 3> xi;
    std::array<std::array<CoeffFn, 3>, 3> a;
    std::array<CoeffFn, 3> b;

    /// Vector field at an extended point.
    ExtPoint at(const ExtPoint& z) const;
    /// Base part (xi) on coordinate jets.
    Triple<Jet2> xi_at(const Triple<Jet2>& X) const;
    /// Fibre part on coordinate jets and fibre jets.
    Triple<Jet2> eta_at(const Triple<Jet2>& X, const Triple<Jet2>& U) const;
};

/// Scalar multiple and sum of generators.
LieGenerator scaled(const LieGenerator& g, double c, std::string label = "");
LieGenerator sum(const LieGenerator& g, const LieGenerator& h, std::string label = "");

/// [a, b] = a(b's coefficients) - b(a's coefficients). First derivatives of
/// the operands are exact; the result's own derivatives (needed only when
/// it is bracketed again or composed) come from fourth-order differences.
LieGenerator lie_bracket(const LieGenerator& a, const LieGenerator& b);

struct GeneratorComparison {
    double max_diff = 0.0;
    bool equal = false;
};

/// Compares all coefficient values (xi, a, b) at `count` seeded points of the
/// box; equal iff the largest difference is below `tol`.
GeneratorComparison compare_generators(const LieGenerator& g, const LieGenerator& h,
                                       const SampleSpec& box = {42, 50, {-1, 1}, {-2, 2}, {-2, 2}, 0.0},
                                       double tol = 1e-10);

/// The zero generator.
LieGenerator zero_generator(std::string label = "0");

/// Integrates dz/ds = g(z) from s = 0 to `eps` (RK4, tolerance 1e-12).
ExtPoint flow_map(const LieGenerator& g, double eps, const ExtPoint& z, double tol = 1e-12);

/// Base flow only: (t, x, y) after parameter `eps`.
Point base_flow(const LieGenerator& g, double eps, const Point& p, double tol = 1e-12);

/// Image of `sol` under exp(eps g): new(X) = fibre flow of sol(base_flow(-eps)(X)).
/// Jets are propagated exactly through the RK4 maps. The target system is
/// unchanged; evaluation throws DomainError when the base point leaves the
/// validity domain of `sol`.
ExactSolution transport_solution(const LieGenerator& g, double eps, const ExactSolution& sol,
                                 double tol = 1e-12);

} // namespace dlv
