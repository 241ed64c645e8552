#pragma once

#include "dlv/errors.hpp"
#include "dlv/numerics/jet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dlv {

/// dy/ds = rhs(s, y), written into `dyds`.
using VectorRhs = std::function<void(double s, std::span<const double> y, std::span<double> dyds)>;

/// Classic RK4 with step halving: the step count doubles until two
/// successive answers agree to `tol * max(1, |y_i|)` in every component.
/// Throws IntegrationError on non-finite values or when 2^20 steps do not
/// reach the tolerance.
std::vector<double> rk4_integrate(const VectorRhs& rhs, std::vector<double> y0, double s0,
                                  double s1, double tol);

/// Fixed-step RK4 on a small state of any jet-like scalar type.
template <typename T, std::size_t N, typename Rhs>
std::array<T, N> rk4_fixed(Rhs&& rhs, std::array<T, N> y, double s0, double s1, int steps)
{
    const double h = (s1 - s0) / steps;
    auto axpy = [](const std::array<T, N>& base, const std::array<T, N>& k, double a) {
        std::array<T, N> r = base;
        for (std::size_t i = 0; i < N; ++i) r[i] += k[i] * a;
        return r;
    };
    for (int n = 0; n < steps; ++n) {
        const double s = s0 + n * h;
        const std::array<T, N> k1 = rhs(s, y);
        const std::array<T, N> k2 = rhs(s + 0.5 * h, axpy(y, k1, 0.5 * h));
        const std::array<T, N> k3 = rhs(s + 0.5 * h, axpy(y, k2, 0.5 * h));
        const std::array<T, N> k4 = rhs(s + h, axpy(y, k3, h));
        for (std::size_t i = 0; i < N; ++i)
            y[i] += (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (h / 6.0);
    }
    return y;
}

/// Step-halving driver around rk4_fixed; convergence is judged on values only,
/// so jet states carry the derivatives of the accepted discrete map.
template <typename T, std::size_t N, typename Rhs>
std::array<T, N> rk4_adaptive(Rhs&& rhs, const std::array<T, N>& y0, double s0, double s1,
                              double tol)
{
    if (s0 == s1) return y0;
    std::array<T, N> prev = rk4_fixed(rhs, y0, s0, s1, 1);
    for (int steps = 2; steps <= (1 << 20); steps *= 2) {
        std::array<T, N> next = rk4_fixed(rhs, y0, s0, s1, steps);
        bool done = true;
        for (std::size_t i = 0; i < N; ++i) {
            const double a = value_of(next[i]);
            const double b = value_of(prev[i]);
            if (!std::isfinite(a)) throw IntegrationError("rk4: non-finite state");
            if (std::abs(a - b) >= tol * std::max(1.0, std::abs(a))) done = false;
        }
        if (done) return next;
        prev = next;
    }
    throw IntegrationError("rk4: tolerance not reached within 2^20 steps");
}

} // namespace dlv
