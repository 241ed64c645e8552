#pragma once

#include "dlv/errors.hpp"
#include "dlv/numerics/jet.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

namespace dlv {

/// Step selection for fd_jet. With `h > 0` every axis uses that step;
/// otherwise axis k uses `rel * (1 + |p_k|)`.
struct FdStep {
    double h = 0.0;
    double rel = 1e-3;

    double along(double coordinate) const
    {
        return h > 0.0 ? h : rel * (1.0 + std::abs(coordinate));
    }
    FdStep halved() const { return {h * 0.5, rel * 0.5}; }
};

namespace detail {

inline double& coord(Point& p, int axis)
{
    return axis == 0 ? p.t : (axis == 1 ? p.x : p.y);
}

inline double coord(const Point& p, int axis)
{
    return axis == 0 ? p.t : (axis == 1 ? p.x : p.y);
}

} // namespace detail

/// Fourth-order central-difference jets of a vector-valued field.
///
/// `f(Point) -> std::array<double, N>`. Uses 61 evaluations: the centre,
/// four points per axis and a 4x4 tensor stencil per mixed pair. Throws
/// DomainError if any evaluation is non-finite; exceptions from `f`
/// propagate unchanged.
template <std::size_t N, typename F>
std::array<Jet2, N> fd_jet_n(F&& f, const Point& p, const FdStep& step = {})
{
    static constexpr std::array<int, 4> offs{-2, -1, 1, 2};
    static constexpr std::array<double, 4> w1{1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0};

    auto eval = [&](const Point& q) {
        std::array<double, N> r = f(q);
        for (double v : r)
            if (!std::isfinite(v)) throw DomainError("fd_jet: non-finite value on stencil");
        return r;
    };

    const std::array<double, 3> hs{step.along(p.t), step.along(p.x), step.along(p.y)};
    const std::array<double, N> f0 = eval(p);

    std::array<Jet2, N> out;
    for (std::size_t n = 0; n < N; ++n) out[n].v = f0[n];

    for (int a = 0; a < 3; ++a) {
        std::array<std::array<double, N>, 4> fa;
        for (int i = 0; i < 4; ++i) {
            Point q = p;
            detail::coord(q, a) += offs[i] * hs[a];
            fa[i] = eval(q);
        }
        const double h = hs[a];
        for (std::size_t n = 0; n < N; ++n) {
            out[n].g[a] = (fa[0][n] - 8.0 * fa[1][n] + 8.0 * fa[2][n] - fa[3][n]) / (12.0 * h);
            out[n].h[Jet2::index(a, a)] =
                (-fa[0][n] + 16.0 * fa[1][n] - 30.0 * f0[n] + 16.0 * fa[2][n] - fa[3][n]) /
                (12.0 * h * h);
        }
    }

    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            std::array<double, N> acc{};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    Point q = p;
                    detail::coord(q, a) += offs[i] * hs[a];
                    detail::coord(q, b) += offs[j] * hs[b];
                    const auto fq = eval(q);
                    for (std::size_t n = 0; n < N; ++n) acc[n] += w1[i] * w1[j] * fq[n];
                }
            for (std::size_t n = 0; n < N; ++n)
                out[n].h[Jet2::index(a, b)] = acc[n] / (hs[a] * hs[b]);
        }
    return out;
}

using ScalarField = std::function<double(const Point&)>;

/// Scalar convenience wrapper around fd_jet_n.
inline Jet2 fd_jet(const ScalarField& f, const Point& p, const FdStep& step = {})
{
    return fd_jet_n<1>([&](const Point& q) { return std::array<double, 1>{f(q)}; }, p, step)[0];
}

inline Jet2 fd_jet(const ScalarField& f, const Point& p, double h)
{
    return fd_jet(f, p, FdStep{h});
}

/// Fourth-order central first derivative of a univariate function.
template <typename F>
double fd_derivative(F&& f, double z, double h)
{
    return (f(z - 2.0 * h) - 8.0 * f(z - h) + 8.0 * f(z + h) - f(z + 2.0 * h)) / (12.0 * h);
}

} // namespace dlv
