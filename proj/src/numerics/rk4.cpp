#include "dlv/numerics/rk4.hpp"

namespace dlv {

namespace {

std::vector<double> rk4_steps(const VectorRhs& rhs, const std::vector<double>& y0, double s0,
                              double s1, int steps)
{
    const std::size_t n = y0.size();
    const double h = (s1 - s0) / steps;
    std::vector<double> y = y0, k1(n), k2(n), k3(n), k4(n), tmp(n);
    for (int step = 0; step < steps; ++step) {
        const double s = s0 + step * h;
        rhs(s, y, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        rhs(s + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        rhs(s + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
        rhs(s + h, tmp, k4);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if (!std::isfinite(y[i])) throw IntegrationError("rk4: non-finite state");
        }
    }
    return y;
}

} // namespace

std::vector<double> rk4_integrate(const VectorRhs& rhs, std::vector<double> y0, double s0,
                                  double s1, double tol)
{
    if (!(tol > 0.0)) throw IntegrationError("rk4: tolerance must be positive");
    for (double v : y0)
        if (!std::isfinite(v)) throw IntegrationError("rk4: non-finite initial state");
    if (s0 == s1) return y0;

    std::vector<double> prev = rk4_steps(rhs, y0, s0, s1, 1);
    for (int steps = 2; steps <= (1 << 20); steps *= 2) {
        std::vector<double> next = rk4_steps(rhs, y0, s0, s1, steps);
        bool done = true;
        for (std::size_t i = 0; i < next.size(); ++i)
            if (std::abs(next[i] - prev[i]) >= tol * std::max(1.0, std::abs(next[i]))) {
                done = false;
                break;
            }
        if (done) return next;
        prev = std::move(next);
    }
    throw IntegrationError("rk4: tolerance not reached within 2^20 steps");
}

} // namespace dlv
