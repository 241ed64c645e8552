#include "dlv/symmetry/generator.hpp"

#include "dlv/errors.hpp"
#include "dlv/numerics/fd.hpp"
#include "dlv/numerics/rk4.hpp"

#include <cmath>
#include <memory>
#include <type_traits>

namespace dlv {

namespace {

Triple<Jet2> constant_jets(const Point& p) { return {Jet2(p.t), Jet2(p.x), Jet2(p.y)}; }

bool is_constant(const Triple<Jet2>& X)
{
    for (const Jet2& j : X) {
        for (double g : j.g)
            if (g != 0.0) return false;
        for (double h : j.h)
            if (h != 0.0) return false;
    }
    return true;
}

// Coefficients flattened as xi[0..2], a[0..2][0..2], b[0..2].
constexpr std::size_t n_coeffs = 15;
using Coeffs = std::array<double, n_coeffs>;

Coeffs values_at(const LieGenerator& g, const Point& p)
{
    const auto X = constant_jets(p);
    Coeffs c{};
    for (int k = 0; k < 3; ++k) c[k] = eval(g.xi[k], X).v;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[3 + 3 * i + j] = eval(g.a[i][j], X).v;
    for (int i = 0; i < 3; ++i) c[12 + i] = eval(g.b[i], X).v;
    return c;
}

CoeffFn add(CoeffFn f, CoeffFn g)
{
    if (!f) return g;
    if (!g) return f;
    return [f, g](const Triple<Jet2>& X) { return f(X) + g(X); };
}

CoeffFn times(CoeffFn f, double c)
{
    if (!f || c == 0.0) return {};
    return [f, c](const Triple<Jet2>& X) { return f(X) * c; };
}

// Exact first-order evaluation of every coefficient of [a, b] at p.
Coeffs bracket_values(const LieGenerator& a, const LieGenerator& b, const Point& p)
{
    const auto X = seed(p);
    const auto xa = a.xi_at(X);
    const auto xb = b.xi_at(X);
    auto along = [](const Triple<Jet2>& xi, const Jet2& f) {
        return xi[0].v * f.g[0] + xi[1].v * f.g[1] + xi[2].v * f.g[2];
    };
    std::array<std::array<Jet2, 3>, 3> Aa, Ab;
    Triple<Jet2> Ba, Bb;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Aa[i][j] = eval(a.a[i][j], X);
            Ab[i][j] = eval(b.a[i][j], X);
        }
        Ba[i] = eval(a.b[i], X);
        Bb[i] = eval(b.b[i], X);
    }
    Coeffs c{};
    for (int k = 0; k < 3; ++k) c[k] = along(xa, xb[k]) - along(xb, xa[k]);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = along(xa, Ab[i][j]) - along(xb, Aa[i][j]);
            for (int k = 0; k < 3; ++k) s += Ab[i][k].v * Aa[k][j].v - Aa[i][k].v * Ab[k][j].v;
            c[3 + 3 * i + j] = s;
        }
        double s = along(xa, Bb[i]) - along(xb, Ba[i]);
        for (int k = 0; k < 3; ++k) s += Ab[i][k].v * Ba[k].v - Aa[i][k].v * Bb[k].v;
        c[12 + i] = s;
    }
    return c;
}

} // namespace

ExtPoint LieGenerator::at(const ExtPoint& z) const
{
    const Triple<Jet2> X{Jet2(z[0]), Jet2(z[1]), Jet2(z[2])};
    const Triple<Jet2> U{Jet2(z[3]), Jet2(z[4]), Jet2(z[5])};
    const auto x = xi_at(X);
    const auto e = eta_at(X, U);
    return {x[0].v, x[1].v, x[2].v, e[0].v, e[1].v, e[2].v};
}

Triple<Jet2> LieGenerator::xi_at(const Triple<Jet2>& X) const
{
    return {eval(xi[0], X), eval(xi[1], X), eval(xi[2], X)};
}

Triple<Jet2> LieGenerator::eta_at(const Triple<Jet2>& X, const Triple<Jet2>& U) const
{
    Triple<Jet2> out;
    for (int i = 0; i < 3; ++i) {
        Jet2 s = eval(b[i], X);
        for (int j = 0; j < 3; ++j)
            if (a[i][j]) s += a[i][j](X) * U[j];
        out[i] = s;
    }
    return out;
}

LieGenerator scaled(const LieGenerator& g, double c, std::string label)
{
    LieGenerator out;
    out.label = label.empty() ? std::to_string(c) + "*" + g.label : std::move(label);
    for (int k = 0; k < 3; ++k) {
        out.xi[k] = times(g.xi[k], c);
        out.b[k] = times(g.b[k], c);
        for (int j = 0; j < 3; ++j) out.a[k][j] = times(g.a[k][j], c);
    }
    return out;
}

LieGenerator sum(const LieGenerator& g, const LieGenerator& h, std::string label)
{
    LieGenerator out;
    out.label = label.empty() ? g.label + "+" + h.label : std::move(label);
    for (int k = 0; k < 3; ++k) {
        out.xi[k] = add(g.xi[k], h.xi[k]);
        out.b[k] = add(g.b[k], h.b[k]);
        for (int j = 0; j < 3; ++j) out.a[k][j] = add(g.a[k][j], h.a[k][j]);
    }
    return out;
}

LieGenerator zero_generator(std::string label)
{
    LieGenerator g;
    g.label = std::move(label);
    return g;
}

LieGenerator lie_bracket(const LieGenerator& a, const LieGenerator& b)
{
    auto pa = std::make_shared<const LieGenerator>(a);
    auto pb = std::make_shared<const LieGenerator>(b);
    auto component = [pa, pb](std::size_t idx) -> CoeffFn {
        return [pa, pb, idx](const Triple<Jet2>& X) {
            const Point p{X[0].v, X[1].v, X[2].v};
            if (is_constant(X)) return Jet2(bracket_values(*pa, *pb, p)[idx]);
            const auto jets = fd_jet_n<n_coeffs>(
                [&](const Point& q) { return bracket_values(*pa, *pb, q); }, p);
            return compose(jets[idx], X);
        };
    };
    LieGenerator out;
    out.label = "[" + a.label + "," + b.label + "]";
    for (std::size_t k = 0; k < 3; ++k) {
        out.xi[k] = component(k);
        out.b[k] = component(12 + k);
        for (std::size_t j = 0; j < 3; ++j) out.a[k][j] = component(3 + 3 * k + j);
    }
    return out;
}

GeneratorComparison compare_generators(const LieGenerator& g, const LieGenerator& h,
                                       const SampleSpec& box, double tol)
{
    GeneratorComparison out;
    for (const Point& p : sample_points(box)) {
        const auto a = values_at(g, p);
        const auto b = values_at(h, p);
        for (std::size_t i = 0; i < n_coeffs; ++i)
            out.max_diff = std::max(out.max_diff, std::abs(a[i] - b[i]));
    }
    out.equal = out.max_diff < tol;
    return out;
}

ExtPoint flow_map(const LieGenerator& g, double eps, const ExtPoint& z, double tol)
{
    const VectorRhs rhs = [&g](double, std::span<const double> y, std::span<double> dy) {
        const auto v = g.at({y[0], y[1], y[2], y[3], y[4], y[5]});
        std::copy(v.begin(), v.end(), dy.begin());
    };
    const auto r = rk4_integrate(rhs, {z.begin(), z.end()}, 0.0, eps, tol);
    return {r[0], r[1], r[2], r[3], r[4], r[5]};
}

Point base_flow(const LieGenerator& g, double eps, const Point& p, double tol)
{
    const VectorRhs rhs = [&g](double, std::span<const double> y, std::span<double> dy) {
        const auto v = g.xi_at({Jet2(y[0]), Jet2(y[1]), Jet2(y[2])});
        for (int k = 0; k < 3; ++k) dy[k] = v[k].v;
    };
    const auto r = rk4_integrate(rhs, {p.t, p.x, p.y}, 0.0, eps, tol);
    return {r[0], r[1], r[2]};
}

namespace {

// Fixed-step RK4 makes the transported field a smooth function of the point,
// so finite differences of its values stay consistent with its jets.
class TransportedField final : public Field3 {
public:
    TransportedField(LieGenerator g, double eps, FieldPtr inner, int steps)
        : g_(std::move(g)), eps_(eps), inner_(std::move(inner)), steps_(steps) {}

    template <typename T>
    std::array<T, 3> back(const std::array<T, 3>& X) const
    {
        return rk4_fixed(
            [this](double, const std::array<T, 3>& s) {
                auto v = g_.xi_at(lift(s));
                return std::array<T, 3>{lower<T>(-v[0]), lower<T>(-v[1]), lower<T>(-v[2])};
            },
            X, 0.0, eps_, steps_);
    }

    template <typename T>
    std::array<T, 6> forward(const std::array<T, 6>& y) const
    {
        return rk4_fixed(
            [this](double, const std::array<T, 6>& s) {
                const auto X = lift(std::array<T, 3>{s[0], s[1], s[2]});
                const auto xi = g_.xi_at(X);
                const auto eta = g_.eta_at(X, lift(std::array<T, 3>{s[3], s[4], s[5]}));
                return std::array<T, 6>{lower<T>(xi[0]),  lower<T>(xi[1]),  lower<T>(xi[2]),
                                        lower<T>(eta[0]), lower<T>(eta[1]), lower<T>(eta[2])};
            },
            y, 0.0, eps_, steps_);
    }

    Triple<Jet2> jets(const Point& p) const override
    {
        const Triple<Jet2> X0 = back(seed(p));
        const Point p0{X0[0].v, X0[1].v, X0[2].v};
        if (!inner_->valid(p0, 0.0)) throw DomainError("transport: preimage outside the domain");
        const auto u0 = inner_->jets(p0);
        const auto y = forward(std::array<Jet2, 6>{X0[0], X0[1], X0[2], compose(u0[0], X0),
                                                   compose(u0[1], X0), compose(u0[2], X0)});
        return {y[3], y[4], y[5]};
    }

    Triple<double> values(const Point& p) const override
    {
        const auto X0 = back(std::array<double, 3>{p.t, p.x, p.y});
        const Point p0{X0[0], X0[1], X0[2]};
        if (!inner_->valid(p0, 0.0)) throw DomainError("transport: preimage outside the domain");
        const auto u0 = inner_->values(p0);
        const auto y = forward(std::array<double, 6>{X0[0], X0[1], X0[2], u0[0], u0[1], u0[2]});
        return {y[3], y[4], y[5]};
    }

    bool valid(const Point& p, double margin) const override
    {
        const auto X0 = back(std::array<double, 3>{p.t, p.x, p.y});
        for (double c : X0)
            if (!std::isfinite(c)) return false;
        return inner_->valid({X0[0], X0[1], X0[2]}, margin);
    }

private:
    static Triple<Jet2> lift(const std::array<Jet2, 3>& s) { return s; }
    static Triple<Jet2> lift(const std::array<double, 3>& s) { return {Jet2(s[0]), Jet2(s[1]), Jet2(s[2])}; }
    template <typename T>
    static T lower(const Jet2& j)
    {
        if constexpr (std::is_same_v<T, double>)
            return j.v;
        else
            return j;
    }

    LieGenerator g_;
    double eps_;
    FieldPtr inner_;
    int steps_;
};

// Smallest power-of-two step count whose full flow from `ref` agrees with
// the doubled count to `tol`, then doubled once more.
int transport_steps(const LieGenerator& g, double eps, const Point& ref, double tol)
{
    auto run = [&](int n) {
        return rk4_fixed(
            [&g](double, const std::array<double, 6>& s) { return g.at(s); },
            std::array<double, 6>{ref.t, ref.x, ref.y, 1.0, 1.0, 1.0}, 0.0, eps, n);
    };
    auto prev = run(8);
    for (int n = 16; n <= (1 << 16); n *= 2) {
        const auto next = run(n);
        bool done = true;
        for (std::size_t i = 0; i < 6; ++i) {
            if (!std::isfinite(next[i])) throw IntegrationError("transport: non-finite flow");
            if (std::abs(next[i] - prev[i]) >= tol * std::max(1.0, std::abs(next[i]))) done = false;
        }
        if (done) return n * 2;
        prev = next;
    }
    throw IntegrationError("transport: step count did not converge");
}

} // namespace

ExactSolution transport_solution(const LieGenerator& g, double eps, const ExactSolution& sol,
                                 double tol)
{
    if (!std::isfinite(eps)) throw ParameterError("transport: eps must be finite");
    ExactSolution out = sol;
    const Point ref{0.5 * (sol.domain.t.lo + sol.domain.t.hi), 0.5 * (sol.domain.x.lo + sol.domain.x.hi),
                    0.5 * (sol.domain.y.lo + sol.domain.y.hi)};
    const int steps = eps == 0.0 ? 1 : transport_steps(g, eps, ref, tol);
    out.field = std::make_shared<TransportedField>(g, eps, sol.field, steps);
    out.label = "exp(" + std::to_string(eps) + " " + g.label + ")" + sol.label;
    return out;
}

} // namespace dlv
