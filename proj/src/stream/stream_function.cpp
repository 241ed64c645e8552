#include "dlv/stream/stream_function.hpp"

#include "dlv/errors.hpp"
#include "dlv/numerics/fd.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace dlv {

namespace {

// Distance test shared by all validity predicates: strictly off the set and
// at least `margin` away from it.
bool clear(double dist, double margin) { return dist > 0.0 && dist >= margin; }

double param(const StreamParams& p, const std::string& key, double fallback = 0.0)
{
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

template <typename Formula>
StreamFunction build(StreamCase id, StreamParams params, FChoice f, std::string formula,
                     Formula psi, StreamFunction::Validity validity)
{
    return StreamFunction(
        id, std::move(params), std::move(f), std::move(formula),
        [psi](const Jet2& x, const Jet2& y) { return psi(x, y); },
        [psi](double x, double y) { return psi(x, y); }, std::move(validity));
}

} // namespace

std::string to_string(StreamCase c)
{
    if (c == StreamCase::custom) return "custom";
    return "case" + std::to_string(static_cast<int>(c));
}

std::optional<StreamCase> stream_case_from_string(const std::string& s)
{
    if (s == "custom") return StreamCase::custom;
    std::string digits = s.rfind("case", 0) == 0 ? s.substr(4) : s;
    if (digits.empty() || digits.size() > 2) return std::nullopt;
    for (char ch : digits)
        if (ch < '0' || ch > '9') return std::nullopt;
    const int n = std::stoi(digits);
    if (n < 1 || n > 11) return std::nullopt;
    return static_cast<StreamCase>(n);
}

std::string to_string(FKind k)
{
    switch (k) {
    case FKind::identity: return "identity";
    case FKind::square: return "square";
    case FKind::sin: return "sin";
    case FKind::ln: return "ln";
    case FKind::exp: return "exp";
    case FKind::poly: return "poly";
    }
    return "identity";
}

std::optional<FKind> f_kind_from_string(const std::string& s)
{
    for (FKind k : {FKind::identity, FKind::square, FKind::sin, FKind::ln, FKind::exp, FKind::poly})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

bool FChoice::defined(double s, double margin) const
{
    return kind != FKind::ln || clear(s, margin);
}

StreamFunction::StreamFunction(StreamCase id, StreamParams params, FChoice f, std::string formula,
                               JetFn jet, ValueFn value, Validity validity)
    : id_(id), params_(std::move(params)), f_(std::move(f)), formula_(std::move(formula)),
      jet_(std::move(jet)), value_(std::move(value)), validity_(std::move(validity))
{
}

StreamFunction StreamFunction::custom(std::string formula, JetFn jet, ValueFn value, Validity valid)
{
    return StreamFunction(StreamCase::custom, {}, {}, std::move(formula), std::move(jet),
                          std::move(value), std::move(valid));
}

Jet2 StreamFunction::jet(double x, double y) const
{
    if (!valid(x, y, 0.0)) throw DomainError("stream function singular at the requested point");
    return jet_(Jet2::variable(Var::x, x), Jet2::variable(Var::y, y));
}

bool StreamFunction::valid(double x, double y, double margin) const
{
    if (!std::isfinite(x) || !std::isfinite(y)) return false;
    return !validity_ || validity_(x, y, margin);
}

StreamParams default_stream_params(StreamCase id)
{
    switch (id) {
    case StreamCase::case1: return {{"alpha", 1.0}, {"beta", 0.5}};
    case StreamCase::case2: return {{"alpha1", 1.0}, {"alpha2", 0.5}, {"beta", 0.3}, {"gamma", 0.7}};
    case StreamCase::case3: return {{"alpha", 1.5}};
    case StreamCase::case4: return {{"alpha0", 0.5}, {"alpha", 1.0}};
    case StreamCase::case5: return {{"alpha", 1.0}, {"beta", 0.5}, {"gamma", 0.25}};
    case StreamCase::case6: return {{"alpha1", 1.0}, {"alpha2", 0.5}, {"gamma", 0.4}, {"sign", 1.0}};
    case StreamCase::case7: return {{"alpha0", 1.5}};
    case StreamCase::case8: return {{"alpha0", 1.5}};
    case StreamCase::case9: return {{"alpha", 2.0}};
    case StreamCase::case10: return {};
    case StreamCase::case11: return {{"alpha1", 1.0}, {"alpha2", -0.5}};
    case StreamCase::custom: break;
    }
    return {};
}

StreamFunction make_case(StreamCase id, const StreamParams& params, const FChoice& f)
{
    const double a0 = param(params, "alpha0", 1.0);
    const double a1 = param(params, "alpha1");
    const double a2 = param(params, "alpha2");
    const double al = param(params, "alpha");
    const double be = param(params, "beta");
    const double ga = param(params, "gamma");
    const double sg = param(params, "sign", 1.0);

    for (const auto& [key, v] : params)
        if (!std::isfinite(v)) throw ParameterError("stream parameter '" + key + "' is not finite");
    if (f.kind == FKind::poly && f.coeffs.empty())
        throw ParameterError("polynomial F needs at least one coefficient");

    switch (id) {
    case StreamCase::case1:
        return build(
            id, params, f, "F(x^2+y^2) + (alpha + beta (x^2+y^2)) arctan(x/y)",
            [=](auto x, auto y) {
                auto r2 = x * x + y * y;
                return f(r2) + (al + be * r2) * atan(x / y);
            },
            [=](double x, double y, double m) {
                return clear(std::abs(y), m) && f.defined(x * x + y * y, m);
            });

    case StreamCase::case2:
        return build(
            id, params, f, "F(alpha1 x + alpha2 y) + beta x (alpha1 x + alpha2 y) + gamma x",
            [=](auto x, auto y) {
                auto s = a1 * x + a2 * y;
                return f(s) + be * x * s + ga * x;
            },
            [=](double x, double y, double m) { return f.defined(a1 * x + a2 * y, m); });

    case StreamCase::case3:
        return build(
            id, params, f, "F(x/y) + alpha ln x",
            [=](auto x, auto y) { return f(x / y) + al * log(x); },
            [=](double x, double y, double m) {
                return clear(std::abs(y), m) && clear(x, m) && f.defined(x / y, m);
            });

    case StreamCase::case4:
        if (a0 == 0.0) throw ParameterError("case4 requires alpha0 != 0");
        return build(
            id, params, f, "F(arctan(x/y) + alpha0 ln(x^2+y^2)) + alpha arctan(x/y)",
            [=](auto x, auto y) {
                auto th = atan(x / y);
                return f(th + a0 * log(x * x + y * y)) + al * th;
            },
            [=](double x, double y, double m) {
                const double r2 = x * x + y * y;
                return clear(std::abs(y), m) && clear(std::sqrt(r2), m) &&
                       f.defined(std::atan(x / y) + a0 * std::log(r2), m);
            });

    case StreamCase::case5:
        if (al * al + be * be + ga * ga == 0.0)
            throw ParameterError("case5 requires alpha^2 + beta^2 + gamma^2 != 0");
        return build(
            id, params, f, "alpha arctan(x/y) + beta ln(x^2+y^2) + gamma (x^2+y^2)",
            [=](auto x, auto y) {
                auto r2 = x * x + y * y;
                return al * atan(x / y) + be * log(r2) + ga * r2;
            },
            [=](double x, double y, double m) {
                return clear(std::abs(y), m) && clear(std::hypot(x, y), m);
            });

    case StreamCase::case6:
        if (a1 * a1 + a2 * a2 == 0.0)
            throw ParameterError("case6 requires alpha1^2 + alpha2^2 != 0");
        if (sg != 1.0 && sg != -1.0) throw ParameterError("case6 sign must be +1 or -1");
        return build(
            id, params, f, "sign ln(alpha1 x + alpha2 y) + gamma (alpha1 x + alpha2 y)",
            [=](auto x, auto y) {
                auto s = a1 * x + a2 * y;
                return sg * log(s) + ga * s;
            },
            [=](double x, double y, double m) { return clear(a1 * x + a2 * y, m); });

    case StreamCase::case7:
        if (a0 == 0.0 || std::abs(a0) == 0.5)
            throw ParameterError("case7 requires alpha0 != 0 and alpha0 != +-1/2");
        return build(
            id, params, f, "alpha0 x^2 + y^2 / (4 alpha0)",
            [=](auto x, auto y) { return a0 * x * x + y * y / (4.0 * a0); }, {});

    case StreamCase::case8:
        if (a0 == 0.0) throw ParameterError("case8 requires alpha0 != 0");
        return build(
            id, params, f, "alpha0 x^2 - y^2 / (4 alpha0)",
            [=](auto x, auto y) { return a0 * x * x - y * y / (4.0 * a0); }, {});

    case StreamCase::case9:
        return build(
            id, params, f, "x^2 + alpha y", [=](auto x, auto y) { return x * x + al * y; }, {});

    case StreamCase::case10:
        return build(
            id, params, f, "x^2 + y^2", [](auto x, auto y) { return x * x + y * y; }, {});

    case StreamCase::case11:
        return build(
            id, params, f, "alpha1 x + alpha2 y", [=](auto x, auto y) { return a1 * x + a2 * y; },
            {});

    case StreamCase::custom: break;
    }
    throw ParameterError("make_case: custom streams are built with StreamFunction::custom");
}

Velocity velocity(const StreamFunction& s, double x, double y)
{
    const Jet2 j = s.jet(x, y);
    return {j.d_y(), -j.d_x()};
}

double divergence_residual(const StreamFunction& s, double x, double y)
{
    auto vel = [&s](const Point& p) {
        const Jet2 j = s.jet(Jet2::variable(Var::x, p.x), Jet2::variable(Var::y, p.y));
        return std::array<double, 2>{j.d_y(), -j.d_x()};
    };
    if (!s.valid(x, y)) throw DomainError("divergence_residual: singular point");
    // Only first derivatives are needed, so a short step keeps truncation
    // below roundoff near the singular sets.
    const auto jets = fd_jet_n<2>(vel, Point{0.0, x, y}, FdStep{0.0, 1e-4});
    return jets[0].d_x() + jets[1].d_y();
}

} // namespace dlv
