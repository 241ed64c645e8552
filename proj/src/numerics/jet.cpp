#include "dlv/numerics/jet.hpp"

#include "dlv/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dlv {

namespace {

constexpr double pole_tolerance = 1e-12;

[[noreturn]] void domain_fail(const char* fn, double x)
{
    throw DomainError(std::string(fn) + ": argument " + std::to_string(x) +
                      " outside the real domain");
}

} // namespace

ElemDerivs elementary_derivs(ElemFn fn, double x, double p)
{
    switch (fn) {
    case ElemFn::sin: {
        const double s = std::sin(x), c = std::cos(x);
        return {s, c, -s, -c};
    }
    case ElemFn::cos: {
        const double s = std::sin(x), c = std::cos(x);
        return {c, -s, -c, s};
    }
    case ElemFn::tan: {
        if (std::abs(std::cos(x)) < pole_tolerance) domain_fail("tan", x);
        const double t = std::tan(x), q = 1.0 + t * t;
        return {t, q, 2.0 * t * q, q * (2.0 + 6.0 * t * t)};
    }
    case ElemFn::sec: {
        const double c = std::cos(x);
        if (std::abs(c) < pole_tolerance) domain_fail("sec", x);
        const double s = 1.0 / c, t = std::tan(x);
        return {s, s * t, s * (1.0 + 2.0 * t * t), s * t * (5.0 + 6.0 * t * t)};
    }
    case ElemFn::sech: {
        const double s = 1.0 / std::cosh(x), t = std::tanh(x);
        return {s, -s * t, s * (2.0 * t * t - 1.0), s * t * (5.0 - 6.0 * t * t)};
    }
    case ElemFn::tanh: {
        const double t = std::tanh(x), q = 1.0 - t * t;
        return {t, q, -2.0 * t * q, q * (6.0 * t * t - 2.0)};
    }
    case ElemFn::coth: {
        if (x == 0.0) domain_fail("coth", x);
        const double c = 1.0 / std::tanh(x), q = 1.0 - c * c;
        return {c, q, -2.0 * c * q, q * (6.0 * c * c - 2.0)};
    }
    case ElemFn::exp: {
        const double e = std::exp(x);
        return {e, e, e, e};
    }
    case ElemFn::ln: {
        if (!(x > 0.0)) domain_fail("ln", x);
        const double r = 1.0 / x;
        return {std::log(x), r, -r * r, 2.0 * r * r * r};
    }
    case ElemFn::pow: {
        const bool integral = p == std::floor(p);
        if (x < 0.0 && !integral) domain_fail("pow", x);
        if (x == 0.0 && !(integral && p >= 0.0)) domain_fail("pow", x);
        // Coefficients that vanish must not meet 0^(negative) = inf.
        auto term = [x](double coef, double e) { return coef == 0.0 ? 0.0 : coef * std::pow(x, e); };
        return {std::pow(x, p), term(p, p - 1.0), term(p * (p - 1.0), p - 2.0),
                term(p * (p - 1.0) * (p - 2.0), p - 3.0)};
    }
    case ElemFn::sqrt: {
        if (!(x > 0.0)) domain_fail("sqrt", x);
        const double s = std::sqrt(x);
        return {s, 0.5 / s, -0.25 / (s * s * s), 0.375 / (s * s * s * s * s)};
    }
    case ElemFn::arctan: {
        const double q = 1.0 / (1.0 + x * x);
        return {std::atan(x), q, -2.0 * x * q * q, (6.0 * x * x - 2.0) * q * q * q};
    }
    case ElemFn::recip: {
        if (x == 0.0) domain_fail("recip", x);
        const double r = 1.0 / x;
        return {r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r};
    }
    }
    domain_fail("unknown elementary function", x);
}

Jet2 chain(const Jet2& a, const ElemDerivs& d)
{
    Jet2 r(d.f0);
    for (int i = 0; i < 3; ++i) r.g[i] = d.f1 * a.g[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const int k = Jet2::index(i, j);
            r.h[k] = d.f2 * a.g[i] * a.g[j] + d.f1 * a.h[k];
        }
    return r;
}

Jet1 chain(const Jet1& a, const ElemDerivs& d)
{
    return Jet1(d.f0, d.f1 * a.d1, d.f2 * a.d1 * a.d1 + d.f1 * a.d2,
                d.f3 * a.d1 * a.d1 * a.d1 + 3.0 * d.f2 * a.d1 * a.d2 + d.f1 * a.d3);
}

Jet2 compose(const Jet2& outer, const Triple<Jet2>& inner)
{
    Jet2 r(outer.v);
    for (int i = 0; i < 3; ++i) {
        double s = 0.0;
        for (int a = 0; a < 3; ++a) s += outer.g[a] * inner[a].g[i];
        r.g[i] = s;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            double s = 0.0;
            for (int a = 0; a < 3; ++a) {
                s += outer.g[a] * inner[a].h[Jet2::index(i, j)];
                for (int b = 0; b < 3; ++b)
                    s += outer.hess(a, b) * inner[a].g[i] * inner[b].g[j];
            }
            r.h[Jet2::index(i, j)] = s;
        }
    return r;
}

Jet2& Jet2::operator+=(const Jet2& o)
{
    v += o.v;
    for (int i = 0; i < 3; ++i) g[i] += o.g[i];
    for (int i = 0; i < 6; ++i) h[i] += o.h[i];
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& o)
{
    v -= o.v;
    for (int i = 0; i < 3; ++i) g[i] -= o.g[i];
    for (int i = 0; i < 6; ++i) h[i] -= o.h[i];
    return *this;
}

Jet2& Jet2::operator*=(const Jet2& o)
{
    Jet2 r(v * o.v);
    for (int i = 0; i < 3; ++i) r.g[i] = g[i] * o.v + v * o.g[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const int k = index(i, j);
            r.h[k] = h[k] * o.v + v * o.h[k] + g[i] * o.g[j] + g[j] * o.g[i];
        }
    return *this = r;
}

Jet2& Jet2::operator/=(const Jet2& o)
{
    return *this *= jet_compose(ElemFn::recip, o);
}

Jet2& Jet2::operator*=(double c)
{
    v *= c;
    for (auto& d : g) d *= c;
    for (auto& d : h) d *= c;
    return *this;
}

Jet2& Jet2::operator/=(double c)
{
    if (c == 0.0) throw DomainError("jet division by zero");
    return *this *= 1.0 / c;
}

Jet2 operator-(const Jet2& a)
{
    Jet2 r = a;
    return r *= -1.0;
}

Jet2 operator/(double c, const Jet2& a)
{
    return c * jet_compose(ElemFn::recip, a);
}

Jet2 jet_arith(const Jet2& a, const Jet2& b, JetOp op)
{
    switch (op) {
    case JetOp::add: return a + b;
    case JetOp::sub: return a - b;
    case JetOp::mul: return a * b;
    case JetOp::div: return a / b;
    }
    return a;
}

Jet1& Jet1::operator+=(const Jet1& o)
{
    v += o.v;
    d1 += o.d1;
    d2 += o.d2;
    d3 += o.d3;
    return *this;
}

Jet1& Jet1::operator-=(const Jet1& o)
{
    v -= o.v;
    d1 -= o.d1;
    d2 -= o.d2;
    d3 -= o.d3;
    return *this;
}

Jet1& Jet1::operator*=(const Jet1& o)
{
    *this = Jet1(v * o.v, d1 * o.v + v * o.d1, d2 * o.v + 2.0 * d1 * o.d1 + v * o.d2,
                 d3 * o.v + 3.0 * d2 * o.d1 + 3.0 * d1 * o.d2 + v * o.d3);
    return *this;
}

Jet1& Jet1::operator/=(const Jet1& o)
{
    return *this *= jet_compose(ElemFn::recip, o);
}

Jet1& Jet1::operator*=(double c)
{
    v *= c;
    d1 *= c;
    d2 *= c;
    d3 *= c;
    return *this;
}

Jet1& Jet1::operator/=(double c)
{
    if (c == 0.0) throw DomainError("jet division by zero");
    return *this *= 1.0 / c;
}

Jet1 operator/(double c, const Jet1& a)
{
    return c * jet_compose(ElemFn::recip, a);
}

} // namespace dlv
