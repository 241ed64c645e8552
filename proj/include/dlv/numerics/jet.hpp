#pragma once

#include <array>
#include <cmath>

namespace dlv {

template <typename T>
using Triple = std::array<T, 3>;

/// Space-time point (t, x, y). Radial and reduced systems reuse the slots,
/// e.g. (t, r, unused) or (unused, omega1, omega2).
struct Point {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
};

enum class Var { t = 0, x = 1, y = 2 };

/// Value, gradient and Hessian of a scalar field with respect to (t, x, y).
///
/// The Hessian is stored once per unordered pair, so mixed partials are
/// symmetric by construction. Layout of `h`: tt, tx, ty, xx, xy, yy.
struct Jet2 {
    double v = 0.0;
    std::array<double, 3> g{};
    std::array<double, 6> h{};

    constexpr Jet2() = default;
    constexpr explicit Jet2(double value) : v(value) {}

    static constexpr Jet2 constant(double c) { return Jet2(c); }

    static constexpr Jet2 variable(Var which, double value)
    {
        Jet2 j(value);
        j.g[static_cast<int>(which)] = 1.0;
        return j;
    }

    static constexpr int index(int i, int j)
    {
        if (i > j) {
            int tmp = i;
            i = j;
            j = tmp;
        }
        // (0,0)=0 (0,1)=1 (0,2)=2 (1,1)=3 (1,2)=4 (2,2)=5
        return i == 0 ? j : (i == 1 ? 2 + j : 5);
    }

    constexpr double hess(int i, int j) const { return h[index(i, j)]; }

    constexpr double d_t() const { return g[0]; }
    constexpr double d_x() const { return g[1]; }
    constexpr double d_y() const { return g[2]; }
    constexpr double d_tt() const { return h[0]; }
    constexpr double d_tx() const { return h[1]; }
    constexpr double d_ty() const { return h[2]; }
    constexpr double d_xx() const { return h[3]; }
    constexpr double d_xy() const { return h[4]; }
    constexpr double d_yy() const { return h[5]; }
    constexpr double laplacian() const { return h[3] + h[5]; }

    Jet2& operator+=(const Jet2& o);
    Jet2& operator-=(const Jet2& o);
    Jet2& operator*=(const Jet2& o);
    Jet2& operator/=(const Jet2& o);
    Jet2& operator+=(double c) { v += c; return *this; }
    Jet2& operator-=(double c) { v -= c; return *this; }
    Jet2& operator*=(double c);
    Jet2& operator/=(double c);
};

/// Univariate jet carrying derivatives up to third order; used for ODE profiles.
struct Jet1 {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;

    constexpr Jet1() = default;
    constexpr explicit Jet1(double value) : v(value) {}
    constexpr Jet1(double value, double first, double second, double third)
        : v(value), d1(first), d2(second), d3(third) {}

    static constexpr Jet1 constant(double c) { return Jet1(c); }
    static constexpr Jet1 variable(double z) { return Jet1(z, 1.0, 0.0, 0.0); }

    Jet1& operator+=(const Jet1& o);
    Jet1& operator-=(const Jet1& o);
    Jet1& operator*=(const Jet1& o);
    Jet1& operator/=(const Jet1& o);
    Jet1& operator+=(double c) { v += c; return *this; }
    Jet1& operator-=(double c) { v -= c; return *this; }
    Jet1& operator*=(double c);
    Jet1& operator/=(double c);
};

/// Elementary functions understood by the jet chain rule.
enum class ElemFn { sin, cos, tan, sec, sech, tanh, coth, exp, ln, pow, sqrt, arctan, recip };

/// f, f', f'', f''' of an elementary function at a real argument.
struct ElemDerivs {
    double f0 = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
};

/// Derivatives of `fn` at `x`; `p` is the exponent for ElemFn::pow.
/// Throws DomainError outside the real domain (ln of a non-positive number,
/// sec/tan within 1e-12 of a pole, division by zero, ...).
ElemDerivs elementary_derivs(ElemFn fn, double x, double p = 0.0);

Jet2 chain(const Jet2& a, const ElemDerivs& d);
Jet1 chain(const Jet1& a, const ElemDerivs& d);

inline Jet2 jet_compose(ElemFn fn, const Jet2& a, double p = 0.0)
{
    return chain(a, elementary_derivs(fn, a.v, p));
}
inline Jet1 jet_compose(ElemFn fn, const Jet1& a, double p = 0.0)
{
    return chain(a, elementary_derivs(fn, a.v, p));
}

/// Second-order chain rule for a map R^3 -> R^3 -> R: `outer` holds the
/// derivatives of f with respect to its own three arguments, `inner` the jets
/// of those arguments with respect to the base variables.
Jet2 compose(const Jet2& outer, const Triple<Jet2>& inner);

enum class JetOp { add, sub, mul, div };

/// Binary operation with exact second-order propagation. Division by a jet
/// with zero value throws DomainError.
Jet2 jet_arith(const Jet2& a, const Jet2& b, JetOp op);

// Jet2 arithmetic ---------------------------------------------------------

inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
inline Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
inline Jet2 operator+(Jet2 a, double c) { return a += c; }
inline Jet2 operator-(Jet2 a, double c) { return a -= c; }
inline Jet2 operator*(Jet2 a, double c) { return a *= c; }
inline Jet2 operator/(Jet2 a, double c) { return a /= c; }
inline Jet2 operator+(double c, Jet2 a) { return a += c; }
inline Jet2 operator*(double c, Jet2 a) { return a *= c; }
Jet2 operator-(const Jet2& a);
inline Jet2 operator-(double c, const Jet2& a) { return -a + c; }
Jet2 operator/(double c, const Jet2& a);

// Jet1 arithmetic ---------------------------------------------------------

inline Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
inline Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
inline Jet1 operator*(Jet1 a, const Jet1& b) { return a *= b; }
inline Jet1 operator/(Jet1 a, const Jet1& b) { return a /= b; }
inline Jet1 operator+(Jet1 a, double c) { return a += c; }
inline Jet1 operator-(Jet1 a, double c) { return a -= c; }
inline Jet1 operator*(Jet1 a, double c) { return a *= c; }
inline Jet1 operator/(Jet1 a, double c) { return a /= c; }
inline Jet1 operator+(double c, Jet1 a) { return a += c; }
inline Jet1 operator*(double c, Jet1 a) { return a *= c; }
inline Jet1 operator-(const Jet1& a) { return Jet1(-a.v, -a.d1, -a.d2, -a.d3); }
inline Jet1 operator-(double c, const Jet1& a) { return -a + c; }
Jet1 operator/(double c, const Jet1& a);

// Elementary functions. Formulas are written once as templates over the
// scalar type; these overloads make the same spelling work for double,
// Jet2 and Jet1.

inline double value_of(double a) { return a; }
inline double value_of(const Jet2& a) { return a.v; }
inline double value_of(const Jet1& a) { return a.v; }

inline double sin(double a) { return std::sin(a); }
inline double cos(double a) { return std::cos(a); }
inline double tan(double a) { return std::tan(a); }
inline double sec(double a) { return 1.0 / std::cos(a); }
inline double sech(double a) { return 1.0 / std::cosh(a); }
inline double tanh(double a) { return std::tanh(a); }
inline double coth(double a) { return 1.0 / std::tanh(a); }
inline double exp(double a) { return std::exp(a); }
inline double log(double a) { return std::log(a); }
inline double pow(double a, double p) { return std::pow(a, p); }
inline double sqrt(double a) { return std::sqrt(a); }
inline double atan(double a) { return std::atan(a); }
inline double square(double a) { return a * a; }

#define DLV_JET_ELEMENTARY(name, tag)                                                    \
    inline Jet2 name(const Jet2& a) { return jet_compose(ElemFn::tag, a); }              \
    inline Jet1 name(const Jet1& a) { return jet_compose(ElemFn::tag, a); }

DLV_JET_ELEMENTARY(sin, sin)
DLV_JET_ELEMENTARY(cos, cos)
DLV_JET_ELEMENTARY(tan, tan)
DLV_JET_ELEMENTARY(sec, sec)
DLV_JET_ELEMENTARY(sech, sech)
DLV_JET_ELEMENTARY(tanh, tanh)
DLV_JET_ELEMENTARY(coth, coth)
DLV_JET_ELEMENTARY(exp, exp)
DLV_JET_ELEMENTARY(log, ln)
DLV_JET_ELEMENTARY(sqrt, sqrt)
DLV_JET_ELEMENTARY(atan, arctan)

#undef DLV_JET_ELEMENTARY

inline Jet2 pow(const Jet2& a, double p) { return jet_compose(ElemFn::pow, a, p); }
inline Jet1 pow(const Jet1& a, double p) { return jet_compose(ElemFn::pow, a, p); }
inline Jet2 square(const Jet2& a) { return a * a; }
inline Jet1 square(const Jet1& a) { return a * a; }

/// Seeds the three base variables at a point.
inline Triple<Jet2> seed(const Point& p)
{
    return {Jet2::variable(Var::t, p.t), Jet2::variable(Var::x, p.x),
            Jet2::variable(Var::y, p.y)};
}

} // namespace dlv
