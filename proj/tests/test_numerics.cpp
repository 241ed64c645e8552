#include "doctest.h"

#include "dlv/errors.hpp"
#include "dlv/numerics/fd.hpp"
#include "dlv/numerics/jet.hpp"
#include "dlv/numerics/rk4.hpp"
#include "dlv/numerics/sampling.hpp"

#include <cmath>
#include <numbers>

using namespace dlv;

namespace {

Jet2 xj(double x) { return Jet2::variable(Var::x, x); }

void check_close(const Jet2& a, const Jet2& b, double tol)
{
    CHECK(std::abs(a.v - b.v) <= tol);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(a.g[i] - b.g[i]) <= tol);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(a.h[i] - b.h[i]) <= tol);
}

} // namespace

TEST_CASE("jet arithmetic")
{
    SUBCASE("constant times variable")
    {
        Jet2 r = jet_arith(Jet2(2.0), xj(3.0), JetOp::mul);
        CHECK(r.v == 6.0);
        CHECK(r.d_x() == 2.0);
        for (double h : r.h) CHECK(h == 0.0);
    }
    SUBCASE("square")
    {
        Jet2 r = jet_arith(xj(3.0), xj(3.0), JetOp::mul);
        CHECK(r.v == 9.0);
        CHECK(r.d_x() == 6.0);
        CHECK(r.d_xx() == 2.0);
    }
    SUBCASE("reciprocal")
    {
        Jet2 r = jet_arith(Jet2(1.0), xj(2.0), JetOp::div);
        CHECK(r.v == doctest::Approx(0.5));
        CHECK(r.d_x() == doctest::Approx(-0.25));
        CHECK(r.d_xx() == doctest::Approx(0.25));
    }
    SUBCASE("division by zero value")
    {
        CHECK_THROWS_AS(jet_arith(xj(1.0), xj(0.0), JetOp::div), DomainError);
    }
    SUBCASE("constants carry no derivatives")
    {
        Jet2 r = (Jet2(2.0) * Jet2(3.0) - Jet2(1.0)) / Jet2(4.0);
        for (double g : r.g) CHECK(g == 0.0);
        for (double h : r.h) CHECK(h == 0.0);
    }
    SUBCASE("mixed partial of x*y")
    {
        Jet2 r = xj(2.0) * Jet2::variable(Var::y, 5.0);
        CHECK(r.d_xy() == 1.0);
        CHECK(r.hess(2, 1) == 1.0);
    }
}

TEST_CASE("jet_compose")
{
    Jet2 e = jet_compose(ElemFn::exp, xj(0.0));
    CHECK(e.v == 1.0);
    CHECK(e.d_x() == 1.0);
    CHECK(e.d_xx() == 1.0);

    Jet2 s = jet_compose(ElemFn::sec, xj(0.0));
    CHECK(s.v == 1.0);
    CHECK(s.d_x() == 0.0);
    CHECK(s.d_xx() == doctest::Approx(1.0));

    Jet2 th = jet_compose(ElemFn::tanh, xj(0.0));
    CHECK(th.v == 0.0);
    CHECK(th.d_x() == 1.0);
    CHECK(th.d_xx() == 0.0);

    CHECK_THROWS_AS(jet_compose(ElemFn::ln, xj(0.0)), DomainError);
    CHECK_THROWS_AS(jet_compose(ElemFn::ln, xj(-1.0)), DomainError);
    CHECK_THROWS_AS(jet_compose(ElemFn::sec, xj(std::numbers::pi / 2)), DomainError);
    CHECK_THROWS_AS(jet_compose(ElemFn::sqrt, xj(-1.0)), DomainError);
}

TEST_CASE("fd_jet on simple fields")
{
    Jet2 sq = fd_jet([](const Point& p) { return p.x * p.x; }, {0, 1, 0}, 1e-2);
    CHECK(std::abs(sq.d_x() - 2.0) < 1e-10);
    CHECK(std::abs(sq.d_xx() - 2.0) < 1e-8);

    Jet2 c = fd_jet([](const Point&) { return 3.5; }, {0.2, 0.3, 0.4}, 1e-2);
    for (double g : c.g) CHECK(g == 0.0);
    for (double h : c.h) CHECK(h == 0.0);

    Jet2 fs = fd_jet([](const Point& p) { return std::sin(p.x); }, {0, 0.7, 0}, 1e-2);
    Jet2 ad = jet_compose(ElemFn::sin, xj(0.7));
    check_close(fs, ad, 1e-9);

    CHECK_THROWS_AS(fd_jet([](const Point& p) { return std::log(p.x); }, {0, 0.001, 0}, 1e-2),
                    DomainError);
}

TEST_CASE("property: elementary jets agree with fd_jet")
{
    struct Case {
        ElemFn fn;
        double lo, hi, p;
    };
    const Case cases[] = {
        {ElemFn::sin, -3, 3, 0},     {ElemFn::cos, -3, 3, 0},    {ElemFn::tan, -1.2, 1.2, 0},
        {ElemFn::sec, -1.2, 1.2, 0}, {ElemFn::sech, -3, 3, 0},   {ElemFn::tanh, -3, 3, 0},
        {ElemFn::coth, 0.3, 3, 0},   {ElemFn::exp, -2, 2, 0},    {ElemFn::ln, 0.2, 4, 0},
        {ElemFn::pow, 0.2, 3, 2.5},  {ElemFn::sqrt, 0.2, 4, 0},  {ElemFn::arctan, -3, 3, 0},
        {ElemFn::recip, 0.3, 3, 0},
    };
    SplitMix64 rng(7);
    for (const Case& c : cases) {
        for (int n = 0; n < 20; ++n) {
            // Argument g(t,x,y) = a point inside the interval plus a small smooth variation.
            const double base = rng.uniform(c.lo + 0.1, c.hi - 0.1);
            const Point p{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
            auto arg = [&](auto t, auto x, auto y) {
                return base + 0.05 * (t * x + dlv::sin(y)) - 0.05 * (p.t * p.x + std::sin(p.y));
            };
            auto s = seed(p);
            Jet2 ad = jet_compose(c.fn, arg(s[0], s[1], s[2]), c.p);
            Jet2 fd = fd_jet(
                [&](const Point& q) {
                    return jet_compose(c.fn, Jet2(arg(q.t, q.x, q.y)), c.p).v;
                },
                p);
            const double tol = std::max(1e-7, 1e-6 * std::abs(ad.v));
            for (int i = 0; i < 3; ++i) CHECK(std::abs(ad.g[i] - fd.g[i]) <= tol);
            for (int i = 0; i < 6; ++i) CHECK(std::abs(ad.h[i] - fd.h[i]) <= tol);
        }
    }
}

TEST_CASE("property: fd_jet exact on quartic polynomials")
{
    auto f = [](const Point& p) {
        return 1.0 + p.t - 2 * p.x * p.y + p.x * p.x * p.x * p.y - 0.5 * std::pow(p.y, 4) +
               p.t * p.t * p.x * p.x;
    };
    const Point p{0.3, -0.4, 0.7};
    Jet2 fd = fd_jet(f, p, 0.05);
    auto s = seed(p);
    Jet2 ad = 1.0 + s[0] - 2.0 * s[1] * s[2] + s[1] * s[1] * s[1] * s[2] -
              0.5 * s[2] * s[2] * s[2] * s[2] + s[0] * s[0] * s[1] * s[1];
    check_close(fd, ad, 1e-11);
}

TEST_CASE("compose matches direct evaluation")
{
    const Point p{0.4, 0.2, -0.3};
    auto s = seed(p);
    const Triple<Jet2> inner{s[0] * s[1], sin(s[2]) + s[0], s[1] * s[1] - s[2]};
    Triple<Jet2> args{Jet2::variable(Var::t, inner[0].v), Jet2::variable(Var::x, inner[1].v),
                      Jet2::variable(Var::y, inner[2].v)};
    auto outer = [](auto a, auto b, auto c) { return a * b + exp(c) * a; };
    Jet2 composed = compose(outer(args[0], args[1], args[2]), inner);
    Jet2 direct = outer(inner[0], inner[1], inner[2]);
    check_close(composed, direct, 1e-13);
}

TEST_CASE("rk4_integrate")
{
    VectorRhs zero = [](double, std::span<const double>, std::span<double> d) { d[0] = 0.0; };
    CHECK(rk4_integrate(zero, {2.5}, 0, 1, 1e-12)[0] == 2.5);

    VectorRhs growth = [](double, std::span<const double> y, std::span<double> d) { d[0] = y[0]; };
    CHECK(std::abs(rk4_integrate(growth, {1.0}, 0, 1, 1e-12)[0] - std::exp(1.0)) < 1e-11);

    // x' = sin 2t, y' = cos 2t at fixed t: the flow of a translation generator.
    const double t = 0.37;
    VectorRhs p1 = [t](double, std::span<const double>, std::span<double> d) {
        d[0] = std::sin(2 * t);
        d[1] = std::cos(2 * t);
    };
    auto r = rk4_integrate(p1, {0.1, 0.2}, 0, 0.8, 1e-12);
    CHECK(std::abs(r[0] - (0.1 + 0.8 * std::sin(2 * t))) < 1e-12);
    CHECK(std::abs(r[1] - (0.2 + 0.8 * std::cos(2 * t))) < 1e-12);

    VectorRhs blow = [](double, std::span<const double> y, std::span<double> d) {
        d[0] = y[0] * y[0];
    };
    CHECK_THROWS_AS(rk4_integrate(blow, {1.0}, 0, 2, 1e-10), IntegrationError);
    CHECK_THROWS_AS(rk4_integrate(zero, {1.0}, 0, 1, 0.0), IntegrationError);
}

TEST_CASE("property: rk4 forward then backward returns")
{
    VectorRhs pend = [](double s, std::span<const double> y, std::span<double> d) {
        d[0] = y[1];
        d[1] = -std::sin(y[0]) + 0.1 * std::cos(s);
    };
    SplitMix64 rng(3);
    const double tol = 1e-11;
    for (int i = 0; i < 10; ++i) {
        std::vector<double> y0{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        auto fwd = rk4_integrate(pend, y0, 0, 2, tol);
        auto back = rk4_integrate(pend, fwd, 2, 0, tol);
        for (int k = 0; k < 2; ++k) CHECK(std::abs(back[k] - y0[k]) < 10 * tol);
    }
}

TEST_CASE("sampling")
{
    SampleSpec spec;
    spec.count = 50;
    spec.margin = 0.1;
    auto excl = [](const Point& p, double m) { return std::abs(p.x) < m; };
    auto a = sample_points(spec, excl);
    auto b = sample_points(spec, excl);
    REQUIRE(a.size() == 50);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].t == b[i].t);
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].y == b[i].y);
        CHECK(std::abs(a[i].x) >= 0.1);
    }
    spec.seed = 43;
    CHECK(sample_points(spec, excl)[0].x != a[0].x);

    spec.count = 0;
    CHECK_THROWS_AS(sample_points(spec), SamplingError);
    spec.count = 5;
    CHECK_THROWS_AS(sample_points(spec, [](const Point&, double) { return true; }),
                    SamplingError);
    spec.x = {1.0, 1.0};
    CHECK_THROWS_AS(sample_points(spec), SamplingError);
}

TEST_CASE("splitmix64 reference stream")
{
    // First outputs for seed 0 from the published reference implementation.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
}
