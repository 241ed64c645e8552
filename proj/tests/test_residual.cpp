#include "dlv/errors.hpp"
#include "dlv/residual/residual.hpp"
#include "dlv/solutions/catalog.hpp"

#include <doctest.h>

#include <cmath>

using namespace dlv;

namespace {

// Smooth profiles of two variables used to test the reductions.
template <typename T>
Triple<T> profile(const T& a, const T& b)
{
    return {dlv::sin(a) + dlv::cos(b) * a, dlv::exp(-a / 3.0) + b * b, a * b + 1.0};
}

double max_diff(const Triple<double>& a, const Triple<double>& b)
{
    double m = 0.0;
    for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]) / (1.0 + std::abs(a[i])));
    return m;
}

Triple<double> lhs(const SystemSpec& spec, const Point& q)
{
    const auto s = seed(q);
    const auto r = pde_residual_terms(spec, profile(s[1], s[2]), q);
    return {r[0].value, r[1].value, r[2].value};
}

} // namespace

TEST_CASE("full system residual matches a hand computation")
{
    // u = x t, v = y, w = 1 with Psi = x^2 + y^2:
    // R1 = x + 2 y t + x t y, R2 = -2x + x t y, R3 = -x t y.
    const SystemParams p{1.0, 2.0, 3.0, 1.0, 0.0};
    const auto spec = linear_flow_system(p);
    auto f = [](auto t, auto x, auto y) {
        using T = decltype(x);
        return Triple<T>{x * t, y, T(1.0)};
    };
    const auto field = make_formula_field(f, [](const Point&, double) { return true; });
    const Point q{0.5, 0.3, -0.7};
    const auto r = pde_residual(spec, *field, q);
    CHECK(r[0] == doctest::Approx(0.3 + 2 * -0.7 * 0.5 + 0.3 * 0.5 * -0.7).epsilon(1e-14));
    CHECK(r[1] == doctest::Approx(-2 * 0.3 + 0.3 * 0.5 * -0.7).epsilon(1e-14));
    CHECK(r[2] == doctest::Approx(-0.3 * 0.5 * -0.7).epsilon(1e-14));
    const auto rf = pde_residual(spec, *field, q, DiffMode::fd);
    for (int i = 0; i < 3; ++i) CHECK(rf[i] == doctest::Approx(r[i]).epsilon(1e-8));
}

TEST_CASE("trivial solutions have zero residual")
{
    for (auto id : {SolutionId::S_ZERO, SolutionId::S_UV0}) {
        const auto s = make_solution(id);
        const auto r = pde_residual(s.target, *s.field, {0.4, 0.1, 0.2});
        for (double v : r) CHECK(v == 0.0);
    }
}

TEST_CASE("relative scale is one plus the largest term")
{
    const SystemSpec spec{SystemKind::pde_rotated_free, {2.0, 1.0, 1.0, 1.0, 0.0}, {}, nullptr};
    auto f = [](auto t, auto x, auto) {
        using T = decltype(x);
        return Triple<T>{x * x, T(3.0), t};
    };
    const auto field = make_formula_field(f, [](const Point&, double) { return true; });
    const Point q{1.0, 2.0, 0.0};
    const auto r = pde_residual_terms(spec, field->jets(q), q);
    // u eq: u_t = 0, d1 lap u = 4, uv = 12.
    CHECK(r[0].value == doctest::Approx(-4.0 + 12.0));
    CHECK(r[0].scale == doctest::Approx(13.0));
}

TEST_CASE("reduced self-similar system is the rotated system under the ansatz")
{
    const double beta = 0.6;
    SystemSpec red{SystemKind::pde_reduced_selfsim, {1.0, 2.0, 3.0, 1.0, 0.0}, {{"beta", beta}}, nullptr};
    SystemSpec full{SystemKind::pde_rotated_free, red.params, {}, nullptr};
    auto f = [=](auto t, auto x, auto y) {
        const auto r2 = x * x + y * y;
        const auto pr = profile(r2 / t, dlv::atan(y / x) + 0.5 * beta * dlv::log(r2));
        return Triple<decltype(x)>{pr[0] / t, pr[1] / t, pr[2] / t};
    };
    const auto field = make_formula_field(f, [](const Point& p, double) { return p.x > 0 && p.t > 0; });
    for (const Point q : {Point{0.7, 0.4, 0.3}, Point{1.5, 1.2, -0.8}, Point{0.3, 0.9, 0.1}}) {
        const double r2 = q.x * q.x + q.y * q.y;
        const Point w{0.0, r2 / q.t, std::atan(q.y / q.x) + 0.5 * beta * std::log(r2)};
        auto l = lhs(red, w);
        for (double& v : l) v = -v / (q.t * q.t);
        CHECK(max_diff(pde_residual(full, *field, q), l) < 1e-12);
    }
}

TEST_CASE("reduced travelling-wave and polar systems match the rotated system")
{
    const double t0 = 0.7;
    const SystemParams p{1.0, 2.0, 3.0, 1.0, 0.0};
    SystemSpec full{SystemKind::pde_rotated_free, p, {}, nullptr};

    SystemSpec wave{SystemKind::pde_reduced_wave, p, {{"t0", t0}}, nullptr};
    auto fw = [=](auto t, auto x, auto y) { return profile(t - t0 * x, y); };
    const auto w_field = make_formula_field(fw, [](const Point&, double) { return true; });

    SystemSpec polar{SystemKind::pde_reduced_polar, p, {{"t0", t0}}, nullptr};
    auto fp = [=](auto t, auto x, auto y) { return profile(x * x + y * y, t + t0 * dlv::atan(y / x)); };
    const auto p_field = make_formula_field(fp, [](const Point& q, double) { return q.x > 0; });

    for (const Point q : {Point{0.7, 0.4, 0.3}, Point{1.5, 1.2, -0.8}, Point{0.3, 0.9, 0.1}}) {
        auto lw = lhs(wave, {0.0, q.t - t0 * q.x, q.y});
        for (double& v : lw) v = -v;
        CHECK(max_diff(pde_residual(full, *w_field, q), lw) < 1e-12);

        auto lp = lhs(polar, {0.0, q.x * q.x + q.y * q.y, q.t + t0 * std::atan(q.y / q.x)});
        for (double& v : lp) v = -v;
        CHECK(max_diff(pde_residual(full, *p_field, q), lp) < 1e-12);
    }
}

TEST_CASE("stationary system equals the rotated system for time-independent fields")
{
    const SystemParams p{1.0, 2.0, 3.0, 1.0, 0.0};
    SystemSpec st{SystemKind::pde_stationary, p, {}, nullptr};
    SystemSpec full{SystemKind::pde_rotated_free, p, {}, nullptr};
    auto f = [](auto, auto x, auto y) { return profile(x, y); };
    const auto field = make_formula_field(f, [](const Point&, double) { return true; });
    const Point q{0.2, 0.5, -0.4};
    auto a = pde_residual(st, *field, q);
    for (double& v : a) v = -v;
    CHECK(max_diff(pde_residual(full, *field, q), a) < 1e-14);
}

TEST_CASE("ODE kinds: hand-checked residuals")
{
    const SystemParams p{1.0, 2.0, 3.0, 1.0, 0.0};
    SystemSpec em{SystemKind::ode_f_emden, p, {{"C0", 0.3}}, nullptr};
    const Profile f4 = [](const Jet1& r) { return std::vector<Jet1>{4.0 / (r * r)}; };
    // Non-zero C0 leaves C0/d2 r f = 4 C0 / (d2 r).
    for (double r : {0.5, 1.0, 2.0}) CHECK(ode_residual(em, f4, r)[0] == doctest::Approx(4 * 0.3 / (2.0 * r)));

    SystemSpec ss{SystemKind::ode_selfsim, {1.0, 2.0, 3.0, 1.0, 0.5}, {}, nullptr};
    const Profile pw = [](const Jet1& w) {
        return std::vector<Jet1>{2.0 * (4.0 - 0.5) / w, 2.0 * (2.0 - 0.5) / w, Jet1(0.0)};
    };
    for (double w : {0.3, 1.0, 4.0}) {
        const auto r = ode_residual(ss, pw, w);
        CHECK(std::abs(r[0]) < 1e-12);
        CHECK(std::abs(r[1]) < 1e-12);
    }
    CHECK_THROWS_AS(ode_residual(SystemSpec{}, pw, 1.0), ParameterError);
    CHECK_THROWS_AS(pde_residual(ss, *make_solution(SolutionId::S_ZERO).field, {}), ParameterError);
}

TEST_CASE("fd_profile is exact on low-degree polynomials")
{
    const Profile q = [](const Jet1& z) { return std::vector<Jet1>{z * z * z * z - 2.0 * z * z * z + z}; };
    const double z = 0.8;
    const auto fd = fd_profile(q, z, 1e-2);
    const auto ex = q(Jet1::variable(z));
    CHECK(fd[0].d1 == doctest::Approx(ex[0].d1).epsilon(1e-10));
    CHECK(fd[0].d2 == doctest::Approx(ex[0].d2).epsilon(1e-9));
    CHECK(fd[0].d3 == doctest::Approx(ex[0].d3).epsilon(1e-7));
}

TEST_CASE("certification is deterministic and seed-independent for the Weierstrass wave")
{
    const auto s = make_solution(SolutionId::S_WEIER);
    const auto a = certify(s.target, *s.field, s.domain, 1e-9);
    const auto b = certify(s.target, *s.field, s.domain, 1e-9);
    CHECK(a.max_rel == b.max_rel);
    auto other = s.domain;
    other.seed = 7;
    const auto c = certify(s.target, *s.field, other, 1e-9);
    CHECK(a.pass);
    CHECK(c.pass);
}

TEST_CASE("system kind names round-trip and pde_full needs a stream")
{
    for (const auto& k : system_kinds()) CHECK(system_kind_from_string(k.name) == k.kind);
    SystemSpec bad{SystemKind::pde_full, {}, {}, nullptr};
    const auto s = make_solution(SolutionId::S_ZERO);
    CHECK_THROWS_AS(pde_residual(bad, *s.field, {}), ParameterError);
    CHECK_THROWS_AS(SystemParams({-1.0, 1.0, 1.0, 1.0, 0.0}).validate(), ParameterError);
}
