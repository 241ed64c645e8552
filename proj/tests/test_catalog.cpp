#include "dlv/errors.hpp"
#include "dlv/residual/residual.hpp"
#include "dlv/solutions/catalog.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dlv;

namespace {

ResidualReport run(const ExactSolution& s, double tol = 1e-9)
{
    return certify(s.target, *s.field, s.domain, tol, s.label, s.margin);
}

void expect_certified(const ExactSolution& s)
{
    const auto rep = run(s);
    INFO(s.label << " max_rel=" << rep.max_rel << " fd(h)=" << rep.fd_max_rel
                 << " fd(h/2)=" << rep.fd_max_rel_half);
    CHECK(rep.pass);
    CHECK(rep.fd_points >= 40);
    CHECK(rep.max_rel < 1e-9);
}

} // namespace

TEST_CASE("rotated-frame profile at the origin matches the figure constants")
{
    const auto s = rotated_profile(SolutionId::S_RATIONAL, default_params(SolutionId::S_RATIONAL), {});
    const auto v = s.values({0.0, 0.0, 0.0});
    CHECK(v[0] == doctest::Approx(0.9375).epsilon(1e-14));
    CHECK(v[1] == doctest::Approx(0.46875).epsilon(1e-14));
    CHECK(v[2] == doctest::Approx(65.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("lab lift agrees with the rotated profile at the rotated point")
{
    for (auto id : {SolutionId::S_WEIER, SolutionId::S_SEC, SolutionId::S_TANH}) {
        const auto rot = rotated_profile(id, default_params(id), {});
        const auto lab = make_solution(id);
        const double t = 0.3, x = 0.2, y = -0.4;
        const double S = std::sin(2 * t), C = std::cos(2 * t);
        const auto a = lab.values({t, x, y});
        const auto b = rot.values({t, x * S + y * C, y * S - x * C});
        for (int i = 0; i < 3; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-14));
    }
}

TEST_CASE("rotating-frame maps are mutual inverses")
{
    for (double t : {0.0, 0.4, 2.0}) {
        const Point p{t, 0.3, -0.7};
        const auto m = lab_to_rotated_map(p);
        const auto back = rotated_to_lab_map({m[0].v, m[1].v, m[2].v});
        CHECK(back[1].v == doctest::Approx(p.x).epsilon(1e-15));
        CHECK(back[2].v == doctest::Approx(p.y).epsilon(1e-15));
    }
}

TEST_CASE("every catalog entry certifies on its target system")
{
    for (const auto& info : list_solutions()) expect_certified(make_solution(info.id));
}

TEST_CASE("plane-wave profiles certify in the rotated frame")
{
    for (auto id : {SolutionId::S_WEIER, SolutionId::S_RATIONAL, SolutionId::S_SEC,
                    SolutionId::S_TANH, SolutionId::S_COTH})
        expect_certified(rotated_profile(id, default_params(id), {}));
}

TEST_CASE("steady rational triple: all three branches, radial and lab forms")
{
    struct Case {
        double alpha;
        const char* tag;
    };
    for (auto [alpha, tag] : {Case{1.0, "generic"}, Case{6.0, "alpha=2d3"}, Case{0.0, "alpha=0"}}) {
        SystemParams p{1.0, 2.0, 3.0, 1.0, alpha};
        for (double lab_form : {0.0, 1.0}) {
            const auto s = make_solution(SolutionId::S_STEADY_RAT, p, {{"lab_form", lab_form}});
            CHECK(s.label.find(tag) != std::string::npos);
            expect_certified(s);
            expect_certified(to_lab_frame(s));
        }
    }
}

TEST_CASE("alpha = 2 d3 branch: radial and lab forms coincide; alpha = 0 halves C1")
{
    SystemParams p{1.0, 2.0, 3.0, 1.0, 6.0};
    const auto a = make_solution(SolutionId::S_STEADY_RAT, p, {{"lab_form", 0.0}});
    const auto b = make_solution(SolutionId::S_STEADY_RAT, p, {{"lab_form", 1.0}});
    CHECK(a.values({0.5, 1.3, 0.0})[2] == doctest::Approx(b.values({0.5, 1.3, 0.0})[2]).epsilon(1e-14));

    p.alpha = 0.0;
    const auto c = make_solution(SolutionId::S_STEADY_RAT, p, {{"lab_form", 0.0}, {"C1", 1.0}});
    const auto d = make_solution(SolutionId::S_STEADY_RAT, p, {{"lab_form", 1.0}, {"C1", 0.5}});
    CHECK(c.values({0.5, 1.3, 0.0})[2] == doctest::Approx(d.values({0.5, 1.3, 0.0})[2]).epsilon(1e-14));
}

TEST_CASE("self-similar family for n = 2, 3, 4 and its lab lift")
{
    for (int n : {2, 3, 4}) {
        SystemParams p{1.2, 2.5, 0.5, 1.0, 2.0 * n * 0.5};
        const auto s = make_solution(SolutionId::S_SS_N, p, {{"n", double(n)}});
        expect_certified(s);
        expect_certified(to_lab_frame(s));
    }
    expect_certified(to_lab_frame(make_solution(SolutionId::S_SS_A)));
    expect_certified(to_lab_frame(make_solution(SolutionId::S_SS_B)));
}

TEST_CASE("printed finite sum agrees for n = 2 and fails for n = 3")
{
    SystemParams p2{1.2, 2.5, 0.5, 1.0, 2.0};
    CHECK(run(make_solution(SolutionId::S_SS_N, p2, {{"n", 2.0}, {"printed_sum", 1.0}})).pass);
    SystemParams p3{1.2, 2.5, 0.5, 1.0, 3.0};
    const auto rep = run(make_solution(SolutionId::S_SS_N, p3, {{"n", 3.0}, {"printed_sum", 1.0}}));
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_rel > 1e-3);
}

TEST_CASE("negative controls: scaling u by 1.01 breaks certification")
{
    for (const auto& info : list_solutions()) {
        // With v = 0 the u equation is linear, so scaling u keeps a solution.
        if (info.id == SolutionId::S_ZERO || info.id == SolutionId::S_UV0) continue;
        const auto s = make_solution(info.id);
        const auto rep = run(perturbed(s, {1.01, 1.0, 1.0}));
        INFO(info.name << " max_rel=" << rep.max_rel);
        CHECK_FALSE(rep.pass);
        CHECK(rep.max_rel > 1e-3);
    }
}

TEST_CASE("side conditions are enforced")
{
    CHECK_THROWS_AS(make_solution(SolutionId::S_TANH, {1.0, 2.0, 1.0, 1.0, 0.0}, {}), ParameterError);
    CHECK_THROWS_AS(make_solution(SolutionId::S_COTH, {1.0, 1.0, 1.0, 1.0, 0.0}, {{"C1", 1.0}}),
                    ParameterError);
    CHECK_THROWS_AS(make_solution(SolutionId::S_STEADY_SEC, {1.0, 1.0, 1.0, 1.0, 0.0}, {}),
                    ParameterError);
    CHECK_THROWS_AS(make_solution(SolutionId::S_SS_A, {1.0, 2.0, 3.0, 1.0, 1.0}, {}), ParameterError);
    CHECK_THROWS_AS(make_solution(SolutionId::S_SS_B, {1.0, 1.0, 1.0, 1.0, 2.0}, {}), ParameterError);
    CHECK_THROWS_AS(make_solution(SolutionId::S_SS_N, {1.0, 2.0, 0.5, 1.0, 2.0}, {{"n", 3.0}}),
                    ParameterError);
    CHECK_THROWS_AS(make_solution(SolutionId::S_SS_N, {1.0, 2.0, 0.5, 1.0, 2.0}, {{"n", 2.5}}),
                    ParameterError);
    CHECK_THROWS_AS(make_solution(SolutionId::S_WEIER, {0.0, 1.0, 1.0, 1.0, 0.0}, {}), ParameterError);
}

TEST_CASE("evaluation at singular points raises DomainError")
{
    const auto rat = rotated_profile(SolutionId::S_RATIONAL, default_params(SolutionId::S_RATIONAL), {});
    // Phase 0.5 x + 0.25 y + 2 vanishes at (-4, 0).
    CHECK_THROWS_AS(rat.evaluate({0.0, -4.0, 0.0}), DomainError);
    const auto ss = make_solution(SolutionId::S_SS_A);
    CHECK_THROWS_AS(ss.evaluate({1.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(ss.values({-1.0, 1.0, 0.0}), DomainError);
    const auto sec = make_solution(SolutionId::S_STEADY_SEC);
    CHECK_THROWS_AS(sec.evaluate({0.0, std::numbers::pi, 0.0}), DomainError);
}

TEST_CASE("solution ids round-trip through their names")
{
    for (const auto& info : list_solutions()) {
        CHECK(solution_id_from_string(info.name) == info.id);
        CHECK(to_string(info.id) == info.name);
    }
    CHECK_FALSE(solution_id_from_string("S_NONE").has_value());
}

TEST_CASE("reduced ODE profiles satisfy their equations")
{
    for (const auto& np : profile_catalog()) {
        SampleSpec s;
        s.count = 300;
        s.x = np.z;
        s.margin = 1e-2;
        const auto rep = certify_profile(np.target, np.profile, s, 1e-10, np.name, np.valid);
        INFO(np.name << " max_rel=" << rep.max_rel << " fd(h)=" << rep.fd_max_rel
                     << " fd(h/2)=" << rep.fd_max_rel_half);
        CHECK(rep.pass);
    }
}

TEST_CASE("fisher front: exponential and tanh forms agree")
{
    const double b0 = 1.0, ds = 1.5, kappa = std::sqrt(b0 / (6 * ds));
    for (double z : {-4.0, -1.0, 0.0, 2.5}) {
        const double a = b0 / std::pow(1.0 + std::exp(kappa * z), 2);
        const double b = b0 / 4.0 * std::pow(1.0 - std::tanh(kappa * z / 2.0), 2);
        CHECK(a == doctest::Approx(b).epsilon(1e-14));
    }
}

TEST_CASE("fisher front solves the one-dimensional reaction-diffusion equation")
{
    const auto ff = fisher_front(1.0, 1.5, 1.0);
    SampleSpec s;
    s.count = 500;
    s.t = {0.0, 5.0};
    s.x = {-10.0, 10.0};
    const auto rep = certify(ff.target, *ff.field, s, 1e-8, "fisher");
    CHECK(rep.pass);
    CHECK(rep.max_rel < 1e-12);
    CHECK_THROWS_AS(fisher_front(-1.0, 1.0, 1.0), ParameterError);
}
