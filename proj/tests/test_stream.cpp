#include "dlv/errors.hpp"
#include "dlv/numerics/fd.hpp"
#include "dlv/numerics/sampling.hpp"
#include "dlv/stream/stream_function.hpp"

#include <doctest.h>

#include <cmath>

using namespace dlv;

namespace {

std::vector<StreamFunction> all_rows()
{
    std::vector<StreamFunction> out;
    for (int c = 1; c <= 11; ++c) {
        const auto id = static_cast<StreamCase>(c);
        if (c <= 4) {
            for (FKind k : {FKind::identity, FKind::square, FKind::sin, FKind::ln, FKind::exp, FKind::poly})
                out.push_back(make_case(id, default_stream_params(id), FChoice{k, {0.5, -1.0, 0.25}}));
        } else {
            out.push_back(make_case(id, default_stream_params(id)));
        }
    }
    return out;
}

std::vector<Point> valid_points(const StreamFunction& s, int n, double margin = 0.3)
{
    SampleSpec spec;
    spec.count = n;
    spec.x = {-2.0, 2.0};
    spec.y = {-2.0, 2.0};
    spec.margin = margin;
    return sample_points(spec, [&s](const Point& p, double m) { return !s.valid(p.x, p.y, m); });
}

} // namespace

TEST_CASE("case10 values, derivatives and velocity")
{
    const auto s = make_case(StreamCase::case10);
    CHECK(s.value(1.0, 2.0) == 5.0);
    const Jet2 j = s.jet(1.0, 2.0);
    CHECK(j.d_x() == 2.0);
    CHECK(j.d_y() == 4.0);
    CHECK(j.d_xx() == 2.0);
    CHECK(j.d_xy() == 0.0);
    CHECK(j.d_t() == 0.0);
    const auto v = velocity(s, 1.0, 2.0);
    CHECK(v.u1 == 4.0);
    CHECK(v.u2 == -2.0);
    for (const auto& p : valid_points(s, 50)) {
        const auto w = velocity(s, p.x, p.y);
        CHECK(w.u1 == 2.0 * p.y);
        CHECK(w.u2 == -2.0 * p.x);
    }
}

TEST_CASE("case11 gives a constant field; zero parameters give rest")
{
    const auto s = make_case(StreamCase::case11, {{"alpha1", 0.7}, {"alpha2", -0.3}});
    const auto v = velocity(s, 0.4, 1.9);
    CHECK(v.u1 == doctest::Approx(-0.3));
    CHECK(v.u2 == doctest::Approx(-0.7));
    const auto z = make_case(StreamCase::case11, {});
    CHECK(z.value(1.0, 1.0) == 0.0);
    CHECK(velocity(z, 1.0, 1.0).u1 == 0.0);
    CHECK(velocity(z, 1.0, 1.0).u2 == 0.0);
}

TEST_CASE("case1 with F = square: derivative against differences")
{
    const auto s = make_case(StreamCase::case1, {{"alpha", 1.0}, {"beta", 0.0}}, FChoice{FKind::square, {}});
    const double x = 0.6, y = 0.8;
    CHECK(s.value(x, y) == doctest::Approx(1.0 + std::atan(0.75)).epsilon(1e-15));
    // Psi_x = 4x r^2 + y / r^2 by hand.
    CHECK(s.jet(x, y).d_x() == doctest::Approx(4 * x + y).epsilon(1e-14));
    const Jet2 fd = fd_jet([&s](const Point& p) { return s.value(p.x, p.y); }, {0.0, x, y});
    CHECK(std::abs(fd.d_x() - s.jet(x, y).d_x()) < 1e-9);
}

TEST_CASE("case5 vortex: beta ln(x^2+y^2) gives 2 beta (y, -x) / r^2")
{
    const double b = 0.7;
    const auto s = make_case(StreamCase::case5, {{"beta", b}});
    for (const auto& p : valid_points(s, 40)) {
        const double r2 = p.x * p.x + p.y * p.y;
        const auto v = velocity(s, p.x, p.y);
        CHECK(v.u1 == doctest::Approx(2 * b * p.y / r2).epsilon(1e-13));
        CHECK(v.u2 == doctest::Approx(-2 * b * p.x / r2).epsilon(1e-13));
    }
}

TEST_CASE("every row: exact derivatives agree with differences and flow is solenoidal")
{
    for (const auto& s : all_rows()) {
        const auto pts = valid_points(s, 40);
        REQUIRE(pts.size() == 40);
        for (const auto& p : pts) {
            const Jet2 ex = s.jet(p.x, p.y);
            const Jet2 fd = fd_jet([&s](const Point& q) { return s.value(q.x, q.y); }, p, FdStep{0.0, 3e-4});
            const double scale = 1.0 + std::abs(ex.v);
            INFO(to_string(s.id()) << " F=" << to_string(s.f_choice().kind) << " at " << p.x << "," << p.y);
            for (int i = 0; i < 3; ++i) CHECK(std::abs(ex.g[i] - fd.g[i]) < 1e-7 * scale);
            for (int i = 0; i < 6; ++i) CHECK(std::abs(ex.h[i] - fd.h[i]) < 1e-7 * (scale + std::abs(ex.h[i])));
            CHECK(std::abs(divergence_residual(s, p.x, p.y)) < 1e-8);
        }
    }
}

TEST_CASE("custom stream exp(x) sin(y)")
{
    const auto s = StreamFunction::custom_formula("exp(x) sin(y)", [](auto x, auto y) { return dlv::exp(x) * dlv::sin(y); });
    CHECK(s.id() == StreamCase::custom);
    for (const auto& p : valid_points(s, 20)) {
        CHECK(std::abs(divergence_residual(s, p.x, p.y)) < 1e-8);
        CHECK(s.jet(p.x, p.y).d_x() == doctest::Approx(std::exp(p.x) * std::sin(p.y)));
    }
}

TEST_CASE("row restrictions and singular sets")
{
    CHECK_THROWS_AS(make_case(StreamCase::case5, {}), ParameterError);
    CHECK_THROWS_AS(make_case(StreamCase::case6, {{"gamma", 1.0}}), ParameterError);
    CHECK_THROWS_AS(make_case(StreamCase::case6, {{"alpha1", 1.0}, {"sign", 2.0}}), ParameterError);
    CHECK_THROWS_AS(make_case(StreamCase::case7, {{"alpha0", 0.5}}), ParameterError);
    CHECK_THROWS_AS(make_case(StreamCase::case7, {{"alpha0", -0.5}}), ParameterError);
    CHECK_THROWS_AS(make_case(StreamCase::case7, {{"alpha0", 0.0}}), ParameterError);
    CHECK_THROWS_AS(make_case(StreamCase::case8, {{"alpha0", 0.0}}), ParameterError);
    CHECK_THROWS_AS(make_case(StreamCase::case4, {{"alpha0", 0.0}}), ParameterError);
    CHECK_THROWS_AS(make_case(StreamCase::custom), ParameterError);
    CHECK_THROWS_AS(make_case(StreamCase::case9, {{"alpha", NAN}}), ParameterError);
    CHECK_THROWS_AS(make_case(StreamCase::case1, {}, FChoice{FKind::poly, {}}), ParameterError);
    CHECK_NOTHROW(make_case(StreamCase::case7, {{"alpha0", 0.25}}));

    const auto c1 = make_case(StreamCase::case1, default_stream_params(StreamCase::case1));
    CHECK_FALSE(c1.valid(1.0, 0.0));
    CHECK_THROWS_AS(c1.jet(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(velocity(c1, 1.0, 0.0), DomainError);
    const auto c3 = make_case(StreamCase::case3, default_stream_params(StreamCase::case3));
    CHECK_FALSE(c3.valid(-1.0, 1.0));
    CHECK(c3.valid(1.0, 1.0));
    const auto ln = make_case(StreamCase::case2, default_stream_params(StreamCase::case2), FChoice{FKind::ln, {}});
    CHECK_FALSE(ln.valid(-1.0, -1.0));
}

TEST_CASE("case and F names round-trip")
{
    for (int c = 1; c <= 12; ++c) {
        const auto id = static_cast<StreamCase>(c);
        CHECK(stream_case_from_string(to_string(id)) == id);
    }
    for (FKind k : {FKind::identity, FKind::square, FKind::sin, FKind::ln, FKind::exp, FKind::poly})
        CHECK(f_kind_from_string(to_string(k)) == k);
    CHECK_FALSE(stream_case_from_string("case12").has_value());
}
