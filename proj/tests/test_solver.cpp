#include "dlv/errors.hpp"
#include "dlv/solver/solver.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace dlv;

namespace {

const Grid2D unit_grid{17, 17, {0.2, 1.0}, {0.2, 1.0}};

FieldState constant_state(const Discretization& d, Triple<double> c)
{
    FieldState s;
    s.u.assign(d.size(), c[0]);
    s.v.assign(d.size(), c[1]);
    s.w.assign(d.size(), c[2]);
    return s;
}

SystemSpec zero_stream_system(const SystemParams& p)
{
    SystemSpec spec{SystemKind::pde_full, p, {}, nullptr};
    spec.stream = std::make_shared<StreamFunction>(
        StreamFunction::custom_formula("0", [](auto x, auto) { return 0.0 * x; }));
    return spec;
}

} // namespace

TEST_CASE("constant states with v = 0 are stationary")
{
    const Discretization d(linear_flow_system({1.0, 2.0, 3.0, 1.0, 0.0}), unit_grid);
    const auto r = d.rhs(constant_state(d, {1.5, 0.0, 0.5}));
    for (const auto* a : {&r.u, &r.v, &r.w})
        for (double x : *a) CHECK(x == 0.0);
}

TEST_CASE("discrete Laplacian of x^2 is 2")
{
    const Discretization d(zero_stream_system({1.5, 1.0, 1.0, 1.0, 0.0}), unit_grid);
    FieldState s = constant_state(d, {0.0, 0.0, 0.0});
    for (std::size_t n = 0; n < d.size(); ++n) s.u[n] = d.node(n, 0.0).x * d.node(n, 0.0).x;
    const auto r = d.rhs(s);
    for (std::size_t n = 0; n < d.size(); ++n) {
        if (d.on_boundary(n)) CHECK(r.u[n] == 0.0);
        else CHECK(r.u[n] == doctest::Approx(2.0 * 1.5).epsilon(1e-10));
    }
}

TEST_CASE("rhs approximates the exact time derivative to second order")
{
    const auto sol = make_solution(SolutionId::S_RATIONAL);
    double prev = 0.0;
    for (int n : {17, 33, 65}) {
        const Discretization d(sol.target, {n, n, {0.2, 1.0}, {0.2, 1.0}});
        const double t = 0.2;
        const auto r = d.rhs(sample_state(d, *sol.field, t));
        double err = 0.0;
        for (std::size_t k = 0; k < d.size(); ++k) {
            if (d.on_boundary(k)) continue;
            const auto j = sol.field->jets(d.node(k, t));
            err = std::max({err, std::abs(r.u[k] - j[0].d_t()), std::abs(r.v[k] - j[1].d_t()),
                            std::abs(r.w[k] - j[2].d_t())});
        }
        if (prev > 0.0) CHECK(std::log2(prev / err) == doctest::Approx(2.0).epsilon(0.15));
        prev = err;
    }
}

TEST_CASE("zero data stays zero")
{
    const Discretization d(linear_flow_system({1.0, 2.0, 3.0, 1.0, 0.0}), unit_grid);
    FieldState s = constant_state(d, {0.0, 0.0, 0.0});
    const auto z = make_solution(SolutionId::S_ZERO);
    const auto bc = exact_boundary(d, *z.field);
    for (int i = 0; i < 10; ++i) s = step(d, s, d.stable_dt(0.4), bc);
    for (double x : s.u) CHECK(x == 0.0);
    for (double x : s.w) CHECK(x == 0.0);
}

TEST_CASE("a steady solution is preserved up to truncation error")
{
    const auto sol = to_lab_frame(make_solution(SolutionId::S_STEADY_RAT));
    const Discretization d(sol.target, {65, 65, {1.0, 1.5}, {1.0, 1.5}});
    const auto bc = exact_boundary(d, *sol.field);
    const auto s0 = sample_state(d, *sol.field, 0.0);
    FieldState s = s0;
    for (int i = 0; i < 100; ++i) s = step(d, s, d.stable_dt(0.4), bc);
    double diff = 0.0;
    for (std::size_t n = 0; n < d.size(); ++n)
        diff = std::max({diff, std::abs(s.u[n] - s0.u[n]), std::abs(s.v[n] - s0.v[n]), std::abs(s.w[n] - s0.w[n])});
    CHECK(diff < 1e-6);
}

TEST_CASE("time step above the stability bound is detected")
{
    const auto sol = make_solution(SolutionId::S_RATIONAL);
    SimulationConfig c{sol, unit_grid, 0.0, 0.3, 4.0};
    CHECK_THROWS_AS(simulate(c), SolverError);
}

TEST_CASE("singular sets inside the box are rejected")
{
    SimulationConfig c{make_solution(SolutionId::S_SS_A), {17, 17, {0.0, 1.0}, {0.0, 1.0}}, 0.5, 0.6};
    CHECK_THROWS_AS(simulate(c), ParameterError);
    c.exact = make_solution(SolutionId::S_RATIONAL);
    c.grid = {4, 17, {0.0, 1.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(simulate(c), ParameterError);
}

TEST_CASE("heat kernel control converges at second order")
{
    SimulationConfig c{heat_kernel_solution({1.0, 1.0, 0.5, 1.0, 0.0}, 0.1), {17, 17, {-1, 1}, {-1, 1}}, 0.0, 0.1};
    const auto rep = convergence_study(c, 3);
    for (double p : rep.orders_linf) CHECK(p == doctest::Approx(2.0).epsilon(0.15));
    CHECK(rep.levels[2].error.linf < rep.levels[1].error.linf);
}

TEST_CASE("radial self-similar solution converges at second order")
{
    SimulationConfig c{make_solution(SolutionId::S_SS_A), {33, 1, {0.5, 2.0}, {}}, 0.5, 0.8};
    const auto rep = convergence_study(c, 3);
    for (double p : rep.orders_linf) CHECK(p == doctest::Approx(2.0).epsilon(0.15));
    c.scheme = Convection::upwind;
    const auto up = convergence_study(c, 3);
    for (double p : up.orders_linf) CHECK(p == doctest::Approx(1.0).epsilon(0.3));
}

TEST_CASE("time-step refinement barely changes the error")
{
    SimulationConfig c{make_solution(SolutionId::S_RATIONAL), {17, 17, {0.2, 1.0}, {0.2, 1.0}}, 0.0, 0.1};
    const double e1 = simulate(c).error.linf;
    c.cfl = 0.2;
    const double e2 = simulate(c).error.linf;
    CHECK(std::abs(e1 - e2) < 0.05 * e1);
}

TEST_CASE("reaction cancels in the total of u and w")
{
    const auto sol = make_solution(SolutionId::S_RATIONAL);
    auto total = [&](double k, int n) {
        auto spec = sol.target;
        spec.params.k = k;
        const Discretization d(spec, {n, n, {0.2, 1.0}, {0.2, 1.0}});
        const auto r = d.rhs(sample_state(d, *sol.field, 0.1));
        double s = 0.0, exact = 0.0;
        for (std::size_t m = 0; m < d.size(); ++m) {
            if (d.on_boundary(m)) continue;
            s += r.u[m] + r.w[m];
            const auto j = sol.field->jets(d.node(m, 0.1));
            exact += j[0].d_t() + j[2].d_t();
        }
        const double cell = d.grid().hx() * d.grid().hy();
        return std::pair{s * cell, exact * cell};
    };
    const auto a = total(1.0, 33), b = total(7.0, 33);
    CHECK(a.first == doctest::Approx(b.first).epsilon(1e-12));
    // The discrete rate matches the exact one (where k = 1) to second order.
    const auto c = total(1.0, 65);
    const double e33 = std::abs(a.first - a.second), e65 = std::abs(c.first - c.second);
    CHECK(std::log2(e33 / e65) == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("CSV dump has one row per node and frame")
{
    SimulationConfig c{make_solution(SolutionId::S_RATIONAL), unit_grid, 0.0, 0.01};
    c.frames = 2;
    const auto r = simulate(c);
    REQUIRE(r.frames.size() == 2);
    CHECK(r.frames.back().time == 0.01);
    std::ostringstream os;
    write_csv(os, Discretization(c.exact.target, c.grid), r.frames);
    const std::string s = os.str();
    CHECK(s.rfind("t,x,y,u,v,w\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 1 + 2 * 17 * 17);
}

TEST_CASE("no-flux boundaries keep diffusing mass inside the box")
{
    const auto kernel = heat_kernel_solution({1.0, 1.0, 0.5, 1.0, 0.0}, 0.3);
    const Discretization d(kernel.target, {33, 33, {-1, 1}, {-1, 1}});
    const auto bc = no_flux_boundary(d);
    auto interior_sum = [&](const std::vector<double>& a) {
        double s = 0.0;
        for (std::size_t n = 0; n < d.size(); ++n)
            if (!d.on_boundary(n)) s += a[n];
        return s;
    };
    FieldState s = sample_state(d, *kernel.field, 0.0);
    bc(s);
    const double mass0 = interior_sum(s.u);
    const double hi0 = *std::max_element(s.u.begin(), s.u.end());
    const double lo0 = *std::min_element(s.u.begin(), s.u.end());
    const double dt = d.stable_dt(0.4);
    for (int n = 0; n < 400; ++n) s = step(d, s, dt, bc);
    CHECK(*std::max_element(s.u.begin(), s.u.end()) <= hi0);
    CHECK(*std::min_element(s.u.begin(), s.u.end()) >= lo0);
    CHECK(std::abs(interior_sum(s.u) / mass0 - 1.0) < 1e-12);

    // Exact traces would let the mass leave through the boundary.
    FieldState open = sample_state(d, *kernel.field, 0.0);
    const auto dirichlet = exact_boundary(d, *kernel.field);
    for (int n = 0; n < 400; ++n) open = step(d, open, dt, dirichlet);
    CHECK(interior_sum(open.u) < interior_sum(s.u));
}
