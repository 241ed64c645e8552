#include "dlv/symmetry/classification.hpp"

#include "dlv/errors.hpp"
#include "dlv/numerics/fd.hpp"

#include <algorithm>
#include <cmath>

namespace dlv {

namespace {

constexpr double fd_h = 1e-3;

double deriv(const TimeFn& f, double t)
{
    if (!f) return 0.0;
    return fd_derivative([&f](double s) { return f(Jet2(s)).v; }, t, fd_h);
}

CoeffFn constant(double c)
{
    if (c == 0.0) return {};
    return [c](const Triple<Jet2>&) { return Jet2(c); };
}

CoeffFn of_t(const TimeFn& f)
{
    if (!f) return {};
    return [f](const Triple<Jet2>& X) { return f(X[0]); };
}

// Operator given by its (t, x, y) coefficients, optionally with the scaling
// part -2u d_u - 2v d_v - 2w d_w.
LieGenerator printed(std::string label, CoeffFn xi0, CoeffFn xi1, CoeffFn xi2, bool scaling = false)
{
    LieGenerator g;
    g.label = std::move(label);
    g.xi = {std::move(xi0), std::move(xi1), std::move(xi2)};
    if (scaling)
        for (int i = 0; i < 3; ++i) g.a[i][i] = constant(-2.0);
    return g;
}

LieGenerator fibre(std::string label, Triple<double> w_coeffs, CoeffFn H)
{
    LieGenerator g;
    g.label = std::move(label);
    for (int j = 0; j < 3; ++j) g.a[2][j] = constant(w_coeffs[j]);
    g.b[2] = std::move(H);
    return g;
}

double param(const StreamParams& p, const char* key, double fallback = 0.0)
{
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

} // namespace

double DeResidual::max_abs() const { return std::max({std::abs(e4), std::abs(e5), std::abs(e7)}); }

LieGenerator template_generator(const DeParams& de, std::string label)
{
    LieGenerator g;
    g.label = std::move(label);
    const double c0 = de.c0, t0 = de.t0;
    const TimeFn p0 = de.p0, p1 = de.p1, p2 = de.p2;
    auto at = [](const TimeFn& f, const Jet2& t) { return f ? f(t) : Jet2(0.0); };
    if (c0 != 0.0 || t0 != 0.0) g.xi[0] = [=](const Triple<Jet2>& X) { return 2.0 * c0 * X[0] + t0; };
    g.xi[1] = [=](const Triple<Jet2>& X) { return c0 * X[1] + at(p0, X[0]) * X[2] + at(p1, X[0]); };
    g.xi[2] = [=](const Triple<Jet2>& X) { return c0 * X[2] - at(p0, X[0]) * X[1] + at(p2, X[0]); };
    g.a[0][0] = constant(-2.0 * c0);
    g.a[1][1] = constant(-2.0 * c0);
    g.a[2][0] = constant(de.c1);
    g.a[2][1] = constant(de.c2);
    g.a[2][2] = constant(de.c1 + de.c2 - 2.0 * c0);
    g.b[2] = de.H;
    return g;
}

DeResidual determining_residual(const StreamFunction& stream, const DeParams& de, double t, double x,
                                double y)
{
    const Jet2 psi = stream.jet(x, y);
    const double c0 = de.c0;
    const double p0 = eval(de.p0, t), p1 = eval(de.p1, t), p2 = eval(de.p2, t), q = eval(de.q, t);
    const double dp0 = deriv(de.p0, t), dp1 = deriv(de.p1, t), dp2 = deriv(de.p2, t);
    const double xi1 = c0 * x + p0 * y + p1;
    const double xi2 = c0 * y - p0 * x + p2;
    DeResidual r;
    r.e4 = xi1 * psi.d_xx() + xi2 * psi.d_xy() + c0 * psi.d_x() - p0 * psi.d_y() - x * dp0 + dp2;
    r.e5 = xi2 * psi.d_yy() + xi1 * psi.d_xy() + c0 * psi.d_y() + p0 * psi.d_x() - y * dp0 - dp1;
    r.e7 = xi1 * psi.d_x() + xi2 * psi.d_y() - 0.5 * (x * x + y * y) * dp0 + x * dp2 - y * dp1 + q;
    return r;
}

double solve_q(const StreamFunction& stream, const DeParams& de, double t, double x, double y)
{
    DeParams no_q = de;
    no_q.q = {};
    return -determining_residual(stream, no_q, t, x, y).e7;
}

double h_residual(const StreamFunction& stream, const CoeffFn& H, double d3, const Point& p)
{
    if (!H) return 0.0;
    const Jet2 h = H(seed(p));
    const Jet2 psi = stream.jet(p.x, p.y);
    return h.d_t() + psi.d_y() * h.d_x() - psi.d_x() * h.d_y() - d3 * h.laplacian();
}

Case10Algebra case10_algebra()
{
    Case10Algebra a;
    a.P1 = printed("P1", {}, coeff([](auto t, auto, auto) { return sin(2.0 * t); }),
                   coeff([](auto t, auto, auto) { return cos(2.0 * t); }));
    a.P2 = printed("P2", {}, coeff([](auto t, auto, auto) { return -cos(2.0 * t); }),
                   coeff([](auto t, auto, auto) { return sin(2.0 * t); }));
    a.J12 = printed("J12", {}, coeff([](auto, auto, auto y) { return y; }),
                    coeff([](auto, auto x, auto) { return -x; }));
    a.Pt = printed("Pt", constant(1.0), {}, {});
    a.D = printed("D", coeff([](auto t, auto, auto) { return 2.0 * t; }),
                  coeff([](auto t, auto x, auto y) { return x + 4.0 * t * y; }),
                  coeff([](auto t, auto x, auto y) { return y - 4.0 * t * x; }), true);
    return a;
}

ClassificationCase builtin_generators(StreamCase id, const StreamParams& given, const FChoice& f,
                                      const SystemParams& system)
{
    system.validate();
    const StreamParams params = given.empty() ? default_stream_params(id) : given;
    ClassificationCase c{id, std::make_shared<const StreamFunction>(make_case(id, params, f)), system, {}};
    auto& out = c.generators;
    const double a0 = param(params, "alpha0", 1.0), a1 = param(params, "alpha1"),
                 a2 = param(params, "alpha2"), al = param(params, "alpha"), be = param(params, "beta"),
                 ga = param(params, "gamma"), sg = param(params, "sign", 1.0);
    auto add = [&out](LieGenerator g, DeParams de) { out.push_back({std::move(g), std::move(de), false}); };
    auto tf = [](auto fn) { return time_fn(fn); };
    const TimeFn one = tf([](const Jet2&) { return 1.0; });
    auto constant_q = [](double q) -> TimeFn {
        if (q == 0.0) return {};
        return [q](const Jet2&) { return Jet2(q); };
    };

    switch (id) {
    case StreamCase::case1: {
        const TimeFn e = tf([be](const Jet2& t) { return exp(2.0 * be * t); });
        add(printed("e^(2 beta t)(y d_x - x d_y)", {},
                    coeff([be](auto t, auto, auto y) { return exp(2.0 * be * t) * y; }),
                    coeff([be](auto t, auto x, auto) { return -exp(2.0 * be * t) * x; })),
            {.p0 = e, .q = tf([al, be](const Jet2& t) { return -al * exp(2.0 * be * t); })});
        break;
    }
    case StreamCase::case2: {
        const double k = a2 * be;
        add(printed("e^(alpha2 beta t)(alpha2 d_x - alpha1 d_y)", {},
                    coeff([=](auto t, auto, auto) { return a2 * exp(k * t); }),
                    coeff([=](auto t, auto, auto) { return -a1 * exp(k * t); })),
            {.p1 = tf([=](const Jet2& t) { return a2 * exp(k * t); }),
             .p2 = tf([=](const Jet2& t) { return -a1 * exp(k * t); }),
             .q = tf([=](const Jet2& t) { return -a2 * ga * exp(k * t); })});
        break;
    }
    case StreamCase::case3:
        add(printed("2t d_t + x d_x + y d_y - 2u d_u - 2v d_v - 2w d_w",
                    coeff([](auto t, auto, auto) { return 2.0 * t; }),
                    coeff([](auto, auto x, auto) { return x; }), coeff([](auto, auto, auto y) { return y; }),
                    true),
            {.c0 = 1.0, .q = constant_q(-al)});
        break;
    case StreamCase::case4:
        add(printed("2t d_t + (x - 2 alpha0 y) d_x + (y + 2 alpha0 x) d_y - 2u d_u - 2v d_v - 2w d_w",
                    coeff([](auto t, auto, auto) { return 2.0 * t; }),
                    coeff([=](auto, auto x, auto y) { return x - 2.0 * a0 * y; }),
                    coeff([=](auto, auto x, auto y) { return y + 2.0 * a0 * x; }), true),
            {.c0 = 1.0, .p0 = constant_q(-2.0 * a0), .q = constant_q(2.0 * a0 * al)});
        break;
    case StreamCase::case5:
        add(printed("y d_x - x d_y", {}, coeff([](auto, auto, auto y) { return y; }),
                    coeff([](auto, auto x, auto) { return -x; })),
            {.p0 = one, .q = constant_q(-al)});
        add(printed("2t d_t + (x + 4 gamma t y) d_x + (y - 4 gamma t x) d_y - 2u d_u - 2v d_v - 2w d_w",
                    coeff([](auto t, auto, auto) { return 2.0 * t; }),
                    coeff([=](auto t, auto x, auto y) { return x + 4.0 * ga * t * y; }),
                    coeff([=](auto t, auto x, auto y) { return y - 4.0 * ga * t * x; }), true),
            {.c0 = 1.0,
             .p0 = tf([=](const Jet2& t) { return 4.0 * ga * t; }),
             .q = tf([=](const Jet2& t) { return -2.0 * be - 4.0 * ga * al * t; })});
        break;
    case StreamCase::case6:
        add(printed("alpha2 d_x - alpha1 d_y", {}, constant(a2), constant(-a1)),
            {.p1 = constant_q(a2), .p2 = constant_q(-a1)});
        add(printed("2t d_t + (x + gamma alpha2 t) d_x + (y - gamma alpha1 t) d_y - 2u d_u - 2v d_v - 2w d_w",
                    coeff([](auto t, auto, auto) { return 2.0 * t; }),
                    coeff([=](auto t, auto x, auto) { return x + ga * a2 * t; }),
                    coeff([=](auto t, auto, auto y) { return y - ga * a1 * t; }), true),
            {.c0 = 1.0,
             .p1 = tf([=](const Jet2& t) { return ga * a2 * t; }),
             .p2 = tf([=](const Jet2& t) { return -ga * a1 * t; }),
             .q = constant_q(-sg)});
        break;
    case StreamCase::case7:
        add(printed("cos t d_x - 2 alpha0 sin t d_y", {}, coeff([](auto t, auto, auto) { return cos(t); }),
                    coeff([=](auto t, auto, auto) { return -2.0 * a0 * sin(t); })),
            {.p1 = tf([](const Jet2& t) { return cos(t); }),
             .p2 = tf([=](const Jet2& t) { return -2.0 * a0 * sin(t); })});
        add(printed("sin t d_x + 2 alpha0 cos t d_y", {}, coeff([](auto t, auto, auto) { return sin(t); }),
                    coeff([=](auto t, auto, auto) { return 2.0 * a0 * cos(t); })),
            {.p1 = tf([](const Jet2& t) { return sin(t); }),
             .p2 = tf([=](const Jet2& t) { return 2.0 * a0 * cos(t); })});
        break;
    case StreamCase::case8:
        add(printed("e^t (d_x - 2 alpha0 d_y)", {}, coeff([](auto t, auto, auto) { return exp(t); }),
                    coeff([=](auto t, auto, auto) { return -2.0 * a0 * exp(t); })),
            {.p1 = tf([](const Jet2& t) { return exp(t); }),
             .p2 = tf([=](const Jet2& t) { return -2.0 * a0 * exp(t); })});
        add(printed("e^-t (d_x + 2 alpha0 d_y)", {}, coeff([](auto t, auto, auto) { return exp(-t); }),
                    coeff([=](auto t, auto, auto) { return 2.0 * a0 * exp(-t); })),
            {.p1 = tf([](const Jet2& t) { return exp(-t); }),
             .p2 = tf([=](const Jet2& t) { return 2.0 * a0 * exp(-t); })});
        break;
    case StreamCase::case9:
        add(printed("d_y", {}, {}, constant(1.0)), {.p2 = one, .q = constant_q(-al)});
        add(printed("d_x - 2t d_y", {}, constant(1.0), coeff([](auto t, auto, auto) { return -2.0 * t; })),
            {.p1 = one,
             .p2 = tf([](const Jet2& t) { return -2.0 * t; }),
             .q = tf([=](const Jet2& t) { return 2.0 * al * t; })});
        break;
    case StreamCase::case10: {
        const auto alg = case10_algebra();
        add(alg.J12, {.p0 = one});
        add(alg.P1, {.p1 = tf([](const Jet2& t) { return sin(2.0 * t); }),
                     .p2 = tf([](const Jet2& t) { return cos(2.0 * t); })});
        add(printed("cos 2t d_x - sin 2t d_y", {}, coeff([](auto t, auto, auto) { return cos(2.0 * t); }),
                    coeff([](auto t, auto, auto) { return -sin(2.0 * t); })),
            {.p1 = tf([](const Jet2& t) { return cos(2.0 * t); }),
             .p2 = tf([](const Jet2& t) { return -sin(2.0 * t); })});
        add(alg.D, {.c0 = 1.0, .p0 = tf([](const Jet2& t) { return 4.0 * t; })});
        break;
    }
    case StreamCase::case11:
        add(printed("d_x", {}, constant(1.0), {}), {.p1 = one, .q = constant_q(-a1)});
        add(printed("d_y", {}, {}, constant(1.0)), {.p2 = one, .q = constant_q(-a2)});
        add(printed("2t d_t + (x + alpha2 t) d_x + (y - alpha1 t) d_y - 2u d_u - 2v d_v - 2w d_w",
                    coeff([](auto t, auto, auto) { return 2.0 * t; }),
                    coeff([=](auto t, auto x, auto) { return x + a2 * t; }),
                    coeff([=](auto t, auto, auto y) { return y - a1 * t; }), true),
            {.c0 = 1.0,
             .p1 = tf([=](const Jet2& t) { return a2 * t; }),
             .p2 = tf([=](const Jet2& t) { return -a1 * t; })});
        add(printed("(alpha1 t + y) d_x + (alpha2 t - x) d_y", {},
                    coeff([=](auto t, auto, auto y) { return a1 * t + y; }),
                    coeff([=](auto t, auto x, auto) { return a2 * t - x; })),
            {.p0 = one,
             .p1 = tf([=](const Jet2& t) { return a1 * t; }),
             .p2 = tf([=](const Jet2& t) { return a2 * t; }),
             .q = tf([=](const Jet2& t) { return -(a1 * a1 + a2 * a2) * t; })});
        break;
    case StreamCase::custom: throw ParameterError("builtin_generators: no generators for custom streams");
    }

    // Principal algebra.
    auto principal = [&out](LieGenerator g, DeParams de) {
        out.push_back({std::move(g), std::move(de), true});
    };
    principal(printed("d_t", constant(1.0), {}, {}), {.t0 = 1.0});
    principal(fibre("1 d_w", {0.0, 0.0, 0.0}, constant(1.0)), {.H = constant(1.0)});
    if (id == StreamCase::case10) {
        const CoeffFn H = coeff([](auto t, auto x, auto y) { return x * sin(2.0 * t) + y * cos(2.0 * t); });
        principal(fibre("(x sin 2t + y cos 2t) d_w", {0.0, 0.0, 0.0}, H), {.H = H});
    }
    if (system.d1 == system.d3) principal(fibre("(u+w) d_w", {1.0, 0.0, 1.0}, {}), {.c1 = 1.0});
    if (system.d2 == system.d3) principal(fibre("(v+w) d_w", {0.0, 1.0, 1.0}, {}), {.c2 = 1.0});
    return c;
}

CaseReport verify_case(StreamCase id, const StreamParams& params, const FChoice& f,
                       const SystemParams& system, int n_samples, std::uint64_t seed)
{
    const ClassificationCase c = builtin_generators(id, params, f, system);
    SampleSpec spec;
    spec.seed = seed;
    spec.count = n_samples;
    spec.t = {-1.0, 1.0};
    spec.x = {-3.0, 3.0};
    spec.y = {-3.0, 3.0};
    spec.margin = 0.3;
    const auto pts = sample_points(spec, [&c](const Point& p, double m) {
        return !c.stream->valid(p.x, p.y, m);
    });
    SampleSpec box = spec;
    box.count = 50;

    CaseReport rep;
    rep.id = id;
    rep.samples = n_samples;
    rep.seed = seed;
    rep.pass = true;
    for (const auto& g : c.generators) {
        GeneratorReport gr;
        gr.label = g.printed.label;
        for (const Point& p : pts) {
            const auto r = determining_residual(*c.stream, g.de, p.t, p.x, p.y);
            gr.max_de_residual = std::max(gr.max_de_residual, r.max_abs());
            gr.q_spread = std::max(gr.q_spread,
                                   std::abs(solve_q(*c.stream, g.de, p.t, p.x, p.y) - eval(g.de.q, p.t)));
            gr.h_residual = std::max(gr.h_residual, std::abs(h_residual(*c.stream, g.de.H, system.d3, p)));
        }
        gr.template_diff = compare_generators(g.printed, template_generator(g.de, g.printed.label), box).max_diff;
        gr.d_relations = (system.d1 - system.d3) * g.de.c1 == 0.0 && (system.d2 - system.d3) * g.de.c2 == 0.0;
        gr.pass = gr.max_de_residual < de_tolerance && gr.q_spread < de_tolerance &&
                  gr.template_diff < de_tolerance && gr.h_residual < de_tolerance && gr.d_relations;
        rep.max_de_residual = std::max(rep.max_de_residual, gr.max_de_residual);
        rep.pass = rep.pass && gr.pass;
        rep.generators.push_back(std::move(gr));
    }
    return rep;
}

} // namespace dlv
