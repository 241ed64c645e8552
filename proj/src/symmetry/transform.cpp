#include "dlv/symmetry/transform.hpp"

#include "dlv/errors.hpp"
#include "dlv/solutions/field.hpp"
#include "dlv/symmetry/classification.hpp"

#include <algorithm>
#include <cmath>

namespace dlv {

namespace {

struct Affine {
    double a0, t0;
    double m[2][2];   // forward linear part
    double inv[2][2]; // its inverse
    double x0, y0;
    double A;         // alpha1^2 + alpha2^2
    int sign;
};

Affine affine(const EquivalenceParams& p)
{
    if (!(p.alpha0 > 0.0)) throw ParameterError("equivalence transform requires alpha0 > 0");
    if (!(p.alpha3 > 0.0)) throw ParameterError("equivalence transform requires alpha3 > 0");
    if (p.sign != 1 && p.sign != -1) throw ParameterError("equivalence transform sign must be +1 or -1");
    for (double v : {p.alpha1, p.alpha2, p.t0, p.x0, p.y0, p.psi0})
        if (!std::isfinite(v)) throw ParameterError("equivalence transform parameters must be finite");
    const double A = p.alpha1 * p.alpha1 + p.alpha2 * p.alpha2;
    if (A == 0.0) throw ParameterError("equivalence transform requires alpha1^2 + alpha2^2 > 0");
    const double s = p.sign, det = s * A;
    return {p.alpha0,
            p.t0,
            {{p.alpha1, p.alpha2}, {-s * p.alpha2, s * p.alpha1}},
            {{s * p.alpha1 / det, -p.alpha2 / det}, {s * p.alpha2 / det, p.alpha1 / det}},
            p.x0,
            p.y0,
            A,
            p.sign};
}

// Original coordinates as jets of the transformed ones.
Triple<Jet2> inverse_jets(const Affine& f, const Triple<Jet2>& s)
{
    const Jet2 dx = s[1] - f.x0, dy = s[2] - f.y0;
    return {(s[0] - f.t0) / f.a0, f.inv[0][0] * dx + f.inv[0][1] * dy, f.inv[1][0] * dx + f.inv[1][1] * dy};
}

Point inverse_point(const Affine& f, const Point& p)
{
    const auto j = inverse_jets(f, {Jet2(p.t), Jet2(p.x), Jet2(p.y)});
    return {j[0].v, j[1].v, j[2].v};
}

void check_h(const CoeffFn& H, const SystemSpec& system, const SampleSpec& box)
{
    if (!H) return;
    SampleSpec spec = box;
    spec.seed = 7;
    spec.count = 20;
    const auto& stream = *system.stream;
    const auto pts = sample_points(spec, [&stream](const Point& p, double m) { return !stream.valid(p.x, p.y, m); });
    for (const Point& p : pts) {
        const Jet2 h = H(seed(p));
        const double scale = 1.0 + std::abs(h.d_t()) + std::abs(system.params.d3 * h.laplacian());
        if (std::abs(h_residual(stream, H, system.params.d3, p)) > 1e-8 * scale)
            throw ParameterError("equivalence transform: H does not solve its linear equation");
    }
}

} // namespace

std::string to_string(EquivalenceKind k)
{
    return k == EquivalenceKind::swap ? "swap" : "scaling_rotation";
}

std::optional<EquivalenceKind> equivalence_kind_from_string(const std::string& s)
{
    if (s == "scaling_rotation") return EquivalenceKind::scaling_rotation;
    if (s == "swap") return EquivalenceKind::swap;
    return std::nullopt;
}

SystemSpec transform_system(EquivalenceKind kind, const EquivalenceParams& params, const SystemSpec& system)
{
    SystemSpec out = system;
    if (kind == EquivalenceKind::swap) {
        std::swap(out.params.d1, out.params.d2);
        return out;
    }
    if (system.kind != SystemKind::pde_full || !system.stream)
        throw ParameterError("scaling_rotation applies to pde_full systems with a stream function");
    const Affine f = affine(params);
    const double g = f.A / f.a0;
    out.params.d1 *= g;
    out.params.d2 *= g;
    out.params.d3 *= g;
    out.params.k /= f.a0 * params.alpha3;
    const auto inner = system.stream;
    const double factor = f.sign * g, psi0 = params.psi0;
    const double shrink = 1.0 / std::sqrt(f.A);
    auto jet = [=](const Jet2& x, const Jet2& y) {
        const auto X = inverse_jets(f, {Jet2(0.0), x, y});
        return factor * inner->jet(X[1], X[2]) + psi0;
    };
    auto value = [=](double x, double y) {
        const Point q = inverse_point(f, {0.0, x, y});
        return factor * inner->value(q.x, q.y) + psi0;
    };
    auto valid = [=](double x, double y, double m) {
        const Point q = inverse_point(f, {0.0, x, y});
        return inner->valid(q.x, q.y, m * shrink);
    };
    out.stream = std::make_shared<StreamFunction>(StreamFunction::custom(
        "equivalence image of " + inner->formula(), jet, value, valid));
    return out;
}

ExactSolution equivalence_transform(EquivalenceKind kind, const EquivalenceParams& params,
                                    const ExactSolution& input)
{
    const ExactSolution sol = to_lab_frame(input);
    ExactSolution out = sol;
    out.target = transform_system(kind, params, sol.target);
    out.params = out.target.params;
    if (kind == EquivalenceKind::swap) {
        out.field = std::make_shared<SwappedField>(sol.field);
        out.label = "swap(" + sol.label + ")";
        return out;
    }
    const Affine f = affine(params);
    check_h(params.H, sol.target, sol.domain);

    const double a3 = params.alpha3;
    const auto scaled = std::make_shared<AffineFiberField>(
        sol.field, Triple<double>{a3, a3, a3}, std::array<AffineFiberField::ShiftFn, 3>{{{}, {}, params.H}});
    out.field = std::make_shared<MappedField>(
        scaled, [f](const Point& p) { return inverse_jets(f, seed(p)); },
        [f](const Point& p) { return inverse_point(f, p); });

    // Bounding box of the image of the original box.
    const auto& d = sol.domain;
    double lo[2] = {INFINITY, INFINITY}, hi[2] = {-INFINITY, -INFINITY};
    for (double x : {d.x.lo, d.x.hi})
        for (double y : {d.y.lo, d.y.hi})
            for (int i = 0; i < 2; ++i) {
                const double c = f.m[i][0] * x + f.m[i][1] * y + (i == 0 ? f.x0 : f.y0);
                lo[i] = std::min(lo[i], c);
                hi[i] = std::max(hi[i], c);
            }
    out.domain.t = {f.a0 * d.t.lo + f.t0, f.a0 * d.t.hi + f.t0};
    out.domain.x = {lo[0], hi[0]};
    out.domain.y = {lo[1], hi[1]};
    out.margin = sol.margin * std::sqrt(f.A);
    out.domain.margin = out.margin;
    out.label = "equiv(" + sol.label + ")";
    return out;
}

ExactSolution rotating_frame(FrameDirection direction, const ExactSolution& sol)
{
    if (direction == FrameDirection::to_lab) return to_lab_frame(sol);
    if (sol.frame == Frame::rotated) return sol;
    const auto& t = sol.target;
    if (sol.frame != Frame::lab || t.kind != SystemKind::pde_full || !t.stream ||
        t.stream->id() != StreamCase::case10 || t.params.k != 1.0)
        throw ParameterError("to_rotated needs a lab-frame solution of the case-10 system with k = 1");
    ExactSolution out = sol;
    out.field = std::make_shared<MappedField>(sol.field, rotated_to_lab_map);
    out.target = SystemSpec{SystemKind::pde_rotated_free, t.params, {}, nullptr};
    out.frame = Frame::rotated;
    return out;
}

} // namespace dlv
