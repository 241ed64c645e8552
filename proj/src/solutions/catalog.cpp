#include "dlv/solutions/catalog.hpp"

#include "dlv/errors.hpp"
#include "dlv/special/weierstrass.hpp"

#include <cmath>
#include <memory>
#include <numbers>

namespace dlv {

namespace {

constexpr double pi = std::numbers::pi;

double get(const Constants& c, const std::string& key)
{
    auto it = c.find(key);
    if (it == c.end()) throw ParameterError("missing constant '" + key + "'");
    return it->second;
}

Constants merged(SolutionId id, const Constants& given)
{
    Constants out = default_constants(id);
    for (const auto& [k, v] : given) {
        if (!std::isfinite(v)) throw ParameterError("constant '" + k + "' is not finite");
        out[k] = v;
    }
    return out;
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

// Distance from s to the nearest point of {offset + k period}.
double lattice_distance(double s, double offset, double period)
{
    return std::abs(std::remainder(s - offset, period));
}

SampleSpec box(Range t, Range x, Range y)
{
    SampleSpec s;
    s.count = 500;
    s.t = t;
    s.x = x;
    s.y = y;
    return s;
}

const SampleSpec plane_domain = box({0.0, pi}, {-1.0, 1.0}, {-1.0, 1.0});
const SampleSpec steady_radial_domain = box({0.0, 1.0}, {0.5, 2.0}, {-1.0, 1.0});
const SampleSpec selfsim_radial_domain = box({0.5, 2.0}, {0.5, 2.0}, {-1.0, 1.0});

bool radius_ok(const Point& p, double m) { return p.x > 0.0 && p.x >= m; }

// Plane-wave phase alpha1 x + alpha2 y in the rotated frame.
struct PlaneWave {
    double a1, a2;
    template <typename T>
    T operator()(const T& x, const T& y) const
    {
        return a1 * x + a2 * y;
    }
    double amp() const { return a1 * a1 + a2 * a2; }
};

ExactSolution base(SolutionId id, const SystemParams& p, const Constants& c, Frame frame,
                   SystemKind kind, FieldPtr field, SampleSpec domain)
{
    p.validate();
    ExactSolution s;
    s.id = id;
    s.label = to_string(id);
    s.params = p;
    s.constants = c;
    s.frame = frame;
    s.target.kind = kind;
    s.target.params = p;
    s.field = std::move(field);
    s.domain = domain;
    s.domain.margin = s.margin;
    return s;
}

// Rotated-frame plane waves ------------------------------------------------

ExactSolution weier_rotated(const SystemParams& p, const Constants& c, bool degenerate)
{
    const PlaneWave ph{get(c, "alpha1"), get(c, "alpha2")};
    const double C1 = get(c, "C1"), C3 = get(c, "C3"), C4 = get(c, "C4");
    const double C2 = degenerate ? 0.0 : get(c, "C2");
    const double A = ph.amp(), d1 = p.d1, d2 = p.d2, d3 = p.d3;
    auto w = std::make_shared<const Weierstrass>(WeierstrassParams{0.0, C2});

    auto f = [=](auto, auto x, auto y) {
        using T = decltype(x);
        const T s = ph(x, y);
        const T P = degenerate ? T(1.0) / ((s + C1) * (s + C1)) : wp(s + C1, *w);
        return Triple<T>{6.0 * d2 * A * P, 6.0 * d1 * A * P,
                         (A / d3) * (-6.0 * d1 * d2 * P + C3 * s + C4)};
    };
    auto valid = [=](const Point& q, double m) {
        const double z = ph(q.x, q.y) + C1;
        if (auto half = w->real_half_period()) return lattice_distance(z, 0.0, 2.0 * *half) >= std::max(m, Weierstrass::pole_margin);
        if (!(std::abs(z) >= std::max(m, Weierstrass::pole_margin))) return false;
        if (degenerate || C2 == 0.0) return true;
        try {
            (void)w->wp(z);
        } catch (const Error&) {
            return false;
        }
        return true;
    };
    return base(degenerate ? SolutionId::S_RATIONAL : SolutionId::S_WEIER, p, c, Frame::rotated,
                SystemKind::pde_rotated_free, make_formula_field(f, valid), plane_domain);
}

ExactSolution sec_rotated(const SystemParams& p, const Constants& c)
{
    const PlaneWave ph{get(c, "alpha1"), get(c, "alpha2")};
    const double C1 = get(c, "C1"), C2 = get(c, "C2"), C3 = get(c, "C3"), C4 = get(c, "C4");
    const double A = ph.amp(), d1 = p.d1, d2 = p.d2, d3 = p.d3;
    auto f = [=](auto, auto x, auto y) {
        using T = decltype(x);
        const T s = ph(x, y);
        const T S = square(sec(C1 + C2 * s));
        return Triple<T>{6.0 * d2 * A * C2 * C2 * S, 2.0 * d1 * A * C2 * C2 * (3.0 * S - 2.0),
                         (A / d3) * (-6.0 * d1 * d2 * C2 * C2 * S + C3 * s + C4)};
    };
    auto valid = [=](const Point& q, double m) {
        return lattice_distance(C1 + C2 * ph(q.x, q.y), pi / 2, pi) >= std::max(m, 1e-12);
    };
    return base(SolutionId::S_SEC, p, c, Frame::rotated, SystemKind::pde_rotated_free,
                make_formula_field(f, valid), plane_domain);
}

ExactSolution front_rotated(SolutionId id, const SystemParams& p, const Constants& c)
{
    if (!(p.d1 == p.d2 && p.d2 == p.d3))
        throw ParameterError(to_string(id) + " requires d1 = d2 = d3");
    const PlaneWave ph{get(c, "alpha1"), get(c, "alpha2")};
    const double C1 = get(c, "C1"), C2 = get(c, "C2"), C3 = get(c, "C3");
    if (!near(C1, 10.0 * p.d1 * ph.amp()))
        throw ParameterError(to_string(id) + " requires C1 = 10 d (alpha1^2 + alpha2^2)");
    const bool use_tanh = id == SolutionId::S_TANH;
    auto f = [=](auto t, auto x, auto y) {
        using T = decltype(x);
        const T xi = C1 * t + ph(x, y);
        const T g = use_tanh ? tanh(xi) : coth(xi);
        const T u = (3.0 * C1 / 5.0) * square(1.0 + g);
        return Triple<T>{u, u - 12.0 * C1 / 5.0, C2 + C3 * exp(10.0 * xi) - u};
    };
    auto valid = [=](const Point& q, double m) {
        return use_tanh || std::abs(C1 * q.t + ph(q.x, q.y)) >= std::max(m, 1e-12);
    };
    return base(id, p, c, Frame::rotated, SystemKind::pde_rotated_free, make_formula_field(f, valid),
                plane_domain);
}

// Radial families -----------------------------------------------------------

ExactSolution steady_rat(const SystemParams& p, const Constants& c)
{
    const double d1 = p.d1, d2 = p.d2, d3 = p.d3, al = p.alpha;
    const double C0 = get(c, "C0"), C1 = get(c, "C1");
    const bool lab_form = get(c, "lab_form") != 0.0;
    enum { generic, resonant, zero } branch =
        al == 0.0 ? zero : (near(al, 2.0 * d3) ? resonant : generic);

    auto f = [=](auto, auto r, auto) {
        using T = decltype(r);
        const T r2 = r * r;
        const T u = 2.0 * (2.0 * d2 - al) / r2;
        const T v = 2.0 * (2.0 * d1 - al) / r2;
        T w(C0);
        switch (branch) {
        case generic:
            w = w + (lab_form ? C1 * pow(r2, -al / (2.0 * d3)) : C1 * pow(r, -al / d3)) +
                2.0 * (2.0 * d1 - al) * (2.0 * d2 - al) / (al - 2.0 * d3) / r2;
            break;
        case resonant:
            w = w + C1 / r2 +
                4.0 * (d1 - d3) * (d2 - d3) / (d3 * r2) *
                    (lab_form ? 1.0 + log(r2) : 1.0 + 2.0 * log(r));
            break;
        case zero:
            w = w + (lab_form ? C1 * log(r2) : C1 * log(r)) - 4.0 * d1 * d2 / (d3 * r2);
            break;
        }
        return Triple<T>{u, v, w};
    };
    ExactSolution s = base(SolutionId::S_STEADY_RAT, p, c, Frame::radial, SystemKind::pde_radial,
                           make_formula_field(f, radius_ok), steady_radial_domain);
    s.label += branch == generic ? "[generic]" : (branch == resonant ? "[alpha=2d3]" : "[alpha=0]");
    return s;
}

ExactSolution steady_sec(const SystemParams& p, const Constants& c)
{
    if (!(p.d1 == 1.0 && p.d2 == 1.0 && p.d3 == 1.0 && p.alpha == -1.0))
        throw ParameterError("S_STEADY_SEC requires d1 = d2 = d3 = 1 and alpha = -1");
    const double b = get(c, "beta"), C4 = get(c, "C4"), C5 = get(c, "C5");
    if (b == 0.0) throw ParameterError("S_STEADY_SEC requires beta != 0");
    auto f = [=](auto, auto r, auto) {
        using T = decltype(r);
        const T S = square(sec(b * r));
        return Triple<T>{6.0 * b * b * S, 2.0 * b * b * (3.0 * S - 2.0), C4 + C5 * r - 6.0 * b * b * S};
    };
    auto valid = [=](const Point& q, double m) {
        return radius_ok(q, m) && lattice_distance(b * q.x, pi / 2, pi) >= std::max(m, 1e-12);
    };
    SampleSpec dom = steady_radial_domain;
    dom.x = {0.1, 5.0};
    return base(SolutionId::S_STEADY_SEC, p, c, Frame::radial, SystemKind::pde_radial,
                make_formula_field(f, valid), dom);
}

bool selfsim_ok(const Point& q, double m) { return radius_ok(q, m) && q.t > 0.0 && q.t >= m; }

ExactSolution ss_a(const SystemParams& p, const Constants& c)
{
    if (p.alpha != 0.0) throw ParameterError("S_SS_A requires alpha = 0");
    const double d1 = p.d1, d2 = p.d2, d3 = p.d3, C2 = get(c, "C2");
    auto f = [=](auto t, auto r, auto) {
        using T = decltype(r);
        const T r2 = r * r;
        return Triple<T>{4.0 * d2 / r2, 4.0 * d1 / r2,
                         C2 / t * exp(-r2 / (4.0 * d3 * t)) - 4.0 * d1 * d2 / (d3 * r2)};
    };
    return base(SolutionId::S_SS_A, p, c, Frame::radial, SystemKind::pde_radial,
                make_formula_field(f, selfsim_ok), selfsim_radial_domain);
}

ExactSolution ss_b(const SystemParams& p, const Constants& c)
{
    const double d1 = p.d1, d2 = p.d2, d3 = p.d3, C2 = get(c, "C2");
    if (!near(p.alpha, d1 + d2)) throw ParameterError("S_SS_B requires alpha = d1 + d2");
    if (near(2.0 * d3, d1 + d2)) throw ParameterError("S_SS_B requires 2 d3 != d1 + d2");
    auto f = [=](auto t, auto r, auto) {
        using T = decltype(r);
        const T r2 = r * r;
        const double s = d1 + d2;
        const T w = C2 * exp(-r2 / (4.0 * d3 * t)) * pow(t, (s - 2.0 * d3) / (2.0 * d3)) *
                        pow(r2, -s / (2.0 * d3)) -
                    2.0 * (d1 - d2) * (d1 - d2) / ((s - 2.0 * d3) * r2) - 1.0 / t;
        return Triple<T>{1.0 / t - 2.0 * (d1 - d2) / r2, 1.0 / t + 2.0 * (d1 - d2) / r2, w};
    };
    return base(SolutionId::S_SS_B, p, c, Frame::radial, SystemKind::pde_radial,
                make_formula_field(f, selfsim_ok), selfsim_radial_domain);
}

} // namespace

/// W(omega) of the self-similar family with alpha = 2 n d3.
///
/// The finite sum is sum_j (-1)^j (n-2)!/(n-2-j)! (4 d3)^j omega^(n-2-j);
/// `printed_sum` swaps the two powers, which only agrees for n = 2.
template <typename T>
T selfsim_w(const T& om, int n, double d1, double d2, double d3, double C1, double C2,
            bool printed_sum)
{
    T sum(0.0);
    double fall = 1.0; // (n-2)!/(n-2-j)!
    for (int j = 0; j <= n - 2; ++j) {
        if (j > 0) fall *= static_cast<double>(n - 1 - j);
        const double sign = j % 2 == 0 ? 1.0 : -1.0;
        const int p4 = printed_sum ? n - 2 - j : j;
        const int pw = printed_sum ? j : n - 2 - j;
        sum = sum + sign * fall * std::pow(4.0 * d3, p4) * pow(om, static_cast<double>(pw));
    }
    const double K = 16.0 * ((d1 - n * d3) * (d2 - n * d3) - (n - 1) * d3 * C1);
    const T om_n = pow(om, -static_cast<double>(n));
    return 4.0 * C1 / om + C2 * om_n * exp(-om / (4.0 * d3)) + K * om_n * sum;
}

namespace {

ExactSolution ss_n(const SystemParams& p, const Constants& c)
{
    const double nd = get(c, "n");
    const int n = static_cast<int>(std::lround(nd));
    if (nd != n || n < 2) throw ParameterError("S_SS_N requires an integer n >= 2");
    const double d1 = p.d1, d2 = p.d2, d3 = p.d3, al = p.alpha;
    if (!near(al, 2.0 * n * d3)) throw ParameterError("S_SS_N requires alpha = 2 n d3");
    const double C1 = get(c, "C1"), C2 = get(c, "C2");
    const bool printed = get(c, "printed_sum") != 0.0;
    auto f = [=](auto t, auto r, auto) {
        using T = decltype(r);
        const T om = r * r / t;
        return Triple<T>{2.0 * (2.0 * d2 - al) / om / t, 2.0 * (2.0 * d1 - al) / om / t,
                         selfsim_w(om, n, d1, d2, d3, C1, C2, printed) / t};
    };
    ExactSolution s = base(SolutionId::S_SS_N, p, c, Frame::radial, SystemKind::pde_radial,
                           make_formula_field(f, selfsim_ok), selfsim_radial_domain);
    s.label += "[n=" + std::to_string(n) + (printed ? ",printed" : "") + "]";
    return s;
}

} // namespace

// Public API ----------------------------------------------------------------

std::string to_string(SolutionId id)
{
    switch (id) {
    case SolutionId::S_WEIER: return "S_WEIER";
    case SolutionId::S_RATIONAL: return "S_RATIONAL";
    case SolutionId::S_SEC: return "S_SEC";
    case SolutionId::S_TANH: return "S_TANH";
    case SolutionId::S_COTH: return "S_COTH";
    case SolutionId::S_STEADY_RAT: return "S_STEADY_RAT";
    case SolutionId::S_STEADY_SEC: return "S_STEADY_SEC";
    case SolutionId::S_SS_A: return "S_SS_A";
    case SolutionId::S_SS_B: return "S_SS_B";
    case SolutionId::S_SS_N: return "S_SS_N";
    case SolutionId::S_ZERO: return "S_ZERO";
    case SolutionId::S_UV0: return "S_UV0";
    }
    return "?";
}

std::optional<SolutionId> solution_id_from_string(const std::string& s)
{
    for (const auto& i : list_solutions())
        if (i.name == s) return i.id;
    return std::nullopt;
}

std::string to_string(Frame f)
{
    switch (f) {
    case Frame::lab: return "lab";
    case Frame::rotated: return "rotated";
    case Frame::radial: return "radial";
    }
    return "?";
}

const std::vector<SolutionInfo>& list_solutions()
{
    using S = SolutionId;
    static const std::vector<SolutionInfo> table{
        {S::S_WEIER, "S_WEIER", Frame::lab, "pde_full (Psi = x^2 + y^2, k = 1)",
         {"alpha1", "alpha2", "C1", "C2", "C3", "C4"},
         {"g2=0", "g3=C2"},
         "lattice poles of wp at the phase (alpha1 x + alpha2 y) sin2t + (alpha1 y - alpha2 x) cos2t + C1"},
        {S::S_RATIONAL, "S_RATIONAL", Frame::lab, "pde_full (Psi = x^2 + y^2, k = 1)",
         {"alpha1", "alpha2", "C1", "C3", "C4"},
         {"C2=0 limit of S_WEIER"},
         "phase = 0"},
        {S::S_SEC, "S_SEC", Frame::lab, "pde_full (Psi = x^2 + y^2, k = 1)",
         {"alpha1", "alpha2", "C1", "C2", "C3", "C4"},
         {"b20 = -4 d1* d2* C2^2"},
         "C1 + C2 phase = pi/2 mod pi"},
        {S::S_TANH, "S_TANH", Frame::lab, "pde_full (Psi = x^2 + y^2, k = 1)",
         {"alpha1", "alpha2", "C1", "C2", "C3"},
         {"d1=d2=d3=d", "C1 = 10d(alpha1^2+alpha2^2)"},
         "none"},
        {S::S_COTH, "S_COTH", Frame::lab, "pde_full (Psi = x^2 + y^2, k = 1)",
         {"alpha1", "alpha2", "C1", "C2", "C3"},
         {"d1=d2=d3=d", "C1 = 10d(alpha1^2+alpha2^2)"},
         "C1 t + phase = 0"},
        {S::S_STEADY_RAT, "S_STEADY_RAT", Frame::radial, "pde_radial",
         {"C0", "C1", "lab_form"},
         {"w branch by alpha: alpha(alpha-2d3)!=0, alpha=2d3, alpha=0",
          "lab_form=1 uses powers/logs of x^2+y^2 (C1_lab = C1/2 when alpha=0)"},
         "r = 0"},
        {S::S_STEADY_SEC, "S_STEADY_SEC", Frame::radial, "pde_radial",
         {"beta", "C4", "C5"},
         {"d1=d2=d3=1", "alpha=-1", "beta!=0"},
         "r = 0, beta r = pi/2 mod pi"},
        {S::S_SS_A, "S_SS_A", Frame::radial, "pde_radial",
         {"C2"},
         {"alpha=0", "C1 = d1 d2 / d3"},
         "r = 0, t <= 0"},
        {S::S_SS_B, "S_SS_B", Frame::radial, "pde_radial",
         {"C2"},
         {"alpha=d1+d2", "2d3 != d1+d2"},
         "r = 0, t <= 0"},
        {S::S_SS_N, "S_SS_N", Frame::radial, "pde_radial",
         {"n", "C1", "C2", "printed_sum"},
         {"alpha = 2 n d3", "n integer >= 2"},
         "r = 0, t <= 0"},
        {S::S_ZERO, "S_ZERO", Frame::lab, "pde_full (Psi = x^2 + y^2, k = 1)", {}, {}, "none"},
        {S::S_UV0, "S_UV0", Frame::lab, "pde_full (Psi = x^2 + y^2, k = 1)",
         {"c", "c_prime"},
         {"v = 0"},
         "none"},
    };
    return table;
}

const SolutionInfo& solution_info(SolutionId id)
{
    for (const auto& i : list_solutions())
        if (i.id == id) return i;
    throw ParameterError("unknown solution id");
}

SystemParams default_params(SolutionId id)
{
    switch (id) {
    case SolutionId::S_TANH:
    case SolutionId::S_COTH: return {1.0, 1.0, 1.0, 1.0, 0.0};
    case SolutionId::S_STEADY_RAT: return {1.0, 2.0, 3.0, 1.0, 1.0};
    case SolutionId::S_STEADY_SEC: return {1.0, 1.0, 1.0, 1.0, -1.0};
    case SolutionId::S_SS_B: return {1.0, 2.0, 1.0, 1.0, 3.0};
    case SolutionId::S_SS_N: return {1.2, 2.5, 0.5, 1.0, 2.0};
    default: return {1.0, 2.0, 3.0, 1.0, 0.0};
    }
}

Constants default_constants(SolutionId id)
{
    switch (id) {
    case SolutionId::S_WEIER:
        return {{"alpha1", 0.5}, {"alpha2", 0.25}, {"C1", 2.0}, {"C2", 1.0}, {"C3", -15.0}, {"C4", 55.0}};
    case SolutionId::S_RATIONAL:
        return {{"alpha1", 0.5}, {"alpha2", 0.25}, {"C1", 2.0}, {"C3", -15.0}, {"C4", 55.0}};
    case SolutionId::S_SEC:
        return {{"alpha1", 0.5}, {"alpha2", 0.25}, {"C1", 0.3}, {"C2", 0.5}, {"C3", 1.0}, {"C4", 2.0}};
    case SolutionId::S_TANH:
    case SolutionId::S_COTH:
        return {{"alpha1", 0.4}, {"alpha2", 0.2}, {"C2", 1.0}, {"C3", 0.5}};
    case SolutionId::S_STEADY_RAT: return {{"C0", 1.0}, {"C1", 0.5}, {"lab_form", 0.0}};
    case SolutionId::S_STEADY_SEC: return {{"beta", 0.5}, {"C4", 1.0}, {"C5", 0.2}};
    case SolutionId::S_SS_A:
    case SolutionId::S_SS_B: return {{"C2", 1.0}};
    case SolutionId::S_SS_N: return {{"n", 2.0}, {"C1", 0.7}, {"C2", 1.0}, {"printed_sum", 0.0}};
    case SolutionId::S_ZERO: return {};
    case SolutionId::S_UV0: return {{"c", 1.5}, {"c_prime", 0.5}};
    }
    return {};
}

ExactSolution rotated_profile(SolutionId id, const SystemParams& params, const Constants& given)
{
    Constants c = merged(id, given);
    switch (id) {
    case SolutionId::S_WEIER: return weier_rotated(params, c, false);
    case SolutionId::S_RATIONAL: return weier_rotated(params, c, true);
    case SolutionId::S_SEC: return sec_rotated(params, c);
    case SolutionId::S_TANH:
    case SolutionId::S_COTH:
        if (!c.count("C1")) c["C1"] = 10.0 * params.d1 * (get(c, "alpha1") * get(c, "alpha1") +
                                                          get(c, "alpha2") * get(c, "alpha2"));
        return front_rotated(id, params, c);
    default: break;
    }
    throw ParameterError(to_string(id) + " has no rotated-frame profile");
}

ExactSolution make_solution(SolutionId id, const SystemParams& params, const Constants& given)
{
    switch (id) {
    case SolutionId::S_WEIER:
    case SolutionId::S_RATIONAL:
    case SolutionId::S_SEC:
    case SolutionId::S_TANH:
    case SolutionId::S_COTH: return to_lab_frame(rotated_profile(id, params, given));
    default: break;
    }
    const Constants c = merged(id, given);
    switch (id) {
    case SolutionId::S_STEADY_RAT: return steady_rat(params, c);
    case SolutionId::S_STEADY_SEC: return steady_sec(params, c);
    case SolutionId::S_SS_A: return ss_a(params, c);
    case SolutionId::S_SS_B: return ss_b(params, c);
    case SolutionId::S_SS_N: return ss_n(params, c);
    case SolutionId::S_ZERO:
    case SolutionId::S_UV0: {
        const double a = id == SolutionId::S_ZERO ? 0.0 : get(c, "c");
        const double b = id == SolutionId::S_ZERO ? 0.0 : get(c, "c_prime");
        auto f = [=](auto t, auto, auto) {
            using T = decltype(t);
            return Triple<T>{T(a), T(0.0), T(b)};
        };
        auto valid = [](const Point&, double) { return true; };
        ExactSolution s = base(id, params, c, Frame::lab, SystemKind::pde_full,
                               make_formula_field(f, valid), plane_domain);
        s.target = linear_flow_system(params);
        return s;
    }
    default: break;
    }
    throw ParameterError("unknown solution id");
}

ExactSolution make_solution(SolutionId id) { return make_solution(id, default_params(id), {}); }

Triple<double> ExactSolution::values(const Point& p) const
{
    if (!field->valid(p, 0.0)) throw DomainError(label + ": point outside the validity domain");
    return field->values(p);
}

Triple<Jet2> ExactSolution::evaluate(const Point& p) const
{
    if (!field->valid(p, 0.0)) throw DomainError(label + ": point outside the validity domain");
    return field->jets(p);
}

Triple<Jet2> lab_to_rotated_map(const Point& p)
{
    const auto s = seed(p);
    const Jet2 S = sin(2.0 * s[0]), C = cos(2.0 * s[0]);
    return {s[0], s[1] * S + s[2] * C, s[2] * S - s[1] * C};
}

namespace {

Point lab_to_rotated_point(const Point& p)
{
    const double S = std::sin(2.0 * p.t), C = std::cos(2.0 * p.t);
    return {p.t, p.x * S + p.y * C, p.y * S - p.x * C};
}

} // namespace

Triple<Jet2> rotated_to_lab_map(const Point& p)
{
    const auto s = seed(p);
    const Jet2 S = sin(2.0 * s[0]), C = cos(2.0 * s[0]);
    return {s[0], s[1] * S - s[2] * C, s[1] * C + s[2] * S};
}

ExactSolution to_lab_frame(const ExactSolution& sol)
{
    ExactSolution out = sol;
    switch (sol.frame) {
    case Frame::lab: return out;
    case Frame::rotated:
        out.field = std::make_shared<MappedField>(sol.field, lab_to_rotated_map, lab_to_rotated_point);
        out.target = linear_flow_system(sol.params);
        out.domain = plane_domain;
        break;
    case Frame::radial: {
        out.field = std::make_shared<MappedField>(sol.field, [](const Point& p) {
            const auto s = seed(p);
            return Triple<Jet2>{s[0], sqrt(s[1] * s[1] + s[2] * s[2]), Jet2(0.0)};
        }, [](const Point& p) { return Point{p.t, std::hypot(p.x, p.y), 0.0}; });
        out.target.kind = SystemKind::pde_full;
        out.target.params = sol.params;
        out.target.params.k = 1.0;
        out.target.stream = std::make_shared<StreamFunction>(make_case(
            StreamCase::case1, {{"alpha", sol.params.alpha}, {"beta", 0.0}}, FChoice{FKind::square, {}}));
        out.domain.x = {-sol.domain.x.hi, sol.domain.x.hi};
        out.domain.y = {-sol.domain.x.hi, sol.domain.x.hi};
        out.margin = 0.1;
        out.domain.margin = out.margin;
        break;
    }
    }
    out.frame = Frame::lab;
    return out;
}

ExactSolution perturbed(const ExactSolution& sol, Triple<double> factors)
{
    ExactSolution out = sol;
    out.field = std::make_shared<AffineFiberField>(sol.field, factors);
    out.label += "[perturbed]";
    return out;
}

FisherFront fisher_front(double b0, double dstar, double C)
{
    if (!(b0 > 0.0 && dstar > 0.0 && C >= 0.0))
        throw ParameterError("fisher_front requires b0 > 0, d* > 0 and C >= 0");
    FisherFront out;
    out.kappa = std::sqrt(b0 / (6.0 * dstar));
    out.speed = 5.0 * std::sqrt(b0 * dstar / 6.0);
    out.target.kind = SystemKind::pde_fisher;
    out.target.constants = {{"dstar", dstar}, {"b0", b0}};
    const double kappa = out.kappa, c = out.speed;
    auto f = [=](auto t, auto x, auto) {
        using T = decltype(x);
        return Triple<T>{b0 * pow(1.0 + C * exp(kappa * (x - c * t)), -2.0), T(0.0), T(0.0)};
    };
    out.field = make_formula_field(f, [](const Point&, double) { return true; });
    return out;
}

// Profiles --------------------------------------------------------------------

std::vector<NamedProfile> profile_catalog()
{
    std::vector<NamedProfile> out;
    auto spec = [](SystemKind k, SystemParams p, std::map<std::string, double> c) {
        SystemSpec s;
        s.kind = k;
        s.params = p;
        s.constants = std::move(c);
        return s;
    };
    const SystemParams fig{1.0, 2.0, 3.0, 1.0, 0.0};

    {
        // Weierstrass plane wave U = 6 d2* wp(z + C1; 0, C2).
        const double a1 = 0.5, a2 = 0.25, A = a1 * a1 + a2 * a2, C1 = 2.0, C2 = 1.0;
        auto w = std::make_shared<const Weierstrass>(WeierstrassParams{0.0, C2});
        const double d1s = fig.d1 * A, d2s = fig.d2 * A, d3s = fig.d3 * A;
        const double period = 2.0 * *w->real_half_period();
        auto valid = [=](double z, double m) { return lattice_distance(z + C1, 0.0, period) >= m; };
        out.push_back({"wp_plane", spec(SystemKind::ode_f, fig, {{"alpha1", a1}, {"alpha2", a2}}),
                       [=](const Jet1& z) { return std::vector<Jet1>{6.0 * d2s * wp(z + C1, *w)}; },
                       {-1.5, 1.5}, valid});
        const double b31 = 0.3, b30 = 1.0;
        out.push_back({"planewave_wp",
                       spec(SystemKind::ode_planewave, fig, {{"alpha1", a1}, {"alpha2", a2}}),
                       [=](const Jet1& z) {
                           const Jet1 P = wp(z + C1, *w);
                           const Jet1 U = 6.0 * d2s * P;
                           return std::vector<Jet1>{U, 6.0 * d1s * P,
                                                    (-d1s * U + b31 * z + b30) / d3s};
                       },
                       {-1.5, 1.5}, valid});
    }
    {
        // sec^2 and sech^2 plane waves of the same equation with b21 = 0.
        const double a1 = 0.5, a2 = 0.25, A = a1 * a1 + a2 * a2, C1 = 0.3, C2 = 0.5;
        const double d1s = fig.d1 * A, d2s = fig.d2 * A;
        out.push_back({"sec_plane",
                       spec(SystemKind::ode_f, fig,
                            {{"alpha1", a1}, {"alpha2", a2}, {"b20", -4.0 * d1s * d2s * C2 * C2}}),
                       [=](const Jet1& z) {
                           return std::vector<Jet1>{6.0 * C2 * C2 * d2s * square(sec(C1 + C2 * z))};
                       },
                       {-3.0, 3.0},
                       [=](double z, double m) { return lattice_distance(C1 + C2 * z, pi / 2, pi) >= m; }});
        out.push_back({"sech_plane",
                       spec(SystemKind::ode_f, fig,
                            {{"alpha1", a1}, {"alpha2", a2}, {"b20", 4.0 * d1s * d2s * C2 * C2}}),
                       [=](const Jet1& z) {
                           return std::vector<Jet1>{-6.0 * C2 * C2 * d2s * square(sech(C1 + C2 * z))};
                       },
                       {-3.0, 3.0}, {}});
    }
    {
        // Travelling Fisher front, z = x + alpha1 t with alpha1 = -5 sqrt(b0 d*/6).
        const double b0 = 1.0, dstar = 1.5, t0 = 0.2, C = 1.0;
        const double a1 = -5.0 * std::sqrt(b0 * dstar / 6.0);
        const double a2 = std::sqrt(dstar - t0 * t0 * a1 * a1);
        const double kappa = std::sqrt(b0 / (6.0 * dstar));
        out.push_back({"fisher_front",
                       spec(SystemKind::ode_fisher_wave, SystemParams{},
                            {{"alpha1", a1}, {"alpha2", a2}, {"t0", t0}, {"b1", 0.0}, {"b0", b0}}),
                       [=](const Jet1& z) {
                           return std::vector<Jet1>{b0 * pow(1.0 + C * exp(kappa * z), -2.0)};
                       },
                       {-10.0, 10.0}, {}});
    }
    {
        const SystemParams p{1.0, 2.0, 3.0, 1.0, 0.7};
        out.push_back({"f3_inverse_square", spec(SystemKind::ode_f3, p, {{"C", 0.0}}),
                       [](const Jet1& r) { return std::vector<Jet1>{-2.0 / (r * r)}; }, {0.3, 3.0},
                       [](double r, double m) { return r >= m; }});
        out.push_back({"emden_inverse_square", spec(SystemKind::ode_f_emden, p, {{"C0", 0.0}}),
                       [](const Jet1& r) { return std::vector<Jet1>{4.0 / (r * r)}; }, {0.3, 3.0},
                       [](double r, double m) { return r >= m; }});
    }
    {
        const double b = 0.5;
        const SystemParams p{1.0, 1.0, 1.0, 1.0, -1.0};
        out.push_back({"f_alpha_sec", spec(SystemKind::ode_f_alpha, p, {{"C1", 0.0}, {"C0", 4.0 * b * b}}),
                       [=](const Jet1& r) {
                           return std::vector<Jet1>{2.0 * b * b * (3.0 * square(sec(b * r)) - 2.0)};
                       },
                       {0.1, 6.0},
                       [=](double r, double m) {
                           return r >= m && lattice_distance(b * r, pi / 2, pi) >= m;
                       }});
        out.push_back({"f_alpha_sech", spec(SystemKind::ode_f_alpha, p, {{"C1", 0.0}, {"C0", -4.0 * b * b}}),
                       [=](const Jet1& r) {
                           return std::vector<Jet1>{2.0 * b * b * (2.0 - 3.0 * square(sech(b * r)))};
                       },
                       {0.1, 6.0}, [](double r, double m) { return r >= m; }});
    }
    {
        // Steady radial triples (first branch and the sec^2 family).
        const SystemParams p{1.0, 2.0, 3.0, 1.0, 1.0};
        const double d1 = p.d1, d2 = p.d2, d3 = p.d3, al = p.alpha, C0 = 1.0, C1 = 0.5;
        out.push_back({"steady_radial_rat", spec(SystemKind::ode_steady_radial, p, {}),
                       [=](const Jet1& r) {
                           const Jet1 r2 = r * r;
                           return std::vector<Jet1>{
                               2.0 * (2.0 * d2 - al) / r2, 2.0 * (2.0 * d1 - al) / r2,
                               C0 + C1 * pow(r, -al / d3) +
                                   2.0 * (2.0 * d1 - al) * (2.0 * d2 - al) / (al - 2.0 * d3) / r2};
                       },
                       {0.3, 3.0}, [](double r, double m) { return r >= m; }});
        const double b = 0.5, C4 = 1.0, C5 = 0.2;
        out.push_back({"steady_radial_sec",
                       spec(SystemKind::ode_steady_radial, SystemParams{1.0, 1.0, 1.0, 1.0, -1.0}, {}),
                       [=](const Jet1& r) {
                           const Jet1 S = square(sec(b * r));
                           return std::vector<Jet1>{6.0 * b * b * S, 2.0 * b * b * (3.0 * S - 2.0),
                                                    C4 + C5 * r - 6.0 * b * b * S};
                       },
                       {0.1, 6.0},
                       [=](double r, double m) {
                           return r >= m && lattice_distance(b * r, pi / 2, pi) >= m;
                       }});
    }
    {
        // Self-similar profiles.
        const SystemParams p0{1.0, 2.0, 3.0, 1.0, 0.0};
        const double d1 = p0.d1, d2 = p0.d2, d3 = p0.d3, C2 = 1.0;
        auto pos = [](double z, double m) { return z >= m; };
        out.push_back({"selfsim_power", spec(SystemKind::ode_selfsim, p0, {}),
                       [=](const Jet1& om) {
                           return std::vector<Jet1>{4.0 * d2 / om, 4.0 * d1 / om,
                                                    C2 * exp(-om / (4.0 * d3)) - 4.0 * d1 * d2 / (d3 * om)};
                       },
                       {0.2, 5.0}, pos});
        for (int n : {2, 3, 4}) {
            const SystemParams pn{1.2, 2.5, 0.5, 1.0, 2.0 * n * 0.5};
            const double al = pn.alpha, C1 = 0.7;
            out.push_back({"selfsim_n" + std::to_string(n), spec(SystemKind::ode_selfsim, pn, {}),
                           [=](const Jet1& om) {
                               return std::vector<Jet1>{
                                   2.0 * (2.0 * pn.d2 - al) / om, 2.0 * (2.0 * pn.d1 - al) / om,
                                   selfsim_w(om, n, pn.d1, pn.d2, pn.d3, C1, C2, false)};
                           },
                           {0.2, 5.0}, pos});
        }
        const SystemParams pb{1.0, 2.0, 1.0, 1.0, 3.0};
        const double s = pb.d1 + pb.d2;
        out.push_back({"selfsim_b", spec(SystemKind::ode_selfsim, pb, {}),
                       [=](const Jet1& om) {
                           return std::vector<Jet1>{
                               2.0 * (pb.d2 - pb.d1) / om + 1.0, 2.0 * (pb.d1 - pb.d2) / om + 1.0,
                               C2 * pow(om, -s / (2.0 * pb.d3)) * exp(-om / (4.0 * pb.d3)) -
                                   2.0 * (pb.d1 - pb.d2) * (pb.d1 - pb.d2) / ((s - 2.0 * pb.d3) * om) - 1.0};
                       },
                       {0.2, 5.0}, pos});
    }
    return out;
}

} // namespace dlv
