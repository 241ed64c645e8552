#include "dlv/residual/residual.hpp"

#include "dlv/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dlv {

namespace {

// Sums additive terms and remembers the largest magnitude for normalisation.
class Terms {
public:
    Terms& operator<<(double term)
    {
        sum_ += term;
        largest_ = std::max(largest_, std::abs(term));
        return *this;
    }
    ScaledResidual done() const { return {sum_, 1.0 + largest_}; }

private:
    double sum_ = 0.0;
    double largest_ = 0.0;
};

double diffusivity(const SystemParams& p, int i) { return i == 0 ? p.d1 : (i == 1 ? p.d2 : p.d3); }

// +1 for the consumed species, -1 for the product.
double reaction_sign(int i) { return i == 2 ? -1.0 : 1.0; }

void require_pde(const SystemSpec& spec)
{
    if (!info(spec.kind).is_pde)
        throw ParameterError(to_string(spec.kind) + " is an ODE kind; use ode_residual");
}

void require_ode(const SystemSpec& spec)
{
    if (info(spec.kind).is_pde)
        throw ParameterError(to_string(spec.kind) + " is a PDE kind; use pde_residual");
}

} // namespace

Triple<ScaledResidual> pde_residual_terms(const SystemSpec& spec, const Triple<Jet2>& u,
                                          const Point& p)
{
    require_pde(spec);
    const SystemParams& sp = spec.params;
    const double uv = u[0].v * u[1].v;
    Triple<ScaledResidual> out;

    switch (spec.kind) {
    case SystemKind::pde_full: {
        if (!spec.stream) throw ParameterError("pde_full needs a stream function");
        const Jet2 psi = spec.stream->jet(p.x, p.y);
        for (int i = 0; i < 3; ++i) {
            Terms t;
            t << u[i].d_t() << psi.d_y() * u[i].d_x() << -psi.d_x() * u[i].d_y()
              << -diffusivity(sp, i) * u[i].laplacian() << reaction_sign(i) * sp.k * uv;
            out[i] = t.done();
        }
        break;
    }
    case SystemKind::pde_rotated_free:
        for (int i = 0; i < 3; ++i) {
            Terms t;
            t << u[i].d_t() << -diffusivity(sp, i) * u[i].laplacian() << reaction_sign(i) * uv;
            out[i] = t.done();
        }
        break;
    case SystemKind::pde_radial: {
        const double r = p.x;
        if (r == 0.0) throw DomainError("pde_radial: r = 0");
        for (int i = 0; i < 3; ++i) {
            const double d = diffusivity(sp, i);
            Terms t;
            t << u[i].d_t() << -d * u[i].d_xx() << -(d + sp.alpha) / r * u[i].d_x()
              << reaction_sign(i) * uv;
            out[i] = t.done();
        }
        break;
    }
    case SystemKind::pde_stationary:
        for (int i = 0; i < 3; ++i) {
            Terms t;
            t << diffusivity(sp, i) * u[i].laplacian() << -reaction_sign(i) * uv;
            out[i] = t.done();
        }
        break;
    case SystemKind::pde_reduced_selfsim: {
        const double w1 = p.x;
        const double beta = spec.constant("beta");
        if (w1 == 0.0) throw DomainError("pde_reduced_selfsim: omega1 = 0");
        for (int i = 0; i < 3; ++i) {
            const double d = diffusivity(sp, i);
            Terms t;
            t << 4.0 * d * w1 * u[i].d_xx() << d * (1.0 + beta * beta) / w1 * u[i].d_yy()
              << 4.0 * beta * d * u[i].d_xy() << (4.0 * d + w1) * u[i].d_x()
              << -reaction_sign(i) * uv << u[i].v;
            out[i] = t.done();
        }
        break;
    }
    case SystemKind::pde_reduced_wave: {
        const double t0 = spec.constant("t0");
        for (int i = 0; i < 3; ++i) {
            const double d = diffusivity(sp, i);
            Terms t;
            t << d * t0 * t0 * u[i].d_xx() << d * u[i].d_yy() << -u[i].d_x()
              << -reaction_sign(i) * uv;
            out[i] = t.done();
        }
        break;
    }
    case SystemKind::pde_reduced_polar: {
        const double w1 = p.x;
        const double t0 = spec.constant("t0");
        if (w1 == 0.0) throw DomainError("pde_reduced_polar: omega1 = 0");
        for (int i = 0; i < 3; ++i) {
            const double d = diffusivity(sp, i);
            Terms t;
            t << 4.0 * d * w1 * u[i].d_xx() << d * t0 * t0 / w1 * u[i].d_yy()
              << 4.0 * d * u[i].d_x() << -u[i].d_y() << -reaction_sign(i) * uv;
            out[i] = t.done();
        }
        break;
    }
    case SystemKind::pde_fisher: {
        const double dstar = spec.constant("dstar", 1.0);
        const double b0 = spec.constant("b0");
        Terms t;
        t << u[0].d_t() << -dstar * u[0].d_xx() << -b0 * u[0].v << u[0].v * u[0].v;
        out[0] = t.done();
        break;
    }
    default: break;
    }
    return out;
}

Triple<double> pde_residual(const SystemSpec& spec, const Field3& sol, const Point& p, DiffMode mode,
                            const FdStep& step)
{
    require_pde(spec);
    if (!sol.valid(p, 0.0)) throw DomainError("pde_residual: point outside the solution's domain");
    Triple<Jet2> jets;
    if (mode == DiffMode::ad) {
        jets = sol.jets(p);
    } else {
        jets = fd_jet_n<3>([&sol](const Point& q) { return sol.values(q); }, p, step);
    }
    const auto r = pde_residual_terms(spec, jets, p);
    return {r[0].value, r[1].value, r[2].value};
}

std::vector<ScaledResidual> ode_residual_terms(const SystemSpec& spec,
                                               const std::vector<Jet1>& c, double z)
{
    require_ode(spec);
    const SystemParams& sp = spec.params;
    const int n = info(spec.kind).components;
    if (static_cast<int>(c.size()) < n)
        throw ParameterError(to_string(spec.kind) + " expects " + std::to_string(n) +
                             " profile components");
    std::vector<ScaledResidual> out;
    const double a1 = spec.constant("alpha1");
    const double a2 = spec.constant("alpha2");
    const double t0 = spec.constant("t0");

    switch (spec.kind) {
    case SystemKind::ode_steady_radial: {
        if (z == 0.0) throw DomainError("ode_steady_radial: r = 0");
        const double uv = c[0].v * c[1].v;
        for (int i = 0; i < 3; ++i) {
            const double d = diffusivity(sp, i);
            Terms t;
            t << d * c[i].d2 << (d + sp.alpha) / z * c[i].d1 << -reaction_sign(i) * uv;
            out.push_back(t.done());
        }
        break;
    }
    case SystemKind::ode_selfsim: {
        const double U = c[0].v, V = c[1].v, W = c[2].v;
        const double lin[3] = {U, V, W};
        const double quad[3] = {-U * V, -U * V, U * V};
        for (int i = 0; i < 3; ++i) {
            const double d = diffusivity(sp, i);
            Terms t;
            t << 4.0 * d * z * c[i].d2 << (4.0 * d + 2.0 * sp.alpha + z) * c[i].d1 << lin[i]
              << quad[i];
            out.push_back(t.done());
        }
        break;
    }
    case SystemKind::ode_planewave: {
        const double A = a1 * a1 + a2 * a2;
        const double uv = c[0].v * c[1].v;
        for (int i = 0; i < 3; ++i) {
            Terms t;
            t << diffusivity(sp, i) * A * c[i].d2 << -reaction_sign(i) * uv;
            out.push_back(t.done());
        }
        break;
    }
    case SystemKind::ode_f: {
        const double A = a1 * a1 + a2 * a2;
        const double d1s = sp.d1 * A, d2s = sp.d2 * A;
        const double U = c[0].v;
        Terms t;
        t << d1s * d2s * c[0].d2 << -d1s * U * U << -spec.constant("b21") * z * U
          << -spec.constant("b20") * U;
        out.push_back(t.done());
        break;
    }
    case SystemKind::ode_fisher_wave: {
        const double ds = sp.d1 * (t0 * t0 * a1 * a1 + a2 * a2);
        if (ds == 0.0) throw ParameterError("ode_fisher_wave: d* = 0");
        const double U = c[0].v;
        Terms t;
        t << ds * c[0].d2 << -a1 * c[0].d1 << -U * U
          << spec.constant("b1") * std::exp(a1 * z / ds) * U << spec.constant("b0") * U;
        out.push_back(t.done());
        break;
    }
    case SystemKind::ode_travel: {
        const double A = t0 * t0 * a1 * a1 + a2 * a2;
        const double uv = c[0].v * c[1].v;
        for (int i = 0; i < 3; ++i) {
            Terms t;
            t << diffusivity(sp, i) * A * c[i].d2 << -a1 * c[i].d1 << -reaction_sign(i) * uv;
            out.push_back(t.done());
        }
        break;
    }
    case SystemKind::ode_f_emden: {
        const double f = c[0].v;
        Terms t;
        t << z * c[0].d2 << c[0].d1 << -z * f * f << spec.constant("C0") / sp.d2 * z * f;
        out.push_back(t.done());
        break;
    }
    case SystemKind::ode_f_alpha: {
        if (z <= 0.0) throw DomainError("ode_f_alpha: r must be positive");
        const double f = c[0].v;
        const double al = sp.alpha;
        Terms t;
        t << z * c[0].d2 << (1.0 + al) * c[0].d1 << -z * f * f
          << -spec.constant("C1") * std::pow(z, -al) * z * f << -spec.constant("C0") * z * f;
        out.push_back(t.done());
        break;
    }
    case SystemKind::ode_f3: {
        const double d1 = sp.d1, d2 = sp.d2, al = sp.alpha, C = spec.constant("C");
        const double f = c[0].v, f1 = c[0].d1, r = z;
        Terms t;
        t << d1 * d2 * r * r * c[0].d3 << (3.0 * d1 * d2 + d1 * al + d2 * al) * r * c[0].d2
          << -d1 * d2 * r * r * r * f1 * f1 << -al * (d1 + d2) * r * r * f * f1
          << -2.0 * C * d1 * d2 * r * r * f1 << (al + d1) * (al + d2) * f1
          << -al * al * r * f * f << -al * C * (d1 + d2) * r * f << -C * C * d1 * d2 * r;
        out.push_back(t.done());
        break;
    }
    default: break;
    }
    return out;
}

std::vector<double> ode_residual(const SystemSpec& spec, const Profile& profile, double z)
{
    const auto terms = ode_residual_terms(spec, profile(Jet1::variable(z)), z);
    std::vector<double> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(t.value);
    return out;
}

std::vector<Jet1> fd_profile(const Profile& profile, double z, double h)
{
    std::vector<std::vector<Jet1>> f;
    for (int k = -3; k <= 3; ++k) {
        f.push_back(profile(Jet1(z + k * h)));
        for (const Jet1& c : f.back())
            if (!std::isfinite(c.v)) throw DomainError("fd_profile: non-finite value on stencil");
    }
    const auto at = [&f](int k, std::size_t i) { return f[static_cast<std::size_t>(k + 3)][i].v; };
    std::vector<Jet1> out(f[3].size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].v = at(0, i);
        out[i].d1 = (at(-2, i) - 8.0 * at(-1, i) + 8.0 * at(1, i) - at(2, i)) / (12.0 * h);
        out[i].d2 = (-at(-2, i) + 16.0 * at(-1, i) - 30.0 * at(0, i) + 16.0 * at(1, i) - at(2, i)) /
                    (12.0 * h * h);
        out[i].d3 = (at(-3, i) / 8.0 - at(-2, i) + 13.0 / 8.0 * at(-1, i) - 13.0 / 8.0 * at(1, i) +
                     at(2, i) - at(3, i) / 8.0) /
                    (h * h * h);
    }
    return out;
}

namespace {

// Largest |R_fd - R_ad| / scale_ad over components.
template <typename Container>
double discrepancy(const Container& fd, const Container& ad)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < ad.size(); ++i)
        worst = std::max(worst, std::abs(fd[i].value - ad[i].value) / ad[i].scale);
    return worst;
}

void record_fd(ResidualReport& rep, double e_h, double e_half)
{
    ++rep.fd_points;
    rep.fd_max_rel = std::max(rep.fd_max_rel, e_h);
    rep.fd_max_rel_half = std::max(rep.fd_max_rel_half, e_half);
    if (e_half > std::max(fd_noise_floor, e_h / 4.0)) rep.fd_consistent = false;
}

} // namespace

ResidualReport certify(const SystemSpec& spec, const Field3& sol, const SampleSpec& samples,
                       double tol, const std::string& label, double margin)
{
    require_pde(spec);
    spec.params.validate();
    ResidualReport rep;
    rep.system = to_string(spec.kind);
    rep.solution = label;
    rep.samples = samples;
    rep.samples.margin = std::max(samples.margin, margin);
    rep.tolerance = tol;

    const bool uses_stream = spec.kind == SystemKind::pde_full;
    if (uses_stream && !spec.stream) throw ParameterError("pde_full needs a stream function");
    const auto pts = sample_points(rep.samples, [&](const Point& p, double m) {
        if (uses_stream && !spec.stream->valid(p.x, p.y, m)) return true;
        return !sol.valid(p, m);
    });

    auto values = [&sol](const Point& q) { return sol.values(q); };
    for (std::size_t n = 0; n < pts.size(); ++n) {
        const Point& p = pts[n];
        const auto ad = pde_residual_terms(spec, sol.jets(p), p);
        for (const auto& r : ad) {
            rep.max_abs = std::max(rep.max_abs, std::abs(r.value));
            if (r.relative() > rep.max_rel || !std::isfinite(r.relative())) {
                rep.max_rel = std::isfinite(r.relative()) ? r.relative() : INFINITY;
                rep.worst_point = p;
            }
        }
        if (n % 10 != 0) continue;
        const FdStep step;
        const auto fd_h = pde_residual_terms(spec, fd_jet_n<3>(values, p, step), p);
        const auto fd_half = pde_residual_terms(spec, fd_jet_n<3>(values, p, step.halved()), p);
        record_fd(rep, discrepancy(fd_h, ad), discrepancy(fd_half, ad));
    }
    rep.pass = rep.max_rel < tol && rep.fd_consistent;
    return rep;
}

ResidualReport certify_profile(const SystemSpec& spec, const Profile& profile,
                               const SampleSpec& samples, double tol, const std::string& label,
                               std::function<bool(double z, double margin)> valid)
{
    require_ode(spec);
    spec.params.validate();
    ResidualReport rep;
    rep.system = to_string(spec.kind);
    rep.solution = label;
    rep.samples = samples;
    rep.tolerance = tol;

    const auto pts = sample_points(samples, [&](const Point& p, double m) {
        return valid && !valid(p.x, m);
    });
    for (std::size_t n = 0; n < pts.size(); ++n) {
        const double z = pts[n].x;
        const auto ad = ode_residual_terms(spec, profile(Jet1::variable(z)), z);
        for (const auto& r : ad) {
            rep.max_abs = std::max(rep.max_abs, std::abs(r.value));
            if (r.relative() > rep.max_rel || !std::isfinite(r.relative())) {
                rep.max_rel = std::isfinite(r.relative()) ? r.relative() : INFINITY;
                rep.worst_point = pts[n];
            }
        }
        if (n % 10 != 0) continue;
        const double h = 1e-3 * (1.0 + std::abs(z));
        const auto fd_h = ode_residual_terms(spec, fd_profile(profile, z, h), z);
        const auto fd_half = ode_residual_terms(spec, fd_profile(profile, z, h / 2), z);
        record_fd(rep, discrepancy(fd_h, ad), discrepancy(fd_half, ad));
    }
    rep.pass = rep.max_rel < tol && rep.fd_consistent;
    return rep;
}

} // namespace dlv
