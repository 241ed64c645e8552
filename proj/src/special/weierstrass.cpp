#include "dlv/special/weierstrass.hpp"

#include "dlv/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace dlv {

namespace {

constexpr int max_duplications = 40;
constexpr double blowup = 1e12;

} // namespace

Weierstrass::Weierstrass(WeierstrassParams params) : params_(params)
{
    if (!std::isfinite(params.g2) || !std::isfinite(params.g3))
        throw ParameterError("Weierstrass invariants must be finite");

    constexpr int last = num_coefficients + 1;
    c_[2] = params.g2 / 20.0;
    c_[3] = params.g3 / 28.0;
    for (int k = 4; k <= last; ++k) {
        double s = 0.0;
        for (int m = 2; m <= k - 2; ++m) s += c_[m] * c_[k - m];
        c_[k] = 3.0 * s / ((2.0 * k + 1.0) * (k - 3.0));
    }

    // Root test on the trailing coefficients.
    rho_ = std::numeric_limits<double>::infinity();
    for (int k = last - 8; k <= last; ++k)
        if (c_[k] != 0.0) rho_ = std::min(rho_, std::pow(std::abs(c_[k]), -1.0 / (2.0 * k - 2.0)));

    if (params.g2 == 0.0 && params.g3 > 0.0) {
        double lo = 0.3 * rho_, hi = 0.7 * rho_;
        if (!(unreduced(lo).dp < 0.0 && unreduced(hi).dp > 0.0))
            throw PrecisionError("Weierstrass: could not bracket the real half-period");
        for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi;
             ++it) {
            const double mid = 0.5 * (lo + hi);
            (unreduced(mid).dp < 0.0 ? lo : hi) = mid;
        }
        half_period_ = 0.5 * (lo + hi);
        rho_ = 2.0 * *half_period_;
    }
}

Weierstrass::Pair Weierstrass::series(double z) const
{
    const double z2 = z * z;
    double p = 0.0, dp = 0.0, zp = z2; // zp = z^(2k-2)
    double last_term = 0.0;
    for (int k = 2; k <= num_coefficients + 1; ++k) {
        last_term = c_[k] * zp;
        p += last_term;
        dp += (2.0 * k - 2.0) * c_[k] * zp / z;
        zp *= z2;
    }
    p += 1.0 / z2;
    dp += -2.0 / (z2 * z);
    if (std::abs(last_term) > 1e-16 * std::abs(p))
        throw PrecisionError("Weierstrass series tail too large at z = " + std::to_string(z));
    return {p, dp};
}

Weierstrass::Pair Weierstrass::unreduced(double z) const
{
    const double limit = 0.5 * rho_;
    int halvings = 0;
    double zr = z;
    while (std::abs(zr) > limit) {
        if (++halvings > max_duplications)
            throw PrecisionError("Weierstrass: argument needs more than 40 duplications");
        zr *= 0.5;
    }
    Pair cur = series(zr);
    const double g2 = params_.g2;
    for (int i = 0; i < halvings; ++i) {
        if (cur.dp == 0.0) throw PoleError("Weierstrass: duplication hit a lattice point");
        const double p = cur.p, dp = cur.dp;
        const double p2 = 6.0 * p * p - 0.5 * g2;
        const double np = -2.0 * p + p2 * p2 / (4.0 * dp * dp);
        const double ndp = -dp + 3.0 * p * p2 / dp - p2 * p2 * p2 / (4.0 * dp * dp * dp);
        if (!(std::abs(np) <= blowup))
            throw PoleError("Weierstrass: argument " + std::to_string(z) + " too close to a pole");
        cur = {np, ndp};
    }
    return cur;
}

Weierstrass::Pair Weierstrass::evaluate(double z) const
{
    if (!std::isfinite(z)) throw DomainError("Weierstrass: non-finite argument");
    double zr = z;
    if (half_period_) {
        const double period = 2.0 * *half_period_;
        zr = z - period * std::round(z / period);
    }
    if (std::abs(zr) < pole_margin)
        throw PoleError("Weierstrass: argument " + std::to_string(z) + " within 1e-6 of a pole");
    const double sign = zr < 0.0 ? -1.0 : 1.0;
    Pair r = unreduced(std::abs(zr));
    r.dp *= sign;
    return r;
}

double Weierstrass::wp(double z) const { return evaluate(z).p; }

double Weierstrass::wp_prime(double z) const { return evaluate(z).dp; }

ElemDerivs Weierstrass::derivs(double z) const
{
    const Pair r = evaluate(z);
    return {r.p, r.dp, 6.0 * r.p * r.p - 0.5 * params_.g2, 12.0 * r.p * r.dp};
}

double Weierstrass::invariant_residual(double z) const
{
    const Pair r = evaluate(z);
    const double cube = 4.0 * r.p * r.p * r.p;
    return std::abs(r.dp * r.dp - (cube - params_.g2 * r.p - params_.g3)) / (1.0 + std::abs(cube));
}

double wp(double z, const WeierstrassParams& p) { return Weierstrass(p).wp(z); }

double wp_prime(double z, const WeierstrassParams& p) { return Weierstrass(p).wp_prime(z); }

double wp_invariant_residual(double z, const WeierstrassParams& p)
{
    return Weierstrass(p).invariant_residual(z);
}

} // namespace dlv
