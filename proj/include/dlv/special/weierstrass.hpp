#pragma once

#include "dlv/numerics/jet.hpp"

#include <array>
#include <optional>

namespace dlv {

/// Lattice invariants of the Weierstrass function.
struct WeierstrassParams {
    double g2 = 0.0;
    double g3 = 0.0;

    double discriminant() const { return g2 * g2 * g2 - 27.0 * g3 * g3; }
};

/// Real-argument evaluator for wp(z; g2, g3) and its derivative.
///
/// Evaluation uses the Laurent series about the origin inside half the
/// estimated distance to the nearest lattice point, and the duplication
/// formula to reach larger arguments. For g2 = 0, g3 > 0 the real half-period
/// is found once (bisection on wp' = 0) and arguments are reduced modulo the
/// real period. Other invariants get no period reduction: a pole met during
/// duplication is reported as PoleError (|wp| > 1e12).
///
/// Instances are immutable after construction and safe for concurrent use.
class Weierstrass {
public:
    static constexpr int num_coefficients = 40;
    static constexpr double pole_margin = 1e-6;

    explicit Weierstrass(WeierstrassParams params);

    double wp(double z) const;
    double wp_prime(double z) const;

    /// wp, wp', wp'' = 6wp^2 - g2/2 and wp''' = 12 wp wp'.
    ElemDerivs derivs(double z) const;

    /// |wp'^2 - (4wp^3 - g2 wp - g3)| / (1 + |4wp^3|).
    double invariant_residual(double z) const;

    const WeierstrassParams& params() const { return params_; }
    /// Estimated distance from the origin to the nearest non-zero lattice point.
    double pole_distance() const { return rho_; }
    /// Smallest positive zero of wp' on the real axis (only for g2 = 0, g3 > 0).
    std::optional<double> real_half_period() const { return half_period_; }

private:
    struct Pair {
        double p;
        double dp;
    };

    Pair series(double z) const;
    Pair unreduced(double z) const;
    Pair evaluate(double z) const;

    WeierstrassParams params_;
    // c_[k] multiplies z^(2k-2); entries 0 and 1 unused.
    std::array<double, num_coefficients + 2> c_{};
    double rho_ = 0.0;
    std::optional<double> half_period_;
};

double wp(double z, const WeierstrassParams& p);
double wp_prime(double z, const WeierstrassParams& p);
double wp_invariant_residual(double z, const WeierstrassParams& p);

inline Jet2 wp(const Jet2& z, const Weierstrass& w) { return chain(z, w.derivs(z.v)); }
inline Jet1 wp(const Jet1& z, const Weierstrass& w) { return chain(z, w.derivs(z.v)); }
inline double wp(double z, const Weierstrass& w) { return w.wp(z); }

} // namespace dlv
