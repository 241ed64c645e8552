#pragma once

#include "dlv/numerics/jet.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dlv {

/// Rows of the symmetry classification plus a user-supplied stream.
enum class StreamCase { case1 = 1, case2, case3, case4, case5, case6, case7, case8, case9, case10, case11, custom };

std::string to_string(StreamCase c);
std::optional<StreamCase> stream_case_from_string(const std::string& s);

/// Choice for the arbitrary function F appearing in rows 1-4.
enum class FKind { identity, square, sin, ln, exp, poly };

std::string to_string(FKind k);
std::optional<FKind> f_kind_from_string(const std::string& s);

struct FChoice {
    FKind kind = FKind::identity;
    std::vector<double> coeffs; // poly: sum coeffs[k] s^k

    template <typename T>
    T operator()(const T& s) const
    {
        switch (kind) {
        case FKind::identity: return s;
        case FKind::square: return s * s;
        case FKind::sin: return sin(s);
        case FKind::ln: return log(s);
        case FKind::exp: return exp(s);
        case FKind::poly: break;
        }
        T acc(0.0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
        return acc;
    }

    /// Whether F is defined at `s` with the given clearance (only ln restricts).
    bool defined(double s, double margin) const;
};

/// Named row parameters: alpha0, alpha1, alpha2, alpha, beta, gamma, sign.
using StreamParams = std::map<std::string, double>;

/// A time-independent stream function with exact derivatives.
///
/// Velocity is (Psi_y, -Psi_x). Jets are taken with respect to (t, x, y);
/// the t-parts are zero.
class StreamFunction {
public:
    using JetFn = std::function<Jet2(const Jet2& x, const Jet2& y)>;
    using ValueFn = std::function<double(double x, double y)>;
    /// True when (x, y) keeps at least `margin` from the singular set.
    using Validity = std::function<bool(double x, double y, double margin)>;

    StreamFunction(StreamCase id, StreamParams params, FChoice f, std::string formula, JetFn jet,
                   ValueFn value, Validity validity);

    /// Wraps an arbitrary smooth Psi. `valid` defaults to "everywhere".
    static StreamFunction custom(std::string formula, JetFn jet, ValueFn value,
                                 Validity valid = {});

    /// Builds both evaluators from one generic lambda `(auto x, auto y)`.
    template <typename Formula>
    static StreamFunction custom_formula(std::string formula, Formula f, Validity valid = {})
    {
        return custom(std::move(formula), [f](const Jet2& x, const Jet2& y) { return f(x, y); },
                      [f](double x, double y) { return f(x, y); }, std::move(valid));
    }

    StreamCase id() const { return id_; }
    const StreamParams& params() const { return params_; }
    const FChoice& f_choice() const { return f_; }
    const std::string& formula() const { return formula_; }

    double value(double x, double y) const { return value_(x, y); }
    /// Jet in (t, x, y) at the point; throws DomainError at singular points.
    Jet2 jet(double x, double y) const;
    /// Composition with arbitrary coordinate jets (no validity check).
    Jet2 jet(const Jet2& x, const Jet2& y) const { return jet_(x, y); }

    bool valid(double x, double y, double margin = 0.0) const;

private:
    StreamCase id_;
    StreamParams params_;
    FChoice f_;
    std::string formula_;
    JetFn jet_;
    ValueFn value_;
    Validity validity_;
};

/// Builds the stream of a classification row. Missing parameters default
/// to zero except alpha0 and sign (default 1). Throws ParameterError on a
/// violated row restriction or for StreamCase::custom.
StreamFunction make_case(StreamCase id, const StreamParams& params = {}, const FChoice& f = {});

/// Row parameters used when none are given (all restrictions satisfied,
/// every term of the formula active).
StreamParams default_stream_params(StreamCase id);

struct Velocity {
    double u1 = 0.0;
    double u2 = 0.0;
};

/// (Psi_y, -Psi_x); throws DomainError at singular points.
Velocity velocity(const StreamFunction& s, double x, double y);

/// U1_x + U2_y by fourth-order differences of the exact velocity.
double divergence_residual(const StreamFunction& s, double x, double y);

} // namespace dlv
