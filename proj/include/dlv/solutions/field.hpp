#pragma once

#include "dlv/errors.hpp"
#include "dlv/numerics/jet.hpp"

#include <array>
#include <functional>
#include <memory>
#include <utility>

namespace dlv {

/// A jet-evaluable triple (u, v, w) on (t, x, y).
///
/// Radial and reduced forms reuse the point slots (see Point). `valid`
/// says whether the point keeps `margin` clearance from every singular set;
/// jets/values may throw DomainError where it is false.
class Field3 {
public:
    virtual ~Field3() = default;

    virtual Triple<Jet2> jets(const Point& p) const = 0;
    virtual Triple<double> values(const Point& p) const
    {
        const auto j = jets(p);
        return {j[0].v, j[1].v, j[2].v};
    }
    virtual bool valid(const Point& p, double margin) const = 0;
};

using FieldPtr = std::shared_ptr<const Field3>;

/// Field from a generic formula `(auto t, auto x, auto y) -> Triple<T>` and a
/// validity predicate `(const Point&, double margin) -> bool`.
template <typename Formula, typename Valid>
class FormulaField final : public Field3 {
public:
    FormulaField(Formula f, Valid v) : f_(std::move(f)), valid_(std::move(v)) {}

    Triple<Jet2> jets(const Point& p) const override
    {
        const auto s = seed(p);
        return f_(s[0], s[1], s[2]);
    }
    Triple<double> values(const Point& p) const override { return f_(p.t, p.x, p.y); }
    bool valid(const Point& p, double margin) const override { return valid_(p, margin); }

private:
    Formula f_;
    Valid valid_;
};

template <typename Formula, typename Valid>
FieldPtr make_formula_field(Formula f, Valid v)
{
    return std::make_shared<FormulaField<Formula, Valid>>(std::move(f), std::move(v));
}

/// Coordinate change: new(P) = inner(map(P)). `map` returns the jets of the
/// inner coordinates with respect to the outer ones at P; the optional
/// `point_map` is a cheaper value-only version of it.
class MappedField final : public Field3 {
public:
    using JetMap = std::function<Triple<Jet2>(const Point&)>;
    using PointMap = std::function<Point(const Point&)>;

    MappedField(FieldPtr inner, JetMap map, PointMap point_map = {})
        : inner_(std::move(inner)), map_(std::move(map)), point_map_(std::move(point_map)) {}

    Triple<Jet2> jets(const Point& p) const override;
    Triple<double> values(const Point& p) const override;
    bool valid(const Point& p, double margin) const override;

private:
    Point mapped(const Point& p) const;

    FieldPtr inner_;
    JetMap map_;
    PointMap point_map_;
};

/// Pointwise affine fibre action: out_i = scale_i * in_i + shift_i(P).
class AffineFiberField final : public Field3 {
public:
    using ShiftFn = std::function<Jet2(const Triple<Jet2>&)>;

    AffineFiberField(FieldPtr inner, Triple<double> scale, std::array<ShiftFn, 3> shift = {})
        : inner_(std::move(inner)), scale_(scale), shift_(std::move(shift)) {}

    Triple<Jet2> jets(const Point& p) const override;
    Triple<double> values(const Point& p) const override;
    bool valid(const Point& p, double margin) const override { return inner_->valid(p, margin); }

private:
    FieldPtr inner_;
    Triple<double> scale_;
    std::array<ShiftFn, 3> shift_;
};

/// Exchanges the first two components.
class SwappedField final : public Field3 {
public:
    explicit SwappedField(FieldPtr inner) : inner_(std::move(inner)) {}

    Triple<Jet2> jets(const Point& p) const override
    {
        auto j = inner_->jets(p);
        std::swap(j[0], j[1]);
        return j;
    }
    Triple<double> values(const Point& p) const override
    {
        auto v = inner_->values(p);
        std::swap(v[0], v[1]);
        return v;
    }
    bool valid(const Point& p, double margin) const override { return inner_->valid(p, margin); }

private:
    FieldPtr inner_;
};

} // namespace dlv
