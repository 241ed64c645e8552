#include "dlv/solutions/field.hpp"

namespace dlv {

Point MappedField::mapped(const Point& p) const
{
    if (point_map_) return point_map_(p);
    const auto m = map_(p);
    return {m[0].v, m[1].v, m[2].v};
}

Triple<Jet2> MappedField::jets(const Point& p) const
{
    const auto m = map_(p);
    const auto inner = inner_->jets({m[0].v, m[1].v, m[2].v});
    return {compose(inner[0], m), compose(inner[1], m), compose(inner[2], m)};
}

Triple<double> MappedField::values(const Point& p) const { return inner_->values(mapped(p)); }

bool MappedField::valid(const Point& p, double margin) const
{
    return inner_->valid(mapped(p), margin);
}

Triple<Jet2> AffineFiberField::jets(const Point& p) const
{
    auto j = inner_->jets(p);
    const auto s = seed(p);
    for (int i = 0; i < 3; ++i) {
        j[i] *= scale_[i];
        if (shift_[i]) j[i] += shift_[i](s);
    }
    return j;
}

Triple<double> AffineFiberField::values(const Point& p) const
{
    auto v = inner_->values(p);
    const Triple<Jet2> s{Jet2(p.t), Jet2(p.x), Jet2(p.y)};
    for (int i = 0; i < 3; ++i) {
        v[i] *= scale_[i];
        if (shift_[i]) v[i] += shift_[i](s).v;
    }
    return v;
}

} // namespace dlv
