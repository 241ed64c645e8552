#include "dlv/numerics/sampling.hpp"

#include "dlv/errors.hpp"

#include <string>

namespace dlv {

std::vector<Point> sample_points(const SampleSpec& spec, const Exclusion& excluded)
{
    if (spec.count < 1) throw SamplingError("sample count must be at least 1");
    for (const Range* r : {&spec.t, &spec.x, &spec.y})
        if (!(r->lo < r->hi)) throw SamplingError("sample box ranges must be non-degenerate");
    if (!(spec.margin >= 0.0)) throw SamplingError("sample margin must be non-negative");

    SplitMix64 rng(spec.seed);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(spec.count));
    const long budget = 100L * spec.count;
    long draws = 0;
    while (static_cast<int>(pts.size()) < spec.count) {
        if (draws++ >= budget)
            throw SamplingError("rejection budget exhausted after " + std::to_string(budget) +
                                " draws (" + std::to_string(pts.size()) + " accepted)");
        Point p;
        p.t = rng.uniform(spec.t.lo, spec.t.hi);
        p.x = rng.uniform(spec.x.lo, spec.x.hi);
        p.y = rng.uniform(spec.y.lo, spec.y.hi);
        if (excluded && excluded(p, spec.margin)) continue;
        pts.push_back(p);
    }
    return pts;
}

} // namespace dlv
