#pragma once

#include "dlv/numerics/jet.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace dlv {

/// splitmix64 (Steele, Lea & Flood). Fixed so that sample sets are
/// reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

struct SampleSpec {
    std::uint64_t seed = 42;
    int count = 1;
    Range t{0.0, 1.0};
    Range x{-1.0, 1.0};
    Range y{-1.0, 1.0};
    /// Distance kept from singular sets; handed to the exclusion predicate.
    double margin = 0.0;
};

/// Returns true when a draw must be rejected (too close to a singular set).
using Exclusion = std::function<bool(const Point& p, double margin)>;

/// Draws `spec.count` points uniformly in the box, skipping excluded ones.
/// Deterministic for a fixed seed. Throws SamplingError on a bad spec or
/// when more than 99% of draws are rejected.
std::vector<Point> sample_points(const SampleSpec& spec, const Exclusion& excluded = {});

} // namespace dlv
