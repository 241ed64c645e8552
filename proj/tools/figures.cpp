#include "figures.hpp"

#include "dlv/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dlv::cli {

FigureSpec figure_spec(const std::string& id)
{
    FigureSpec f;
    f.id = id;
    f.params = {1.0, 2.0, 3.0, 1.0, 0.0};
    f.constants = {{"alpha1", 0.5}, {"alpha2", 0.25}, {"C1", 2.0}, {"C3", -15.0}, {"C4", 55.0}};
    const double pi = std::numbers::pi;
    if (id == "fig1") {
        f.slices = {0.0, pi / 4, pi / 2, 3 * pi / 2};
        f.notes.push_back("t0 = 3pi/2 lies outside the interval [0, pi] used elsewhere; it is emitted as given");
    } else if (id == "fig2" || id == "fig3") {
        f.xy_surfaces = false;
        f.slices = {-1.0, 0.0, 1.0};
        if (id == "fig3") {
            f.constants["C3"] = 5.0;
            f.constants["C4"] = 10.0;
        }
    } else {
        throw ParameterError("unknown figure '" + id + "' (expected fig1, fig2 or fig3)");
    }
    return f;
}

ExactSolution figure_solution(const FigureSpec& spec)
{
    return make_solution(SolutionId::S_RATIONAL, spec.params, spec.constants);
}

std::vector<double> dominance_times()
{
    std::vector<double> t;
    for (int k = 0; k <= 8; ++k) t.push_back(k * std::numbers::pi / 8);
    return t;
}

DominanceReport dominance_check(const ExactSolution& sol, int n, const std::vector<double>& times)
{
    if (n < 2) throw ParameterError("dominance grid needs n >= 2");
    DominanceReport r;
    r.min_gap = std::numeric_limits<double>::infinity();
    for (double t : times)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const Point p{t, -1.0 + 2.0 * i / (n - 1), -1.0 + 2.0 * j / (n - 1)};
                ++r.samples;
                if (!sol.field->valid(p, sol.margin)) continue;
                ++r.valid;
                const auto v = sol.field->values(p);
                const double gap = v[2] - std::max(v[0], v[1]);
                if (!(gap > 0.0)) ++r.violations;
                if (gap < r.min_gap) {
                    r.min_gap = gap;
                    r.worst = p;
                }
            }
    r.holds = r.valid > 0 && r.violations == 0;
    return r;
}

} // namespace dlv::cli
