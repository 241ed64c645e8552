#pragma once

#include "dlv/solutions/catalog.hpp"

#include <string>
#include <vector>

namespace dlv::cli {

/// Surfaces of the rational lab wave drawn in the three figures: fig1 over
/// (x, y) at fixed times, fig2/fig3 over (t, x) at fixed y.
struct FigureSpec {
    std::string id;
    Constants constants;
    SystemParams params;
    bool xy_surfaces = true;
    std::vector<double> slices; // t values (fig1) or y values (fig2, fig3)
    std::vector<std::string> notes;
};

FigureSpec figure_spec(const std::string& id);
ExactSolution figure_solution(const FigureSpec& spec);

/// Whether w > max(u, v) at every valid node of an n x n grid over
/// (-1, 1)^2 at the given times.
struct DominanceReport {
    int samples = 0;
    int valid = 0;
    int violations = 0;
    double min_gap = 0.0; // min of w - max(u, v) over valid samples
    Point worst;
    bool holds = false;
};

DominanceReport dominance_check(const ExactSolution& sol, int n, const std::vector<double>& times);

/// Times 0, pi/8, ..., pi.
std::vector<double> dominance_times();

} // namespace dlv::cli
