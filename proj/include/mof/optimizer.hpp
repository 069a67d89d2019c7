#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mof/conditions.hpp"

namespace mof {

/*
   Fall-off maximization: find (b, c, d) inside the feasible region that
   maximizes F^l(theta_lo) - F^l(theta_hi). Two phases: a feasible grid
   scan over the interval box, then Nelder-Mead refinement that rejects
   infeasible candidates (objective -inf).
*/

struct OptimizeSettings {
    int grid_density = 21;
    int refinement_iters = 400;
    unsigned long long seed = 0;
};

struct TraceEntry {
    DesignParams params;
    double objective = 0.0;
    bool rejected = false;
};

struct DesignResult {
    DesignParams params;
    double objective = 0.0;
    std::vector<std::string> active_constraints;
    std::vector<TraceEntry> trace;
};

DesignResult optimize(int l, double theta_lo, double theta_hi, double t,
                      const OptimizeSettings& settings = {});

struct CrossingSet {
    int first = 0;
    int second = 0;
    std::vector<double> thetas;
};

struct ComparisonTable {
    std::vector<std::pair<DesignParams, int>> configs;
    std::vector<double> thetas;
    std::vector<std::vector<double>> responses;
    std::vector<CrossingSet> crossings;
};

ComparisonTable compare(const std::vector<std::pair<DesignParams, int>>& configs,
                        int theta_grid_size);

}  // namespace mof
