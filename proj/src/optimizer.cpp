#include "mof/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

namespace mof {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();
constexpr double active_constraint_tolerance = 1e-3;

using Point = std::array<double, 3>;

struct FalloffObjective {
    int l;
    double theta_lo;
    double theta_hi;
    double t;
    std::vector<TraceEntry>* trace;

    double operator()(const Point& x) const {
        const DesignParams p{x[0], x[1], x[2], t};
        const bool feasible = feasibility_check(p).feasible;
        double value = neg_inf;
        if (feasible) {
            value = falloff(p, l, theta_lo, theta_hi);
        }
        trace->push_back(TraceEntry{p, feasible ? value : 0.0, !feasible});
        return value;
    }
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = lo + (hi - lo) * double(i) / double(n - 1);
    }
    return out;
}

std::pair<Point, double> nelder_mead(const Point& start, double h, int iters,
                                     const FalloffObjective& objective) {
    std::vector<Point> pts;
    std::vector<double> vals;
    pts.push_back(start);
    vals.push_back(objective(start));
    for (int i = 0; i < 3; ++i) {
        Point plus = start;
        plus[i] += h;
        double v_plus = objective(plus);
        if (v_plus == neg_inf) {
            Point minus = start;
            minus[i] -= h;
            const double v_minus = objective(minus);
            if (v_minus > v_plus) {
                plus = minus;
                v_plus = v_minus;
            }
        }
        pts.push_back(plus);
        vals.push_back(v_plus);
    }

    auto order_desc = [&]() {
        std::vector<int> idx(4);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[a] > vals[b]; });
        std::vector<Point> np(4);
        std::vector<double> nv(4);
        for (int i = 0; i < 4; ++i) {
            np[i] = pts[idx[i]];
            nv[i] = vals[idx[i]];
        }
        pts = std::move(np);
        vals = std::move(nv);
    };

    auto diameter = [&]() {
        double worst = 0.0;
        for (int i = 1; i < 4; ++i) {
            double sq = 0.0;
            for (int k = 0; k < 3; ++k) {
                const double diff = pts[i][k] - pts[0][k];
                sq += diff * diff;
            }
            worst = std::max(worst, std::sqrt(sq));
        }
        return worst;
    };

    for (int iter = 0; iter < iters; ++iter) {
        order_desc();
        if (diameter() < 1e-12) {
            break;
        }
        Point centroid{0.0, 0.0, 0.0};
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < 3; ++k) {
                centroid[k] += pts[i][k] / 3.0;
            }
        }
        Point reflected;
        for (int k = 0; k < 3; ++k) {
            reflected[k] = centroid[k] + (centroid[k] - pts[3][k]);
        }
        const double f_reflected = objective(reflected);
        if (f_reflected > vals[0]) {
            Point expanded;
            for (int k = 0; k < 3; ++k) {
                expanded[k] = centroid[k] + 2.0 * (centroid[k] - pts[3][k]);
            }
            const double f_expanded = objective(expanded);
            if (f_expanded > f_reflected) {
                pts[3] = expanded;
                vals[3] = f_expanded;
            } else {
                pts[3] = reflected;
                vals[3] = f_reflected;
            }
        } else if (f_reflected > vals[2]) {
            pts[3] = reflected;
            vals[3] = f_reflected;
        } else {
            Point contracted;
            for (int k = 0; k < 3; ++k) {
                contracted[k] = centroid[k] + 0.5 * (pts[3][k] - centroid[k]);
            }
            const double f_contracted = objective(contracted);
            if (f_contracted > vals[3]) {
                pts[3] = contracted;
                vals[3] = f_contracted;
            } else {
                for (int i = 1; i < 4; ++i) {
                    for (int k = 0; k < 3; ++k) {
                        pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
                    }
                    vals[i] = objective(pts[i]);
                }
            }
        }
    }
    order_desc();
    return {pts[0], vals[0]};
}

}  // namespace

DesignResult optimize(int l, double theta_lo, double theta_hi, double t,
                      const OptimizeSettings& settings) {
    if (l < 1) {
        throw std::invalid_argument("objective iteration must be >= 1");
    }
    if (!(theta_lo < theta_hi)) {
        throw std::invalid_argument("theta_lo must be below theta_hi");
    }
    if (settings.grid_density < 2) {
        throw std::invalid_argument("grid density must be at least 2");
    }

    DesignResult result;
    FalloffObjective objective{l, theta_lo, theta_hi, t, &result.trace};

    std::vector<std::pair<double, Point>> feasible_grid;
    for (double d : linspace(-1.0, 0.0, settings.grid_density)) {
        for (double b : linspace(-d, 2.0 + d, settings.grid_density)) {
            for (double c : linspace(-1.0, 1.0 + 2.0 * d, settings.grid_density)) {
                const Point x{b, c, d};
                const double v = objective(x);
                if (v > neg_inf) {
                    feasible_grid.emplace_back(v, x);
                }
            }
        }
    }
    if (feasible_grid.empty()) {
        throw EmptyFeasibleGrid("no feasible point on the search grid");
    }
    std::sort(feasible_grid.begin(), feasible_grid.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<Point> starts;
    for (size_t i = 0; i < feasible_grid.size() && starts.size() < 4; ++i) {
        starts.push_back(feasible_grid[i].second);
    }
    for (const DesignParams& p : sample_feasible(2, settings.seed)) {
        starts.push_back(Point{p.b, p.c, p.d});
    }

    Point best_point = feasible_grid[0].second;
    double best_value = feasible_grid[0].first;
    for (const Point& start : starts) {
        auto [coarse, coarse_value] = nelder_mead(start, 0.02, settings.refinement_iters,
                                                  objective);
        if (coarse_value > best_value) {
            best_value = coarse_value;
            best_point = coarse;
        }
        auto [polished, polished_value] =
            nelder_mead(coarse, 0.004, settings.refinement_iters, objective);
        if (polished_value > best_value) {
            best_value = polished_value;
            best_point = polished;
        }
    }

    result.params = DesignParams{best_point[0], best_point[1], best_point[2], t};
    result.objective = best_value;
    for (const ConstraintSlack& entry : feasibility_check(result.params).constraints) {
        if (std::abs(entry.slack) <= active_constraint_tolerance) {
            result.active_constraints.push_back(entry.id);
        }
    }
    return result;
}

ComparisonTable compare(const std::vector<std::pair<DesignParams, int>>& configs,
                        int theta_grid_size) {
    if (configs.size() < 2) {
        throw std::invalid_argument("comparison needs at least 2 configurations");
    }
    ComparisonTable table;
    table.configs = configs;
    table.thetas = theta_grid(theta_grid_size);
    table.responses.reserve(configs.size());
    for (const auto& [params, l] : configs) {
        std::vector<double> values;
        values.reserve(table.thetas.size());
        for (double theta : table.thetas) {
            values.push_back(equivalent_response(params, theta, l));
        }
        table.responses.push_back(std::move(values));
    }
    constexpr double zero_tolerance = 1e-12;
    for (size_t i = 0; i < configs.size(); ++i) {
        for (size_t j = i + 1; j < configs.size(); ++j) {
            CrossingSet crossing{int(i), int(j), {}};
            int last_sign = 0;
            double last_theta = 0.0;
            for (size_t k = 0; k < table.thetas.size(); ++k) {
                const double diff = table.responses[i][k] - table.responses[j][k];
                const int sign =
                    std::abs(diff) <= zero_tolerance ? 0 : (diff > 0.0 ? 1 : -1);
                if (sign == 0) {
                    continue;
                }
                if (last_sign != 0 && sign != last_sign) {
                    crossing.thetas.push_back((last_theta + table.thetas[k]) / 2.0);
                }
                last_sign = sign;
                last_theta = table.thetas[k];
            }
            table.crossings.push_back(std::move(crossing));
        }
    }
    return table;
}

}  // namespace mof
