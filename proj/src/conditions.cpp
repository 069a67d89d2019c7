#include "mof/conditions.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace mof {

namespace {

constexpr double feasibility_epsilon = 1e-12;

double uniform01(std::mt19937_64& engine) {
    return double(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

FeasibilityReport feasibility_check(const DesignParams& p) {
    if (!(p.t >= 0.0 && p.t <= 0.25 + feasibility_epsilon)) {
        throw std::invalid_argument("scale parameter t must lie in [0, 1/4]");
    }
    FeasibilityReport report;
    const double b = p.b;
    const double c = p.c;
    const double d = p.d;
    report.constraints = {
        {"d <= 0", -d},
        {"b+c >= 0", b + c},
        {"b+c <= 2+2d", 2.0 + 2.0 * d - (b + c)},
        {"b-c >= -2d", (b - c) + 2.0 * d},
        {"b-c <= 2", 2.0 - (b - c)},
        {"b*c - c^2 - 2d >= 0", b * c - c * c - 2.0 * d},
        {"b*c + 2d + c^2 - 2c <= 0", 2.0 * c - (b * c + 2.0 * d + c * c)},
    };
    report.interval_diagnostics = {
        {"b >= -d", b + d},
        {"b <= 2+d", 2.0 + d - b},
        {"c >= -1", c + 1.0},
        {"c <= 1+2d", 1.0 + 2.0 * d - c},
        {"d >= -1", d + 1.0},
    };
    report.feasible = true;
    for (const ConstraintSlack& entry : report.constraints) {
        if (entry.slack < -feasibility_epsilon) {
            report.feasible = false;
            report.violations.push_back(entry);
        }
    }
    return report;
}

double eta(const DesignParams& p, double t, double w) {
    return 4.0 * (1.0 - w) * (p.b + p.d - (p.c - p.d) * w) * t * t -
           2.0 * (1.0 + p.b - (1.0 + p.c) * w) * t + 1.0;
}

double zeta(const DesignParams& p, double w) {
    return 4.0 - (1.0 - w) * (p.b + p.d - (p.c - p.d) * w);
}

double vartheta(const DesignParams& p, double t, double w) {
    const double psi = 2.0 * t * ((p.b - 1.0) + (1.0 - p.c) * w);
    const double delta = psi * psi - 16.0 * t * t * p.d * (1.0 - w * w);
    const double xi_phi = 2.0 * t * (1.0 + p.c);
    const double xi_delta =
        8.0 * t * t * ((1.0 - p.c) * ((p.b - 1.0) + (1.0 - p.c) * w) + 4.0 * p.d * w);
    return 4.0 * delta * xi_phi * xi_phi - xi_delta * xi_delta;
}

ValidationReport numeric_validate(const DesignParams& p, int grid_size, int l_max,
                                  double tol) {
    if (grid_size < 64) {
        throw std::invalid_argument("validation grid needs at least 64 points");
    }
    if (l_max < 2) {
        throw std::invalid_argument("validation needs l_max >= 2");
    }

    const std::vector<double> grid = theta_grid(grid_size);
    const int n = grid_size;

    RequirementResult real_response{"real_response", true, 0.0, 0.0, 0};
    RequirementResult positive{"positive_response", true, 0.0, 0.0, 0};
    RequirementResult unimodal{"unimodal_response", true, 0.0, 0.0, 0};
    RequirementResult reduction{"consistent_reduction", true, 0.0, 0.0, 0};
    RequirementResult normalized{"normalized_response", true, 0.0, 0.0, 0};
    RequirementResult gaussian{"gaussian_reduction", true, 0.0, 0.0, 0};

    std::vector<char> usable(n, 1);
    std::vector<double> lambda1(n, 0.0), lambda2(n, 0.0), mu1(n, 0.0), mu2(n, 0.0);
    double min_delta = std::numeric_limits<double>::infinity();
    double min_delta_theta = 0.0;
    for (int i = 0; i < n; ++i) {
        try {
            const SpectralPoint sp = spectral_point(p, grid[i]);
            lambda1[i] = sp.lambda1;
            lambda2[i] = sp.lambda2;
            mu1[i] = sp.mu1;
            mu2[i] = sp.mu2;
            if (sp.delta < min_delta) {
                min_delta = sp.delta;
                min_delta_theta = grid[i];
            }
        } catch (const NegativeDiscriminant&) {
            usable[i] = 0;
            const SpectralPoint raw{grid[i],
                                    sigma_xx(p, grid[i]),
                                    sigma_aa(p, grid[i]),
                                    cross_product(p, grid[i]),
                                    0.0,
                                    0.0,
                                    0.0,
                                    0.0,
                                    0.0,
                                    0.0,
                                    0.0};
            const double psi = raw.sigma_xx - raw.sigma_aa;
            const double delta = psi * psi + 4.0 * raw.cross;
            if (delta < min_delta) {
                min_delta = delta;
                min_delta_theta = grid[i];
            }
        }
    }
    real_response.margin = min_delta;
    real_response.worst_theta = min_delta_theta;
    real_response.pass = min_delta >= -discriminant_tolerance;

    auto record_worst = [](RequirementResult& req, double margin, double theta, int l) {
        if (margin < req.margin) {
            req.margin = margin;
            req.worst_theta = theta;
            req.worst_l = l;
        }
    };
    positive.margin = std::numeric_limits<double>::infinity();
    unimodal.margin = std::numeric_limits<double>::infinity();
    reduction.margin = std::numeric_limits<double>::infinity();
    normalized.margin = std::numeric_limits<double>::infinity();
    gaussian.margin = std::numeric_limits<double>::infinity();

    std::vector<double> pow1(n, 1.0), pow2(n, 1.0);
    std::vector<double> current(n, 0.0), previous(n, 1.0);
    std::vector<double> gauss_power(n, 1.0), gauss_base(n, 0.0);
    const bool check_gaussian = p.d == 0.0;
    for (int i = 0; i < n; ++i) {
        gauss_base[i] = sigma_xx(p, grid[i]);
    }

    for (int l = 1; l <= l_max; ++l) {
        for (int i = 0; i < n; ++i) {
            if (!usable[i]) {
                continue;
            }
            pow1[i] *= lambda1[i];
            pow2[i] *= lambda2[i];
            current[i] = mu1[i] * pow1[i] + mu2[i] * pow2[i];
            record_worst(positive, current[i], grid[i], l);
            record_worst(reduction, previous[i] - current[i], grid[i], l);
        }
        for (int i = 0; i + 1 < n; ++i) {
            if (usable[i] && usable[i + 1]) {
                record_worst(unimodal, current[i] - current[i + 1], grid[i + 1], l);
            }
        }
        if (usable[0]) {
            record_worst(normalized, -std::abs(current[0] - 1.0), grid[0], l);
        }
        if (check_gaussian) {
            for (int i = 0; i < n; ++i) {
                gauss_power[i] *= gauss_base[i];
                if (usable[i]) {
                    record_worst(gaussian, -std::abs(current[i] - gauss_power[i]),
                                 grid[i], l);
                }
            }
        }
        std::swap(previous, current);
    }

    if (!check_gaussian) {
        gaussian.margin = 0.0;
    }
    positive.pass = positive.margin >= -tol;
    unimodal.pass = unimodal.margin >= -tol;
    reduction.pass = reduction.margin >= -tol;
    normalized.pass = normalized.margin >= -tol;
    gaussian.pass = gaussian.margin >= -tol;

    ValidationReport report;
    report.requirements = {real_response, positive,   unimodal,
                           reduction,     normalized, gaussian};
    report.pass = true;
    for (const RequirementResult& req : report.requirements) {
        report.pass = report.pass && req.pass;
    }
    return report;
}

std::vector<DesignParams> sample_feasible(int count, unsigned long long seed,
                                          std::optional<double> fixed_d) {
    if (count < 1) {
        throw std::invalid_argument("sample count must be positive");
    }
    std::mt19937_64 engine(seed);
    std::vector<DesignParams> samples;
    samples.reserve(count);
    long long attempts = 0;
    const long long attempt_limit = 1000000LL * count;
    while (int(samples.size()) < count) {
        if (++attempts > attempt_limit) {
            throw std::runtime_error("feasible sampling did not converge");
        }
        DesignParams p;
        p.t = 0.25;
        p.d = fixed_d ? *fixed_d : -uniform01(engine);
        const double width = 2.0 + 2.0 * p.d;
        p.b = -p.d + uniform01(engine) * width;
        p.c = -1.0 + uniform01(engine) * width;
        if (feasibility_check(p).feasible) {
            samples.push_back(p);
        }
    }
    return samples;
}

}  // namespace mof
