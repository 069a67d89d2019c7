#include "mof/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "mof/conditions.hpp"
#include "mof/io.hpp"
#include "mof/iteration.hpp"
#include "mof/optimizer.hpp"
#include "mof/realization.hpp"
#include "mof/spectral.hpp"

namespace mof::acceptance {

namespace {

constexpr double pi = std::numbers::pi;

std::string scientific(double value) {
    std::ostringstream os;
    os.precision(2);
    os << std::scientific << value;
    return os.str();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome criterion_oracle_equivalence() {
    const std::vector<DesignParams> cases = {
        {1.0, 1.0, 0.0, 0.25},
        {1.0, 0.5, 0.0, 0.25},
        {1.0, 0.0, -0.5, 0.25},
        {1.0, 0.48, -0.26, 0.25},
    };
    double worst_dft = 0.0;
    double worst_oracle = 0.0;
    for (const DesignParams& p : cases) {
        const MatrixOfFilters m = realize_balanced(p);
        for (int l : {1, 5, 50}) {
            const EquivalentFilter filter = equivalent_filter(m, p.t, l, 64);
            const auto spectrum = dft(filter.coefficients);
            for (int k = 0; k < 64; ++k) {
                const double theta = 2.0 * pi * double(k) / 64.0;
                const double closed = equivalent_response(p, theta, l);
                worst_dft = std::max(worst_dft, std::abs(spectrum[k].real() - closed));
                worst_dft = std::max(worst_dft, std::abs(spectrum[k].imag()));
            }
        }
        const EquivalentFilter filter16 = equivalent_filter(m, p.t, 5, 16);
        const Eigen::MatrixXd block = circulant_power_oracle(m, p.t, 5, 16);
        for (int n = 0; n < 16; ++n) {
            worst_oracle =
                std::max(worst_oracle, std::abs(block(n, 0) - filter16.coefficients[n]));
        }
    }
    Outcome outcome;
    outcome.pass = worst_dft <= 1e-8 && worst_oracle <= 1e-12;
    outcome.detail = "max|DFT - closed form| = " + scientific(worst_dft) +
                     ", max|matrix power - impulse| = " + scientific(worst_oracle);
    return outcome;
}

Outcome criterion_falloff_references() {
    const double sharp = falloff({1.0, 0.0, -0.5, 0.25}, 100, pi / 16.0, pi / 4.0);
    const double optimum = falloff({1.0, 0.48, -0.26, 0.25}, 100, pi / 16.0, pi / 4.0);
    const double gauss = gaussian_response(0.25, pi / 16.0, 100) -
                         gaussian_response(0.25, pi / 4.0, 100);
    Outcome outcome;
    outcome.pass = std::abs(sharp - 0.83) <= 0.01 && std::abs(optimum - 0.93) <= 0.01 &&
                   std::abs(gauss - 0.41) <= 0.05;
    outcome.detail = "falloffs " + format_significant(sharp) + " (target 0.83+-0.01), " +
                     format_significant(optimum) + " (0.93+-0.01), " +
                     format_significant(gauss) + " (0.41+-0.05)";
    return outcome;
}

Outcome criterion_optimizer_reproduction() {
    const DesignResult result = optimize(100, pi / 16.0, pi / 4.0, 0.25, {});
    const double b = result.params.b;
    const double c = result.params.c;
    const double d = result.params.d;
    Outcome outcome;
    outcome.pass = std::abs(result.objective - 0.9234) <= 0.005 &&
                   std::abs(b - 1.0) <= 0.05 && std::abs(c - (1.0 + 2.0 * d)) <= 0.01;
    outcome.detail = "objective " + format_significant(result.objective) +
                     " at b=" + format_significant(b) + " c=" + format_significant(c) +
                     " d=" + format_significant(d) +
                     ", |c-(1+2d)|=" + scientific(std::abs(c - (1.0 + 2.0 * d)));
    return outcome;
}

Outcome criterion_closed_form_spot_checks() {
    const DesignParams p{1.0, 0.0, -0.5, 0.25};
    double worst_phi = 0.0;
    double worst_sqrt_delta = 0.0;
    for (double theta : theta_grid(256)) {
        const SpectralPoint sp = spectral_point(p, theta);
        worst_phi =
            std::max(worst_phi, std::abs(sp.phi - (1.0 + std::cos(theta) / 2.0)));
        const double reference = std::sqrt(6.0 - 2.0 * std::cos(2.0 * theta)) / 4.0;
        worst_sqrt_delta =
            std::max(worst_sqrt_delta, std::abs(std::sqrt(sp.delta) - reference));
    }
    Outcome outcome;
    outcome.pass = worst_phi < 1e-12 && worst_sqrt_delta < 1e-12;
    outcome.detail = "max|phi - (1 + cos(theta)/2)| = " + scientific(worst_phi) +
                     ", max|sqrt(delta) - sqrt(6 - 2cos(2theta))/4| = " +
                     scientific(worst_sqrt_delta);
    return outcome;
}

Outcome criterion_region_soundness() {
    const auto samples = sample_feasible(100, 7);
    int failures = 0;
    std::string witness;
    for (const DesignParams& p : samples) {
        const ValidationReport report = numeric_validate(p, 256, 150, 1e-8);
        if (!report.pass) {
            ++failures;
            if (witness.empty()) {
                witness = " first failure at b=" + format_significant(p.b) +
                          " c=" + format_significant(p.c) +
                          " d=" + format_significant(p.d);
            }
        }
    }
    Outcome outcome;
    outcome.pass = failures == 0;
    outcome.detail = std::to_string(100 - failures) +
                     "/100 sampled feasible designs pass numeric validation" + witness;
    return outcome;
}

Outcome criterion_gaussian_reduction() {
    const auto samples = sample_feasible(20, 11, 0.0);
    double worst = 0.0;
    const std::vector<double> grid = theta_grid(256);
    for (const DesignParams& p : samples) {
        for (double theta : grid) {
            const SpectralPoint sp = spectral_point(p, theta);
            double pow1 = 1.0;
            double pow2 = 1.0;
            double gauss = 1.0;
            const double base = sigma_xx(p, theta);
            for (int l = 1; l <= 200; ++l) {
                pow1 *= sp.lambda1;
                pow2 *= sp.lambda2;
                gauss *= base;
                worst = std::max(worst,
                                 std::abs(sp.mu1 * pow1 + sp.mu2 * pow2 - gauss));
            }
        }
    }
    Outcome outcome;
    outcome.pass = worst <= 1e-10;
    outcome.detail = "max|response - diffusion baseline| = " + scientific(worst) +
                     " over 20 samples, 256 frequencies, l <= 200";
    return outcome;
}

Outcome criterion_response_crossing() {
    const ComparisonTable table = compare(
        {{{1.0, 1.0, 0.0, 0.25}, 5}, {{1.0, 0.0, -0.5, 0.25}, 35}}, 256);
    size_t crossings = 0;
    std::string location;
    for (const CrossingSet& set : table.crossings) {
        crossings += set.thetas.size();
        for (double theta : set.thetas) {
            location += " " + format_significant(theta);
        }
    }
    Outcome outcome;
    outcome.pass = crossings >= 1;
    outcome.detail = std::to_string(crossings) +
                     " sign change(s) of the response difference at theta =" + location;
    return outcome;
}

Outcome criterion_witness_suite() {
    const auto samples = sample_feasible(100, 7);
    double min_eta = std::numeric_limits<double>::infinity();
    double min_zeta = std::numeric_limits<double>::infinity();
    double min_vartheta = std::numeric_limits<double>::infinity();
    double worst_identity = 0.0;
    for (const DesignParams& p : samples) {
        for (int i = 0; i < 64; ++i) {
            const double t = 0.25 * double(i) / 63.0;
            for (int j = 0; j < 64; ++j) {
                const double w = -1.0 + 2.0 * double(j) / 63.0;
                min_eta = std::min(min_eta, eta(p, t, w));
                min_vartheta = std::min(min_vartheta, vartheta(p, t, w));
                if (i == 0) {
                    min_zeta = std::min(min_zeta, zeta(p, w));
                }
                const DesignParams q{p.b, p.c, p.d, t};
                const double theta = std::acos(w);
                const double product = sigma_xx(q, theta) * sigma_aa(q, theta) -
                                       cross_product(q, theta);
                worst_identity =
                    std::max(worst_identity, std::abs(eta(p, t, w) - product));
            }
        }
    }
    Outcome outcome;
    outcome.pass = min_eta >= -1e-12 && min_zeta >= -1e-12 && min_vartheta >= -1e-12 &&
                   worst_identity <= 1e-12;
    outcome.detail = "min eta = " + scientific(min_eta) +
                     ", min zeta = " + scientific(min_zeta) +
                     ", min vartheta = " + scientific(min_vartheta) +
                     ", max|eta - sigma product| = " + scientific(worst_identity);
    return outcome;
}

Outcome criterion_mixing_behavior() {
    const std::vector<double> grid = theta_grid(256);
    const DesignParams switching{1.0, 0.5, 0.0, 0.25};
    bool binary = true;
    int switch_count = 0;
    double switch_low = 0.0;
    double switch_high = 0.0;
    double previous = -1.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double mu2 = spectral_point(switching, grid[i]).mu2;
        if (std::abs(mu2) > 1e-12 && std::abs(mu2 - 1.0) > 1e-12) {
            binary = false;
        }
        if (i > 0 && std::abs(mu2 - previous) > 0.5) {
            ++switch_count;
            switch_low = grid[i - 1];
            switch_high = grid[i];
        }
        previous = mu2;
    }
    const double half_step = grid[1] - grid[0];
    const bool switch_at_half_pi = switch_count == 1 &&
                                   pi / 2.0 - switch_low <= half_step &&
                                   switch_high - pi / 2.0 <= half_step;

    const DesignParams degenerate{1.0, 1.0, 0.0, 0.25};
    bool all_half = true;
    for (double theta : grid) {
        const SpectralPoint sp = spectral_point(degenerate, theta);
        if (sp.mu1 != 0.5 || sp.mu2 != 0.5) {
            all_half = false;
        }
    }
    Outcome outcome;
    outcome.pass = binary && switch_at_half_pi && all_half;
    outcome.detail = "mu2 binary=" + std::string(binary ? "yes" : "no") + ", " +
                     std::to_string(switch_count) + " switch in (" +
                     format_significant(switch_low) + ", " +
                     format_significant(switch_high) + ") around pi/2, degenerate mu=" +
                     std::string(all_half ? "1/2 everywhere" : "not 1/2");
    return outcome;
}

}  // namespace

std::vector<CriterionResult> run_all() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"closed-form response matches impulse DFT and matrix-power oracle",
         criterion_oracle_equivalence},
        {"fall-off reference values at l=100", criterion_falloff_references},
        {"optimizer reproduces the sharp-cutoff design",
         criterion_optimizer_reproduction},
        {"phi and sqrt(delta) closed forms at the sharp-cutoff setting",
         criterion_closed_form_spot_checks},
        {"sampled feasible designs pass numeric validation",
         criterion_region_soundness},
        {"d=0 responses equal the linear-diffusion baseline",
         criterion_gaussian_reduction},
        {"non-Gaussian response crosses the diffusion response",
         criterion_response_crossing},
        {"witness polynomials nonnegative and tied to the sigma product",
         criterion_witness_suite},
        {"mixing coefficients switch at pi/2 and degenerate to 1/2",
         criterion_mixing_behavior},
    };

    std::vector<CriterionResult> results;
    results.reserve(criteria.size());
    int index = 1;
    for (const auto& [name, run] : criteria) {
        CriterionResult result;
        result.index = index++;
        result.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome outcome = run();
            result.pass = outcome.pass;
            result.detail = outcome.detail;
        } catch (const std::exception& error) {
            result.pass = false;
            result.detail = std::string("exception: ") + error.what();
        }
        const auto stop = std::chrono::steady_clock::now();
        result.seconds = std::chrono::duration<double>(stop - start).count();
        results.push_back(std::move(result));
    }
    return results;
}

bool run_and_print(std::ostream& os) {
    const std::vector<CriterionResult> results = run_all();
    bool all_pass = true;
    for (const CriterionResult& result : results) {
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << result.seconds;
        os << "[" << result.index << "/" << results.size() << "] "
           << (result.pass ? "PASS" : "FAIL") << "  " << result.name << " ("
           << time.str() << " s)  " << result.detail << "\n";
        all_pass = all_pass && result.pass;
    }
    os << (all_pass ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all_pass;
}

}  // namespace mof::acceptance
