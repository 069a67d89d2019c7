#include "mof/realization.hpp"

#include <cmath>
#include <string>

namespace mof {

namespace {

MatrixOfFilters realize_common(const DesignParams& p) {
    if (p.d > 0.0) {
        throw PositiveD("cross-filter product d must be <= 0, got " +
                        std::to_string(p.d));
    }
    MatrixOfFilters m;
    m.order = 2;
    m.taps.assign(2, std::vector<FilterTaps>(2));
    m.taps[0][0] = FilterTaps{1.0, -2.0, 1.0};
    m.taps[1][1] = FilterTaps{p.c, -2.0 * p.b, p.c};
    return m;
}

}  // namespace

MatrixOfFilters realize_balanced(const DesignParams& p) {
    MatrixOfFilters m = realize_common(p);
    const double r = std::sqrt(-p.d);
    m.taps[1][0] = FilterTaps{r, 0.0, -r};
    m.taps[0][1] = FilterTaps{-r, 0.0, r};
    return m;
}

MatrixOfFilters realize_multiplier_free_cross(const DesignParams& p) {
    MatrixOfFilters m = realize_common(p);
    if (p.d == 0.0) {
        m.taps[1][0] = FilterTaps{};
        m.taps[0][1] = FilterTaps{};
    } else {
        m.taps[1][0] = FilterTaps{1.0, 0.0, -1.0};
        m.taps[0][1] = FilterTaps{p.d, 0.0, -p.d};
    }
    return m;
}

std::complex<double> taps_to_sigma(const FilterTaps& f, double t, bool is_diagonal,
                                   double theta) {
    const std::complex<double> rho = std::polar(1.0, theta);
    const double delta = is_diagonal ? 1.0 : 0.0;
    return delta + t * (f.alpha / rho + f.beta + f.gamma * rho);
}

RealizationReport verify_realization(const MatrixOfFilters& m, const DesignParams& p,
                                     int grid_size) {
    if (m.order != 2) {
        throw DimensionMismatch("realization verification handles order 2 only");
    }
    constexpr double tol = 1e-12;
    RealizationReport report;
    RealizationCheck sxx{"sigma_xx", 0.0, false};
    RealizationCheck sxx_imag{"sigma_xx asymmetry", 0.0, false};
    RealizationCheck saa{"sigma_aa", 0.0, false};
    RealizationCheck saa_imag{"sigma_aa asymmetry", 0.0, false};
    RealizationCheck cross{"cross product", 0.0, false};
    RealizationCheck cross_imag{"cross product asymmetry", 0.0, false};

    for (double theta : theta_grid(grid_size)) {
        const auto s_xx = taps_to_sigma(m.taps[0][0], p.t, true, theta);
        const auto s_aa = taps_to_sigma(m.taps[1][1], p.t, true, theta);
        const auto s_xa = taps_to_sigma(m.taps[0][1], p.t, false, theta);
        const auto s_ax = taps_to_sigma(m.taps[1][0], p.t, false, theta);
        const auto prod = s_xa * s_ax;
        sxx.max_error = std::max(sxx.max_error,
                                 std::abs(s_xx.real() - sigma_xx(p, theta)));
        sxx_imag.max_error = std::max(sxx_imag.max_error, std::abs(s_xx.imag()));
        saa.max_error = std::max(saa.max_error,
                                 std::abs(s_aa.real() - sigma_aa(p, theta)));
        saa_imag.max_error = std::max(saa_imag.max_error, std::abs(s_aa.imag()));
        cross.max_error = std::max(cross.max_error,
                                   std::abs(prod.real() - cross_product(p, theta)));
        cross_imag.max_error = std::max(cross_imag.max_error, std::abs(prod.imag()));
    }

    report.pass = true;
    for (RealizationCheck* check :
         {&sxx, &sxx_imag, &saa, &saa_imag, &cross, &cross_imag}) {
        check->pass = check->max_error <= tol;
        report.pass = report.pass && check->pass;
        report.checks.push_back(*check);
    }
    return report;
}

}  // namespace mof
