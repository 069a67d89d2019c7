#include "mof/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mof {

double sigma_xx(const DesignParams& p, double theta) {
    return (1.0 - 2.0 * p.t) + 2.0 * p.t * std::cos(theta);
}

double sigma_aa(const DesignParams& p, double theta) {
    return (1.0 - 2.0 * p.b * p.t) + 2.0 * p.t * p.c * std::cos(theta);
}

double cross_product(const DesignParams& p, double theta) {
    const double s = std::sin(theta);
    return -4.0 * p.t * p.t * p.d * s * s;
}

SpectralPoint spectral_point(const DesignParams& p, double theta) {
    SpectralPoint sp;
    sp.theta = theta;
    sp.sigma_xx = sigma_xx(p, theta);
    sp.sigma_aa = sigma_aa(p, theta);
    sp.cross = cross_product(p, theta);
    sp.phi = sp.sigma_xx + sp.sigma_aa;
    sp.psi = sp.sigma_xx - sp.sigma_aa;
    sp.delta = sp.psi * sp.psi + 4.0 * sp.cross;
    if (sp.delta < -discriminant_tolerance) {
        throw NegativeDiscriminant(
            "negative discriminant " + std::to_string(sp.delta) +
            " at theta " + std::to_string(theta) + ": eigenvalues are complex");
    }
    const double sq = std::sqrt(std::max(sp.delta, 0.0));
    sp.lambda1 = (sp.phi - sq) / 2.0;
    sp.lambda2 = (sp.phi + sq) / 2.0;
    if (sq < degeneracy_epsilon) {
        sp.mu1 = 0.5;
        sp.mu2 = 0.5;
    } else {
        sp.mu1 = -sp.psi / (2.0 * sq) + 0.5;
        sp.mu2 = sp.psi / (2.0 * sq) + 0.5;
    }
    return sp;
}

double equivalent_response(const DesignParams& p, double theta, int l) {
    if (l < 0) {
        throw std::invalid_argument("iteration count must be nonnegative");
    }
    if (l == 0) {
        return 1.0;
    }
    const SpectralPoint sp = spectral_point(p, theta);
    return sp.mu1 * std::pow(sp.lambda1, double(l)) +
           sp.mu2 * std::pow(sp.lambda2, double(l));
}

double gaussian_response(double t, double theta, int l) {
    if (l < 0) {
        throw std::invalid_argument("iteration count must be nonnegative");
    }
    const double s = (1.0 - 2.0 * t) + 2.0 * t * std::cos(theta);
    return std::pow(s, double(l));
}

double falloff(const DesignParams& p, int l, double theta_lo, double theta_hi) {
    if (!(0.0 <= theta_lo && theta_lo < theta_hi && theta_hi <= std::numbers::pi)) {
        throw std::invalid_argument("falloff requires 0 <= theta_lo < theta_hi <= pi");
    }
    return equivalent_response(p, theta_lo, l) - equivalent_response(p, theta_hi, l);
}

std::vector<double> theta_grid(int grid_size) {
    if (grid_size < 2) {
        throw std::invalid_argument("theta grid needs at least 2 points");
    }
    std::vector<double> grid(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        grid[i] = std::numbers::pi * double(i) / double(grid_size - 1);
    }
    return grid;
}

ResponseCurve response_curve(const DesignParams& p, int l, int grid_size) {
    ResponseCurve curve;
    curve.iteration = l;
    curve.thetas = theta_grid(grid_size);
    curve.values.reserve(curve.thetas.size());
    for (double theta : curve.thetas) {
        curve.values.push_back(equivalent_response(p, theta, l));
    }
    return curve;
}

namespace {

std::complex<double> complex_int_pow(std::complex<double> base, int exp) {
    std::complex<double> acc(1.0, 0.0);
    while (exp > 0) {
        if (exp & 1) {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    return acc;
}

}  // namespace

double circulant_equivalent_response(
    const std::vector<std::complex<double>>& first_row_responses, int l) {
    const int order = int(first_row_responses.size());
    if (order < 2) {
        throw DimensionMismatch("circulant response needs at least 2 row entries");
    }
    if (l < 0) {
        throw std::invalid_argument("iteration count must be nonnegative");
    }
    const std::complex<double> rho =
        std::polar(1.0, 2.0 * std::numbers::pi / double(order));
    std::complex<double> total(0.0, 0.0);
    for (int j = 0; j < order; ++j) {
        std::complex<double> lambda(0.0, 0.0);
        for (int k = 0; k < order; ++k) {
            lambda += first_row_responses[k] * complex_int_pow(rho, (j * k) % order);
        }
        total += complex_int_pow(lambda, l);
    }
    total /= double(order);
    if (std::abs(total.imag()) > realness_tolerance) {
        throw NonRealResponse(
            "circulant response has imaginary residue " + std::to_string(total.imag()));
    }
    return total.real();
}

}  // namespace mof
