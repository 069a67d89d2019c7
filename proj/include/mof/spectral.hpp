#pragma once

#include <complex>
#include <vector>

#include "mof/errors.hpp"

namespace mof {

/*
   Closed-form spectral algebra for the 2x2 system.

   Per angular frequency theta:
     sigma_xx = (1 - 2t) + 2t cos(theta)
     sigma_aa = (1 - 2bt) + 2tc cos(theta)
     cross    = sigma_xa * sigma_ax = -4 t^2 d sin^2(theta)
     phi = sigma_xx + sigma_aa,  psi = sigma_xx - sigma_aa
     delta = psi^2 + 4 * cross
     lambda_{1,2} = (phi -+ sqrt(delta)) / 2
     mu_{1,2} = -+ psi / (2 sqrt(delta)) + 1/2   (1/2 each when sqrt(delta) ~ 0)

   The equivalent filter response after l iterations is
     F^l(theta) = mu1 lambda1^l + mu2 lambda2^l,  F^0 = 1.
*/

struct DesignParams {
    double b = 1.0;
    double c = 1.0;
    double d = 0.0;
    double t = 0.25;
};

struct SpectralPoint {
    double theta = 0.0;
    double sigma_xx = 0.0;
    double sigma_aa = 0.0;
    double cross = 0.0;
    double phi = 0.0;
    double psi = 0.0;
    double delta = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
};

struct ResponseCurve {
    int iteration = 0;
    std::vector<double> thetas;
    std::vector<double> values;
};

inline constexpr double degeneracy_epsilon = 1e-12;
inline constexpr double discriminant_tolerance = 1e-12;
inline constexpr double realness_tolerance = 1e-9;

double sigma_xx(const DesignParams& p, double theta);
double sigma_aa(const DesignParams& p, double theta);
double cross_product(const DesignParams& p, double theta);

SpectralPoint spectral_point(const DesignParams& p, double theta);

double equivalent_response(const DesignParams& p, double theta, int l);
double gaussian_response(double t, double theta, int l);
double falloff(const DesignParams& p, int l, double theta_lo, double theta_hi);

std::vector<double> theta_grid(int grid_size);
ResponseCurve response_curve(const DesignParams& p, int l, int grid_size);

double circulant_equivalent_response(
    const std::vector<std::complex<double>>& first_row_responses, int l);

}  // namespace mof
