#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "mof/realization.hpp"

namespace mof {

/*
   Brute-force time-domain ground truth for the P x P system on length-N
   circular signals.

   Circular convolution convention, matching taps_to_sigma:
     (f ** x)[n] = alpha x[n+1] + beta x[n] + gamma x[n-1]   (indices mod N)

   DFT convention: X[k] = sum_n x[n] e^{+i 2 pi k n / N}.
*/

using Signal = std::vector<double>;

struct SystemState {
    std::vector<Signal> channels;
    int iteration = 0;
};

enum class UpdateRule {
    additive,  // out = in + t * sum_s f_rs ** channel_s
    convex,    // out = (1 - t) in + t * sum_s f_rs ** channel_s
};

struct EquivalentFilter {
    int iteration = 0;
    std::vector<double> coefficients;
};

struct FrequencyEigen {
    std::vector<std::complex<double>> lambdas;
    std::vector<std::complex<double>> mus;
};

Signal convolve3(const FilterTaps& f, const Signal& x);

SystemState step(const SystemState& s, const MatrixOfFilters& m, double t,
                 UpdateRule rule = UpdateRule::additive);

EquivalentFilter equivalent_filter(const MatrixOfFilters& m, double t, int l, int N,
                                   UpdateRule rule = UpdateRule::additive);

Eigen::MatrixXd circulant_power_oracle(const MatrixOfFilters& m, double t, int l,
                                       int N);

std::vector<FrequencyEigen> per_frequency_eigen(const MatrixOfFilters& m, double t,
                                                int N);

std::vector<std::complex<double>> dft(const Signal& s);

}  // namespace mof
