#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mof/spectral.hpp"

namespace mof {

/*
   Concrete 3-tap kernels realizing a (b, c, d, t) design.

   Taps are stored as the inside-t kernels of the update
     out = in + t * (f ** channel)            (** = circular convolution)
   so the full-update kernel is delta + t * [alpha beta gamma].

   Transfer of one kernel: sigma(theta) = delta_diag + t (alpha e^{-i theta}
   + beta + gamma e^{i theta}).
*/

struct FilterTaps {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

struct MatrixOfFilters {
    int order = 2;
    std::vector<std::vector<FilterTaps>> taps;
};

MatrixOfFilters realize_balanced(const DesignParams& p);
MatrixOfFilters realize_multiplier_free_cross(const DesignParams& p);

std::complex<double> taps_to_sigma(const FilterTaps& f, double t, bool is_diagonal,
                                   double theta);

struct RealizationCheck {
    std::string quantity;
    double max_error = 0.0;
    bool pass = false;
};

struct RealizationReport {
    bool pass = false;
    std::vector<RealizationCheck> checks;
};

RealizationReport verify_realization(const MatrixOfFilters& m, const DesignParams& p,
                                     int grid_size);

}  // namespace mof
