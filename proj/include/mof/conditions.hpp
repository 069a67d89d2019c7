#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mof/spectral.hpp"

namespace mof {

/*
   Feasibility of (b, c, d) as a scale-space design, decided by the
   closed-form sufficient conditions

     d <= 0
     0 <= b + c <= 2 + 2d
     -2d <= b - c <= 2
     bc - c^2 - 2d >= 0
     bc + 2d + c^2 - 2c <= 0

   plus the implied interval bounds -d <= b <= 2+d, -1 <= c <= 1+2d,
   -1 <= d <= 0 reported as diagnostics.

   Witness polynomials used by the sufficiency argument (w = cos theta):
     eta(t, w)  = 4 (1-w)(b + d - (c-d) w) t^2 - 2 (1 + b - (1+c) w) t + 1
                = sigma_xx sigma_aa - sigma_xa sigma_ax
     zeta(w)    = 4 - (1-w)(b + d - (c-d) w)
     vartheta(t, w) = 4 Delta xi_phi^2 - xi_Delta^2,
       xi_phi = 2t(1+c), xi_Delta = d Delta / d w
*/

struct ConstraintSlack {
    std::string id;
    double slack = 0.0;  // >= 0 means satisfied
};

struct FeasibilityReport {
    bool feasible = false;
    std::vector<ConstraintSlack> violations;
    std::vector<ConstraintSlack> constraints;
    std::vector<ConstraintSlack> interval_diagnostics;
};

FeasibilityReport feasibility_check(const DesignParams& p);

double eta(const DesignParams& p, double t, double w);
double zeta(const DesignParams& p, double w);
double vartheta(const DesignParams& p, double t, double w);

struct RequirementResult {
    std::string name;
    bool pass = false;
    double margin = 0.0;
    double worst_theta = 0.0;
    int worst_l = 0;
};

struct ValidationReport {
    bool pass = false;
    std::vector<RequirementResult> requirements;
};

ValidationReport numeric_validate(const DesignParams& p, int grid_size, int l_max,
                                  double tol);

std::vector<DesignParams> sample_feasible(int count, unsigned long long seed,
                                          std::optional<double> fixed_d = std::nullopt);

}  // namespace mof
