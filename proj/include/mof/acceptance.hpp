#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mof::acceptance {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CriterionResult> run_all();
bool run_and_print(std::ostream& os);

}  // namespace mof::acceptance
