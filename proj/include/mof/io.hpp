#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mof/iteration.hpp"
#include "mof/optimizer.hpp"

namespace mof {

std::string format_significant(double value);

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

Signal read_signal_csv(std::istream& is);
void write_signal_csv(std::ostream& os, const Signal& signal);

using PlotSeries = std::pair<std::string, std::vector<double>>;
std::string svg_line_plot(const std::string& title, const std::vector<double>& x,
                          const std::vector<PlotSeries>& series);

nlohmann::json to_json(const DesignParams& p);
nlohmann::json to_json(const FilterTaps& taps);
nlohmann::json to_json(const MatrixOfFilters& m);
nlohmann::json to_json(const ConstraintSlack& slack);
nlohmann::json to_json(const FeasibilityReport& report);
nlohmann::json to_json(const RequirementResult& requirement);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const RealizationReport& report);
nlohmann::json to_json(const DesignResult& result);
nlohmann::json to_json(const ComparisonTable& table);

}  // namespace mof
