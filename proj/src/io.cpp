#include "mof/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace mof {

std::string format_significant(double value) {
    char buffer[64];
    const auto [ptr, ec] =
        std::to_chars(buffer, buffer + sizeof(buffer), value,
                      std::chars_format::general, 12);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buffer, ptr);
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    for (size_t i = 0; i < header.size(); ++i) {
        os << (i == 0 ? "" : ",") << header[i];
    }
    os << "\n";
    for (const std::vector<double>& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            os << (i == 0 ? "" : ",") << format_significant(row[i]);
        }
        os << "\n";
    }
}

Signal read_signal_csv(std::istream& is) {
    Signal signal;
    std::string line;
    int line_number = 0;
    while (std::getline(is, line)) {
        ++line_number;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            continue;
        }
        const auto end = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(begin, end - begin + 1);
        double value = 0.0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            throw std::runtime_error("malformed signal value on line " +
                                     std::to_string(line_number) + ": " + token);
        }
        signal.push_back(value);
    }
    return signal;
}

void write_signal_csv(std::ostream& os, const Signal& signal) {
    for (double value : signal) {
        os << format_significant(value) << "\n";
    }
}

namespace {

const char* series_color(size_t index) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
    return palette[index % (sizeof(palette) / sizeof(palette[0]))];
}

}  // namespace

std::string svg_line_plot(const std::string& title, const std::vector<double>& x,
                          const std::vector<PlotSeries>& series) {
    constexpr double width = 800.0;
    constexpr double height = 500.0;
    constexpr double margin_left = 60.0;
    constexpr double margin_right = 150.0;
    constexpr double margin_top = 40.0;
    constexpr double margin_bottom = 50.0;
    const double plot_w = width - margin_left - margin_right;
    const double plot_h = height - margin_top - margin_bottom;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    if (!x.empty()) {
        x_min = *std::min_element(x.begin(), x.end());
        x_max = *std::max_element(x.begin(), x.end());
    }
    bool have_y = false;
    for (const PlotSeries& s : series) {
        for (double v : s.second) {
            if (!have_y) {
                y_min = y_max = v;
                have_y = true;
            } else {
                y_min = std::min(y_min, v);
                y_max = std::max(y_max, v);
            }
        }
    }
    if (x_max == x_min) {
        x_max = x_min + 1.0;
    }
    if (y_max == y_min) {
        y_max = y_min + 1.0;
    }

    auto sx = [&](double v) {
        return margin_left + (v - x_min) / (x_max - x_min) * plot_w;
    };
    auto sy = [&](double v) {
        return margin_top + (y_max - v) / (y_max - y_min) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
    svg << "<line x1=\"" << margin_left << "\" y1=\"" << margin_top + plot_h
        << "\" x2=\"" << margin_left + plot_w << "\" y2=\"" << margin_top + plot_h
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << margin_left << "\" y1=\"" << margin_top << "\" x2=\""
        << margin_left << "\" y2=\"" << margin_top + plot_h
        << "\" stroke=\"black\"/>\n";
    for (const double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double xv = x_min + frac * (x_max - x_min);
        const double yv = y_min + frac * (y_max - y_min);
        svg << "<text x=\"" << sx(xv) << "\" y=\"" << margin_top + plot_h + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            << "font-size=\"11\">" << format_significant(xv) << "</text>\n";
        svg << "<text x=\"" << margin_left - 6 << "\" y=\"" << sy(yv) + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_significant(yv) << "</text>\n";
    }
    for (size_t s = 0; s < series.size(); ++s) {
        const auto& [name, values] = series[s];
        svg << "<polyline fill=\"none\" stroke=\"" << series_color(s)
            << "\" stroke-width=\"1.5\" points=\"";
        const size_t count = std::min(values.size(), x.size());
        for (size_t i = 0; i < count; ++i) {
            svg << sx(x[i]) << "," << sy(values[i]) << " ";
        }
        svg << "\"/>\n";
        const double legend_y = margin_top + 16.0 * double(s);
        svg << "<line x1=\"" << margin_left + plot_w + 10 << "\" y1=\"" << legend_y
            << "\" x2=\"" << margin_left + plot_w + 30 << "\" y2=\"" << legend_y
            << "\" stroke=\"" << series_color(s) << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << margin_left + plot_w + 35 << "\" y=\"" << legend_y + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << name
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

nlohmann::json to_json(const DesignParams& p) {
    return {{"b", p.b}, {"c", p.c}, {"d", p.d}, {"t", p.t}};
}

nlohmann::json to_json(const FilterTaps& taps) {
    return nlohmann::json::array({taps.alpha, taps.beta, taps.gamma});
}

nlohmann::json to_json(const MatrixOfFilters& m) {
    nlohmann::json grid = nlohmann::json::array();
    for (const auto& row : m.taps) {
        nlohmann::json json_row = nlohmann::json::array();
        for (const FilterTaps& taps : row) {
            json_row.push_back(to_json(taps));
        }
        grid.push_back(json_row);
    }
    return {{"order", m.order}, {"taps", grid}};
}

nlohmann::json to_json(const ConstraintSlack& slack) {
    return {{"constraint", slack.id}, {"slack", slack.slack}};
}

nlohmann::json to_json(const FeasibilityReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const ConstraintSlack& entry : report.violations) {
        violations.push_back(to_json(entry));
    }
    nlohmann::json constraints = nlohmann::json::array();
    for (const ConstraintSlack& entry : report.constraints) {
        constraints.push_back(to_json(entry));
    }
    nlohmann::json diagnostics = nlohmann::json::array();
    for (const ConstraintSlack& entry : report.interval_diagnostics) {
        diagnostics.push_back(to_json(entry));
    }
    return {{"feasible", report.feasible},
            {"violations", violations},
            {"constraints", constraints},
            {"interval_diagnostics", diagnostics}};
}

nlohmann::json to_json(const RequirementResult& requirement) {
    return {{"name", requirement.name},
            {"pass", requirement.pass},
            {"margin", requirement.margin},
            {"worst_theta", requirement.worst_theta},
            {"worst_l", requirement.worst_l}};
}

nlohmann::json to_json(const ValidationReport& report) {
    nlohmann::json requirements = nlohmann::json::array();
    for (const RequirementResult& req : report.requirements) {
        requirements.push_back(to_json(req));
    }
    return {{"pass", report.pass}, {"requirements", requirements}};
}

nlohmann::json to_json(const RealizationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const RealizationCheck& check : report.checks) {
        checks.push_back({{"quantity", check.quantity},
                          {"max_error", check.max_error},
                          {"pass", check.pass}});
    }
    return {{"pass", report.pass}, {"checks", checks}};
}

nlohmann::json to_json(const DesignResult& result) {
    nlohmann::json trace = nlohmann::json::array();
    for (const TraceEntry& entry : result.trace) {
        trace.push_back({{"params", to_json(entry.params)},
                         {"objective", entry.objective},
                         {"rejected", entry.rejected}});
    }
    return {{"params", to_json(result.params)},
            {"objective", result.objective},
            {"active_constraints", result.active_constraints},
            {"evaluations", result.trace.size()},
            {"trace", trace}};
}

nlohmann::json to_json(const ComparisonTable& table) {
    nlohmann::json configs = nlohmann::json::array();
    for (const auto& [params, l] : table.configs) {
        configs.push_back({{"params", to_json(params)}, {"l", l}});
    }
    nlohmann::json crossings = nlohmann::json::array();
    for (const CrossingSet& crossing : table.crossings) {
        crossings.push_back({{"pair", {crossing.first, crossing.second}},
                             {"thetas", crossing.thetas}});
    }
    return {{"configs", configs},
            {"thetas", table.thetas},
            {"responses", table.responses},
            {"crossings", crossings}};
}

}  // namespace mof
