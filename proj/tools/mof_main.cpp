#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mof/conditions.hpp"
#include "mof/acceptance.hpp"
#include "mof/io.hpp"
#include "mof/iteration.hpp"
#include "mof/optimizer.hpp"
#include "mof/realization.hpp"
#include "mof/spectral.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_infeasible = 1;
constexpr int exit_validation = 2;
constexpr int exit_usage = 64;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot open output file: " + path);
    }
    file << content;
    if (!file) {
        throw std::invalid_argument("failed writing output file: " + path);
    }
}

std::string constraint_lines(const std::vector<mof::ConstraintSlack>& slacks) {
    std::string text;
    for (const mof::ConstraintSlack& entry : slacks) {
        text += "  " + entry.id + "  (slack " + mof::format_significant(entry.slack) +
                ")\n";
    }
    return text;
}

struct ResponseOptions {
    mof::DesignParams params;
    std::vector<int> iterations = {1, 50, 100, 150};
    int grid = 256;
    std::string format = "csv";
    std::string out;
    bool force = false;
};

int cmd_response(const ResponseOptions& opt) {
    const mof::FeasibilityReport feasibility = mof::feasibility_check(opt.params);
    if (!feasibility.feasible) {
        std::cerr << "parameters violate the scale-space conditions:\n"
                  << constraint_lines(feasibility.violations);
        if (!opt.force) {
            std::cerr << "pass --force to evaluate anyway\n";
            return exit_validation;
        }
        std::cerr << "continuing because --force was given\n";
    }

    const std::vector<double> thetas = mof::theta_grid(opt.grid);
    std::vector<std::vector<double>> responses;
    std::vector<std::vector<double>> lambda1_powers;
    std::vector<std::vector<double>> lambda2_powers;
    std::vector<double> mu2_values(thetas.size());
    responses.resize(opt.iterations.size());
    lambda1_powers.resize(opt.iterations.size());
    lambda2_powers.resize(opt.iterations.size());
    for (size_t i = 0; i < opt.iterations.size(); ++i) {
        responses[i].resize(thetas.size());
        lambda1_powers[i].resize(thetas.size());
        lambda2_powers[i].resize(thetas.size());
    }
    for (size_t k = 0; k < thetas.size(); ++k) {
        const mof::SpectralPoint sp = mof::spectral_point(opt.params, thetas[k]);
        mu2_values[k] = sp.mu2;
        for (size_t i = 0; i < opt.iterations.size(); ++i) {
            const int l = opt.iterations[i];
            const double pow1 = std::pow(sp.lambda1, l);
            const double pow2 = std::pow(sp.lambda2, l);
            lambda1_powers[i][k] = pow1;
            lambda2_powers[i][k] = pow2;
            responses[i][k] = l == 0 ? 1.0 : sp.mu1 * pow1 + sp.mu2 * pow2;
        }
    }

    std::vector<std::string> header = {"theta"};
    for (int l : opt.iterations) {
        header.push_back("F_l" + std::to_string(l));
    }
    header.push_back("mu2");
    for (int l : opt.iterations) {
        header.push_back("lambda1_l" + std::to_string(l));
    }
    for (int l : opt.iterations) {
        header.push_back("lambda2_l" + std::to_string(l));
    }

    if (opt.format == "csv") {
        std::ostringstream os;
        std::vector<std::vector<double>> rows(thetas.size());
        for (size_t k = 0; k < thetas.size(); ++k) {
            std::vector<double>& row = rows[k];
            row.push_back(thetas[k]);
            for (const auto& series : responses) {
                row.push_back(series[k]);
            }
            row.push_back(mu2_values[k]);
            for (const auto& series : lambda1_powers) {
                row.push_back(series[k]);
            }
            for (const auto& series : lambda2_powers) {
                row.push_back(series[k]);
            }
        }
        mof::write_csv(os, header, rows);
        write_output(opt.out, os.str());
    } else if (opt.format == "json") {
        nlohmann::json doc;
        doc["params"] = mof::to_json(opt.params);
        doc["iterations"] = opt.iterations;
        doc["thetas"] = thetas;
        doc["responses"] = responses;
        doc["mu2"] = mu2_values;
        doc["lambda1_powers"] = lambda1_powers;
        doc["lambda2_powers"] = lambda2_powers;
        write_output(opt.out, doc.dump(2) + "\n");
    } else {
        std::vector<mof::PlotSeries> series;
        for (size_t i = 0; i < opt.iterations.size(); ++i) {
            series.emplace_back(header[1 + i], responses[i]);
        }
        series.emplace_back("mu2", mu2_values);
        for (size_t i = 0; i < opt.iterations.size(); ++i) {
            series.emplace_back(header[2 + opt.iterations.size() + i],
                                lambda1_powers[i]);
        }
        for (size_t i = 0; i < opt.iterations.size(); ++i) {
            series.emplace_back(header[2 + 2 * opt.iterations.size() + i],
                                lambda2_powers[i]);
        }
        write_output(opt.out, mof::svg_line_plot("frequency response", thetas, series));
    }
    return exit_ok;
}

struct IterateOptions {
    mof::DesignParams params;
    std::string input;
    int l = 1;
    std::string out;
    std::string emit_equivalent;
};

int cmd_iterate(const IterateOptions& opt) {
    std::ifstream file(opt.input);
    if (!file) {
        std::cerr << "cannot open input file: " << opt.input << "\n";
        return exit_usage;
    }
    mof::Signal x;
    try {
        x = mof::read_signal_csv(file);
    } catch (const std::exception& error) {
        std::cerr << "malformed input signal: " << error.what() << "\n";
        return exit_usage;
    }
    if (x.size() < 3) {
        std::cerr << "input signal needs at least 3 samples, got " << x.size() << "\n";
        return exit_usage;
    }

    const mof::MatrixOfFilters m = mof::realize_balanced(opt.params);
    mof::SystemState state;
    state.channels = {x, mof::Signal(x.size(), 0.0)};
    for (int i = 0; i < opt.l; ++i) {
        state = mof::step(state, m, opt.params.t);
    }

    std::ostringstream os;
    mof::write_signal_csv(os, state.channels[0]);
    write_output(opt.out, os.str());

    if (!opt.emit_equivalent.empty()) {
        const mof::EquivalentFilter kernel =
            mof::equivalent_filter(m, opt.params.t, opt.l, int(x.size()));
        std::ostringstream kernel_os;
        mof::write_signal_csv(kernel_os, kernel.coefficients);
        write_output(opt.emit_equivalent, kernel_os.str());
    }
    return exit_ok;
}

struct ValidateOptions {
    mof::DesignParams params;
    int l_max = 150;
    int grid = 256;
    std::string out;
};

int cmd_validate(const ValidateOptions& opt) {
    const mof::FeasibilityReport feasibility = mof::feasibility_check(opt.params);
    nlohmann::json doc;
    doc["params"] = mof::to_json(opt.params);
    doc["feasibility"] = mof::to_json(feasibility);
    if (!feasibility.feasible) {
        write_output(opt.out, doc.dump(2) + "\n");
        std::cerr << "infeasible parameters:\n"
                  << constraint_lines(feasibility.violations);
        return exit_infeasible;
    }

    const mof::ValidationReport validation =
        mof::numeric_validate(opt.params, opt.grid, opt.l_max, 1e-8);
    doc["validation"] = mof::to_json(validation);
    write_output(opt.out, doc.dump(2) + "\n");
    if (!validation.pass) {
        std::cerr << "numeric validation failed\n";
        return exit_validation;
    }
    return exit_ok;
}

struct DesignOptions {
    int l = 100;
    double t = 0.25;
    mof::OptimizeSettings settings;
    std::string out;
};

int cmd_design(const DesignOptions& opt) {
    const double pi = std::numbers::pi;
    const mof::DesignResult result =
        mof::optimize(opt.l, pi / 16.0, pi / 4.0, opt.t, opt.settings);
    nlohmann::json doc = mof::to_json(result);
    doc["l"] = opt.l;
    doc["theta_lo"] = pi / 16.0;
    doc["theta_hi"] = pi / 4.0;
    write_output(opt.out, doc.dump(2) + "\n");
    return exit_ok;
}

struct CompareOptions {
    mof::DesignParams params;
    std::vector<int> iterations = {5, 35};
    int grid = 256;
    std::string format = "json";
    std::string out;
};

int cmd_compare(const CompareOptions& opt) {
    const mof::DesignParams baseline{1.0, 1.0, 0.0, opt.params.t};
    const int baseline_l = opt.iterations.size() > 1 ? opt.iterations[0] : 5;
    const int design_l = opt.iterations.size() > 1 ? opt.iterations[1]
                                                   : opt.iterations.front();
    const mof::ComparisonTable table = mof::compare(
        {{baseline, baseline_l}, {opt.params, design_l}}, opt.grid);

    if (opt.format == "json") {
        write_output(opt.out, mof::to_json(table).dump(2) + "\n");
        return exit_ok;
    }

    std::vector<std::string> header = {"theta"};
    for (size_t i = 0; i < table.configs.size(); ++i) {
        header.push_back("F" + std::to_string(i) + "_l" +
                         std::to_string(table.configs[i].second));
    }
    if (opt.format == "csv") {
        std::ostringstream os;
        std::vector<std::vector<double>> rows(table.thetas.size());
        for (size_t k = 0; k < table.thetas.size(); ++k) {
            rows[k].push_back(table.thetas[k]);
            for (const auto& response : table.responses) {
                rows[k].push_back(response[k]);
            }
        }
        mof::write_csv(os, header, rows);
        write_output(opt.out, os.str());
    } else {
        std::vector<mof::PlotSeries> series;
        for (size_t i = 0; i < table.responses.size(); ++i) {
            series.emplace_back(header[1 + i], table.responses[i]);
        }
        write_output(opt.out,
                     mof::svg_line_plot("response comparison", table.thetas, series));
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Scale-space filtering with a 2x2 matrix of 3-tap circular "
        "convolution kernels"};
    app.require_subcommand(1);

    ResponseOptions response_opt;
    CLI::App* response = app.add_subcommand(
        "response", "Tabulate the closed-form frequency response F^l(theta)");
    response->add_option("--b", response_opt.params.b, "auxiliary decay parameter b");
    response->add_option("--c", response_opt.params.c, "auxiliary coupling parameter c");
    response->add_option("--d", response_opt.params.d, "cross-coupling parameter d");
    response->add_option("--t", response_opt.params.t, "step size t")
        ->check(CLI::Range(0.0, 0.25));
    response
        ->add_option("--l", response_opt.iterations,
                     "iteration counts (repeatable; default 1 50 100 150)")
        ->check(CLI::NonNegativeNumber);
    response->add_option("--grid", response_opt.grid, "frequency grid size")
        ->check(CLI::Range(2, 1 << 20));
    response->add_option("--format", response_opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    response->add_option("--out", response_opt.out, "output path (default stdout)");
    response->add_flag("--force", response_opt.force,
                       "evaluate even if the parameters are infeasible");

    IterateOptions iterate_opt;
    CLI::App* iterate = app.add_subcommand(
        "iterate", "Run the time-domain iteration on a signal from a CSV file");
    iterate->add_option("input", iterate_opt.input, "single-column CSV signal")
        ->required();
    iterate->add_option("--b", iterate_opt.params.b, "auxiliary decay parameter b");
    iterate->add_option("--c", iterate_opt.params.c, "auxiliary coupling parameter c");
    iterate->add_option("--d", iterate_opt.params.d, "cross-coupling parameter d");
    iterate->add_option("--t", iterate_opt.params.t, "step size t")
        ->check(CLI::Range(0.0, 0.25));
    iterate->add_option("--l", iterate_opt.l, "number of iterations")
        ->check(CLI::NonNegativeNumber);
    iterate->add_option("--out", iterate_opt.out, "output path (default stdout)");
    iterate->add_option("--emit-equivalent", iterate_opt.emit_equivalent,
                        "also write the equivalent impulse-response kernel here");

    ValidateOptions validate_opt;
    CLI::App* validate = app.add_subcommand(
        "validate", "Check the scale-space conditions and the numeric requirements");
    validate->add_option("--b", validate_opt.params.b, "auxiliary decay parameter b");
    validate->add_option("--c", validate_opt.params.c,
                         "auxiliary coupling parameter c");
    validate->add_option("--d", validate_opt.params.d, "cross-coupling parameter d");
    validate->add_option("--t", validate_opt.params.t, "step size t")
        ->check(CLI::Range(0.0, 0.25));
    validate->add_option("--l", validate_opt.l_max, "largest iteration to check")
        ->check(CLI::Range(2, 1 << 20));
    validate->add_option("--grid", validate_opt.grid, "frequency grid size")
        ->check(CLI::Range(64, 1 << 20));
    validate->add_option("--out", validate_opt.out, "report path (default stdout)");

    DesignOptions design_opt;
    CLI::App* design = app.add_subcommand(
        "design", "Maximize the fall-off F^l(pi/16) - F^l(pi/4) over (b, c, d)");
    design->add_option("--l", design_opt.l, "iteration count for the objective")
        ->check(CLI::PositiveNumber);
    design->add_option("--t", design_opt.t, "step size t")
        ->check(CLI::Range(0.0, 0.25));
    design->add_option("--grid", design_opt.settings.grid_density,
                       "grid density per axis for the scan phase")
        ->check(CLI::Range(2, 200));
    design->add_option("--seed", design_opt.settings.seed,
                       "seed for the extra refinement starts");
    design->add_option("--out", design_opt.out, "report path (default stdout)");

    CompareOptions compare_opt;
    CLI::App* compare = app.add_subcommand(
        "compare",
        "Compare the design against the diffusion baseline and list response "
        "crossings");
    compare->add_option("--b", compare_opt.params.b, "auxiliary decay parameter b");
    compare->add_option("--c", compare_opt.params.c, "auxiliary coupling parameter c");
    compare->add_option("--d", compare_opt.params.d, "cross-coupling parameter d");
    compare->add_option("--t", compare_opt.params.t, "step size t")
        ->check(CLI::Range(0.0, 0.25));
    compare
        ->add_option("--l", compare_opt.iterations,
                     "iterations: baseline then design (default 5 35)")
        ->check(CLI::NonNegativeNumber);
    compare->add_option("--grid", compare_opt.grid, "frequency grid size")
        ->check(CLI::Range(2, 1 << 20));
    compare->add_option("--format", compare_opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    compare->add_option("--out", compare_opt.out, "output path (default stdout)");

    CLI::App* selftest =
        app.add_subcommand("selftest", "Run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (response->parsed()) {
            return cmd_response(response_opt);
        }
        if (iterate->parsed()) {
            return cmd_iterate(iterate_opt);
        }
        if (validate->parsed()) {
            return cmd_validate(validate_opt);
        }
        if (design->parsed()) {
            return cmd_design(design_opt);
        }
        if (compare->parsed()) {
            return cmd_compare(compare_opt);
        }
        if (selftest->parsed()) {
            return mof::acceptance::run_and_print(std::cout) ? exit_ok
                                                             : exit_validation;
        }
    } catch (const mof::PositiveD& error) {
        std::cerr << "infeasible parameters: " << error.what() << "\n";
        return exit_infeasible;
    } catch (const mof::NegativeDiscriminant& error) {
        std::cerr << "infeasible parameters: " << error.what() << "\n";
        return exit_infeasible;
    } catch (const mof::EmptyFeasibleGrid& error) {
        std::cerr << "infeasible search box: " << error.what() << "\n";
        return exit_infeasible;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return exit_usage;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return exit_validation;
    }
    return exit_usage;
}
