// fbc: regenerate the logistic twin-experiment tables and figure series, or
// run a single estimation cell.
//
//   fbc table <1..8> [--out FILE]
//   fbc figure <1|2> [--out FILE]
//   fbc estimate [--t0 --k --n --delta --x0 --alpha --truth-x0 --truth-alpha
//                 --method --lambda --iterate --threshold --max-iter] [--out FILE]
//   fbc --config FILE ...      key=value file with the same keys as the flags
//
// Exit status: 0 success, 1 configuration error, 2 I/O error.

#include "fbc/fbc.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct Options {
    double x0 = 0.6;
    double alpha = 0.9;
    double truth_x0 = 0.5;
    double truth_alpha = 1.0;
    double delta = 0.5;
    double threshold = 1e-6;
    std::optional<int> max_iter;
    double t0 = 0.0;
    int k = 1;
    int n = 2;
    std::string method = "first";
    double lambda = 1e-6;
    bool iterate = false;
    std::string out;
    int table = 0;
    int figure = 0;
};

fbc::TableDefaults table_defaults(const Options& o) {
    fbc::TableDefaults d;
    d.truth = {o.truth_x0, o.truth_alpha};
    d.model = {o.x0, o.alpha};
    d.delta = o.delta;
    d.threshold = o.threshold;
    d.max_iterations = o.max_iter;
    return d;
}

fbc::Method parse_method(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name == "first") return fbc::Method::FirstOrder;
    if (name == "second") return fbc::Method::SecondOrder;
    if (name == "tikhonov") return fbc::Method::Tikhonov;
    if (name == "pinv") return fbc::Method::PseudoInverse;
    throw fbc::ConfigError("method", "unknown method '" + name + "'");
}

fbc::ExperimentSpec estimate_spec(const Options& o) {
    fbc::ExperimentSpec s;
    s.id = "estimate";
    s.truth = {o.truth_x0, o.truth_alpha};
    s.models = {{o.x0, o.alpha}};
    s.t0s = {o.t0};
    s.ks = {o.k};
    s.ns = {o.n};
    s.delta = o.delta;
    s.method = parse_method(o.method);
    s.lambda = o.lambda;
    if (o.iterate) s.iteration = fbc::IterationConfig{o.threshold, o.max_iter.value_or(10), fbc::Estimator::FirstOrder};
    return s;
}

void emit(const fbc::TableArtifact& a, const std::string& out) {
    if (out.empty()) {
        std::cout << fbc::csv::to_string(a);
        std::cout.flush();
        if (!std::cout) throw fbc::IoError("write to standard output failed");
    } else {
        fbc::write_csv(a, out);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forecast bias correction for the logistic twin experiment"};
    app.set_config("--config", "", "Read key=value defaults from FILE");
    app.allow_config_extras(false);
    app.require_subcommand(1);

    Options o;

    app.add_option("--x0", o.x0, "Model initial condition")->capture_default_str();
    app.add_option("--alpha", o.alpha, "Model growth rate")->capture_default_str();
    app.add_option("--truth-x0", o.truth_x0, "Truth initial condition")->capture_default_str();
    app.add_option("--truth-alpha", o.truth_alpha, "Truth growth rate")->capture_default_str();
    app.add_option("--delta", o.delta, "Base observation interval")->capture_default_str();
    app.add_option("--threshold", o.threshold, "Iteration convergence threshold")->capture_default_str();
    app.add_option("--max-iter", o.max_iter, "Iteration cap (default 10; 100 for tables 7-8)");
    app.add_option("--t0", o.t0, "First observation time")->capture_default_str();
    app.add_option("--k", o.k, "Spacing multiplier of delta")->capture_default_str();
    app.add_option("--n", o.n, "Number of observations")->capture_default_str();
    app.add_option("--method", o.method, "first | second | tikhonov | pinv")
        ->check(CLI::IsMember({"first", "second", "tikhonov", "pinv"}, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--lambda", o.lambda, "Tikhonov regularization parameter")->capture_default_str();
    app.add_flag("--iterate", o.iterate, "Iterate the estimate to convergence");
    app.add_option("--out", o.out, "Output CSV path (default: stdout)");

    auto* table = app.add_subcommand("table", "Regenerate table 1..8");
    table->add_option("number", o.table, "Table number")->required()->check(CLI::Range(1, 8));
    table->fallthrough();

    auto* figure = app.add_subcommand("figure", "Emit figure 1 or 2 data series");
    figure->add_option("number", o.figure, "Figure number")->required()->check(CLI::Range(1, 2));
    figure->fallthrough();

    auto* est = app.add_subcommand("estimate", "Estimate the correction for one schedule");
    est->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::FileError& e) {
        std::cerr << "fbc: " << e.what() << '\n';
        return kExitIo;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        fbc::TableArtifact artifact;
        if (*table) {
            artifact = fbc::standard_table(o.table, table_defaults(o));
        } else if (*figure) {
            artifact = fbc::emit_figure_data(o.figure);
        } else {
            artifact = fbc::run_experiment(estimate_spec(o));
        }
        emit(artifact, o.out);
    } catch (const fbc::IoError& e) {
        std::cerr << "fbc: " << e.what() << '\n';
        return kExitIo;
    } catch (const fbc::ConfigError& e) {
        std::cerr << "fbc: configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fbc: configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}
