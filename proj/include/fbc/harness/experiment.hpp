#pragma once

// Experiment grids over observation schedules and model configurations, and
// the fixed tables / figure series of the logistic twin experiment.

#include "fbc/estimation.hpp"
#include "fbc/harness/artifact.hpp"
#include "fbc/iterate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace fbc {

struct ExperimentSpec {
    std::string id = "experiment";
    ModelConfiguration truth{0.5, 1.0};
    std::vector<ModelConfiguration> models{{0.6, 0.9}};
    std::vector<double> t0s{0.0, 4.0, 8.0};
    std::vector<int> ks{1, 4, 8, 12};
    std::vector<int> ns{2, 4, 6};
    double delta = 0.5;
    Method method = Method::FirstOrder;
    double lambda = 1e-6;  // Tikhonov only
    std::optional<IterationConfig> iteration;

    void validate() const {
        if (!truth.is_admissible()) throw ConfigError("truth", "x0 and alpha must be positive and finite");
        if (truth.x0 > 1.0) throw ConfigError("truth", "x0 must lie in (0, 1]");
        if (models.empty()) throw ConfigError("models", "grid is empty");
        for (const auto& m : models) {
            if (!m.is_admissible() || m.x0 > 1.0) {
                throw ConfigError("models", "x0 must lie in (0, 1] and alpha must be positive");
            }
        }
        if (t0s.empty()) throw ConfigError("t0", "grid is empty");
        for (double t : t0s)
            if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("t0", "must be >= 0");
        if (ks.empty()) throw ConfigError("k", "grid is empty");
        for (int k : ks)
            if (k < 1) throw ConfigError("k", "must be >= 1");
        if (ns.empty()) throw ConfigError("n", "grid is empty");
        for (int n : ns)
            if (n < 2) throw ConfigError("n", "must be >= 2");
        if (!(delta > 0.0) || !std::isfinite(delta)) throw ConfigError("delta", "must be > 0");
        if (method == Method::Tikhonov && !(lambda > 0.0)) throw ConfigError("lambda", "must be > 0");
        if (iteration) {
            if (method != Method::FirstOrder && method != Method::SecondOrder) {
                throw ConfigError("method", "iteration requires the first or second order estimator");
            }
            if (!(iteration->threshold > 0.0)) throw ConfigError("threshold", "must be > 0");
            if (iteration->max_iterations < 1) throw ConfigError("max-iter", "must be >= 1");
        }
    }
};

namespace detail {

inline bool config_less(const ModelConfiguration& a, const ModelConfiguration& b) {
    return std::tie(a.x0, a.alpha) < std::tie(b.x0, b.alpha);
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace detail

/// One row per (model, n, t0, k) cell, in ascending key order.
[[nodiscard]] inline TableArtifact run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    using numfmt::shortest;

    auto models = spec.models;
    std::sort(models.begin(), models.end(), detail::config_less);
    models.erase(std::unique(models.begin(), models.end()), models.end());
    const auto ns = detail::sorted_unique(spec.ns);
    const auto t0s = detail::sorted_unique(spec.t0s);
    const auto ks = detail::sorted_unique(spec.ks);

    TableArtifact out;
    out.id = spec.id;
    out.headers = {"model_x0", "model_alpha", "n", "t0", "k", "d_x0", "d_alpha", "kappa", "status"};
    if (spec.iteration) out.headers.emplace_back("iterations");
    for (const char* h : {"d_x0_display", "d_alpha_display", "kappa_display"}) out.headers.emplace_back(h);

    const auto h = ObservationOperator::identity();
    for (const auto& model : models) {
        for (int n : ns) {
            for (double t0 : t0s) {
                for (int k : ks) {
                    const auto obs = generate_observations(spec.truth, build_schedule({t0, k, spec.delta, n}));
                    Perturbation beta;
                    double kappa = 0.0;
                    std::string status;
                    std::optional<int> iterations;
                    if (spec.iteration) {
                        IterationConfig cfg = *spec.iteration;
                        cfg.estimator = spec.method == Method::SecondOrder ? Estimator::SecondOrder
                                                                           : Estimator::FirstOrder;
                        const IterationTrace tr = run_iteration(model, obs, h, cfg);
                        beta = tr.cumulative;
                        kappa = tr.final_kappa();
                        status = to_string(tr.status);
                        iterations = tr.iterations;
                    } else {
                        const EstimateReport r = estimate(spec.method, model, obs, h, spec.lambda);
                        beta = r.beta;
                        kappa = r.kappa;
                        status = to_string(r.status);
                    }
                    std::vector<std::string> row{shortest(model.x0), shortest(model.alpha), std::to_string(n),
                                                 shortest(t0),       std::to_string(k),     shortest(beta.d_x0),
                                                 shortest(beta.d_alpha), shortest(kappa), status};
                    if (iterations) row.push_back(std::to_string(*iterations));
                    row.push_back(numfmt::fixed(beta.d_x0, 4));
                    row.push_back(numfmt::fixed(beta.d_alpha, 4));
                    row.push_back(numfmt::sci2(kappa));
                    out.add_row(std::move(row));
                }
            }
        }
    }
    return out;
}

/// Overridable inputs shared by the fixed tables.
struct TableDefaults {
    ModelConfiguration truth{0.5, 1.0};
    ModelConfiguration model{0.6, 0.9};
    double delta = 0.5;
    double threshold = 1e-6;
    std::optional<int> max_iterations;  // 10 for tables 5-6, 100 for tables 7-8 when unset
};

inline const std::vector<double> kTableStartTimes{0.0, 4.0, 8.0};
inline const std::vector<int> kTableSpacings{1, 4, 8, 12};

/// Observation times for each start time (blocks) and spacing (columns).
[[nodiscard]] inline TableArtifact schedule_table(double delta = 0.5, int n = 6) {
    TableArtifact out;
    out.id = "table-1";
    out.headers = {"t0", "i"};
    for (int k : kTableSpacings) out.headers.push_back("k" + std::to_string(k));
    for (double t0 : kTableStartTimes) {
        std::vector<std::vector<double>> cols;
        for (int k : kTableSpacings) cols.push_back(build_schedule({t0, k, delta, n}));
        for (int i = 0; i < n; ++i) {
            std::vector<std::string> row{numfmt::shortest(t0), std::to_string(i)};
            for (const auto& c : cols) row.push_back(numfmt::shortest(c[static_cast<std::size_t>(i)]));
            out.add_row(std::move(row));
        }
    }
    return out;
}

/// Noise-free observations of the truth run at the schedule_table times.
[[nodiscard]] inline TableArtifact observation_table(const ModelConfiguration& truth = {0.5, 1.0},
                                                     double delta = 0.5, int n = 6) {
    TableArtifact out;
    out.id = "table-2";
    out.headers = {"t0", "i"};
    for (int k : kTableSpacings) out.headers.push_back("z_k" + std::to_string(k));
    for (int k : kTableSpacings) out.headers.push_back("z_k" + std::to_string(k) + "_display");
    for (double t0 : kTableStartTimes) {
        std::vector<ObservationSet> sets;
        for (int k : kTableSpacings) sets.push_back(generate_observations(truth, build_schedule({t0, k, delta, n})));
        for (int i = 0; i < n; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            std::vector<std::string> row{numfmt::shortest(t0), std::to_string(i)};
            for (const auto& s : sets) row.push_back(numfmt::shortest(s.values()[idx]));
            for (const auto& s : sets) row.push_back(numfmt::fixed(s.values()[idx], 14));
            out.add_row(std::move(row));
        }
    }
    return out;
}

/// Spec for tables 3-8. Throws ConfigError for any other number.
[[nodiscard]] inline ExperimentSpec table_spec(int number, const TableDefaults& d = {}) {
    ExperimentSpec s;
    s.id = "table-" + std::to_string(number);
    s.truth = d.truth;
    s.models = {d.model};
    s.t0s = kTableStartTimes;
    s.ks = kTableSpacings;
    s.ns = {2, 4, 6};
    s.delta = d.delta;
    switch (number) {
        case 3: s.method = Method::FirstOrder; break;
        case 4: s.method = Method::SecondOrder; break;
        case 5:
        case 6:
            s.method = number == 5 ? Method::FirstOrder : Method::SecondOrder;
            s.iteration = IterationConfig{d.threshold, d.max_iterations.value_or(10), Estimator::FirstOrder};
            break;
        case 7:
        case 8:
            s.method = number == 7 ? Method::FirstOrder : Method::SecondOrder;
            s.models.clear();
            for (double x0 : {0.3, 0.4, 0.6, 0.7})
                for (double a : {0.8, 0.9, 1.1, 1.2}) s.models.push_back({x0, a});
            s.ns = {4};
            s.ks = {1};
            s.iteration = IterationConfig{d.threshold, d.max_iterations.value_or(100), Estimator::FirstOrder};
            break;
        default: throw ConfigError("table", "no experiment table numbered " + std::to_string(number));
    }
    return s;
}

/// Any of tables 1-8.
[[nodiscard]] inline TableArtifact standard_table(int number, const TableDefaults& d = {}) {
    if (number == 1) return schedule_table(d.delta);
    if (number == 2) return observation_table(d.truth, d.delta);
    if (number < 1 || number > 8) throw ConfigError("table", "expected 1..8, got " + std::to_string(number));
    return run_experiment(table_spec(number, d));
}

/// fig-1: (t, x(t)); fig-2: (t, dx/dx0, dx/dalpha); x0 = 0.5, alpha = 1, t = 0..10 step 0.1.
[[nodiscard]] inline TableArtifact emit_figure_data(int which) {
    if (which != 1 && which != 2) throw ConfigError("figure", "expected 1 or 2, got " + std::to_string(which));
    const ModelConfiguration cfg{0.5, 1.0};
    TableArtifact out;
    out.id = "fig-" + std::to_string(which);
    out.headers = which == 1 ? std::vector<std::string>{"t", "x"} : std::vector<std::string>{"t", "d_x0", "d_alpha"};
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 10.0;
        if (which == 1) {
            out.add_row({numfmt::shortest(t), numfmt::shortest(solve(cfg, t))});
        } else {
            const auto s = first_order_sensitivities(cfg, t);
            out.add_row({numfmt::shortest(t), numfmt::shortest(s.d_x0), numfmt::shortest(s.d_alpha)});
        }
    }
    return out;
}

}  // namespace fbc
