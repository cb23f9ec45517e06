#pragma once

// Iterated correction: estimate beta at the current model, apply it in full,
// repeat. No damping and no line search, so non-convergent runs are reported
// as they happen rather than suppressed.

#include "fbc/estimation.hpp"

#include <numeric>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace fbc {

enum class Estimator { FirstOrder, SecondOrder };

struct IterationConfig {
    double threshold = 1e-6;  // on max(|d_x0|, |d_alpha|) of a single step
    int max_iterations = 10;
    Estimator estimator = Estimator::FirstOrder;

    void validate() const {
        if (!(threshold > 0.0)) throw std::invalid_argument("IterationConfig: threshold must be > 0");
        if (max_iterations < 1) throw std::invalid_argument("IterationConfig: max_iterations must be >= 1");
    }
};

enum class IterationStatus { Converged, MaxIterations, Diverged };

[[nodiscard]] constexpr std::string_view to_string(IterationStatus s) noexcept {
    switch (s) {
        case IterationStatus::Converged: return "converged";
        case IterationStatus::MaxIterations: return "max-iterations";
        case IterationStatus::Diverged: return "diverged";
    }
    return "?";
}

[[nodiscard]] constexpr std::string_view to_string(Estimator e) noexcept {
    return e == Estimator::FirstOrder ? "first" : "second";
}

/// One pass of the loop: the model the estimate was taken at and what came out.
struct IterationStep {
    ModelConfiguration model;
    Perturbation beta;
    double kappa = 0.0;
    double residual = 0.0;  // sum of squared forecast errors at `model`
};

struct IterationTrace {
    std::vector<IterationStep> steps;
    ModelConfiguration initial_model;
    ModelConfiguration final_model;
    Perturbation cumulative;  // final - initial, NaN when diverged
    int iterations = 0;
    IterationStatus status = IterationStatus::MaxIterations;

    /// Condition number at the last model an estimate was taken at.
    [[nodiscard]] double final_kappa() const { return steps.empty() ? 0.0 : steps.back().kappa; }

    [[nodiscard]] Perturbation summed_steps() const {
        Perturbation s;
        for (const auto& st : steps) {
            s.d_x0 += st.beta.d_x0;
            s.d_alpha += st.beta.d_alpha;
        }
        return s;
    }
};

[[nodiscard]] inline IterationTrace run_iteration(const ModelConfiguration& initial_model, const ObservationSet& obs,
                                                  const ObservationOperator& h, const IterationConfig& cfg) {
    cfg.validate();
    if (obs.size() < 2) throw std::invalid_argument("run_iteration: needs at least 2 observations");

    IterationTrace trace;
    trace.initial_model = initial_model;
    ModelConfiguration current = initial_model;

    auto diverge = [&] {
        trace.status = IterationStatus::Diverged;
        trace.final_model = current;
        trace.cumulative = Perturbation::nan();
        return trace;
    };

    for (int it = 1; it <= cfg.max_iterations; ++it) {
        const EstimateReport r = cfg.estimator == Estimator::FirstOrder ? first_order_estimate(current, obs, h)
                                                                        : second_order_estimate(current, obs, h);
        const DenseVector e = forecast_errors(current, obs, h);
        const double residual = std::inner_product(e.begin(), e.end(), e.begin(), 0.0);
        trace.steps.push_back({current, r.beta, r.kappa, residual});
        trace.iterations = it;

        if (r.status == EstimateStatus::Diverged || !r.beta.is_finite()) return diverge();
        const ModelConfiguration next = apply_correction(current, r.beta);
        if (!next.is_admissible()) {
            current = next;
            return diverge();
        }
        current = next;
        if (r.beta.max_abs() < cfg.threshold) {
            trace.status = IterationStatus::Converged;
            break;
        }
    }
    trace.final_model = current;
    trace.cumulative = correction_between(initial_model, current);
    return trace;
}

}  // namespace fbc
