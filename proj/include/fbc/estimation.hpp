#pragma once

// Forecast-error assembly and correction estimators.
//
// A correction beta = (d_x0, d_alpha) is additive: the corrected model is
// (x0 + d_x0, alpha + d_alpha), so in a twin experiment beta_true = truth - model.
// Sensitivities are always evaluated at the (erroneous) model configuration.

#include "fbc/linalg.hpp"
#include "fbc/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fbc {

/// Maps model state to the observed quantity, with its first two derivatives.
struct ObservationOperator {
    std::function<double(double)> eval;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    bool identity_flag = false;

    static ObservationOperator identity() {
        return {[](double x) { return x; }, [](double) { return 1.0; }, [](double) { return 0.0; }, true};
    }

    [[nodiscard]] double value(double x) const { return identity_flag ? x : eval(x); }
    [[nodiscard]] double slope(double x) const { return identity_flag ? 1.0 : d1(x); }
    [[nodiscard]] double curvature(double x) const { return identity_flag ? 0.0 : d2(x); }
};

/// Arithmetic progression of observation times t_i = t0 + i * k * delta, i = 0..n-1.
struct ObservationSchedule {
    double t0 = 0.0;
    int k = 1;
    double delta = 0.5;
    int n = 2;
};

[[nodiscard]] inline std::vector<double> build_schedule(const ObservationSchedule& s) {
    if (!(s.t0 >= 0.0) || !std::isfinite(s.t0)) throw std::invalid_argument("schedule: t0 must be >= 0");
    if (s.k < 1) throw std::invalid_argument("schedule: k must be >= 1");
    if (!(s.delta > 0.0) || !std::isfinite(s.delta)) throw std::invalid_argument("schedule: delta must be > 0");
    if (s.n < 2) throw std::invalid_argument("schedule: n must be >= 2");
    std::vector<double> times(static_cast<std::size_t>(s.n));
    for (int i = 0; i < s.n; ++i) times[static_cast<std::size_t>(i)] = s.t0 + static_cast<double>(i * s.k) * s.delta;
    return times;
}

/// Observation times (strictly increasing, non-negative) and observed values.
class ObservationSet {
public:
    ObservationSet(std::vector<double> times, std::vector<double> values)
        : times_(std::move(times)), values_(std::move(values)) {
        if (times_.size() != values_.size()) {
            throw std::invalid_argument("ObservationSet: times and values differ in length");
        }
        if (times_.empty()) throw std::invalid_argument("ObservationSet: empty");
        if (!(times_.front() >= 0.0)) throw std::invalid_argument("ObservationSet: negative time");
        for (std::size_t i = 1; i < times_.size(); ++i) {
            if (!(times_[i] > times_[i - 1])) {
                throw std::invalid_argument("ObservationSet: times must be strictly increasing");
            }
        }
    }

    [[nodiscard]] std::span<const double> times() const noexcept { return times_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return times_.size(); }

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

struct Perturbation {
    double d_x0 = 0.0;
    double d_alpha = 0.0;

    [[nodiscard]] bool is_finite() const noexcept { return std::isfinite(d_x0) && std::isfinite(d_alpha); }
    [[nodiscard]] double max_abs() const noexcept { return std::max(std::abs(d_x0), std::abs(d_alpha)); }

    static Perturbation nan() {
        constexpr double q = std::numeric_limits<double>::quiet_NaN();
        return {q, q};
    }

    friend bool operator==(const Perturbation&, const Perturbation&) = default;
};

[[nodiscard]] inline ModelConfiguration apply_correction(const ModelConfiguration& m, const Perturbation& b) {
    return {m.x0 + b.d_x0, m.alpha + b.d_alpha};
}

/// The correction that maps `from` onto `to`.
[[nodiscard]] inline Perturbation correction_between(const ModelConfiguration& from, const ModelConfiguration& to) {
    return {to.x0 - from.x0, to.alpha - from.alpha};
}

enum class Method { FirstOrder, SecondOrder, Tikhonov, PseudoInverse };
enum class EstimateStatus { Ok, IllConditioned, Diverged };

[[nodiscard]] constexpr std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::FirstOrder: return "first";
        case Method::SecondOrder: return "second";
        case Method::Tikhonov: return "tikhonov";
        case Method::PseudoInverse: return "pinv";
    }
    return "?";
}

[[nodiscard]] constexpr std::string_view to_string(EstimateStatus s) noexcept {
    switch (s) {
        case EstimateStatus::Ok: return "ok";
        case EstimateStatus::IllConditioned: return "ill-conditioned";
        case EstimateStatus::Diverged: return "diverged";
    }
    return "?";
}

/// Estimates whose Gram condition number exceeds this are flagged, not refused.
inline constexpr double kIllConditionedThreshold = 1e8;

struct EstimateReport {
    Perturbation beta;
    double kappa = 0.0;  // condition number of Hbar_N^T Hbar_N
    Method method = Method::FirstOrder;
    EstimateStatus status = EstimateStatus::Ok;
};

[[nodiscard]] inline ObservationSet generate_observations(const ModelConfiguration& truth, std::vector<double> times) {
    std::vector<double> values;
    values.reserve(times.size());
    for (double t : times) values.push_back(solve(truth, t));
    return {std::move(times), std::move(values)};
}

/// e_i = z_i - h(x(t_i)) with x evaluated at `model`.
[[nodiscard]] inline DenseVector forecast_errors(const ModelConfiguration& model, const ObservationSet& obs,
                                                 const ObservationOperator& h) {
    DenseVector e(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) e[i] = obs.values()[i] - h.value(solve(model, obs.times()[i]));
    return e;
}

/// Hbar_N: row i is (dx/dx0, dx/dalpha) at t_i.
[[nodiscard]] inline DenseMatrix sensitivity_matrix(const ModelConfiguration& model, std::span<const double> times) {
    if (times.empty()) throw std::invalid_argument("sensitivity_matrix: no times");
    DenseMatrix hbar(times.size(), 2);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const auto s = first_order_sensitivities(model, times[i]);
        hbar(i, 0) = s.d_x0;
        hbar(i, 1) = s.d_alpha;
    }
    return hbar;
}

/// H_N = D(h) Hbar_N, the Jacobian of the predicted observations.
[[nodiscard]] inline DenseMatrix assemble_jacobian(const ModelConfiguration& model, std::span<const double> times,
                                                   const ObservationOperator& h) {
    DenseMatrix hn = sensitivity_matrix(model, times);
    if (h.identity_flag) return hn;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double dh = h.slope(solve(model, times[i]));
        hn(i, 0) *= dh;
        hn(i, 1) *= dh;
    }
    return hn;
}

namespace detail {

inline EstimateReport finish(Method method, DenseVector beta, double kappa) {
    EstimateReport r;
    r.method = method;
    r.kappa = kappa;
    r.beta = {beta.at(0), beta.at(1)};
    if (!r.beta.is_finite()) {
        r.status = EstimateStatus::Diverged;
    } else if (!(kappa <= kIllConditionedThreshold)) {
        r.status = EstimateStatus::IllConditioned;
    }
    return r;
}

inline EstimateReport diverged(Method method, double kappa) {
    return {Perturbation::nan(), kappa, method, EstimateStatus::Diverged};
}

inline void require_observations(const ObservationSet& obs, std::size_t minimum, const char* who) {
    if (obs.size() < minimum) {
        throw std::invalid_argument(std::string(who) + ": needs at least " + std::to_string(minimum) +
                                    " observations");
    }
}

}  // namespace detail

/// Linear least-squares correction from first-order sensitivities.
/// N = 2 is an exact solve, N > 2 goes through the normal equations.
[[nodiscard]] inline EstimateReport first_order_estimate(const ModelConfiguration& model, const ObservationSet& obs,
                                                         const ObservationOperator& h) {
    detail::require_observations(obs, 2, "first_order_estimate");
    const DenseMatrix hbar = sensitivity_matrix(model, obs.times());
    const double kappa = condition_number(gram(hbar));
    const DenseMatrix hn = assemble_jacobian(model, obs.times(), h);
    const DenseVector e = forecast_errors(model, obs, h);
    try {
        return detail::finish(Method::FirstOrder, normal_equations_solve(hn, e), kappa);
    } catch (const SingularSystem&) {
        return detail::diverged(Method::FirstOrder, kappa);
    }
}

[[nodiscard]] inline EstimateReport tikhonov_estimate(const ModelConfiguration& model, const ObservationSet& obs,
                                                      const ObservationOperator& h, double lambda) {
    detail::require_observations(obs, 1, "tikhonov_estimate");
    const DenseMatrix hbar = sensitivity_matrix(model, obs.times());
    const double kappa = condition_number(gram(hbar));
    const DenseMatrix hn = assemble_jacobian(model, obs.times(), h);
    return detail::finish(Method::Tikhonov, tikhonov_solve(hn, forecast_errors(model, obs, h), lambda), kappa);
}

[[nodiscard]] inline EstimateReport pseudo_inverse_estimate(const ModelConfiguration& model, const ObservationSet& obs,
                                                            const ObservationOperator& h) {
    detail::require_observations(obs, 1, "pseudo_inverse_estimate");
    const DenseMatrix hbar = sensitivity_matrix(model, obs.times());
    const double kappa = condition_number(gram(hbar));
    const DenseMatrix hn = assemble_jacobian(model, obs.times(), h);
    return detail::finish(Method::PseudoInverse, pseudo_inverse_solve(hn, forecast_errors(model, obs, h)), kappa);
}

/// Full second-order misfit
///   G2(beta) = sum_i ( e_i - h'(x_i) s_i - h''(x_i) s_i^2 / 2 )^2,
///   s_i = Hbar(t_i) beta + beta^T D2(x(t_i)) beta / 2,
/// a quartic polynomial in beta.
[[nodiscard]] inline double second_order_objective(const ModelConfiguration& model, const ObservationSet& obs,
                                                   const ObservationOperator& h, const Perturbation& beta) {
    double total = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const SensitivityRecord r = sensitivity_record(model, obs.times()[i]);
        const double e = obs.values()[i] - h.value(r.x);
        const double s = r.d_x0 * beta.d_x0 + r.d_alpha * beta.d_alpha +
                         0.5 * r.hessian.quadratic_form(beta.d_x0, beta.d_alpha);
        const double res = e - h.slope(r.x) * s - 0.5 * h.curvature(r.x) * s * s;
        total += res * res;
    }
    return total;
}

/// Quadratic truncation of G2:  Q(beta) = c - 2 g^T beta + beta^T A beta, with
///   A = sum_i [ a_i^2 Hbar_i^T Hbar_i - e_i (a_i D2_i + c_i Hbar_i^T Hbar_i) ],
///   g = sum_i a_i e_i Hbar_i^T,   c = sum_i e_i^2,
/// where a_i = h'(x_i), c_i = h''(x_i). For identity h, A = sum (Hbar^T Hbar - e D2).
struct QuadraticModel {
    DenseMatrix curvature{2, 2};
    DenseVector gradient = DenseVector(2, 0.0);
    double constant = 0.0;

    [[nodiscard]] double operator()(const Perturbation& b) const {
        const double v[2] = {b.d_x0, b.d_alpha};
        double q = constant;
        for (std::size_t i = 0; i < 2; ++i) {
            q -= 2.0 * gradient[i] * v[i];
            for (std::size_t j = 0; j < 2; ++j) q += v[i] * curvature(i, j) * v[j];
        }
        return q;
    }
};

[[nodiscard]] inline QuadraticModel quadratic_model(const ModelConfiguration& model, const ObservationSet& obs,
                                                    const ObservationOperator& h) {
    QuadraticModel q;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const SensitivityRecord r = sensitivity_record(model, obs.times()[i]);
        const double e = obs.values()[i] - h.value(r.x);
        const double a = h.slope(r.x);
        const double c = h.curvature(r.x);
        const double row[2] = {r.d_x0, r.d_alpha};
        for (std::size_t j = 0; j < 2; ++j) {
            q.gradient[j] += a * e * row[j];
            for (std::size_t k = 0; k < 2; ++k) {
                const double outer = row[j] * row[k];
                q.curvature(j, k) += a * a * outer - e * (a * r.hessian(static_cast<int>(j), static_cast<int>(k)) + c * outer);
            }
        }
        q.constant += e * e;
    }
    return q;
}

/// Stationary point of the quadratic truncation: A beta = g.
[[nodiscard]] inline EstimateReport second_order_estimate(const ModelConfiguration& model, const ObservationSet& obs,
                                                          const ObservationOperator& h) {
    detail::require_observations(obs, 2, "second_order_estimate");
    const double kappa = condition_number(gram(sensitivity_matrix(model, obs.times())));
    const QuadraticModel q = quadratic_model(model, obs, h);
    try {
        return detail::finish(Method::SecondOrder, solve_square(q.curvature, q.gradient), kappa);
    } catch (const SingularSystem&) {
        return detail::diverged(Method::SecondOrder, kappa);
    }
}

/// Dispatch on method; `lambda` is only used for Tikhonov.
[[nodiscard]] inline EstimateReport estimate(Method method, const ModelConfiguration& model, const ObservationSet& obs,
                                             const ObservationOperator& h, double lambda = 1e-6) {
    switch (method) {
        case Method::FirstOrder: return first_order_estimate(model, obs, h);
        case Method::SecondOrder: return second_order_estimate(model, obs, h);
        case Method::Tikhonov: return tikhonov_estimate(model, obs, h, lambda);
        case Method::PseudoInverse: return pseudo_inverse_estimate(model, obs, h);
    }
    throw std::invalid_argument("estimate: unknown method");
}

}  // namespace fbc
