// Recover the (x0, alpha) error of a logistic model from four observations
// of a truth run, one-shot and iterated.

#include "fbc/fbc.hpp"

#include <cstdio>
#include <string>

int main() {
    const fbc::ModelConfiguration truth{0.5, 1.0};
    const fbc::ModelConfiguration model{0.6, 0.9};
    const auto obs = fbc::generate_observations(truth, fbc::build_schedule({0.0, 4, 0.5, 4}));
    const auto h = fbc::ObservationOperator::identity();

    const auto first = fbc::first_order_estimate(model, obs, h);
    const auto second = fbc::second_order_estimate(model, obs, h);
    std::printf("first order : d_x0 = %+.4f  d_alpha = %+.4f  kappa = %.2g\n", first.beta.d_x0,
                first.beta.d_alpha, first.kappa);
    std::printf("second order: d_x0 = %+.4f  d_alpha = %+.4f\n", second.beta.d_x0, second.beta.d_alpha);

    const auto trace = fbc::run_iteration(model, obs, h, {1e-6, 10, fbc::Estimator::FirstOrder});
    std::printf("iterated    : d_x0 = %+.4f  d_alpha = %+.4f  after %d steps (%s)\n", trace.cumulative.d_x0,
                trace.cumulative.d_alpha, trace.iterations, std::string(fbc::to_string(trace.status)).c_str());
    return 0;
}
