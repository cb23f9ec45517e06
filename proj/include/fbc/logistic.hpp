#pragma once

// Logistic growth testbed  dx/dt = alpha * x * (1 - x),  x(0) = x0.
//
// Closed-form solution plus analytic first- and second-order sensitivities
// with respect to (x0, alpha). The scalar kernels are templated on the
// floating-point type so validation code can evaluate them in extended
// precision.

#include <array>
#include <cmath>
#include <concepts>
#include <stdexcept>

namespace fbc {

/// Initial condition and growth rate of the logistic model.
struct ModelConfiguration {
    double x0 = 0.5;
    double alpha = 1.0;

    /// Both components finite and strictly positive.
    [[nodiscard]] bool is_admissible() const noexcept {
        return std::isfinite(x0) && std::isfinite(alpha) && x0 > 0.0 && alpha > 0.0;
    }

    friend bool operator==(const ModelConfiguration&, const ModelConfiguration&) = default;
};

/// Symmetric 2x2 matrix indexed by (x0, alpha).
struct SymmetricMatrix2 {
    double xx = 0.0;
    double xa = 0.0;
    double aa = 0.0;

    [[nodiscard]] double operator()(int i, int j) const noexcept {
        if (i == 0 && j == 0) return xx;
        if (i == 1 && j == 1) return aa;
        return xa;
    }

    /// v^T M v
    [[nodiscard]] double quadratic_form(double v0, double v1) const noexcept {
        return xx * v0 * v0 + 2.0 * xa * v0 * v1 + aa * v1 * v1;
    }
};

struct FirstOrderSensitivity {
    double d_x0 = 0.0;     // dx/dx0
    double d_alpha = 0.0;  // dx/dalpha
};

/// State and its sensitivities at one time.
struct SensitivityRecord {
    double t = 0.0;
    double x = 0.0;
    double d_x0 = 0.0;
    double d_alpha = 0.0;
    SymmetricMatrix2 hessian;
};

namespace logistic {

/// Above this value of alpha*t the kernels switch to the exp(-alpha*t) form.
inline constexpr double kLargeExponent = 700.0;

template <std::floating_point Real>
struct Terms {
    Real x;       // solution
    Real d_x0;    // e / D^2
    Real curv;    // e (1 - x0 - x0 e) / D^3, common factor of the alpha-Hessian entries
    Real h_xx;    // 2 (e - e^2) / D^3
};

/// All closed-form pieces from a single exponential evaluation,
/// with e = exp(alpha t) and D = 1 - x0 + x0 e.
template <std::floating_point Real>
[[nodiscard]] Terms<Real> terms(Real x0, Real alpha, Real t) {
    using std::exp;
    const Real at = alpha * t;
    if (at <= Real(kLargeExponent)) {
        const Real e = exp(at);
        const Real d = Real(1) - x0 + x0 * e;
        const Real r = e / d;  // bounded by 1/x0, keeps e^2 out of the numerators
        const Real inv = Real(1) / d;
        return {x0 * r, r * inv, r * ((Real(1) - x0 - x0 * e) * inv) * inv,
                Real(2) * r * ((Real(1) - e) * inv) * inv};
    }
    // Multiply numerator and denominator through by w^k, w = exp(-alpha t).
    const Real w = exp(-at);
    const Real dd = (Real(1) - x0) * w + x0;
    const Real inv = Real(1) / dd;
    return {x0 * inv, w * inv * inv, w * ((Real(1) - x0) * w - x0) * inv * inv * inv,
            Real(2) * (w * w - w) * inv * inv * inv};
}

template <std::floating_point Real>
[[nodiscard]] Real rhs(Real x, Real alpha) {
    return alpha * x * (Real(1) - x);
}

/// x(t) = x0 e^{alpha t} / (1 - x0 + x0 e^{alpha t})
template <std::floating_point Real>
[[nodiscard]] Real solution(Real x0, Real alpha, Real t) {
    return terms(x0, alpha, t).x;
}

template <std::floating_point Real>
[[nodiscard]] std::array<Real, 2> sensitivities(Real x0, Real alpha, Real t) {
    const Real dx = terms(x0, alpha, t).d_x0;
    return {dx, x0 * (Real(1) - x0) * t * dx};
}

/// Hessian entries (xx, xa, aa) of x(t) with respect to (x0, alpha).
template <std::floating_point Real>
[[nodiscard]] std::array<Real, 3> hessian(Real x0, Real alpha, Real t) {
    const auto k = terms(x0, alpha, t);
    return {k.h_xx, t * k.curv, x0 * (Real(1) - x0) * t * t * k.curv};
}

/// Classical fixed-step RK4 for a scalar autonomous ODE dx/dt = f(x),
/// integrated from 0 to `t_end` with the step shrunk to divide the interval evenly.
template <std::floating_point Real, class F>
[[nodiscard]] Real rk4(F&& f, Real x, Real t_end, Real step) {
    if (t_end == Real(0)) return x;
    if (!(step > Real(0))) throw std::invalid_argument("rk4: step must be positive");
    const auto n = static_cast<long long>(std::ceil(t_end / step));
    const Real h = t_end / static_cast<Real>(n);
    for (long long i = 0; i < n; ++i) {
        const Real k1 = f(x);
        const Real k2 = f(x + h / 2 * k1);
        const Real k3 = f(x + h / 2 * k2);
        const Real k4 = f(x + h * k3);
        x += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return x;
}

}  // namespace logistic

[[nodiscard]] inline double rhs(double x, double alpha) { return logistic::rhs(x, alpha); }

[[nodiscard]] inline double solve(const ModelConfiguration& cfg, double t) {
    if (t < 0.0) throw std::invalid_argument("solve: negative time");
    return logistic::solution(cfg.x0, cfg.alpha, t);
}

/// RK4 integration of the logistic equation; a numerical cross-check for solve().
[[nodiscard]] inline double integrate_rk(const ModelConfiguration& cfg, double t, double step = 1e-3) {
    if (t < 0.0) throw std::invalid_argument("integrate_rk: negative time");
    const double a = cfg.alpha;
    return logistic::rk4([a](double x) { return logistic::rhs(x, a); }, cfg.x0, t, step);
}

[[nodiscard]] inline FirstOrderSensitivity first_order_sensitivities(const ModelConfiguration& cfg, double t) {
    if (t < 0.0) throw std::invalid_argument("first_order_sensitivities: negative time");
    const auto s = logistic::sensitivities(cfg.x0, cfg.alpha, t);
    return {s[0], s[1]};
}

[[nodiscard]] inline SymmetricMatrix2 hessian_sensitivities(const ModelConfiguration& cfg, double t) {
    if (t < 0.0) throw std::invalid_argument("hessian_sensitivities: negative time");
    const auto h = logistic::hessian(cfg.x0, cfg.alpha, t);
    return {h[0], h[1], h[2]};
}

[[nodiscard]] inline SensitivityRecord sensitivity_record(const ModelConfiguration& cfg, double t) {
    if (t < 0.0) throw std::invalid_argument("sensitivity_record: negative time");
    const auto k = logistic::terms(cfg.x0, cfg.alpha, t);
    const double c = cfg.x0 * (1.0 - cfg.x0);
    return {t, k.x, k.d_x0, c * t * k.d_x0, {k.h_xx, t * k.curv, c * t * t * k.curv}};
}

}  // namespace fbc
