#pragma once

// Small dense real linear algebra for tall N x p systems (p is 1..3 in
// practice): Gram products, pivoted square solves, a one-sided Jacobi SVD,
// least-squares / minimum-norm / Tikhonov solves and condition numbers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbc {

using DenseVector = std::vector<double>;

/// Thrown when a square or normal-equation system is numerically singular.
class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Row-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
        if (rows == 0 || cols == 0) {
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
        }
    }

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0) {
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
        }
        if (data_.size() != rows * cols) {
            throw std::invalid_argument("DenseMatrix: entry count " + std::to_string(data_.size()) +
                                        " does not match " + std::to_string(rows) + "x" +
                                        std::to_string(cols));
        }
    }

    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        if (rows_ == 0 || cols_ == 0) {
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
        }
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) {
                throw std::invalid_argument("DenseMatrix: ragged initializer");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }
    [[nodiscard]] std::span<const double> entries() const noexcept { return data_; }

    [[nodiscard]] double max_abs() const noexcept {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    [[nodiscard]] bool all_finite() const noexcept {
        return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Relative pivot threshold below which a square solve is declared singular.
inline constexpr double kSingularPivotTolerance = 1e-14;
/// Relative singular-value cutoff for pseudo-inverse truncation.
inline constexpr double kPseudoInverseCutoff = 1e-12;

[[nodiscard]] inline DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

[[nodiscard]] inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

[[nodiscard]] inline DenseVector multiply(const DenseMatrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) throw std::invalid_argument("multiply: vector length mismatch");
    DenseVector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto r = a.row(i);
        y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
    }
    return y;
}

/// A^T A
[[nodiscard]] inline DenseMatrix gram(const DenseMatrix& a) {
    DenseMatrix g(a.cols(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = j; k < a.cols(); ++k) g(j, k) += a(i, j) * a(i, k);
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t k = 0; k < j; ++k) g(j, k) = g(k, j);
    return g;
}

/// A^T b
[[nodiscard]] inline DenseVector transpose_multiply(const DenseMatrix& a, std::span<const double> b) {
    if (a.rows() != b.size()) throw std::invalid_argument("transpose_multiply: length mismatch");
    DenseVector y(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += a(i, j) * b[i];
    return y;
}

/// Gaussian elimination with partial pivoting. A pivot smaller than
/// kSingularPivotTolerance times the largest entry of `m` is singular.
[[nodiscard]] inline DenseVector solve_square(DenseMatrix m, DenseVector b) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("solve_square: matrix is not square");
    if (b.size() != n) throw std::invalid_argument("solve_square: rhs length mismatch");
    if (!m.all_finite()) throw SingularSystem("solve_square: non-finite matrix entry");

    const double scale = m.max_abs();
    if (scale == 0.0) throw SingularSystem("solve_square: zero matrix");
    const double tiny = kSingularPivotTolerance * scale;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
        if (!(std::abs(m(piv, col)) > tiny)) {
            throw SingularSystem("solve_square: pivot " + std::to_string(col) + " below tolerance");
        }
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
            std::swap(b[col], b[piv]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m(r, col) / m(col, col);
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
            b[r] -= f * b[col];
        }
    }
    DenseVector x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
        x[i] = s / m(i, i);
    }
    return x;
}

/// Thin SVD A = U diag(sigma) V^T of an m x n matrix with m >= n.
struct Svd {
    DenseMatrix u;                  // m x n, orthonormal columns where sigma > 0
    DenseVector singular_values;    // length n, descending
    DenseMatrix v;                  // n x n orthogonal
};

namespace detail {

inline Svd jacobi_svd_tall(const DenseMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    DenseMatrix w = a;
    DenseMatrix v = DenseMatrix::identity(n);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (int sweep = 0; sweep < 80; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += w(i, p) * w(i, p);
                    beta += w(i, q) * w(i, q);
                    gamma += w(i, p) * w(i, q);
                }
                if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double wp = w(i, p), wq = w(i, q);
                    w(i, p) = c * wp - s * wq;
                    w(i, q) = s * wp + c * wq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    DenseVector sigma(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double ss = 0.0;
        for (std::size_t i = 0; i < m; ++i) ss += w(i, j) * w(i, j);
        sigma[j] = std::sqrt(ss);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return sigma[l] > sigma[r]; });

    Svd out{DenseMatrix(m, n), DenseVector(n), DenseMatrix(n, n)};
    for (std::size_t jj = 0; jj < n; ++jj) {
        const std::size_t j = order[jj];
        out.singular_values[jj] = sigma[j];
        for (std::size_t i = 0; i < n; ++i) out.v(i, jj) = v(i, j);
        if (sigma[j] > 0.0)
            for (std::size_t i = 0; i < m; ++i) out.u(i, jj) = w(i, j) / sigma[j];
    }
    return out;
}

}  // namespace detail

/// One-sided (Hestenes) Jacobi SVD. Wide matrices are factored through
/// their transpose, so `u` is rows x k and `v` is cols x k with k = min(rows, cols).
[[nodiscard]] inline Svd svd(const DenseMatrix& a) {
    if (a.rows() >= a.cols()) return detail::jacobi_svd_tall(a);
    Svd t = detail::jacobi_svd_tall(transpose(a));
    return Svd{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
}

/// Least-squares solution of A x = b through the normal equations.
/// For square A the system is solved directly.
[[nodiscard]] inline DenseVector normal_equations_solve(const DenseMatrix& a, std::span<const double> b) {
    if (a.rows() != b.size()) throw std::invalid_argument("normal_equations_solve: length mismatch");
    if (a.rows() < a.cols()) {
        throw std::invalid_argument("normal_equations_solve: fewer rows than unknowns");
    }
    if (a.rows() == a.cols()) return solve_square(a, DenseVector(b.begin(), b.end()));
    return solve_square(gram(a), transpose_multiply(a, b));
}

/// Minimum-norm least-squares solution A^+ b. Singular values below
/// kPseudoInverseCutoff * sigma_max are treated as zero.
[[nodiscard]] inline DenseVector pseudo_inverse_solve(const DenseMatrix& a, std::span<const double> b) {
    if (a.rows() != b.size()) throw std::invalid_argument("pseudo_inverse_solve: length mismatch");
    const Svd f = svd(a);
    const std::size_t k = f.singular_values.size();
    DenseVector x(a.cols(), 0.0);
    const double cutoff = kPseudoInverseCutoff * (k ? f.singular_values.front() : 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        const double s = f.singular_values[j];
        if (!(s > cutoff) || s == 0.0) continue;
        double ub = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) ub += f.u(i, j) * b[i];
        const double coef = ub / s;
        for (std::size_t i = 0; i < a.cols(); ++i) x[i] += coef * f.v(i, j);
    }
    return x;
}

/// argmin ||A x - b||^2 + lambda ||x||^2, i.e. (A^T A + lambda I)^{-1} A^T b.
/// Evaluated through the SVD filter factors sigma / (sigma^2 + lambda).
[[nodiscard]] inline DenseVector tikhonov_solve(const DenseMatrix& a, std::span<const double> b, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("tikhonov_solve: lambda must be positive and finite");
    }
    if (a.rows() != b.size()) throw std::invalid_argument("tikhonov_solve: length mismatch");
    const Svd f = svd(a);
    DenseVector x(a.cols(), 0.0);
    for (std::size_t j = 0; j < f.singular_values.size(); ++j) {
        const double s = f.singular_values[j];
        if (s == 0.0) continue;
        double ub = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) ub += f.u(i, j) * b[i];
        const double coef = s * ub / (s * s + lambda);
        for (std::size_t i = 0; i < a.cols(); ++i) x[i] += coef * f.v(i, j);
    }
    return x;
}

/// sigma_max / sigma_min of a square matrix; +inf when sigma_min vanishes
/// relative to machine precision.
[[nodiscard]] inline double condition_number(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("condition_number: matrix is not square");
    if (!a.all_finite()) return std::numeric_limits<double>::infinity();
    const Svd f = svd(a);
    const double smax = f.singular_values.front();
    const double smin = f.singular_values.back();
    if (smax == 0.0) return std::numeric_limits<double>::infinity();
    if (smin <= std::numeric_limits<double>::epsilon() * smax) {
        return std::numeric_limits<double>::infinity();
    }
    return smax / smin;
}

}  // namespace fbc
