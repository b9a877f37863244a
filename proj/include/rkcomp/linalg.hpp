#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace rkcomp {

using Vec = std::vector<double>;

/// Thrown when an LU pivot falls at or below the configured threshold.
class singular_matrix_error : public std::runtime_error {
public:
    explicit singular_matrix_error(const std::string& what) : std::runtime_error(what) {}
};

/// Dense row-major matrix over an arbitrary scalar type.
template <class T>
class BasicMatrix {
public:
    BasicMatrix() = default;
    BasicMatrix(int rows, int cols, T value = T{})
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, value) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
    }

    static BasicMatrix identity(int n) {
        BasicMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;

template <class T>
std::vector<T> mat_vec(const BasicMatrix<T>& a, const std::vector<T>& x) {
    if (a.cols() != static_cast<int>(x.size())) throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<T> y(a.rows(), T{});
    for (int i = 0; i < a.rows(); ++i) {
        T acc{};
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

template <class T>
double max_abs(const BasicMatrix<T>& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, static_cast<double>(std::abs(a(i, j))));
    return m;
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Partial-pivot LU factorization. Matrices in this library stay small
/// (stage systems, Vandermonde moment systems), so a dense in-place
/// factorization is all that is needed.
template <class T>
class LuFactor {
public:
    /// Factorizes `a`; throws singular_matrix_error when the selected
    /// pivot magnitude is <= min_pivot.
    explicit LuFactor(BasicMatrix<T> a, double min_pivot = 0.0) : lu_(std::move(a)) {
        const int n = lu_.rows();
        if (n != lu_.cols()) throw std::invalid_argument("LuFactor: matrix must be square");
        perm_.resize(n);
        for (int i = 0; i < n; ++i) perm_[i] = i;
        for (int k = 0; k < n; ++k) {
            int pivot_row = k;
            double pivot_mag = std::abs(lu_(k, k));
            for (int i = k + 1; i < n; ++i) {
                const double mag = std::abs(lu_(i, k));
                if (mag > pivot_mag) {
                    pivot_mag = mag;
                    pivot_row = i;
                }
            }
            if (pivot_mag <= min_pivot)
                throw singular_matrix_error("LU pivot magnitude " + std::to_string(pivot_mag) +
                                            " at column " + std::to_string(k));
            if (pivot_row != k) {
                std::swap(perm_[k], perm_[pivot_row]);
                for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(pivot_row, j));
            }
            for (int i = k + 1; i < n; ++i) {
                const T factor = lu_(i, k) / lu_(k, k);
                lu_(i, k) = factor;
                for (int j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
            }
        }
    }

    std::vector<T> solve(const std::vector<T>& rhs) const {
        const int n = lu_.rows();
        if (static_cast<int>(rhs.size()) != n) throw std::invalid_argument("LuFactor::solve: size mismatch");
        std::vector<T> x(n);
        for (int i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
        for (int i = 1; i < n; ++i) {
            T acc = x[i];
            for (int j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
            x[i] = acc;
        }
        for (int i = n - 1; i >= 0; --i) {
            T acc = x[i];
            for (int j = i + 1; j < n; ++j) acc -= lu_(i, j) * x[j];
            x[i] = acc / lu_(i, i);
        }
        return x;
    }

private:
    BasicMatrix<T> lu_;
    std::vector<int> perm_;
};

template <class T>
std::vector<T> lu_solve(BasicMatrix<T> a, const std::vector<T>& rhs, double min_pivot = 0.0) {
    return LuFactor<T>(std::move(a), min_pivot).solve(rhs);
}

}  // namespace rkcomp
