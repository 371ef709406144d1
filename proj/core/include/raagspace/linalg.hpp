#ifndef RAAGSPACE_LINALG_HPP
#define RAAGSPACE_LINALG_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "raagspace/errors.hpp"

namespace raagspace {

/// Dense row-major matrix, just large enough for per-cube Gram work.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
    double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    std::vector<double> column(int j) const {
        std::vector<double> v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }
};

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

inline Matrix matmul(const Matrix& x, const Matrix& y) {
    Matrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            double v = x.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double norm(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

/// Lower Cholesky factor of a symmetric positive definite matrix, or
/// nothing when a pivot falls below the threshold.
inline std::optional<Matrix> cholesky(const Matrix& g, double pivotTol = 1e-12) {
    const int n = g.rows;
    Matrix l(n, n);
    for (int j = 0; j < n; ++j) {
        double d = g.at(j, j);
        for (int k = 0; k < j; ++k) d -= l.at(j, k) * l.at(j, k);
        if (!(d > pivotTol)) return std::nullopt;
        l.at(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double s = g.at(i, j);
            for (int k = 0; k < j; ++k) s -= l.at(i, k) * l.at(j, k);
            l.at(i, j) = s / l.at(j, j);
        }
    }
    return l;
}

/// Solve an SPD system via the Cholesky factor.
inline std::vector<double> solveSpd(const Matrix& g, const std::vector<double>& b,
                                    double pivotTol = 1e-12) {
    auto l = cholesky(g, pivotTol);
    if (!l) throw semantic_error("matrix is not positive definite within tolerance");
    const int n = g.rows;
    std::vector<double> y(n), x(n);
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= l->at(i, k) * y[k];
        y[i] = s / l->at(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < n; ++k) s -= l->at(k, i) * x[k];
        x[i] = s / l->at(i, i);
    }
    return x;
}

} // namespace raagspace

#endif
