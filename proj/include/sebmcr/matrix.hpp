#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sebmcr/common.hpp"

namespace sebmcr {

// Dense row-major matrix of doubles. Model state never holds NaN/Inf;
// require_finite() is called at the points where values enter state.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> v;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), v(r * c, fill) {}

    static Matrix of(std::size_t r, std::size_t c, std::initializer_list<double> vals) {
        Matrix m(r, c);
        require_arg(vals.size() == r * c, "Matrix::of: initializer size mismatch");
        std::size_t i = 0;
        for (double x : vals) m.v[i++] = x;
        return m;
    }

    double& operator()(std::size_t i, std::size_t j) { return v[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return v[i * cols + j]; }

    double* row(std::size_t i) { return v.data() + i * cols; }
    const double* row(std::size_t i) const { return v.data() + i * cols; }

    std::size_t size() const { return rows * cols; }
    bool empty() const { return size() == 0; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

    void resize(std::size_t r, std::size_t c) {
        rows = r;
        cols = c;
        v.assign(r * c, 0.0);
    }

    void fill(double x) {
        for (auto& e : v) e = x;
    }

    bool all_finite() const {
        for (double x : v)
            if (!std::isfinite(x)) return false;
        return true;
    }
};

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (!a.same_shape(b)) throw ArgumentError(std::string(what) + ": shape mismatch");
}

inline void require_finite(const Matrix& m, const char* what) {
    if (!m.all_finite()) throw NumericError(std::string(what) + ": non-finite values");
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw NumericError(std::string(what) + ": non-finite value");
}

}  // namespace sebmcr
