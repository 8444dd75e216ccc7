#ifndef EXCALG_MATRIX_HPP
#define EXCALG_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace excalg {

template <typename F>
using Vec = std::vector<F>;

template <typename F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<F>& flat() const { return e_; }
    std::vector<F>& flat() { return e_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const F& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
        return r;
    }
    Matrix operator*(const F& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const F& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const F& b = o(k, j);
                    if (!b.is_zero()) r(i, j) += a * b;
                }
            }
        return r;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: shape mismatch in apply");
        Vec<F> r(rows_, F(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const F& a = (*this)(i, j);
                if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    F trace() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: trace of non-square");
        F t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    // Paste `m` with its top-left corner at (i0, j0).
    void set_block(std::size_t i0, std::size_t j0, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) (*this)(i0 + i, j0 + j) = m(i, j);
    }
    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<F> e_;
};

// Fraction-free (Bareiss) determinant: all intermediate divisions are exact,
// which keeps entry growth polynomial for integer input.
template <typename F>
F bareiss_det(Matrix<F> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_det: non-square");
    const std::size_t n = m.rows();
    if (n == 0) return F(1);
    F div_prev(1);
    F sign(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t piv = k;
            while (piv < n && m(piv, k).is_zero()) ++piv;
            if (piv == n) return F(0);
            m.swap_rows(k, piv);
            sign = -sign;
        }
        const F pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)) / div_prev;
            m(i, k) = F(0);
        }
        div_prev = pivot;
    }
    return sign * m(n - 1, n - 1);
}

// Solve m * x = b for square invertible m (plain exact elimination).
template <typename F>
bool solve_linear(Matrix<F> m, Vec<F> b, Vec<F>& x) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.size() != n) throw std::invalid_argument("solve_linear: shape");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return false;
        m.swap_rows(k, piv);
        std::swap(b[k], b[piv]);
        const F inv = m(k, k).inv();
        for (std::size_t j = k; j < n; ++j) m(k, j) = m(k, j) * inv;
        b[k] = b[k] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            const F f = m(i, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            b[i] -= f * b[k];
        }
    }
    x = std::move(b);
    return true;
}

template <typename F>
bool invert(const Matrix<F>& m, Matrix<F>& out) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("invert: non-square");
    Matrix<F> a = m;
    Matrix<F> inv = Matrix<F>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) ++piv;
        if (piv == n) return false;
        a.swap_rows(k, piv);
        inv.swap_rows(k, piv);
        const F f = a(k, k).inv();
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) = a(k, j) * f;
            inv(k, j) = inv(k, j) * f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            const F g = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= g * a(k, j);
                inv(i, j) -= g * inv(k, j);
            }
        }
    }
    out = std::move(inv);
    return true;
}

} // namespace excalg

#endif // EXCALG_MATRIX_HPP
