#ifndef EXCALG_ALGEBRA_HPP
#define EXCALG_ALGEBRA_HPP

#include <excalg/echelon.hpp>
#include <excalg/matrix.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace excalg {

/*
 * A finite-dimensional unital algebra given by structure constants, with an
 * optional involution (an anti-automorphism of order 2 fixing the unit).
 *
 * table[(i*dim + j)*dim + k] is the coefficient of e_k in e_i * e_j.
 */
template <typename F>
struct UnitalAlgebra {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<F> table;
    Vec<F> unit;
    Matrix<F> involution; // 0x0 when the algebra carries none

    bool has_involution() const { return involution.rows() == dim && dim > 0; }

    const F& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return table[(i * dim + j) * dim + k];
    }
    F& structure(std::size_t i, std::size_t j, std::size_t k) {
        return table[(i * dim + j) * dim + k];
    }

    Vec<F> mul(const Vec<F>& x, const Vec<F>& y) const {
        if (x.size() != dim || y.size() != dim)
            throw std::invalid_argument(name + ": element of wrong dimension");
        Vec<F> r(dim, F(0));
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                const F xy = x[i] * y[j];
                const F* row = &table[(i * dim + j) * dim];
                for (std::size_t k = 0; k < dim; ++k)
                    if (!row[k].is_zero()) r[k] += xy * row[k];
            }
        }
        return r;
    }

    Vec<F> conj(const Vec<F>& x) const {
        if (!has_involution()) throw std::logic_error(name + ": no involution");
        return involution.apply(x);
    }

    Vec<F> basis_vec(std::size_t i) const {
        Vec<F> v(dim, F(0));
        v[i] = F(1);
        return v;
    }

    // Matrix of y -> x*y (left) or y -> y*x (right).
    Matrix<F> left_mul(const Vec<F>& x) const {
        Matrix<F> m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) {
                    const F& c = structure(i, j, k);
                    if (!c.is_zero()) m(k, j) += x[i] * c;
                }
        }
        return m;
    }
    Matrix<F> right_mul(const Vec<F>& x) const {
        Matrix<F> m(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (x[j].is_zero()) continue;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t k = 0; k < dim; ++k) {
                    const F& c = structure(i, j, k);
                    if (!c.is_zero()) m(k, i) += x[j] * c;
                }
        }
        return m;
    }

    // Eigenspace bases of the involution: skew (conj x = -x) and hermitian
    // (conj x = x). Characteristic != 2 guarantees A = skew + herm.
    std::vector<Vec<F>> skew_basis() const { return eigenspace(F(-1)); }
    std::vector<Vec<F>> herm_basis() const { return eigenspace(F(1)); }

private:
    std::vector<Vec<F>> eigenspace(const F& lambda) const {
        Matrix<F> m = involution;
        for (std::size_t i = 0; i < dim; ++i) m(i, i) -= lambda;
        return nullspace(m);
    }
};

enum class MulSide { left, right };

// Matrix of left or right multiplication by x (shared plumbing for the
// operator calculus in the higher modules).
template <typename F>
Matrix<F> operator_of(const UnitalAlgebra<F>& a, MulSide side, const Vec<F>& x) {
    return side == MulSide::left ? a.left_mul(x) : a.right_mul(x);
}

} // namespace excalg

#endif // EXCALG_ALGEBRA_HPP
