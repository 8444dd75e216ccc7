#ifndef EXCALG_JORDAN_HPP
#define EXCALG_JORDAN_HPP

#include <excalg/composition.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace excalg {

/*
 * The cubic Jordan algebra of Hermitian 3x3 matrices over a composition
 * algebra C, in the coordinates (a, b, c, alpha, beta, gamma):
 *
 *       [ a       gamma   conj(beta) ]
 *   j = [ conj(gamma) b   alpha      ]
 *       [ beta  conj(alpha)  c       ]
 *
 * Basis order: the three diagonal units, then the alpha, beta, gamma blocks
 * (each a copy of C). dim = 3 + 3*dim(C).
 *
 * The product is x o y = (xy + yx)/2 in the matrix model; the quadratic
 * adjoint (sharp) is implemented entrywise; the cubic norm is recovered from
 * the trace pairing as N(j) = T(j^sharp, j)/3.
 */
template <typename F>
struct JordanAlgebra : UnitalAlgebra<F> {
    CompositionAlgebra<F> comp;
    std::size_t cdim = 0;
    Matrix<F> trace_gram; // Gram matrix of T(x,y) = Tr(x o y)

    // --- coordinate helpers -------------------------------------------------
    Vec<F> slot(const Vec<F>& j, std::size_t which) const { // 0=alpha,1=beta,2=gamma
        Vec<F> r(cdim);
        for (std::size_t t = 0; t < cdim; ++t) r[t] = j[3 + which * cdim + t];
        return r;
    }
    static Vec<F> diag_elt(const F& a, const F& b, const F& c, std::size_t dim) {
        Vec<F> j(dim, F(0));
        j[0] = a;
        j[1] = b;
        j[2] = c;
        return j;
    }

    F jtrace(const Vec<F>& j) const { return j[0] + j[1] + j[2]; }

    Vec<F> jprod(const Vec<F>& x, const Vec<F>& y) const { return this->mul(x, y); }

    Vec<F> sharp(const Vec<F>& j) const {
        const F a = j[0], b = j[1], c = j[2];
        Vec<F> al = slot(j, 0), be = slot(j, 1), ga = slot(j, 2);
        Vec<F> alb = comp.conj(al), beb = comp.conj(be), gab = comp.conj(ga);
        Vec<F> r(this->dim, F(0));
        r[0] = b * c - comp.norm(al);
        r[1] = c * a - comp.norm(be);
        r[2] = a * b - comp.norm(ga);
        Vec<F> sa = comp.mul(gab, beb); // alpha-slot: conj(gamma) conj(beta) - a alpha
        Vec<F> sb = comp.mul(alb, gab); // beta-slot:  conj(alpha) conj(gamma) - b beta
        Vec<F> sc = comp.mul(beb, alb); // gamma-slot: conj(beta) conj(alpha) - c gamma
        for (std::size_t t = 0; t < cdim; ++t) {
            r[3 + t] = sa[t] - a * al[t];
            r[3 + cdim + t] = sb[t] - b * be[t];
            r[3 + 2 * cdim + t] = sc[t] - c * ga[t];
        }
        return r;
    }

    Vec<F> cross(const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> s(this->dim);
        for (std::size_t i = 0; i < this->dim; ++i) s[i] = x[i] + y[i];
        Vec<F> r = sharp(s);
        Vec<F> xs = sharp(x), ys = sharp(y);
        for (std::size_t i = 0; i < this->dim; ++i) r[i] -= xs[i] + ys[i];
        return r;
    }

    F pairing(const Vec<F>& x, const Vec<F>& y) const {
        F s(0);
        for (std::size_t i = 0; i < this->dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < this->dim; ++j)
                if (!trace_gram(i, j).is_zero() && !y[j].is_zero())
                    s += x[i] * trace_gram(i, j) * y[j];
        }
        return s;
    }

    F norm(const Vec<F>& j) const { return pairing(sharp(j), j) / F(3); }

    Matrix<F> Lmat(const Vec<F>& j) const { return this->left_mul(j); }
};

namespace detail {

// 3x3 matrices with composition-algebra entries (scratch type for building
// the Jordan product).
template <typename F>
using CMat3 = std::array<std::array<Vec<F>, 3>, 3>;

template <typename F>
CMat3<F> to_cmat(const JordanAlgebra<F>& J, const Vec<F>& j) {
    const auto& C = J.comp;
    auto scal = [&C](const F& t) {
        Vec<F> v = C.unit;
        for (F& x : v) x = x * t;
        return v;
    };
    CMat3<F> m;
    Vec<F> al = J.slot(j, 0), be = J.slot(j, 1), ga = J.slot(j, 2);
    m[0][0] = scal(j[0]);
    m[1][1] = scal(j[1]);
    m[2][2] = scal(j[2]);
    m[1][2] = al;
    m[2][1] = C.conj(al);
    m[2][0] = be;
    m[0][2] = C.conj(be);
    m[0][1] = ga;
    m[1][0] = C.conj(ga);
    return m;
}

template <typename F>
Vec<F> from_cmat(const JordanAlgebra<F>& J, const CMat3<F>& m) {
    const auto& C = J.comp;
    Vec<F> j(J.dim, F(0));
    j[0] = C.extract_scalar(m[0][0]);
    j[1] = C.extract_scalar(m[1][1]);
    j[2] = C.extract_scalar(m[2][2]);
    for (std::size_t t = 0; t < J.cdim; ++t) {
        j[3 + t] = m[1][2][t];
        j[3 + J.cdim + t] = m[2][0][t];
        j[3 + 2 * J.cdim + t] = m[0][1][t];
    }
    return j;
}

template <typename F>
CMat3<F> cmat_mul(const CompositionAlgebra<F>& C, const CMat3<F>& x, const CMat3<F>& y) {
    CMat3<F> r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Vec<F> s(C.dim, F(0));
            for (std::size_t k = 0; k < 3; ++k) {
                Vec<F> p = C.mul(x[i][k], y[k][j]);
                for (std::size_t t = 0; t < C.dim; ++t) s[t] += p[t];
            }
            r[i][j] = s;
        }
    return r;
}

} // namespace detail

template <typename F>
JordanAlgebra<F> build_jordan(const CompositionAlgebra<F>& C) {
    JordanAlgebra<F> J;
    J.comp = C;
    J.cdim = C.dim;
    J.dim = 3 + 3 * C.dim;
    J.name = "J_" + C.name;
    J.labels = {"d1", "d2", "d3"};
    for (const char* blk : {"al", "be", "ga"})
        for (std::size_t t = 0; t < C.dim; ++t)
            J.labels.push_back(std::string(blk) + "_" + C.labels[t]);
    J.unit = JordanAlgebra<F>::diag_elt(F(1), F(1), F(1), J.dim);
    J.involution = Matrix<F>(); // commutative; no involution stored

    // Build the o-table through the Hermitian matrix model.
    J.table.assign(J.dim * J.dim * J.dim, F(0));
    const F half = F(1) / F(2);
    for (std::size_t i = 0; i < J.dim; ++i) {
        auto mi = detail::to_cmat(J, J.basis_vec(i));
        for (std::size_t j = 0; j <= i; ++j) {
            auto mj = detail::to_cmat(J, J.basis_vec(j));
            auto xy = detail::cmat_mul(C, mi, mj);
            auto yx = detail::cmat_mul(C, mj, mi);
            detail::CMat3<F> sym;
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t s = 0; s < 3; ++s) {
                    sym[r][s].assign(C.dim, F(0));
                    for (std::size_t t = 0; t < C.dim; ++t)
                        sym[r][s][t] = (xy[r][s][t] + yx[r][s][t]) * half;
                }
            Vec<F> prod = detail::from_cmat(J, sym);
            for (std::size_t k = 0; k < J.dim; ++k) {
                J.structure(i, j, k) = prod[k];
                J.structure(j, i, k) = prod[k];
            }
        }
    }

    // Trace pairing T(x,y) = Tr(x o y) on basis pairs.
    J.trace_gram = Matrix<F>(J.dim, J.dim);
    for (std::size_t i = 0; i < J.dim; ++i)
        for (std::size_t j = 0; j < J.dim; ++j) {
            F t(0);
            for (std::size_t d = 0; d < 3; ++d) t += J.structure(i, j, d);
            J.trace_gram(i, j) = t;
        }
    return J;
}

// Entrywise embedding J_H -> J_E induced by a composition-algebra embedding
// (matrix `emb`: coords of H mapped into E).
template <typename F>
Matrix<F> jordan_embedding(const JordanAlgebra<F>& small, const JordanAlgebra<F>& big,
                           const Matrix<F>& emb) {
    if (emb.rows() != big.cdim || emb.cols() != small.cdim)
        throw std::invalid_argument("jordan_embedding: embedding shape mismatch");
    Matrix<F> m(big.dim, small.dim);
    for (std::size_t d = 0; d < 3; ++d) m(d, d) = F(1);
    for (std::size_t blk = 0; blk < 3; ++blk)
        for (std::size_t t = 0; t < small.cdim; ++t)
            for (std::size_t s = 0; s < big.cdim; ++s)
                m(3 + blk * big.cdim + s, 3 + blk * small.cdim + t) = emb(s, t);
    return m;
}

} // namespace excalg

#endif // EXCALG_JORDAN_HPP
