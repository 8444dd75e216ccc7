#ifndef EXCALG_STRUCTURABLE_HPP
#define EXCALG_STRUCTURABLE_HPP

#include <excalg/composition.hpp>
#include <excalg/jordan.hpp>
#include <excalg/rng.hpp>
#include <excalg/subspace.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace excalg {

/*
 * Algebras with involution and the structurable operator calculus:
 * the triple product {x,y,z} = (x conj(y)) z + (z conj(y)) x - (z conj(x)) y,
 * the operators V_{x,y}, T_x, D_{x,y}, L_r L_s, the quartic defining
 * identity, and the two constructions used downstream:
 *
 *   - tensor products H (x) H' of composition algebras,
 *   - the Freudenthal algebra F_C built from a cubic Jordan algebra
 *     (2x2 "matrices" (a, j; j', d) with scalar corners).
 */
template <typename F>
struct StructurableAlgebra : UnitalAlgebra<F> {
    std::string kind; // "tensor" or "freudenthal"
    std::vector<Vec<F>> skew, herm;

    void finish() {
        skew = this->skew_basis();
        herm = this->herm_basis();
        if (skew.size() + herm.size() != this->dim)
            throw std::logic_error(this->name + ": involution eigenspaces do not fill the algebra");
    }
};

// <x,y> = x conj(y) - y conj(x); lands in the skew part.
template <typename F>
Vec<F> skew_pair(const StructurableAlgebra<F>& A, const Vec<F>& x, const Vec<F>& y) {
    Vec<F> r = A.mul(x, A.conj(y));
    Vec<F> s = A.mul(y, A.conj(x));
    for (std::size_t i = 0; i < A.dim; ++i) r[i] -= s[i];
    return r;
}

template <typename F>
Vec<F> alg_comm(const UnitalAlgebra<F>& A, const Vec<F>& x, const Vec<F>& y) {
    Vec<F> r = A.mul(x, y);
    Vec<F> s = A.mul(y, x);
    for (std::size_t i = 0; i < A.dim; ++i) r[i] -= s[i];
    return r;
}

template <typename F>
Vec<F> alg_assoc(const UnitalAlgebra<F>& A, const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
    Vec<F> r = A.mul(A.mul(x, y), z);
    Vec<F> s = A.mul(x, A.mul(y, z));
    for (std::size_t i = 0; i < A.dim; ++i) r[i] -= s[i];
    return r;
}

template <typename F>
Vec<F> triple(const StructurableAlgebra<F>& A, const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
    Vec<F> yb = A.conj(y), xb = A.conj(x);
    Vec<F> r = A.mul(A.mul(x, yb), z);
    Vec<F> s = A.mul(A.mul(z, yb), x);
    Vec<F> t = A.mul(A.mul(z, xb), y);
    for (std::size_t i = 0; i < A.dim; ++i) r[i] += s[i] - t[i];
    return r;
}

// V_{x,y} : z -> {x,y,z}, as a matrix.
template <typename F>
Matrix<F> op_V(const StructurableAlgebra<F>& A, const Vec<F>& x, const Vec<F>& y) {
    Vec<F> yb = A.conj(y), xb = A.conj(x);
    return A.left_mul(A.mul(x, yb)) + A.right_mul(x) * A.right_mul(yb)
           - A.right_mul(y) * A.right_mul(xb);
}

// T_x = V_{x,1} (= L_x + R_{x - conj(x)}).
template <typename F>
Matrix<F> op_T(const StructurableAlgebra<F>& A, const Vec<F>& x) {
    return op_V(A, x, A.unit);
}

// D_{x,y}(z) = 1/3 [[x,y] + [conj x, conj y], z] + [z,y,x] - [z, conj x, conj y]
// (a derivation commuting with the involution).
template <typename F>
Matrix<F> op_D(const StructurableAlgebra<F>& A, const Vec<F>& x, const Vec<F>& y) {
    Vec<F> xb = A.conj(x), yb = A.conj(y);
    Vec<F> c = alg_comm(A, x, y);
    Vec<F> cb = alg_comm(A, xb, yb);
    for (std::size_t i = 0; i < A.dim; ++i) c[i] += cb[i];
    const F third = F(1) / F(3);
    // As operators on z: [c,z] = (L_c - R_c) z; [z,y,x] = (R_x R_y - R_{yx}) z.
    Matrix<F> comm = (A.left_mul(c) - A.right_mul(c)) * third;
    Matrix<F> a1 = A.right_mul(x) * A.right_mul(y) - A.right_mul(A.mul(y, x));
    Matrix<F> a2 = A.right_mul(yb) * A.right_mul(xb) - A.right_mul(A.mul(xb, yb));
    return comm + a1 - a2;
}

// L_r L_s for skew r, s.
template <typename F>
Matrix<F> op_LL(const StructurableAlgebra<F>& A, const Vec<F>& r, const Vec<F>& s) {
    auto check_skew = [&A](const Vec<F>& v) {
        Vec<F> c = A.conj(v);
        for (std::size_t i = 0; i < A.dim; ++i)
            if (c[i] != -v[i]) throw std::invalid_argument(A.name + ": operand not skew");
    };
    check_skew(r);
    check_skew(s);
    return A.left_mul(r) * A.left_mul(s);
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

template <typename F>
StructurableAlgebra<F> build_tensor(const CompositionAlgebra<F>& H,
                                    const CompositionAlgebra<F>& Hp) {
    StructurableAlgebra<F> A;
    A.kind = "tensor";
    A.name = H.name + "x" + Hp.name;
    A.dim = H.dim * Hp.dim;
    for (std::size_t i = 0; i < H.dim; ++i)
        for (std::size_t ip = 0; ip < Hp.dim; ++ip)
            A.labels.push_back(H.labels[i] + "." + Hp.labels[ip]);
    A.table.assign(A.dim * A.dim * A.dim, F(0));
    for (std::size_t i = 0; i < H.dim; ++i)
        for (std::size_t j = 0; j < H.dim; ++j)
            for (std::size_t k = 0; k < H.dim; ++k) {
                const F& c1 = H.structure(i, j, k);
                if (c1.is_zero()) continue;
                for (std::size_t ip = 0; ip < Hp.dim; ++ip)
                    for (std::size_t jp = 0; jp < Hp.dim; ++jp)
                        for (std::size_t kp = 0; kp < Hp.dim; ++kp) {
                            const F& c2 = Hp.structure(ip, jp, kp);
                            if (!c2.is_zero())
                                A.structure(i * Hp.dim + ip, j * Hp.dim + jp,
                                            k * Hp.dim + kp) = c1 * c2;
                        }
            }
    A.unit.assign(A.dim, F(0));
    for (std::size_t i = 0; i < H.dim; ++i)
        for (std::size_t ip = 0; ip < Hp.dim; ++ip)
            A.unit[i * Hp.dim + ip] = H.unit[i] * Hp.unit[ip];
    A.involution = Matrix<F>(A.dim, A.dim);
    for (std::size_t i = 0; i < H.dim; ++i)
        for (std::size_t s = 0; s < H.dim; ++s) {
            const F& c1 = H.involution(s, i);
            if (c1.is_zero()) continue;
            for (std::size_t ip = 0; ip < Hp.dim; ++ip)
                for (std::size_t sp = 0; sp < Hp.dim; ++sp) {
                    const F& c2 = Hp.involution(sp, ip);
                    if (!c2.is_zero())
                        A.involution(s * Hp.dim + sp, i * Hp.dim + ip) = c1 * c2;
                }
        }
    A.finish();
    return A;
}

/*
 * Freudenthal algebra on coordinates (a, j, j', d), a/d scalars, j/j' in J.
 *
 * Product:
 *   (a1,j1,j1',d1)(a2,j2,j2',d2) =
 *     ( a1 a2 + T(j1, j2'),
 *       a1 j2 + d2 j1 + j1' x j2',
 *       a2 j1' + d1 j2' + j1 x j2,
 *       T(j2, j1') + d1 d2 )
 *
 * `literal_variant` replaces the third component by a2 j1' + a2 j2' + j1 x j2;
 * that variant fails the quartic identity and is kept only as a negative
 * control for the checker.
 *
 * Involution: (a, j, j', d) -> (d, j, j', a); the skew part is spanned by
 * (1, 0, 0, -1).
 */
template <typename F>
StructurableAlgebra<F> build_freudenthal(const JordanAlgebra<F>& J, bool literal_variant = false) {
    StructurableAlgebra<F> A;
    A.kind = "freudenthal";
    A.name = "F_" + J.comp.name + (literal_variant ? "(literal)" : "");
    const std::size_t dj = J.dim;
    A.dim = 2 + 2 * dj;
    A.labels.push_back("a");
    for (std::size_t t = 0; t < dj; ++t) A.labels.push_back("j_" + J.labels[t]);
    for (std::size_t t = 0; t < dj; ++t) A.labels.push_back("jp_" + J.labels[t]);
    A.labels.push_back("d");

    auto get_j = [dj](const Vec<F>& x) { return Vec<F>(x.begin() + 1, x.begin() + 1 + dj); };
    auto get_jp = [dj](const Vec<F>& x) {
        return Vec<F>(x.begin() + 1 + dj, x.begin() + 1 + 2 * dj);
    };
    auto fprod = [&](const Vec<F>& x, const Vec<F>& y) {
        const F a1 = x[0], d1 = x[1 + 2 * dj], a2 = y[0], d2 = y[1 + 2 * dj];
        Vec<F> j1 = get_j(x), j1p = get_jp(x), j2 = get_j(y), j2p = get_jp(y);
        Vec<F> r(A.dim, F(0));
        r[0] = a1 * a2 + J.pairing(j1, j2p);
        Vec<F> cj = J.cross(j1p, j2p);
        for (std::size_t t = 0; t < dj; ++t) r[1 + t] = a1 * j2[t] + d2 * j1[t] + cj[t];
        Vec<F> cjp = J.cross(j1, j2);
        for (std::size_t t = 0; t < dj; ++t) {
            const F second = literal_variant ? a2 * j2p[t] : d1 * j2p[t];
            r[1 + dj + t] = a2 * j1p[t] + second + cjp[t];
        }
        r[1 + 2 * dj] = J.pairing(j2, j1p) + d1 * d2;
        return r;
    };

    A.table.assign(A.dim * A.dim * A.dim, F(0));
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            Vec<F> r = fprod(A.basis_vec(i), A.basis_vec(j));
            for (std::size_t k = 0; k < A.dim; ++k) A.structure(i, j, k) = r[k];
        }
    A.unit.assign(A.dim, F(0));
    A.unit[0] = F(1);
    A.unit[1 + 2 * dj] = F(1);
    A.involution = Matrix<F>::identity(A.dim);
    A.involution(0, 0) = F(0);
    A.involution(1 + 2 * dj, 1 + 2 * dj) = F(0);
    A.involution(0, 1 + 2 * dj) = F(1);
    A.involution(1 + 2 * dj, 0) = F(1);
    A.finish();
    return A;
}

// ---------------------------------------------------------------------------
// Quartic identity checker: [T_z, V_{x,y}] = V_{T_z x, y} - V_{x, T_{conj z} y}
// ---------------------------------------------------------------------------

template <typename F>
struct StructurableReport {
    bool pass = true;
    std::size_t samples = 0;
    std::vector<Vec<F>> counterexample; // {x, y, z} on failure
};

template <typename F>
StructurableReport<F> check_structurable(const StructurableAlgebra<F>& A, std::size_t samples,
                                         Rng& rng) {
    StructurableReport<F> rep;
    rep.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        Vec<F> x = rng.vector<F>(A.dim, 2);
        Vec<F> y = rng.vector<F>(A.dim, 2);
        Vec<F> z = rng.vector<F>(A.dim, 2);
        Matrix<F> Tz = op_T(A, z);
        Matrix<F> Vxy = op_V(A, x, y);
        Matrix<F> lhs = Tz * Vxy - Vxy * Tz;
        Matrix<F> rhs = op_V(A, Tz.apply(x), y)
                        - op_V(A, x, op_T(A, A.conj(z)).apply(y));
        if (lhs != rhs) {
            rep.pass = false;
            rep.counterexample = {x, y, z};
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Inner structure span: greedy basis of { V_{e_i, e_j} } with exact
// coordinate solves, plus the epsilon / delta operators on it.
// ---------------------------------------------------------------------------

template <typename F>
Vec<F> mat_flat(const Matrix<F>& m) {
    return m.flat();
}

template <typename F>
Matrix<F> mat_unflat(const Vec<F>& v, std::size_t n) {
    Matrix<F> m(n, n);
    m.flat() = v;
    return m;
}

template <typename F>
class InstrlSpan {
public:
    explicit InstrlSpan(const StructurableAlgebra<F>& A)
        : A_(&A), span_(A.dim * A.dim), skew_(A.dim) {
        for (const auto& s : A.skew) skew_.insert(s);
        for (std::size_t i = 0; i < A.dim; ++i)
            for (std::size_t j = 0; j < A.dim; ++j) {
                Matrix<F> v = op_V(A, A.basis_vec(i), A.basis_vec(j));
                if (span_.insert(mat_flat(v))) generators_.emplace_back(i, j);
            }
        // Closure under commutator is re-verified by the Lie-algebra builder;
        // a quick spot check here keeps construction failures local.
    }

    const StructurableAlgebra<F>& algebra() const { return *A_; }
    std::size_t dim() const { return span_.dim(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& generators() const {
        return generators_;
    }

    Matrix<F> basis_op(std::size_t t) const {
        return mat_unflat(span_.basis()[t], A_->dim);
    }

    std::optional<Vec<F>> coords(const Matrix<F>& m) const { return span_.coords(mat_flat(m)); }
    Vec<F> coords_or_throw(const Matrix<F>& m, const char* what) const {
        return span_.coords_or_throw(mat_flat(m), what);
    }
    bool contains(const Matrix<F>& m) const { return span_.contains(mat_flat(m)); }

    // X^eps = X - T_{X(1) + conj(X(1))}; an automorphism of the operator
    // Lie algebra, and an involution.
    Matrix<F> eps(const Matrix<F>& X) const {
        Vec<F> x1 = X.apply(A_->unit);
        Vec<F> s = A_->conj(x1);
        for (std::size_t i = 0; i < A_->dim; ++i) s[i] += x1[i];
        return X - op_T(*A_, s);
    }

    // X^delta = X + R_{conj(X(1))}, restricted to the skew part (in the
    // coordinates of the skew basis).
    Matrix<F> delta_on_skew(const Matrix<F>& X) const {
        Vec<F> x1 = X.apply(A_->unit);
        Matrix<F> full = X + A_->right_mul(A_->conj(x1));
        const std::size_t s = skew_.dim();
        Matrix<F> m(s, s);
        for (std::size_t t = 0; t < s; ++t) {
            Vec<F> img = full.apply(A_->skew[t]);
            Vec<F> c = skew_.coords_or_throw(img, "delta image leaves the skew part");
            for (std::size_t u = 0; u < s; ++u) m(u, t) = c[u];
        }
        return m;
    }

    const Subspace<F>& skew_space() const { return skew_; }

private:
    const StructurableAlgebra<F>* A_;
    Subspace<F> span_;
    Subspace<F> skew_;
    std::vector<std::pair<std::size_t, std::size_t>> generators_;
};

} // namespace excalg

#endif // EXCALG_STRUCTURABLE_HPP
