#ifndef EXCALG_COMPOSITION_HPP
#define EXCALG_COMPOSITION_HPP

#include <excalg/algebra.hpp>
#include <excalg/echelon.hpp>
#include <excalg/rng.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace excalg {

/*
 * The split composition algebras over the base field:
 *
 *   k            (dim 1)
 *   K = k (+) k  (dim 2, split quadratic)
 *   B = Mat2(k)  (dim 4, split quaternions)
 *   C            (dim 8, split octonions as Zorn vector matrices)
 *
 * C is coordinatized as (a, v; w, b) with a, b scalars and v, w in k^3,
 * basis order e0 = (1,0;0,0), e1..e3 = v-slots, e4..e6 = w-slots,
 * e7 = (0,0;0,1), product
 *
 *   (a1,v1;w1,b1)(a2,v2;w2,b2)
 *     = (a1 a2 + v1.w2,  a1 v2 + b2 v1 - w1 x w2;
 *        a2 w1 + b1 w2 + v1 x v2,  b1 b2 + w1.v2)
 *
 * and norm N(a,v;w,b) = ab - v.w.
 */
template <typename F>
struct CompositionAlgebra : UnitalAlgebra<F> {
    Matrix<F> norm_gram; // Gram matrix of the bilinear form N(x,y)

    // N(x) read off from x * conj(x) = N(x) * 1.
    F norm(const Vec<F>& x) const {
        Vec<F> z = this->mul(x, this->conj(x));
        return extract_scalar(z);
    }
    // Bilinear N(x,y) = N(x+y) - N(x) - N(y), evaluated through the Gram matrix.
    F norm_pair(const Vec<F>& x, const Vec<F>& y) const {
        F s(0);
        for (std::size_t i = 0; i < this->dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < this->dim; ++j)
                if (!norm_gram(i, j).is_zero() && !y[j].is_zero())
                    s += x[i] * norm_gram(i, j) * y[j];
        }
        return s;
    }
    F trace(const Vec<F>& x) const { return norm_pair(x, this->unit); }

    // Coefficient t with z = t * unit; throws if z is not a scalar multiple
    // of the unit.
    F extract_scalar(const Vec<F>& z) const {
        std::size_t u0 = 0;
        while (u0 < this->dim && this->unit[u0].is_zero()) ++u0;
        const F t = z[u0] / this->unit[u0];
        for (std::size_t i = 0; i < this->dim; ++i)
            if (z[i] != t * this->unit[i])
                throw std::logic_error(this->name + ": element is not central scalar");
        return t;
    }

    Vec<F> commutator(const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> r = this->mul(x, y);
        Vec<F> s = this->mul(y, x);
        for (std::size_t i = 0; i < this->dim; ++i) r[i] -= s[i];
        return r;
    }
    Vec<F> associator(const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) const {
        Vec<F> r = this->mul(this->mul(x, y), z);
        Vec<F> s = this->mul(x, this->mul(y, z));
        for (std::size_t i = 0; i < this->dim; ++i) r[i] -= s[i];
        return r;
    }
    F triple_trace(const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) const {
        return trace(this->mul(x, this->mul(y, z)));
    }
};

namespace detail {

template <typename F>
void finish_composition(CompositionAlgebra<F>& a) {
    // Gram of the bilinearized norm: N(x+y) - N(x) - N(y) on basis pairs,
    // where N itself is defined through x * conj(x).
    auto quad = [&a](const Vec<F>& x) {
        Vec<F> z = a.mul(x, a.conj(x));
        return a.extract_scalar(z);
    };
    a.norm_gram = Matrix<F>(a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec<F> s = a.basis_vec(i);
            s[j] += F(1);
            a.norm_gram(i, j) = quad(s) - quad(a.basis_vec(i)) - quad(a.basis_vec(j));
        }
}

} // namespace detail

template <typename F>
CompositionAlgebra<F> build_base_field() {
    CompositionAlgebra<F> a;
    a.name = "k";
    a.dim = 1;
    a.labels = {"1"};
    a.table.assign(1, F(1));
    a.unit = {F(1)};
    a.involution = Matrix<F>::identity(1);
    detail::finish_composition(a);
    return a;
}

template <typename F>
CompositionAlgebra<F> build_split_quadratic() {
    CompositionAlgebra<F> a;
    a.name = "K";
    a.dim = 2;
    a.labels = {"f0", "f1"};
    a.table.assign(8, F(0));
    a.structure(0, 0, 0) = F(1);
    a.structure(1, 1, 1) = F(1);
    a.unit = {F(1), F(1)};
    a.involution = Matrix<F>(2, 2);
    a.involution(0, 1) = F(1);
    a.involution(1, 0) = F(1);
    detail::finish_composition(a);
    return a;
}

template <typename F>
CompositionAlgebra<F> build_split_quaternion() {
    CompositionAlgebra<F> a;
    a.name = "B";
    a.dim = 4;
    a.labels = {"m11", "m12", "m21", "m22"};
    a.table.assign(64, F(0));
    // Basis E11, E12, E21, E22 with matrix units: Eij * Ekl = delta_jk Eil.
    auto idx = [](std::size_t i, std::size_t j) { return i * 2 + j; };
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t l = 0; l < 2; ++l)
                a.structure(idx(i, j), idx(j, l), idx(i, l)) = F(1);
    a.unit = {F(1), F(0), F(0), F(1)};
    // Standard involution = adjugate: [[a,b],[c,d]] -> [[d,-b],[-c,a]].
    a.involution = Matrix<F>(4, 4);
    a.involution(0, 3) = F(1);
    a.involution(3, 0) = F(1);
    a.involution(1, 1) = F(-1);
    a.involution(2, 2) = F(-1);
    detail::finish_composition(a);
    return a;
}

template <typename F>
CompositionAlgebra<F> build_split_octonion() {
    CompositionAlgebra<F> a;
    a.name = "C";
    a.dim = 8;
    a.labels = {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
    a.table.assign(512, F(0));

    auto mul_zorn = [](const std::array<F, 8>& x, const std::array<F, 8>& y) {
        auto dot = [](const F* u, const F* v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; };
        std::array<F, 8> r{};
        const F *v1 = &x[1], *w1 = &x[4], *v2 = &y[1], *w2 = &y[4];
        const F a1 = x[0], b1 = x[7], a2 = y[0], b2 = y[7];
        std::array<F, 3> cw{w1[1] * w2[2] - w1[2] * w2[1], w1[2] * w2[0] - w1[0] * w2[2],
                            w1[0] * w2[1] - w1[1] * w2[0]};
        std::array<F, 3> cv{v1[1] * v2[2] - v1[2] * v2[1], v1[2] * v2[0] - v1[0] * v2[2],
                            v1[0] * v2[1] - v1[1] * v2[0]};
        r[0] = a1 * a2 + dot(v1, w2);
        for (std::size_t t = 0; t < 3; ++t) {
            r[1 + t] = a1 * v2[t] + b2 * v1[t] - cw[t];
            r[4 + t] = a2 * w1[t] + b1 * w2[t] + cv[t];
        }
        r[7] = b1 * b2 + dot(w1, v2);
        return r;
    };
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            std::array<F, 8> x{}, y{};
            x[i] = F(1);
            y[j] = F(1);
            auto r = mul_zorn(x, y);
            for (std::size_t k = 0; k < 8; ++k) a.structure(i, j, k) = r[k];
        }
    a.unit = Vec<F>(8, F(0));
    a.unit[0] = F(1);
    a.unit[7] = F(1);
    // conj(a, v; w, b) = (b, -v; -w, a).
    a.involution = Matrix<F>(8, 8);
    a.involution(0, 7) = F(1);
    a.involution(7, 0) = F(1);
    for (std::size_t t = 1; t <= 6; ++t) a.involution(t, t) = F(-1);
    detail::finish_composition(a);
    return a;
}

/*
 * The fixed chain k c K c B c C with explicit embedding matrices:
 *   k -> K   diagonal,
 *   K -> B   diagonal matrices,
 *   B -> C   (a, (b,0,0); (c,0,0), d).
 */
template <typename F>
struct CompositionChain {
    CompositionAlgebra<F> k, K, B, C;
    Matrix<F> emb_kK, emb_KB, emb_BC; // column-convention: target_coords = E * source_coords
    Matrix<F> emb_kB, emb_kC, emb_KC;

    const CompositionAlgebra<F>& by_dim(std::size_t d) const {
        switch (d) {
            case 1: return k;
            case 2: return K;
            case 4: return B;
            case 8: return C;
        }
        throw std::invalid_argument("chain: no algebra of that dimension");
    }
};

template <typename F>
CompositionChain<F> build_chain() {
    CompositionChain<F> ch;
    ch.k = build_base_field<F>();
    ch.K = build_split_quadratic<F>();
    ch.B = build_split_quaternion<F>();
    ch.C = build_split_octonion<F>();

    ch.emb_kK = Matrix<F>(2, 1);
    ch.emb_kK(0, 0) = F(1);
    ch.emb_kK(1, 0) = F(1);

    ch.emb_KB = Matrix<F>(4, 2);
    ch.emb_KB(0, 0) = F(1); // f0 -> E11
    ch.emb_KB(3, 1) = F(1); // f1 -> E22

    ch.emb_BC = Matrix<F>(8, 4);
    ch.emb_BC(0, 0) = F(1); // E11 -> e0
    ch.emb_BC(1, 1) = F(1); // E12 -> first v-slot
    ch.emb_BC(4, 2) = F(1); // E21 -> first w-slot
    ch.emb_BC(7, 3) = F(1); // E22 -> e7

    ch.emb_kB = ch.emb_KB * ch.emb_kK;
    ch.emb_KC = ch.emb_BC * ch.emb_KB;
    ch.emb_kC = ch.emb_BC * ch.emb_kB;
    return ch;
}

/*
 * Audit of subspaces of trace-zero octonions:
 *  - is the span a nil-space (all pairwise products vanish)?
 *  - for a 2-dim isotropic non-nil span {alpha, beta}: gamma = alpha*beta
 *    squares to zero and beta*alpha = -alpha*beta;
 *  - for a 3-dim isotropic span: all associators of span triples lie on the
 *    line through [alpha, beta, gamma].
 */
template <typename F>
struct NilspaceReport {
    bool is_nil = false;
    std::optional<Vec<F>> gamma;
    bool gamma_square_zero = false;
    bool anticommute = false;
    std::optional<Vec<F>> associator_line;
    bool line_ok = false;
};

template <typename F>
NilspaceReport<F> nilspace_audit(const CompositionAlgebra<F>& C, const std::vector<Vec<F>>& vecs) {
    for (const auto& v : vecs)
        if (!C.trace(v).is_zero())
            throw std::invalid_argument("nilspace_audit: input not trace-zero");
    NilspaceReport<F> rep;
    rep.is_nil = true;
    for (const auto& x : vecs)
        for (const auto& y : vecs) {
            Vec<F> p = C.mul(x, y);
            bool zero = true;
            for (const F& c : p)
                if (!c.is_zero()) zero = false;
            if (!zero) rep.is_nil = false;
        }
    auto is_zero_vec = [](const Vec<F>& v) {
        for (const F& c : v)
            if (!c.is_zero()) return false;
        return true;
    };
    if (vecs.size() == 2 && !rep.is_nil) {
        const Vec<F>& al = vecs[0];
        const Vec<F>& be = vecs[1];
        Vec<F> g = C.mul(al, be);
        rep.gamma = g;
        rep.gamma_square_zero = is_zero_vec(C.mul(g, g));
        Vec<F> s = C.mul(be, al);
        bool anti = true;
        for (std::size_t i = 0; i < C.dim; ++i)
            if (s[i] != -g[i]) anti = false;
        rep.anticommute = anti;
    }
    if (vecs.size() == 3) {
        Vec<F> line = C.associator(vecs[0], vecs[1], vecs[2]);
        rep.associator_line = line;
        // Every associator of span triples must be proportional to `line`;
        // by trilinearity it suffices to range over basis triples.
        bool ok = true;
        for (const auto& x : vecs)
            for (const auto& y : vecs)
                for (const auto& z : vecs) {
                    Vec<F> a = C.associator(x, y, z);
                    std::vector<Vec<F>> pair = {line, a};
                    if (span_rank(pair).first > 1) ok = false;
                }
        rep.line_ok = ok;
    }
    return rep;
}

// Random trace-zero isotropic octonion, built by solving the linear
// condition v.w = -a^2 for the last w-coordinate (exact sampling, no
// group action needed).
template <typename F>
Vec<F> random_isotropic(const CompositionAlgebra<F>& C, Rng& rng) {
    for (;;) {
        F a = rng.scalar<F>();
        Vec<F> x(8, F(0));
        x[0] = a;
        x[7] = -a;
        F v1 = rng.nonzero_scalar<F>();
        x[1] = v1;
        x[2] = rng.scalar<F>();
        x[3] = rng.scalar<F>();
        x[5] = rng.scalar<F>();
        x[6] = rng.scalar<F>();
        // Solve v.w = -a^2  =>  v1*w1 = -a^2 - v2*w2 - v3*w3.
        x[4] = (-(a * a) - x[2] * x[5] - x[3] * x[6]) / v1;
        if (!C.norm(x).is_zero()) continue; // defensive; should not trigger
        return x;
    }
}

} // namespace excalg

#endif // EXCALG_COMPOSITION_HPP
