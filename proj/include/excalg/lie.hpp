#ifndef EXCALG_LIE_HPP
#define EXCALG_LIE_HPP

#include <excalg/jordan.hpp>
#include <excalg/rng.hpp>
#include <excalg/scalar.hpp>
#include <excalg/structurable.hpp>
#include <excalg/subspace.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace excalg {

/*
 * Graded Lie algebras with sparse structure constants, plus the two
 * constructions that produce the exceptional series:
 *
 *   - the 3-graded construction from a cubic Jordan algebra
 *     (degree +-1 copies of J, degree 0 spanned by L_j and [L_j, L_j']),
 *   - the 5-graded construction from a structurable algebra
 *     (degree +-2 the skew part, +-1 the algebra, 0 the V-operator span),
 *
 * together with Jacobi checking, the Killing form, centralizers,
 * derivation algebras, and induced graded embeddings.
 */
template <typename F>
struct GradedLie {
    std::string name;
    std::size_t dim = 0;
    std::vector<int> degree;
    std::vector<std::string> labels;
    // table[i * dim + j] = sparse expansion of [e_i, e_j]
    std::vector<std::vector<std::pair<std::uint32_t, F>>> table;

    const std::vector<std::pair<std::uint32_t, F>>& entry(std::size_t i, std::size_t j) const {
        return table[i * dim + j];
    }

    void set_bracket(std::size_t i, std::size_t j, const Vec<F>& v) {
        auto& out = table[i * dim + j];
        auto& rev = table[j * dim + i];
        out.clear();
        rev.clear();
        for (std::size_t k = 0; k < dim; ++k)
            if (!v[k].is_zero()) {
                out.emplace_back(static_cast<std::uint32_t>(k), v[k]);
                rev.emplace_back(static_cast<std::uint32_t>(k), -v[k]);
            }
    }

    Vec<F> bracket_basis(std::size_t i, std::size_t j) const {
        Vec<F> v(dim, F(0));
        for (const auto& [k, c] : entry(i, j)) v[k] = c;
        return v;
    }

    Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> r(dim, F(0));
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                const F xy = x[i] * y[j];
                for (const auto& [k, c] : entry(i, j)) r[k] += xy * c;
            }
        }
        return r;
    }

    Matrix<F> ad(const Vec<F>& x) const {
        Matrix<F> m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j)
                for (const auto& [k, c] : entry(i, j)) m(k, j) += x[i] * c;
        }
        return m;
    }

    bool grading_respected() const {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (const auto& [k, c] : entry(i, j)) {
                    (void)c;
                    if (degree[k] != degree[i] + degree[j]) return false;
                }
        return true;
    }

    std::size_t degree_dim(int d) const {
        std::size_t n = 0;
        for (int g : degree)
            if (g == d) ++n;
        return n;
    }
};

// ---------------------------------------------------------------------------
// Jacobi
// ---------------------------------------------------------------------------

struct JacobiReport {
    bool pass = true;
    std::size_t triples = 0;
    std::size_t witness[3] = {0, 0, 0};
};

template <typename F>
bool jacobi_triple(const GradedLie<F>& L, std::size_t i, std::size_t j, std::size_t k) {
    // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
    Vec<F> acc(L.dim, F(0));
    auto add = [&](std::size_t a, std::size_t b, std::size_t c) {
        for (const auto& [m, q] : L.entry(a, b))
            for (const auto& [t, r] : L.entry(m, c)) acc[t] += q * r;
    };
    add(i, j, k);
    add(j, k, i);
    add(k, i, j);
    for (const F& x : acc)
        if (!x.is_zero()) return false;
    return true;
}

template <typename F>
JacobiReport jacobi_check_exhaustive(const GradedLie<F>& L) {
    JacobiReport rep;
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = i + 1; j < L.dim; ++j)
            for (std::size_t k = j + 1; k < L.dim; ++k) {
                ++rep.triples;
                if (!jacobi_triple(L, i, j, k)) {
                    rep.pass = false;
                    rep.witness[0] = i;
                    rep.witness[1] = j;
                    rep.witness[2] = k;
                    return rep;
                }
            }
    return rep;
}

template <typename F>
JacobiReport jacobi_check_sampled(const GradedLie<F>& L, std::size_t n, Rng& rng) {
    JacobiReport rep;
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t i = rng.below(L.dim), j = rng.below(L.dim), k = rng.below(L.dim);
        ++rep.triples;
        if (!jacobi_triple(L, i, j, k)) {
            rep.pass = false;
            rep.witness[0] = i;
            rep.witness[1] = j;
            rep.witness[2] = k;
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Killing form
// ---------------------------------------------------------------------------

template <typename F>
Matrix<F> killing_gram(const GradedLie<F>& L) {
    Matrix<F> K(L.dim, L.dim);
    for (std::size_t a = 0; a < L.dim; ++a) {
        // Dense copy of ad_a for fast row access.
        Matrix<F> A(L.dim, L.dim);
        for (std::size_t j = 0; j < L.dim; ++j)
            for (const auto& [k, c] : L.entry(a, j)) A(j, k) += c; // A(j,k) = (ad_a)_{kj} transposed view
        for (std::size_t b = a; b < L.dim; ++b) {
            F acc(0);
            for (std::size_t j = 0; j < L.dim; ++j)
                for (const auto& [k, c] : L.entry(b, j)) {
                    const F& e = A(k, j); // (ad_a)_{jk}
                    if (!e.is_zero()) acc += e * c;
                }
            K(a, b) = acc;
            K(b, a) = acc;
        }
    }
    return K;
}

// Fixed-modulus prime field used only for the full-rank certificate below
// (kept separate from the runtime-configurable Fp).
class P61 {
public:
    static constexpr std::uint64_t P = 2305843009213693951ULL; // 2^61 - 1
    P61() : v_(0) {}
    explicit P61(std::uint64_t v) : v_(v % P) {}
    P61 operator*(P61 o) const {
        return P61(static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % P));
    }
    P61 operator-(P61 o) const { return P61(v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_); }
    P61 operator+(P61 o) const {
        std::uint64_t s = v_ + o.v_;
        return P61(s >= P ? s - P : s);
    }
    bool is_zero() const { return v_ == 0; }
    P61 inv() const {
        // Fermat.
        P61 r(1), b = *this;
        std::uint64_t e = P - 2;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    std::uint64_t value() const { return v_; }

private:
    std::uint64_t v_;
};

inline P61 to_p61(const Rat& x) {
    const mpq_class& q = x.raw();
    mpz_class num = q.get_num() % mpz_class(P61::P);
    mpz_class den = q.get_den() % mpz_class(P61::P);
    if (den == 0) throw std::domain_error("to_p61: denominator divisible by modulus");
    std::uint64_t n = mpz_class(num < 0 ? num + P61::P : num).get_ui();
    return P61(n) * P61(den.get_ui()).inv();
}

// Rank of a rational matrix, certified exactly: elimination over a prime
// field gives a lower bound on the rank over the rationals, so "full rank
// mod p" proves "full rank over Q". A deficient modular rank triggers the
// exact (slow) elimination instead.
inline std::size_t certified_rank(const Matrix<Rat>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<P61>> ech;
    std::vector<std::size_t> piv;
    bool mapped = true;
    try {
        for (std::size_t i = 0; i < rows && mapped; ++i) {
            std::vector<P61> r(cols);
            for (std::size_t j = 0; j < cols; ++j) r[j] = to_p61(m(i, j));
            for (std::size_t t = 0; t < ech.size(); ++t) {
                P61 f = r[piv[t]];
                if (f.is_zero()) continue;
                for (std::size_t j = piv[t]; j < cols; ++j) r[j] = r[j] - f * ech[t][j];
            }
            std::size_t lead = cols;
            for (std::size_t j = 0; j < cols; ++j)
                if (!r[j].is_zero()) { lead = j; break; }
            if (lead == cols) continue;
            P61 inv = r[lead].inv();
            for (std::size_t j = 0; j < cols; ++j) r[j] = r[j] * inv;
            ech.push_back(std::move(r));
            piv.push_back(lead);
        }
    } catch (const std::domain_error&) {
        mapped = false;
    }
    const std::size_t full = rows < cols ? rows : cols;
    if (mapped && ech.size() == full) return full;
    return rank_of(m); // exact fallback
}

template <typename Field>
std::size_t certified_rank(const Matrix<Field>& m) {
    return rank_of(m);
}

// ---------------------------------------------------------------------------
// Subalgebras, centralizers, derived algebra and center
// ---------------------------------------------------------------------------

template <typename F>
bool closed_under_bracket(const GradedLie<F>& L, const Subspace<F>& S) {
    for (std::size_t a = 0; a < S.dim(); ++a)
        for (std::size_t b = a + 1; b < S.dim(); ++b)
            if (!S.contains(L.bracket(S.basis()[a], S.basis()[b]))) return false;
    return true;
}

// { c : [c, s] = 0 for all s in the given spanning set }.
template <typename F>
Subspace<F> centralizer(const GradedLie<F>& L, const std::vector<Vec<F>>& gens) {
    Matrix<F> M(L.dim * gens.size(), L.dim);
    std::size_t r0 = 0;
    for (const Vec<F>& s : gens) {
        // column i of this block: [e_i, s]
        for (std::size_t i = 0; i < L.dim; ++i)
            for (std::size_t j = 0; j < L.dim; ++j) {
                if (s[j].is_zero()) continue;
                for (const auto& [k, c] : L.entry(i, j)) M(r0 + k, i) += c * s[j];
            }
        r0 += L.dim;
    }
    auto basis = nullspace(M);
    Subspace<F> Z(L.dim);
    for (auto& v : basis) Z.insert(v);
    return Z;
}

template <typename F>
Subspace<F> derived_subalgebra(const GradedLie<F>& L, const Subspace<F>& S) {
    Subspace<F> D(L.dim);
    for (std::size_t a = 0; a < S.dim(); ++a)
        for (std::size_t b = a + 1; b < S.dim(); ++b)
            D.insert(L.bracket(S.basis()[a], S.basis()[b]));
    return D;
}

template <typename F>
Subspace<F> center_of(const GradedLie<F>& L, const Subspace<F>& S) {
    // { x in S : [x, s] = 0 for all s in S }, solved in S-coordinates.
    const std::size_t d = S.dim();
    Matrix<F> M(L.dim * d, d);
    for (std::size_t t = 0; t < d; ++t)
        for (std::size_t u = 0; u < d; ++u) {
            Vec<F> br = L.bracket(S.basis()[u], S.basis()[t]);
            for (std::size_t k = 0; k < L.dim; ++k) M(t * L.dim + k, u) = br[k];
        }
    auto ker = nullspace(M);
    Subspace<F> Z(L.dim);
    for (const auto& c : ker) Z.insert(S.lift(c));
    return Z;
}

template <typename F>
Subspace<F> whole_space(const GradedLie<F>& L) {
    Subspace<F> S(L.dim);
    for (std::size_t i = 0; i < L.dim; ++i) {
        Vec<F> v(L.dim, F(0));
        v[i] = F(1);
        S.insert(v);
    }
    return S;
}

// ---------------------------------------------------------------------------
// Derivation algebras of a (table) algebra
// ---------------------------------------------------------------------------

/*
 * All matrices D with D(xy) = (Dx)y + x(Dy), plus commutation with the
 * involution when present, plus D(v) = 0 for each pinned vector. Returns
 * the operators; the caller treats them as a Lie algebra under commutator.
 */
template <typename F>
std::vector<Matrix<F>> derivation_algebra(const UnitalAlgebra<F>& A,
                                          const std::vector<Vec<F>>& fixed = {}) {
    const std::size_t n = A.dim;
    std::vector<Vec<F>> rows;
    auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
    // Leibniz on basis pairs.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<F> row(n * n, F(0));
                for (std::size_t l = 0; l < n; ++l) {
                    const F& t = A.structure(i, j, l);
                    if (!t.is_zero()) row[var(k, l)] += t;
                }
                for (std::size_t m = 0; m < n; ++m) {
                    const F& t1 = A.structure(m, j, k);
                    if (!t1.is_zero()) row[var(m, i)] -= t1;
                    const F& t2 = A.structure(i, m, k);
                    if (!t2.is_zero()) row[var(m, j)] -= t2;
                }
                rows.push_back(std::move(row));
            }
    // Commute with the involution.
    if (A.has_involution()) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<F> row(n * n, F(0));
                for (std::size_t m = 0; m < n; ++m) {
                    if (!A.involution(k, m).is_zero()) row[var(m, j)] += A.involution(k, m);
                    if (!A.involution(m, j).is_zero()) row[var(k, m)] -= A.involution(m, j);
                }
                rows.push_back(std::move(row));
            }
    }
    // Pinned vectors.
    for (const Vec<F>& v : fixed)
        for (std::size_t k = 0; k < n; ++k) {
            Vec<F> row(n * n, F(0));
            for (std::size_t l = 0; l < n; ++l) row[var(k, l)] = v[l];
            rows.push_back(std::move(row));
        }
    Matrix<F> M(rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c) M(r, c) = rows[r][c];
    std::vector<Matrix<F>> out;
    for (const auto& v : nullspace(M)) out.push_back(mat_unflat(v, n));
    return out;
}

// ---------------------------------------------------------------------------
// Construction: two-step nilpotent algebra on A (+) A_skew
// ---------------------------------------------------------------------------

template <typename F>
GradedLie<F> heisenberg(const StructurableAlgebra<F>& A) {
    const std::size_t da = A.dim, ds = A.skew.size();
    Subspace<F> skew(da);
    for (const auto& s : A.skew) skew.insert(s);
    GradedLie<F> L;
    L.name = "h(" + A.name + ")";
    L.dim = da + ds;
    L.degree.assign(da, 1);
    for (std::size_t t = 0; t < ds; ++t) L.degree.push_back(2);
    for (std::size_t i = 0; i < da; ++i) L.labels.push_back("a_" + A.labels[i]);
    for (std::size_t t = 0; t < ds; ++t) L.labels.push_back("z" + std::to_string(t));
    L.table.assign(L.dim * L.dim, {});
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = i + 1; j < da; ++j) {
            Vec<F> sk = skew_pair(A, A.basis_vec(i), A.basis_vec(j));
            Vec<F> c = skew.coords_or_throw(sk, "pairing leaves the skew part");
            Vec<F> out(L.dim, F(0));
            for (std::size_t t = 0; t < ds; ++t) out[da + t] = c[t];
            L.set_bracket(i, j, out);
        }
    return L;
}

// ---------------------------------------------------------------------------
// Construction: 3-graded algebra from a cubic Jordan algebra
// ---------------------------------------------------------------------------

// Descriptor of a degree-0 generator: either L_j (single index) or [L_a, L_b].
using GenDesc = std::variant<std::size_t, std::pair<std::size_t, std::size_t>>;

template <typename F>
struct KoecherAlgebra {
    GradedLie<F> lie;
    JordanAlgebra<F> J;
    Subspace<F> g0;               // flattened operators
    std::vector<GenDesc> g0_desc; // one per g0 basis member
    Matrix<F> gram_inv;           // inverse of the trace Gram (for the adjoint)

    Matrix<F> g0_op(std::size_t t) const { return mat_unflat(g0.basis()[t], J.dim); }
    // Adjoint with respect to the trace pairing: X* = G^-1 X^T G.
    Matrix<F> adjoint(const Matrix<F>& X) const { return gram_inv * X.transpose() * J.trace_gram; }

    // Target operator of a generator descriptor under a Jordan algebra map.
    static Matrix<F> desc_op(const JordanAlgebra<F>& J2, const Matrix<F>& emb, GenDesc d) {
        if (std::holds_alternative<std::size_t>(d)) {
            std::size_t i = std::get<std::size_t>(d);
            Vec<F> src(emb.cols(), F(0));
            src[i] = F(1);
            return J2.Lmat(emb.apply(src));
        }
        auto [a, b] = std::get<std::pair<std::size_t, std::size_t>>(d);
        Vec<F> sa(emb.cols(), F(0)), sb(emb.cols(), F(0));
        sa[a] = F(1);
        sb[b] = F(1);
        Matrix<F> La = J2.Lmat(emb.apply(sa)), Lb = J2.Lmat(emb.apply(sb));
        return La * Lb - Lb * La;
    }
};

template <typename F>
KoecherAlgebra<F> koecher(const JordanAlgebra<F>& J) {
    KoecherAlgebra<F> K{GradedLie<F>{}, J, Subspace<F>(J.dim * J.dim), {}, Matrix<F>{}};
    const std::size_t dj = J.dim;
    if (!invert(J.trace_gram, K.gram_inv))
        throw std::logic_error("koecher: degenerate trace pairing");

    // Degree-0 part: greedy span of L_j and [L_j, L_j'].
    std::vector<Matrix<F>> Lops;
    for (std::size_t i = 0; i < dj; ++i) Lops.push_back(J.Lmat(J.basis_vec(i)));
    for (std::size_t i = 0; i < dj; ++i)
        if (K.g0.insert(mat_flat(Lops[i]))) K.g0_desc.push_back(GenDesc{i});
    for (std::size_t i = 0; i < dj; ++i)
        for (std::size_t j = i + 1; j < dj; ++j) {
            Matrix<F> c = Lops[i] * Lops[j] - Lops[j] * Lops[i];
            if (K.g0.insert(mat_flat(c))) K.g0_desc.push_back(GenDesc{std::make_pair(i, j)});
        }
    const std::size_t d0 = K.g0.dim();

    GradedLie<F>& L = K.lie;
    L.name = "g(" + J.name + ")";
    L.dim = 2 * dj + d0;
    // Basis order: degree -1 copy of J, degree 0, degree +1 copy of J.
    L.degree.assign(dj, -1);
    for (std::size_t t = 0; t < d0; ++t) L.degree.push_back(0);
    for (std::size_t t = 0; t < dj; ++t) L.degree.push_back(1);
    for (std::size_t i = 0; i < dj; ++i) L.labels.push_back("m_" + J.labels[i]);
    for (std::size_t t = 0; t < d0; ++t) L.labels.push_back("X" + std::to_string(t));
    for (std::size_t i = 0; i < dj; ++i) L.labels.push_back("p_" + J.labels[i]);
    L.table.assign(L.dim * L.dim, {});

    auto minus_idx = [&](std::size_t i) { return i; };
    auto zero_idx = [&](std::size_t t) { return dj + t; };
    auto plus_idx = [&](std::size_t i) { return dj + d0 + i; };

    std::vector<Matrix<F>> ops, ops_star;
    for (std::size_t t = 0; t < d0; ++t) {
        ops.push_back(K.g0_op(t));
        ops_star.push_back(K.adjoint(ops.back()));
    }

    // [X, p(j)] = p(X j);  [X, m(j)] = -m(X* j);  [X, Y] = operator commutator.
    for (std::size_t t = 0; t < d0; ++t) {
        for (std::size_t i = 0; i < dj; ++i) {
            Vec<F> out(L.dim, F(0));
            Vec<F> img = ops[t].apply(J.basis_vec(i));
            for (std::size_t k = 0; k < dj; ++k) out[plus_idx(k)] = img[k];
            L.set_bracket(zero_idx(t), plus_idx(i), out);

            Vec<F> out2(L.dim, F(0));
            Vec<F> img2 = ops_star[t].apply(J.basis_vec(i));
            for (std::size_t k = 0; k < dj; ++k) out2[minus_idx(k)] = -img2[k];
            L.set_bracket(zero_idx(t), minus_idx(i), out2);
        }
        for (std::size_t u = t + 1; u < d0; ++u) {
            Matrix<F> c = ops[t] * ops[u] - ops[u] * ops[t];
            Vec<F> coords = K.g0.coords_or_throw(mat_flat(c), "degree-0 commutator");
            Vec<F> out(L.dim, F(0));
            for (std::size_t k = 0; k < d0; ++k) out[zero_idx(k)] = coords[k];
            L.set_bracket(zero_idx(t), zero_idx(u), out);
        }
    }
    // [p(j), m(j')] = 2 (L_{j o j'} + [L_j, L_{j'}]).
    for (std::size_t i = 0; i < dj; ++i)
        for (std::size_t j = 0; j < dj; ++j) {
            Matrix<F> op = J.Lmat(J.jprod(J.basis_vec(i), J.basis_vec(j)))
                           + (Lops[i] * Lops[j] - Lops[j] * Lops[i]);
            Vec<F> coords = K.g0.coords_or_throw(mat_flat(op * F(2)), "mixed bracket");
            Vec<F> out(L.dim, F(0));
            for (std::size_t k = 0; k < d0; ++k) out[zero_idx(k)] = coords[k];
            L.set_bracket(plus_idx(i), minus_idx(j), out);
        }
    return K;
}

// ---------------------------------------------------------------------------
// Construction: 5-graded algebra from a structurable algebra
// ---------------------------------------------------------------------------

template <typename F>
struct AllisonAlgebra {
    GradedLie<F> lie;
    StructurableAlgebra<F> A;
    InstrlSpan<F> instrl;
    Subspace<F> skew; // skew part of A with coordinate solves

    AllisonAlgebra(GradedLie<F> l, StructurableAlgebra<F> a, InstrlSpan<F> is, Subspace<F> sk)
        : lie(std::move(l)), A(std::move(a)), instrl(std::move(is)), skew(std::move(sk)) {}
};

template <typename F>
AllisonAlgebra<F> allison(const StructurableAlgebra<F>& A) {
    InstrlSpan<F> I(A);
    const std::size_t da = A.dim, ds = A.skew.size(), d0 = I.dim();
    Subspace<F> skew(da);
    for (const auto& s : A.skew) skew.insert(s);

    GradedLie<F> L;
    L.name = "g(" + A.name + ")";
    L.dim = 2 * ds + 2 * da + d0;
    // Basis order: degree -2, -1, 0, +1, +2.
    for (std::size_t t = 0; t < ds; ++t) L.degree.push_back(-2);
    for (std::size_t t = 0; t < da; ++t) L.degree.push_back(-1);
    for (std::size_t t = 0; t < d0; ++t) L.degree.push_back(0);
    for (std::size_t t = 0; t < da; ++t) L.degree.push_back(1);
    for (std::size_t t = 0; t < ds; ++t) L.degree.push_back(2);
    for (std::size_t t = 0; t < ds; ++t) L.labels.push_back("zm" + std::to_string(t));
    for (std::size_t i = 0; i < da; ++i) L.labels.push_back("m_" + A.labels[i]);
    for (std::size_t t = 0; t < d0; ++t) L.labels.push_back("X" + std::to_string(t));
    for (std::size_t i = 0; i < da; ++i) L.labels.push_back("p_" + A.labels[i]);
    for (std::size_t t = 0; t < ds; ++t) L.labels.push_back("zp" + std::to_string(t));
    L.table.assign(L.dim * L.dim, {});

    auto sm_idx = [&](std::size_t t) { return t; };
    auto xm_idx = [&](std::size_t i) { return ds + i; };
    auto x0_idx = [&](std::size_t t) { return ds + da + t; };
    auto xp_idx = [&](std::size_t i) { return ds + da + d0 + i; };
    auto sp_idx = [&](std::size_t t) { return ds + 2 * da + d0 + t; };

    // Precomputed operator data per degree-0 basis member.
    std::vector<Matrix<F>> X, Xeps, Xdel, Xepsdel;
    for (std::size_t t = 0; t < d0; ++t) {
        X.push_back(I.basis_op(t));
        Xeps.push_back(I.eps(X.back()));
        Xdel.push_back(I.delta_on_skew(X.back()));
        Xepsdel.push_back(I.delta_on_skew(Xeps.back()));
    }

    auto emit_skew = [&](const Vec<F>& v, bool plus) {
        Vec<F> c = skew.coords_or_throw(v, "bracket leaves the skew part");
        Vec<F> out(L.dim, F(0));
        for (std::size_t t = 0; t < ds; ++t) out[(plus ? sp_idx(t) : sm_idx(t))] = c[t];
        return out;
    };
    auto emit_alg = [&](const Vec<F>& v, bool plus) {
        Vec<F> out(L.dim, F(0));
        for (std::size_t i = 0; i < da; ++i) out[(plus ? xp_idx(i) : xm_idx(i))] = v[i];
        return out;
    };
    auto emit_g0 = [&](const Matrix<F>& op, const char* what) {
        Vec<F> c = I.coords_or_throw(op, what);
        Vec<F> out(L.dim, F(0));
        for (std::size_t t = 0; t < d0; ++t) out[x0_idx(t)] = c[t];
        return out;
    };

    // [p(x), p(y)] = zp(<x,y>);  [m(x), m(y)] = zm(<x,y>).
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = i + 1; j < da; ++j) {
            Vec<F> sk = skew_pair(A, A.basis_vec(i), A.basis_vec(j));
            L.set_bracket(xp_idx(i), xp_idx(j), emit_skew(sk, true));
            L.set_bracket(xm_idx(i), xm_idx(j), emit_skew(sk, false));
        }
    // [p(x), m(y)] = V_{x,y}.
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            Matrix<F> v = op_V(A, A.basis_vec(i), A.basis_vec(j));
            L.set_bracket(xp_idx(i), xm_idx(j), emit_g0(v, "mixed V bracket"));
        }
    // [X, p(x)] = p(X x);  [X, m(x)] = m(X^eps x);
    // [X, zp(s)] = zp(X^delta s);  [X, zm(s)] = zm(X^{eps delta} s);
    // [X, Y] = commutator.
    for (std::size_t t = 0; t < d0; ++t) {
        for (std::size_t i = 0; i < da; ++i) {
            L.set_bracket(x0_idx(t), xp_idx(i), emit_alg(X[t].apply(A.basis_vec(i)), true));
            L.set_bracket(x0_idx(t), xm_idx(i), emit_alg(Xeps[t].apply(A.basis_vec(i)), false));
        }
        for (std::size_t u = 0; u < ds; ++u) {
            Vec<F> cp(ds, F(0)), cm(ds, F(0));
            for (std::size_t w = 0; w < ds; ++w) {
                cp[w] = Xdel[t](w, u);
                cm[w] = Xepsdel[t](w, u);
            }
            Vec<F> outp(L.dim, F(0)), outm(L.dim, F(0));
            for (std::size_t w = 0; w < ds; ++w) {
                outp[sp_idx(w)] = cp[w];
                outm[sm_idx(w)] = cm[w];
            }
            L.set_bracket(x0_idx(t), sp_idx(u), outp);
            L.set_bracket(x0_idx(t), sm_idx(u), outm);
        }
        for (std::size_t u = t + 1; u < d0; ++u) {
            Matrix<F> c = X[t] * X[u] - X[u] * X[t];
            L.set_bracket(x0_idx(t), x0_idx(u), emit_g0(c, "degree-0 commutator"));
        }
    }
    // [zp(s), m(x)] = p(s x);    [zm(s), p(x)] = m(s x);
    // [zp(s), zm(r)] = L_s L_r.
    for (std::size_t u = 0; u < ds; ++u) {
        const Vec<F>& s = A.skew[u];
        for (std::size_t i = 0; i < da; ++i) {
            Vec<F> sx = A.mul(s, A.basis_vec(i));
            Vec<F> outp(L.dim, F(0));
            for (std::size_t k = 0; k < da; ++k) outp[xp_idx(k)] = sx[k];
            L.set_bracket(sp_idx(u), xm_idx(i), outp);
            Vec<F> outm(L.dim, F(0));
            for (std::size_t k = 0; k < da; ++k) outm[xm_idx(k)] = sx[k];
            L.set_bracket(sm_idx(u), xp_idx(i), outm);
        }
        for (std::size_t w = 0; w < ds; ++w) {
            Matrix<F> op = A.left_mul(s) * A.left_mul(A.skew[w]);
            L.set_bracket(sp_idx(u), sm_idx(w), emit_g0(op, "L_s L_r bracket"));
        }
    }
    return AllisonAlgebra<F>(std::move(L), A, std::move(I), std::move(skew));
}

// ---------------------------------------------------------------------------
// Induced graded embeddings
// ---------------------------------------------------------------------------

template <typename F>
struct LieEmbedding {
    Matrix<F> map; // dim(big) x dim(small)
    bool well_defined = false;
    bool bracket_preserving = false;
    bool degree_preserving = false;

    bool ok() const { return well_defined && bracket_preserving && degree_preserving; }
};

namespace detail {

template <typename F>
void verify_embedding(const GradedLie<F>& Ls, const GradedLie<F>& Lb, LieEmbedding<F>& E) {
    E.degree_preserving = true;
    for (std::size_t i = 0; i < Ls.dim; ++i)
        for (std::size_t k = 0; k < Lb.dim; ++k)
            if (!E.map(k, i).is_zero() && Lb.degree[k] != Ls.degree[i])
                E.degree_preserving = false;
    E.bracket_preserving = true;
    std::vector<Vec<F>> img;
    for (std::size_t i = 0; i < Ls.dim; ++i) {
        Vec<F> e(Ls.dim, F(0));
        e[i] = F(1);
        img.push_back(E.map.apply(e));
    }
    for (std::size_t i = 0; i < Ls.dim && E.bracket_preserving; ++i)
        for (std::size_t j = i + 1; j < Ls.dim; ++j) {
            Vec<F> lhs = Lb.bracket(img[i], img[j]);
            Vec<F> rhs = E.map.apply(Ls.bracket_basis(i, j));
            if (lhs != rhs) {
                E.bracket_preserving = false;
                break;
            }
        }
    // Injectivity comes with well-definedness checks + full column rank.
    if (rank_of(E.map) != Ls.dim) E.well_defined = false;
}

} // namespace detail

// Embedding induced by an inclusion of Jordan algebras (matrix `emb`).
template <typename F>
LieEmbedding<F> induced_embedding(const KoecherAlgebra<F>& Ks, const KoecherAlgebra<F>& Kb,
                                  const Matrix<F>& emb) {
    const std::size_t djs = Ks.J.dim, djb = Kb.J.dim;
    const std::size_t d0s = Ks.g0.dim(), d0b = Kb.g0.dim();
    LieEmbedding<F> E;
    E.map = Matrix<F>(Kb.lie.dim, Ks.lie.dim);
    // Degree -1 and +1 blocks: the Jordan inclusion itself.
    for (std::size_t i = 0; i < djs; ++i)
        for (std::size_t k = 0; k < djb; ++k) {
            E.map(k, i) = emb(k, i);                                    // -1 block
            E.map(djb + d0b + k, djs + d0s + i) = emb(k, i);            // +1 block
        }
    // Degree 0: map each chosen generator to its counterpart over the
    // bigger algebra and take coordinates there.
    E.well_defined = true;
    for (std::size_t t = 0; t < d0s; ++t) {
        Matrix<F> target = KoecherAlgebra<F>::desc_op(Kb.J, emb, Ks.g0_desc[t]);
        auto c = Kb.g0.coords(mat_flat(target));
        if (!c) {
            E.well_defined = false;
            return E;
        }
        for (std::size_t k = 0; k < d0b; ++k) E.map(djb + k, djs + t) = (*c)[k];
    }
    // Well-definedness: every degree-0 generator of the source (chosen or
    // not) must map consistently with its source coordinates.
    auto check_gen = [&](GenDesc d, const Matrix<F>& src_op) {
        auto cs = Ks.g0.coords(mat_flat(src_op));
        if (!cs) return false;
        Matrix<F> target = KoecherAlgebra<F>::desc_op(Kb.J, emb, d);
        auto cb = Kb.g0.coords(mat_flat(target));
        if (!cb) return false;
        // target coords must equal M_g0 * source coords
        Vec<F> mapped(d0b, F(0));
        for (std::size_t t = 0; t < d0s; ++t)
            for (std::size_t k = 0; k < d0b; ++k) mapped[k] += E.map(djb + k, djs + t) * (*cs)[t];
        return mapped == *cb;
    };
    std::vector<Matrix<F>> Lops;
    for (std::size_t i = 0; i < djs; ++i) Lops.push_back(Ks.J.Lmat(Ks.J.basis_vec(i)));
    for (std::size_t i = 0; i < djs && E.well_defined; ++i)
        if (!check_gen(GenDesc{i}, Lops[i])) E.well_defined = false;
    for (std::size_t i = 0; i < djs && E.well_defined; ++i)
        for (std::size_t j = i + 1; j < djs; ++j)
            if (!check_gen(GenDesc{std::make_pair(i, j)}, Lops[i] * Lops[j] - Lops[j] * Lops[i])) {
                E.well_defined = false;
                break;
            }
    detail::verify_embedding(Ks.lie, Kb.lie, E);
    return E;
}

// Embedding induced by an inclusion of structurable algebras (matrix `emb`,
// required to intertwine products and involutions; that is re-verified here).
template <typename F>
LieEmbedding<F> induced_embedding(const AllisonAlgebra<F>& As, const AllisonAlgebra<F>& Ab,
                                  const Matrix<F>& emb) {
    const auto& S = As.A;
    const auto& B = Ab.A;
    const std::size_t das = S.dim, dab = B.dim;
    const std::size_t dss = As.skew.dim(), dsb = Ab.skew.dim();
    const std::size_t d0s = As.instrl.dim(), d0b = Ab.instrl.dim();
    LieEmbedding<F> E;
    E.map = Matrix<F>(Ab.lie.dim, As.lie.dim);
    E.well_defined = true;
    // Sanity: emb is an algebra map commuting with the involutions.
    for (std::size_t i = 0; i < das && E.well_defined; ++i)
        for (std::size_t j = 0; j < das; ++j) {
            Vec<F> lhs = emb.apply(S.mul(S.basis_vec(i), S.basis_vec(j)));
            Vec<F> rhs = B.mul(emb.apply(S.basis_vec(i)), emb.apply(S.basis_vec(j)));
            if (lhs != rhs) {
                E.well_defined = false;
                break;
            }
        }
    for (std::size_t i = 0; i < das && E.well_defined; ++i)
        if (emb.apply(S.conj(S.basis_vec(i))) != B.conj(emb.apply(S.basis_vec(i))))
            E.well_defined = false;
    if (!E.well_defined) return E;

    auto sm_s = [&](std::size_t t) { return t; };
    auto xm_s = [&](std::size_t i) { return dss + i; };
    auto x0_s = [&](std::size_t t) { return dss + das + t; };
    auto xp_s = [&](std::size_t i) { return dss + das + d0s + i; };
    auto sp_s = [&](std::size_t t) { return dss + 2 * das + d0s + t; };
    auto sm_b = [&](std::size_t t) { return t; };
    auto xm_b = [&](std::size_t i) { return dsb + i; };
    auto x0_b = [&](std::size_t t) { return dsb + dab + t; };
    auto xp_b = [&](std::size_t i) { return dsb + dab + d0b + i; };
    auto sp_b = [&](std::size_t t) { return dsb + 2 * dab + d0b + t; };

    // +-1 blocks.
    for (std::size_t i = 0; i < das; ++i)
        for (std::size_t k = 0; k < dab; ++k) {
            E.map(xm_b(k), xm_s(i)) = emb(k, i);
            E.map(xp_b(k), xp_s(i)) = emb(k, i);
        }
    // +-2 blocks: push the skew basis through emb and express in the big
    // skew basis.
    for (std::size_t t = 0; t < dss; ++t) {
        auto c = Ab.skew.coords(emb.apply(As.skew.basis()[t]));
        if (!c) {
            E.well_defined = false;
            return E;
        }
        for (std::size_t k = 0; k < dsb; ++k) {
            E.map(sm_b(k), sm_s(t)) = (*c)[k];
            E.map(sp_b(k), sp_s(t)) = (*c)[k];
        }
    }
    // Degree 0: V-generators map to V-generators.
    for (std::size_t t = 0; t < d0s; ++t) {
        auto [i, j] = As.instrl.generators()[t];
        Matrix<F> target = op_V(B, emb.apply(S.basis_vec(i)), emb.apply(S.basis_vec(j)));
        auto c = Ab.instrl.coords(target);
        if (!c) {
            E.well_defined = false;
            return E;
        }
        for (std::size_t k = 0; k < d0b; ++k) E.map(x0_b(k), x0_s(t)) = (*c)[k];
    }
    // Every V_{e_i, e_j} of the source must map consistently.
    for (std::size_t i = 0; i < das && E.well_defined; ++i)
        for (std::size_t j = 0; j < das; ++j) {
            Matrix<F> src_op = op_V(S, S.basis_vec(i), S.basis_vec(j));
            auto cs = As.instrl.coords(src_op);
            Matrix<F> tgt = op_V(B, emb.apply(S.basis_vec(i)), emb.apply(S.basis_vec(j)));
            auto cb = Ab.instrl.coords(tgt);
            if (!cs || !cb) {
                E.well_defined = false;
                break;
            }
            Vec<F> mapped(d0b, F(0));
            for (std::size_t t = 0; t < d0s; ++t)
                for (std::size_t k = 0; k < d0b; ++k) mapped[k] += E.map(x0_b(k), x0_s(t)) * (*cs)[t];
            if (mapped != *cb) {
                E.well_defined = false;
                break;
            }
        }
    detail::verify_embedding(As.lie, Ab.lie, E);
    return E;
}

// ---------------------------------------------------------------------------
// Structure-constant export (JSON lines, i < j, deterministic order)
// ---------------------------------------------------------------------------

template <typename F>
std::string dump_structure(const GradedLie<F>& L) {
    std::string out;
    out += "{\"algebra\":\"" + L.name + "\",\"dim\":" + std::to_string(L.dim) + ",\"labels\":[";
    for (std::size_t i = 0; i < L.dim; ++i) {
        if (i) out += ",";
        out += "\"" + L.labels[i] + "\"";
    }
    out += "],\"degrees\":[";
    for (std::size_t i = 0; i < L.dim; ++i) {
        if (i) out += ",";
        out += std::to_string(L.degree[i]);
    }
    out += "]}\n";
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = i + 1; j < L.dim; ++j)
            for (const auto& [k, c] : L.entry(i, j))
                out += "{\"i\":" + std::to_string(i) + ",\"j\":" + std::to_string(j)
                       + ",\"k\":" + std::to_string(k) + ",\"c\":\"" + c.str() + "\"}\n";
    return out;
}

} // namespace excalg

#endif // EXCALG_LIE_HPP
