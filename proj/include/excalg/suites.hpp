#ifndef EXCALG_SUITES_HPP
#define EXCALG_SUITES_HPP

#include <excalg/gsp6.hpp>
#include <excalg/parallel.hpp>
#include <excalg/report.hpp>
#include <excalg/workspace.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

namespace excalg {

/*
 * The eight named verification suites. Each one takes the shared workspace
 * (so expensive constructions are built once per process) plus the run
 * configuration, and returns a Report of exact pass/fail checks.
 *
 * Sampled checks derive their RNG stream from (seed, suite, check), so a
 * report depends only on the configuration, never on execution order.
 */

namespace detail_suites {

template <typename F>
bool is_zero_vec(const Vec<F>& v) {
    for (const F& c : v)
        if (!c.is_zero()) return false;
    return true;
}

template <typename F>
Vec<F> vsub(Vec<F> a, const Vec<F>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <typename F>
nlohmann::ordered_json jvec(const Vec<F>& v) {
    auto j = nlohmann::ordered_json::array();
    for (const F& c : v) j.push_back(c.str());
    return j;
}

template <typename F>
nlohmann::ordered_json jmat(const Matrix<F>& m) {
    auto j = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).str());
        j.push_back(std::move(row));
    }
    return j;
}

inline std::size_t count_of(const RunConfig& cfg, std::size_t dflt) {
    return cfg.samples > 0 ? cfg.samples : dflt;
}

inline Rng rng_for(const RunConfig& cfg, const std::string& suite, const std::string& check) {
    return Rng::for_suite(cfg.seed, suite + "." + check);
}

// Shared Lie-algebra battery: grading, dimension bookkeeping, Jacobi,
// Killing rank / graded orthogonality / invariance.
template <typename F>
void lie_battery(Report& rep, const RunConfig& cfg, const GradedLie<F>& L,
                 std::size_t exhaustive_cutoff) {
    const std::string& n = L.name;
    rep.add("grading." + n, L.grading_respected());

    int maxdeg = 0;
    for (int d : L.degree) maxdeg = std::max(maxdeg, d);
    std::size_t acc = L.degree_dim(0);
    bool sym = true;
    for (int d = 1; d <= maxdeg; ++d) {
        sym = sym && L.degree_dim(d) == L.degree_dim(-d);
        acc += 2 * L.degree_dim(d);
    }
    rep.add("bookkeeping." + n, sym && acc == L.dim);

    if (cfg.exhaustive || L.dim <= exhaustive_cutoff) {
        auto jr = jacobi_check_exhaustive(L);
        rep.add("jacobi.exhaustive." + n, jr.pass,
                jr.pass ? nlohmann::ordered_json(nullptr)
                        : nlohmann::ordered_json(
                              {{"triple", {jr.witness[0], jr.witness[1], jr.witness[2]}}}));
    } else {
        const std::size_t n_samples = count_of(cfg, 100000);
        Rng rng = rng_for(cfg, "lie", "jacobi." + n);
        std::vector<std::array<std::size_t, 3>> triples(n_samples);
        for (auto& t : triples) t = {rng.below(L.dim), rng.below(L.dim), rng.below(L.dim)};
        std::size_t bad = parallel_first_failure(n_samples, [&](std::size_t s) {
            return jacobi_triple(L, triples[s][0], triples[s][1], triples[s][2]);
        });
        rep.add("jacobi.sampled." + n, bad == n_samples,
                bad == n_samples
                    ? nlohmann::ordered_json(nullptr)
                    : nlohmann::ordered_json({{"triple",
                                               {triples[bad][0], triples[bad][1], triples[bad][2]}}}));
    }

    Matrix<F> G = killing_gram(L);
    rep.add("killing.rank." + n, certified_rank(G) == L.dim);

    bool ortho = true;
    for (std::size_t a = 0; a < L.dim && ortho; ++a)
        for (std::size_t b = 0; b < L.dim; ++b)
            if (L.degree[a] + L.degree[b] != 0 && !G(a, b).is_zero()) {
                ortho = false;
                break;
            }
    rep.add("killing.orthogonality." + n, ortho);

    // Invariance K([x,y],z) = K(x,[y,z]) on sampled basis triples, computed
    // through the Gram matrix and the sparse bracket table.
    const std::size_t inv_samples = count_of(cfg, 10000);
    Rng rng = rng_for(cfg, "lie", "killing.invariance." + n);
    bool inv = true;
    std::array<std::size_t, 3> wit{0, 0, 0};
    for (std::size_t s = 0; s < inv_samples && inv; ++s) {
        std::size_t i = rng.below(L.dim), j = rng.below(L.dim), k = rng.below(L.dim);
        F lhs(0), rhs(0);
        for (const auto& [m, c] : L.entry(i, j)) lhs += c * G(m, k);
        for (const auto& [m, c] : L.entry(j, k)) rhs += G(i, m) * c;
        if (lhs != rhs) {
            inv = false;
            wit = {i, j, k};
        }
    }
    rep.add("killing.invariance." + n, inv,
            inv ? nlohmann::ordered_json(nullptr)
                : nlohmann::ordered_json({{"triple", {wit[0], wit[1], wit[2]}}}));
}

} // namespace detail_suites

// ---------------------------------------------------------------------------
// composition
// ---------------------------------------------------------------------------

template <typename F>
Report suite_composition(Workspace<F>& W, const RunConfig& cfg) {
    using namespace detail_suites;
    Report rep;
    rep.suite = "composition";
    rep.config = cfg;
    const auto& ch = W.chain();
    const auto& C = ch.C;
    const std::size_t n_rand = count_of(cfg, 1000);

    rep.add("dims.chain",
            ch.k.dim == 1 && ch.K.dim == 2 && ch.B.dim == 4 && C.dim == 8);

    {
        bool ok = true;
        for (std::size_t a = 0; a < 4 && ok; ++a) {
            const auto& A = W.comp(a);
            for (std::size_t i = 0; i < A.dim; ++i) {
                Vec<F> e = A.basis_vec(i);
                if (A.mul(A.unit, e) != e || A.mul(e, A.unit) != e) ok = false;
            }
        }
        rep.add("unit.basis", ok);
    }

    {
        bool ok = true;
        for (std::size_t i = 0; i < C.dim && ok; ++i) {
            if (C.conj(C.conj(C.basis_vec(i))) != C.basis_vec(i)) ok = false;
            for (std::size_t j = 0; j < C.dim; ++j) {
                Vec<F> lhs = C.conj(C.mul(C.basis_vec(i), C.basis_vec(j)));
                Vec<F> rhs = C.mul(C.conj(C.basis_vec(j)), C.conj(C.basis_vec(i)));
                if (lhs != rhs) {
                    ok = false;
                    break;
                }
            }
        }
        rep.add("conj.antiautomorphism", ok);
    }

    {
        // conj(a, v; w, b) = (b, -v; -w, a) in the Zorn coordinates.
        Matrix<F> expect(8, 8);
        expect(0, 7) = F(1);
        expect(7, 0) = F(1);
        for (std::size_t t = 1; t <= 6; ++t) expect(t, t) = F(-1);
        rep.add("conj.zorn", C.involution == expect);
    }

    {
        bool ok = true;
        for (std::size_t a = 0; a < 4 && ok; ++a) {
            const auto& A = W.comp(a);
            for (std::size_t i = 0; i < A.dim && ok; ++i)
                for (std::size_t j = 0; j < A.dim; ++j) {
                    Vec<F> p = A.mul(A.basis_vec(i), A.basis_vec(j));
                    if (A.norm(p) != A.norm(A.basis_vec(i)) * A.norm(A.basis_vec(j))) {
                        ok = false;
                        break;
                    }
                }
        }
        rep.add("identity.norm.mult.basis", ok);
    }

    {
        Rng rng = rng_for(cfg, "composition", "norm.mult");
        bool ok = true;
        Vec<F> wx, wy;
        for (std::size_t s = 0; s < n_rand && ok; ++s) {
            Vec<F> x = rng.vector<F>(8), y = rng.vector<F>(8);
            if (C.norm(C.mul(x, y)) != C.norm(x) * C.norm(y)) {
                ok = false;
                wx = x;
                wy = y;
            }
        }
        rep.add("identity.norm.mult.random", ok,
                ok ? nlohmann::ordered_json(nullptr)
                   : nlohmann::ordered_json({{"x", jvec(wx)}, {"y", jvec(wy)}}));
    }

    {
        bool ok = true;
        for (std::size_t i = 0; i < C.dim && ok; ++i)
            for (std::size_t j = 0; j < C.dim; ++j) {
                Vec<F> x = C.basis_vec(i), y = C.basis_vec(j);
                if (C.mul(C.mul(x, x), y) != C.mul(x, C.mul(x, y))
                    || C.mul(C.mul(y, x), x) != C.mul(y, C.mul(x, x))) {
                    ok = false;
                    break;
                }
            }
        rep.add("identity.alternative.basis", ok);
    }

    {
        Rng rng = rng_for(cfg, "composition", "alternative");
        bool ok = true;
        for (std::size_t s = 0; s < n_rand && ok; ++s) {
            Vec<F> x = rng.vector<F>(8), y = rng.vector<F>(8);
            if (!is_zero_vec(C.associator(x, x, y))) ok = false;
        }
        rep.add("identity.alternative.random", ok);
    }

    {
        Rng rng = rng_for(cfg, "composition", "moufang");
        bool ok = true;
        for (std::size_t s = 0; s < n_rand && ok; ++s) {
            Vec<F> x = rng.vector<F>(8), y = rng.vector<F>(8), z = rng.vector<F>(8);
            Vec<F> lhs = C.mul(C.mul(x, y), C.mul(z, x));
            Vec<F> rhs = C.mul(C.mul(x, C.mul(y, z)), x);
            if (lhs != rhs) ok = false;
        }
        rep.add("identity.moufang.random", ok);
    }

    {
        bool ok = true;
        for (std::size_t i = 0; i < C.dim && ok; ++i)
            for (std::size_t j = 0; j < C.dim && ok; ++j)
                for (std::size_t k = 0; k < C.dim; ++k) {
                    Vec<F> x = C.basis_vec(i), y = C.basis_vec(j), z = C.basis_vec(k);
                    if (C.trace(C.mul(C.mul(x, y), z)) != C.trace(C.mul(x, C.mul(y, z)))) {
                        ok = false;
                        break;
                    }
                }
        rep.add("identity.trace.assoc", ok);
    }

    {
        Rng rng = rng_for(cfg, "composition", "trace.zorn");
        bool ok = true;
        for (std::size_t s = 0; s < 100 && ok; ++s) {
            Vec<F> x = rng.vector<F>(8);
            if (C.trace(x) != x[0] + x[7]) ok = false;
            if (C.norm(x) != C.norm(C.conj(x))) ok = false;
        }
        rep.add("trace.zorn", ok);
    }

    {
        // Every chain embedding intertwines mul, conj, N, Tr.
        struct Emb {
            const Matrix<F>* m;
            std::size_t src, dst;
        };
        const std::array<Emb, 6> embs{{{&ch.emb_kK, 0, 1},
                                       {&ch.emb_KB, 1, 2},
                                       {&ch.emb_BC, 2, 3},
                                       {&ch.emb_kB, 0, 2},
                                       {&ch.emb_KC, 1, 3},
                                       {&ch.emb_kC, 0, 3}}};
        bool ok = true;
        for (const auto& e : embs) {
            const auto& S = W.comp(e.src);
            const auto& T = W.comp(e.dst);
            if (e.m->apply(S.unit) != T.unit) ok = false;
            for (std::size_t i = 0; i < S.dim && ok; ++i) {
                Vec<F> xi = S.basis_vec(i);
                if (e.m->apply(S.conj(xi)) != T.conj(e.m->apply(xi))) ok = false;
                if (S.norm(xi) != T.norm(e.m->apply(xi))) ok = false;
                if (S.trace(xi) != T.trace(e.m->apply(xi))) ok = false;
                for (std::size_t j = 0; j < S.dim; ++j) {
                    Vec<F> lhs = e.m->apply(S.mul(xi, S.basis_vec(j)));
                    Vec<F> rhs = T.mul(e.m->apply(xi), e.m->apply(S.basis_vec(j)));
                    if (lhs != rhs) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) break;
        }
        rep.add("embeddings.intertwine", ok);
    }

    rep.add("nilspace.trivial", nilspace_audit(C, std::vector<Vec<F>>{}).is_nil);

    {
        // Isotropic pair alpha, beta with N(alpha,beta) = 0 and alpha*beta != 0:
        // gamma = alpha*beta squares to zero, beta*alpha = -alpha*beta.
        Rng rng = rng_for(cfg, "composition", "nilspace.pair");
        bool ok = false;
        for (std::size_t attempt = 0; attempt < 100 && !ok; ++attempt) {
            Vec<F> al = random_isotropic(C, rng);
            // beta: random except w1, w2, solved from isotropy + orthogonality.
            Vec<F> be(8, F(0));
            F a = rng.scalar<F>();
            be[0] = a;
            be[7] = -a;
            be[1] = rng.scalar<F>();
            be[2] = rng.scalar<F>();
            be[3] = rng.scalar<F>();
            be[6] = rng.scalar<F>();
            Matrix<F> M(2, 2);
            Vec<F> b(2);
            // N(beta) = 0:  -a^2 - (v1 w1 + v2 w2 + v3 w3) = 0
            M(0, 0) = be[1];
            M(0, 1) = be[2];
            b[0] = -(a * a) - be[3] * be[6];
            // N(alpha,beta) = 0: al0*be7 + al7*be0 - v_al.w_be - v_be.w_al = 0
            M(1, 0) = -al[1];
            M(1, 1) = -al[2];
            b[1] = -(al[0] * be[7] + al[7] * be[0]) + al[3] * be[6] + be[1] * al[4]
                   + be[2] * al[5] + be[3] * al[6];
            // The second equation moves the known terms to the rhs; w1, w2
            // multiply -al[1], -al[2] there and be[1], be[2] in the first.
            Vec<F> wsol;
            if (!solve_linear(M, b, wsol)) continue;
            be[4] = wsol[0];
            be[5] = wsol[1];
            if (!C.norm(be).is_zero() || !C.norm_pair(al, be).is_zero()) continue;
            if (is_zero_vec(C.mul(al, be))) continue;
            auto audit = nilspace_audit(C, {al, be});
            ok = !audit.is_nil && audit.gamma_square_zero && audit.anticommute;
        }
        rep.add("nilspace.pair", ok);
    }

    {
        // 3-dim totally isotropic span (a random invertible mix of the
        // v-slot basis): all associators proportional to one line.
        Rng rng = rng_for(cfg, "composition", "nilspace.line");
        Matrix<F> M(3, 3);
        do {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) M(i, j) = rng.scalar<F>();
        } while (bareiss_det(M).is_zero());
        std::vector<Vec<F>> span;
        for (std::size_t i = 0; i < 3; ++i) {
            Vec<F> v(8, F(0));
            for (std::size_t j = 0; j < 3; ++j) v[1 + j] = M(i, j);
            span.push_back(v);
        }
        auto audit = nilspace_audit(C, span);
        bool line_nonzero = audit.associator_line && !is_zero_vec(*audit.associator_line);
        rep.add("nilspace.line", line_nonzero && audit.line_ok);
    }

    {
        // Negative control: one perturbed structure constant must break norm
        // multiplicativity (N evaluated through the clean bilinear form).
        UnitalAlgebra<F> P = static_cast<const UnitalAlgebra<F>&>(C);
        P.structure(1, 2, 0) += F(1);
        auto quad = [&C](const Vec<F>& x) { return C.norm_pair(x, x) / F(2); };
        Rng rng = rng_for(cfg, "composition", "negcontrol");
        bool detected = false;
        for (std::size_t s = 0; s < n_rand && !detected; ++s) {
            Vec<F> x = rng.vector<F>(8), y = rng.vector<F>(8);
            if (quad(P.mul(x, y)) != quad(x) * quad(y)) detected = true;
        }
        rep.add("negcontrol.norm.perturbed", detected);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// jordan
// ---------------------------------------------------------------------------

template <typename F>
Report suite_jordan(Workspace<F>& W, const RunConfig& cfg) {
    using namespace detail_suites;
    Report rep;
    rep.suite = "jordan";
    rep.config = cfg;
    const std::size_t n_rand = count_of(cfg, 1000);
    const auto& J = W.jordan(3); // J_C, dim 27

    {
        const std::array<std::size_t, 4> want{6, 9, 15, 27};
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i)
            if (W.jordan(i).dim != want[i]) ok = false;
        rep.add("dims.jordan", ok);
    }

    {
        bool ok = true;
        for (std::size_t i = 0; i < J.dim && ok; ++i) {
            if (J.jprod(J.unit, J.basis_vec(i)) != J.basis_vec(i)) ok = false;
            for (std::size_t j = 0; j < J.dim; ++j)
                for (std::size_t k = 0; k < J.dim; ++k)
                    if (J.structure(i, j, k) != J.structure(j, i, k)) {
                        ok = false;
                        break;
                    }
        }
        rep.add("product.commutative", ok);
    }

    {
        // (x^2 o y) o x = x^2 o (y o x), exhaustive on basis pairs of J_B.
        const auto& JB = W.jordan(2);
        bool ok = true;
        for (std::size_t i = 0; i < JB.dim && ok; ++i)
            for (std::size_t j = 0; j < JB.dim; ++j) {
                Vec<F> x = JB.basis_vec(i), y = JB.basis_vec(j);
                Vec<F> x2 = JB.jprod(x, x);
                if (JB.jprod(JB.jprod(x2, y), x) != JB.jprod(x2, JB.jprod(y, x))) {
                    ok = false;
                    break;
                }
            }
        rep.add("identity.jordan.basis", ok);
    }

    {
        Rng rng = rng_for(cfg, "jordan", "jordan.identity");
        bool ok = true;
        for (std::size_t s = 0; s < n_rand && ok; ++s) {
            Vec<F> x = rng.vector<F>(J.dim, 2), y = rng.vector<F>(J.dim, 2);
            Vec<F> x2 = J.jprod(x, x);
            if (J.jprod(J.jprod(x2, y), x) != J.jprod(x2, J.jprod(y, x))) ok = false;
        }
        rep.add("identity.jordan.random", ok);
    }

    {
        Vec<F> d = JordanAlgebra<F>::diag_elt(F(1), F(2), F(3), J.dim);
        Vec<F> ds = JordanAlgebra<F>::diag_elt(F(6), F(3), F(2), J.dim);
        bool ok = J.sharp(d) == ds && J.norm(d) == F(6);
        ok = ok && J.sharp(J.unit) == J.unit && J.norm(J.unit) == F(1);
        Vec<F> a = JordanAlgebra<F>::diag_elt(F(4), F(5), F(6), J.dim);
        ok = ok && J.jprod(d, a) == JordanAlgebra<F>::diag_elt(F(4), F(10), F(18), J.dim);
        rep.add("examples.diag", ok);
    }

    {
        // (j#)# = N(j) j, and the unit-direction form j o j# = N(j) 1.
        Rng rng = rng_for(cfg, "jordan", "adjoint");
        bool ok_adj = true, ok_unit = true;
        for (std::size_t s = 0; s < n_rand && (ok_adj || ok_unit); ++s) {
            Vec<F> j = rng.vector<F>(J.dim, 2);
            Vec<F> js = J.sharp(j);
            F nj = J.norm(j);
            Vec<F> lhs = J.sharp(js);
            Vec<F> rhs(J.dim);
            for (std::size_t t = 0; t < J.dim; ++t) rhs[t] = nj * j[t];
            if (lhs != rhs) ok_adj = false;
            Vec<F> unit_side(J.dim);
            for (std::size_t t = 0; t < J.dim; ++t) unit_side[t] = nj * J.unit[t];
            if (J.jprod(j, js) != unit_side) ok_unit = false;
        }
        rep.add("identity.adjoint", ok_adj);
        rep.add("identity.sharp.product", ok_unit);
    }

    {
        // The adjoint-direction display j x j# = N(j) j fails: x is the
        // polarization of #, so j x j# picks up trace cross-terms. This
        // control passes exactly when the display fails on the witness.
        Vec<F> d = JordanAlgebra<F>::diag_elt(F(1), F(2), F(3), J.dim);
        Vec<F> lhs = J.cross(d, J.sharp(d));
        Vec<F> rhs(J.dim);
        F nd = J.norm(d);
        for (std::size_t t = 0; t < J.dim; ++t) rhs[t] = nd * d[t];
        auto& c = rep.add("negcontrol.cross.display", lhs != rhs,
                          nlohmann::ordered_json({{"j", "diag(1,2,3)"},
                                                  {"j_cross_jsharp", jvec(lhs)},
                                                  {"norm_times_j", jvec(rhs)}}));
        c.note = "the cross-product form of the adjoint identity is false; "
                 "the verified identities are (j#)# = N(j) j and j o j# = N(j) 1";
    }

    {
        Rng rng = rng_for(cfg, "jordan", "norm.cubic");
        bool ok = true;
        for (std::size_t s = 0; s < 200 && ok; ++s) {
            Vec<F> j = rng.vector<F>(J.dim, 2);
            F t = rng.scalar<F>();
            Vec<F> tj(J.dim);
            for (std::size_t u = 0; u < J.dim; ++u) tj[u] = t * j[u];
            if (J.norm(tj) != t * t * t * J.norm(j)) ok = false;
            Vec<F> xx = J.cross(j, j);
            Vec<F> two_sharp = J.sharp(j);
            for (F& v : two_sharp) v = v * F(2);
            if (xx != two_sharp) ok = false;
        }
        rep.add("norm.cubic", ok);
        rep.add("cross.selfsharp", rep.checks.back().pass); // same loop verified both
    }

    {
        bool ok = J.pairing(J.unit, J.unit) == F(3);
        ok = ok && J.trace_gram == J.trace_gram.transpose();
        ok = ok && certified_rank(J.trace_gram) == J.dim;
        Vec<F> ii = J.cross(J.unit, J.unit);
        Vec<F> two(J.dim);
        for (std::size_t t = 0; t < J.dim; ++t) two[t] = F(2) * J.unit[t];
        ok = ok && ii == two;
        rep.add("pairing.basics", ok);
    }

    {
        Rng rng = rng_for(cfg, "jordan", "pairing.permutation");
        bool ok = true;
        for (std::size_t s = 0; s < 500 && ok; ++s) {
            Vec<F> x = rng.vector<F>(J.dim, 2), y = rng.vector<F>(J.dim, 2),
                   z = rng.vector<F>(J.dim, 2);
            F v = J.pairing(J.cross(x, y), z);
            if (v != J.pairing(J.cross(y, z), x) || v != J.pairing(J.cross(z, x), y)
                || v != J.pairing(J.cross(y, x), z)) {
                ok = false;
            }
        }
        rep.add("pairing.permutation", ok);
    }

    {
        // The chain embeddings J_k -> J_C, J_K -> J_C, J_B -> J_C preserve
        // the product, sharp, norm and trace pairing.
        const auto& ch = W.chain();
        const std::array<const Matrix<F>*, 3> embs{&ch.emb_kC, &ch.emb_KC, &ch.emb_BC};
        bool ok = true;
        for (std::size_t e = 0; e < 3 && ok; ++e) {
            const auto& JS = W.jordan(e == 2 ? 2 : e);
            Matrix<F> m = jordan_embedding(JS, J, *embs[e]);
            for (std::size_t i = 0; i < JS.dim && ok; ++i) {
                Vec<F> xi = JS.basis_vec(i);
                if (m.apply(JS.sharp(xi)) != J.sharp(m.apply(xi))) ok = false;
                if (JS.norm(xi) != J.norm(m.apply(xi))) ok = false;
                for (std::size_t j = 0; j < JS.dim; ++j) {
                    if (m.apply(JS.jprod(xi, JS.basis_vec(j)))
                        != J.jprod(m.apply(xi), m.apply(JS.basis_vec(j))))
                        ok = false;
                    if (JS.pairing(xi, JS.basis_vec(j))
                        != J.pairing(m.apply(xi), m.apply(JS.basis_vec(j))))
                        ok = false;
                }
            }
        }
        rep.add("embedding.preserves", ok);
    }

    {
        // Inner derivations [L_x, L_y]: annihilate the unit, Leibniz for o.
        Rng rng = rng_for(cfg, "jordan", "innerder");
        bool ok = true;
        for (std::size_t s = 0; s < 100 && ok; ++s) {
            Vec<F> x = rng.vector<F>(J.dim, 2), y = rng.vector<F>(J.dim, 2);
            Matrix<F> D = J.Lmat(x) * J.Lmat(y) - J.Lmat(y) * J.Lmat(x);
            if (!is_zero_vec(D.apply(J.unit))) ok = false;
            Vec<F> a = rng.vector<F>(J.dim, 2), b = rng.vector<F>(J.dim, 2);
            Vec<F> lhs = D.apply(J.jprod(a, b));
            Vec<F> rhs = J.jprod(D.apply(a), b);
            Vec<F> rhs2 = J.jprod(a, D.apply(b));
            for (std::size_t t = 0; t < J.dim; ++t) rhs[t] += rhs2[t];
            if (lhs != rhs) ok = false;
        }
        rep.add("innerder.leibniz", ok);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// structurable
// ---------------------------------------------------------------------------

template <typename F>
Report suite_structurable(Workspace<F>& W, const RunConfig& cfg) {
    using namespace detail_suites;
    Report rep;
    rep.suite = "structurable";
    rep.config = cfg;
    const std::size_t n_quartic = count_of(cfg, 500);

    {
        const std::array<std::size_t, 5> wantA{4, 8, 16, 32, 64};
        const std::array<std::size_t, 5> wantS{3, 7, 8, 10, 14};
        bool okA = true, okS = true, okH = true;
        for (std::size_t i = 0; i < 5; ++i) {
            const auto& A = W.tensor(i);
            if (A.dim != wantA[i]) okA = false;
            if (A.skew.size() != wantS[i]) okS = false;
            if (A.skew.size() + A.herm.size() != A.dim) okH = false;
        }
        rep.add("dims.A.row", okA);
        rep.add("dims.skew.row", okS);
        rep.add("dims.herm.split", okH);
    }

    {
        const std::array<std::size_t, 4> wantF{14, 20, 32, 56};
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& A = W.freudenthal(i);
            if (A.dim != wantF[i] || A.skew.size() != 1) ok = false;
            // skew line spanned by (1, 0, ..., 0, -1)
            Vec<F> span = A.skew[0];
            Vec<F> want(A.dim, F(0));
            want[0] = F(1);
            want[A.dim - 1] = F(-1);
            std::vector<Vec<F>> two{span, want};
            if (span_rank(two).first != 1) ok = false;
        }
        rep.add("dims.F.row", ok);
    }

    {
        const std::array<std::size_t, 5> want{7, 22, 30, 49, 92};
        bool ok = true;
        for (std::size_t i = 0; i < 5; ++i)
            if (W.allison_tensor(i).instrl.dim() != want[i]) ok = false;
        rep.add("dims.instrl.tensor.row", ok);
    }

    {
        const std::array<std::size_t, 4> want{22, 36, 67, 134};
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i)
            if (W.allison_freud(i).instrl.dim() != want[i]) ok = false;
        rep.add("dims.instrl.freudenthal.row", ok);
    }

    const auto& BC = W.tensor(3); // BxC, dim 32
    const auto& CC = W.tensor(4); // CxC, dim 64

    {
        bool ok = BC.conj(BC.unit) == BC.unit;
        for (std::size_t i = 0; i < BC.dim && ok; ++i) {
            if (BC.conj(BC.conj(BC.basis_vec(i))) != BC.basis_vec(i)) ok = false;
            for (std::size_t j = 0; j < BC.dim; ++j) {
                Vec<F> lhs = BC.conj(BC.mul(BC.basis_vec(i), BC.basis_vec(j)));
                Vec<F> rhs = BC.mul(BC.conj(BC.basis_vec(j)), BC.conj(BC.basis_vec(i)));
                if (lhs != rhs) {
                    ok = false;
                    break;
                }
            }
        }
        rep.add("involution.antiauto", ok);
    }

    {
        bool ok = true;
        for (std::size_t i = 0; i < BC.dim && ok; ++i)
            for (std::size_t j = 0; j < BC.dim; ++j) {
                Vec<F> p = skew_pair(BC, BC.basis_vec(i), BC.basis_vec(j));
                Vec<F> c = BC.conj(p);
                for (std::size_t t = 0; t < BC.dim; ++t)
                    if (c[t] != -p[t]) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
        rep.add("skewpair.skew", ok);
    }

    {
        // {x,1,z} = (L_x + R_{x - conj x}) z.
        Rng rng = rng_for(cfg, "structurable", "triple.T");
        bool ok = true;
        for (std::size_t s = 0; s < 500 && ok; ++s) {
            Vec<F> x = rng.vector<F>(BC.dim, 2), z = rng.vector<F>(BC.dim, 2);
            Vec<F> lhs = triple(BC, x, BC.unit, z);
            Vec<F> diff = vsub(x, BC.conj(x));
            Vec<F> rhs = BC.mul(x, z);
            Vec<F> r2 = BC.mul(z, diff);
            for (std::size_t t = 0; t < BC.dim; ++t) rhs[t] += r2[t];
            if (lhs != rhs) ok = false;
        }
        rep.add("triple.T.display", ok);
    }

    {
        // [r,x,y] = -[x,r,y] for skew r.
        Rng rng = rng_for(cfg, "structurable", "skew.assoc");
        bool ok = true;
        for (std::size_t s = 0; s < 200 && ok; ++s) {
            const Vec<F>& r = BC.skew[rng.below(BC.skew.size())];
            Vec<F> x = rng.vector<F>(BC.dim, 2), y = rng.vector<F>(BC.dim, 2);
            Vec<F> lhs = alg_assoc(BC, r, x, y);
            Vec<F> rhs = alg_assoc(BC, x, r, y);
            for (std::size_t t = 0; t < BC.dim; ++t)
                if (lhs[t] != -rhs[t]) {
                    ok = false;
                    break;
                }
        }
        rep.add("skew.assoc.flip", ok);
    }

    {
        // Quartic structurable identity, parallel over pre-drawn samples.
        struct Target {
            const StructurableAlgebra<F>* A;
            const char* tag;
        };
        const std::array<Target, 4> targets{{{&BC, "BxC"},
                                             {&CC, "CxC"},
                                             {&W.freudenthal(0), "Fk"},
                                             {&W.freudenthal(3), "FC"}}};
        for (const auto& t : targets) {
            const auto& A = *t.A;
            Rng rng = rng_for(cfg, "structurable", std::string("quartic.") + t.tag);
            std::vector<Vec<F>> xs, ys, zs;
            for (std::size_t s = 0; s < n_quartic; ++s) {
                xs.push_back(rng.vector<F>(A.dim, 2));
                ys.push_back(rng.vector<F>(A.dim, 2));
                zs.push_back(rng.vector<F>(A.dim, 2));
            }
            std::size_t bad = parallel_first_failure(n_quartic, [&](std::size_t s) {
                Matrix<F> Tz = op_T(A, zs[s]);
                Matrix<F> Vxy = op_V(A, xs[s], ys[s]);
                Matrix<F> lhs = Tz * Vxy - Vxy * Tz;
                Matrix<F> rhs =
                    op_V(A, Tz.apply(xs[s]), ys[s]) - op_V(A, xs[s], op_T(A, A.conj(zs[s])).apply(ys[s]));
                return lhs == rhs;
            });
            rep.add(std::string("quartic.") + t.tag, bad == n_quartic,
                    bad == n_quartic
                        ? nlohmann::ordered_json(nullptr)
                        : nlohmann::ordered_json(
                              {{"x", jvec(xs[bad])}, {"y", jvec(ys[bad])}, {"z", jvec(zs[bad])}}));
        }
    }

    {
        // The uncorrected Freudenthal product variant must fail the quartic
        // identity; both variants' outcomes are recorded.
        auto lit = build_freudenthal(W.jordan(3), true);
        Rng rng = rng_for(cfg, "structurable", "negcontrol.freudenthal");
        auto r = check_structurable(lit, 50, rng);
        auto& c = rep.add("negcontrol.freudenthal.literal", !r.pass);
        c.note = "the symmetric product variant passes (see quartic.FC); the "
                 "literal asymmetric variant fails as expected";
        if (!r.pass)
            c.witness = nlohmann::ordered_json({{"x", jvec(r.counterexample[0])},
                                                {"y", jvec(r.counterexample[1])},
                                                {"z", jvec(r.counterexample[2])}});
    }

    {
        StructurableAlgebra<F> P = BC;
        P.structure(1, 2, 3) += F(1);
        Rng rng = rng_for(cfg, "structurable", "negcontrol.tensor");
        auto r = check_structurable(P, 50, rng);
        rep.add("negcontrol.tensor.perturbed", !r.pass);
    }

    {
        // V_{x,y} = 1/3 T_{2x ybar + ybar x - xbar y + y xbar} + D_{x, ybar};
        // the variant with an unconjugated first product term must fail.
        auto vtd_check = [](const StructurableAlgebra<F>& A, const Vec<F>& x, const Vec<F>& y,
                            bool literal) {
            Vec<F> yb = A.conj(y), xb = A.conj(x);
            Vec<F> m = A.mul(x, literal ? y : yb);
            for (F& t : m) t = t * F(2);
            Vec<F> t2 = A.mul(yb, x), t3 = A.mul(xb, y), t4 = A.mul(y, xb);
            for (std::size_t t = 0; t < A.dim; ++t) m[t] += t2[t] - t3[t] + t4[t];
            for (F& t : m) t = t / F(3);
            Matrix<F> rhs = op_T(A, m) + op_D(A, x, yb);
            return op_V(A, x, y) == rhs;
        };
        bool ok = true;
        for (std::size_t which = 0; which < 2 && ok; ++which) {
            const auto& A = which == 0 ? BC : W.freudenthal(3);
            Rng rng = rng_for(cfg, "structurable", which == 0 ? "VTD.BxC" : "VTD.FC");
            const std::size_t n = which == 0 ? 100 : 200;
            std::vector<Vec<F>> xs, ys;
            for (std::size_t s = 0; s < n; ++s) {
                xs.push_back(rng.vector<F>(A.dim, 2));
                ys.push_back(rng.vector<F>(A.dim, 2));
            }
            std::size_t bad = parallel_first_failure(
                n, [&](std::size_t s) { return vtd_check(A, xs[s], ys[s], false); });
            if (bad != n) ok = false;
        }
        rep.add("identity.VTD", ok);

        Rng rng = rng_for(cfg, "structurable", "VTD.literal");
        bool literal_fails = false;
        for (std::size_t s = 0; s < 5 && !literal_fails; ++s)
            if (!vtd_check(BC, rng.vector<F>(BC.dim, 2), rng.vector<F>(BC.dim, 2), true))
                literal_fails = true;
        auto& c = rep.add("negcontrol.VTD.literal", literal_fails);
        c.note = "the first T-subscript term needs the conjugate (2x ybar, not 2xy)";
    }

    {
        // L_r L_s = (T_{rs} - V_{r,s}) / 2 for skew r, s; the unhalved
        // variant must fail.
        Rng rng = rng_for(cfg, "structurable", "LL");
        const std::size_t n = 200;
        std::vector<const Vec<F>*> rs, ss;
        for (std::size_t s = 0; s < n; ++s) {
            rs.push_back(&CC.skew[rng.below(CC.skew.size())]);
            ss.push_back(&CC.skew[rng.below(CC.skew.size())]);
        }
        std::size_t bad = parallel_first_failure(n, [&](std::size_t s) {
            Matrix<F> lhs = op_LL(CC, *rs[s], *ss[s]) * F(2);
            Matrix<F> rhs = op_T(CC, CC.mul(*rs[s], *ss[s])) - op_V(CC, *rs[s], *ss[s]);
            return lhs == rhs;
        });
        rep.add("identity.LL", bad == n);

        Matrix<F> lhs1 = op_LL(CC, CC.skew[0], CC.skew[1]);
        Matrix<F> rhs1 = op_T(CC, CC.mul(CC.skew[0], CC.skew[1])) - op_V(CC, CC.skew[0], CC.skew[1]);
        auto& c = rep.add("negcontrol.LL.literal", lhs1 != rhs1);
        c.note = "T_{rs} - V_{r,s} equals 2 L_r L_s, not L_r L_s";
    }

    {
        // epsilon and delta on Instrl(BxC).
        const auto& I = W.allison_tensor(3).instrl;
        Matrix<F> id = Matrix<F>::identity(BC.dim);
        bool ex = I.eps(id) == -id;
        Matrix<F> d = I.delta_on_skew(id);
        bool dx = d == Matrix<F>::identity(BC.skew.size()) * F(2);
        rep.add("eps.delta.examples", ex && dx);

        Rng rng = rng_for(cfg, "structurable", "eps");
        bool inv_ok = true, brk_ok = true, del_ok = true;
        for (std::size_t s = 0; s < 200 && (inv_ok || brk_ok || del_ok); ++s) {
            std::size_t t = rng.below(I.dim()), u = rng.below(I.dim());
            Matrix<F> X = I.basis_op(t), Y = I.basis_op(u);
            Matrix<F> Xe = I.eps(X), Ye = I.eps(Y);
            if (I.eps(Xe) != X) inv_ok = false;
            Matrix<F> br = X * Y - Y * X;
            if (I.eps(br) != Xe * Ye - Ye * Xe) brk_ok = false;
            if (I.delta_on_skew(br)
                != I.delta_on_skew(X) * I.delta_on_skew(Y) - I.delta_on_skew(Y) * I.delta_on_skew(X))
                del_ok = false;
        }
        rep.add("eps.involution", inv_ok);
        rep.add("eps.bracket.automorphism", brk_ok);
        rep.add("delta.bracket.homomorphism", del_ok);
    }

    {
        // D_{x,y}: a derivation commuting with the involution.
        Rng rng = rng_for(cfg, "structurable", "D");
        bool ok = true;
        for (std::size_t s = 0; s < 50 && ok; ++s) {
            Vec<F> x = rng.vector<F>(BC.dim, 2), y = rng.vector<F>(BC.dim, 2);
            Matrix<F> D = op_D(BC, x, y);
            Vec<F> a = rng.vector<F>(BC.dim, 2), b = rng.vector<F>(BC.dim, 2);
            Vec<F> lhs = D.apply(BC.mul(a, b));
            Vec<F> rhs = BC.mul(D.apply(a), b);
            Vec<F> r2 = BC.mul(a, D.apply(b));
            for (std::size_t t = 0; t < BC.dim; ++t) rhs[t] += r2[t];
            if (lhs != rhs) ok = false;
            if (D.apply(BC.conj(a)) != BC.conj(D.apply(a))) ok = false;
        }
        rep.add("D.derivation", ok);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// koecher
// ---------------------------------------------------------------------------

template <typename F>
Report suite_koecher(Workspace<F>& W, const RunConfig& cfg) {
    using namespace detail_suites;
    Report rep;
    rep.suite = "koecher";
    rep.config = cfg;

    {
        const std::array<std::size_t, 4> want{21, 35, 66, 133};
        const std::array<std::size_t, 4> want0{9, 17, 36, 79};
        bool ok = true, ok0 = true;
        for (std::size_t i = 0; i < 4; ++i) {
            if (W.koecher_alg(i).lie.dim != want[i]) ok = false;
            if (W.koecher_alg(i).g0.dim() != want0[i]) ok0 = false;
        }
        rep.add("dims.koecher.row", ok);
        rep.add("dims.koecher.g0.row", ok0);
    }

    for (std::size_t i = 0; i < 4; ++i)
        detail_suites::lie_battery(rep, cfg, W.koecher_alg(i).lie, 78);

    {
        // [p(j), m(1)] = 2 L_j in the degree-0 coordinates.
        const auto& K = W.koecher_alg(3);
        const auto& L = K.lie;
        const std::size_t dj = K.J.dim, d0 = K.g0.dim();
        Rng rng = rng_for(cfg, "koecher", "bracket.pm.unit");
        bool ok = true;
        for (std::size_t s = 0; s < 50 && ok; ++s) {
            Vec<F> j = rng.vector<F>(dj, 2);
            Vec<F> p(L.dim, F(0)), m(L.dim, F(0));
            for (std::size_t t = 0; t < dj; ++t) {
                p[dj + d0 + t] = j[t];
                m[t] = K.J.unit[t];
            }
            Vec<F> br = L.bracket(p, m);
            Vec<F> coords = K.g0.coords_or_throw(mat_flat(K.J.Lmat(j) * F(2)), "2 L_j");
            Vec<F> want(L.dim, F(0));
            for (std::size_t t = 0; t < d0; ++t) want[dj + t] = coords[t];
            if (br != want) ok = false;
        }
        rep.add("bracket.pm.unit", ok);
    }

    {
        // Embeddings compose: (J_k in J_K in J_C) vs the direct inclusion.
        const auto& ch = W.chain();
        auto e1 = induced_embedding(W.koecher_alg(0), W.koecher_alg(1),
                                    jordan_embedding(W.jordan(0), W.jordan(1), ch.emb_kK));
        auto e2 = induced_embedding(W.koecher_alg(1), W.koecher_alg(3),
                                    jordan_embedding(W.jordan(1), W.jordan(3), ch.emb_KC));
        auto e3 = induced_embedding(W.koecher_alg(0), W.koecher_alg(3),
                                    jordan_embedding(W.jordan(0), W.jordan(3), ch.emb_kC));
        rep.add("embedding.steps", e1.ok() && e2.ok() && e3.ok());
        rep.add("embedding.compose", e2.map * e1.map == e3.map);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// allison
// ---------------------------------------------------------------------------

template <typename F>
Report suite_allison(Workspace<F>& W, const RunConfig& cfg) {
    using namespace detail_suites;
    Report rep;
    rep.suite = "allison";
    rep.config = cfg;

    {
        const std::array<std::size_t, 5> want{21, 52, 78, 133, 248};
        const std::array<std::size_t, 5> want0{7, 22, 30, 49, 92};
        bool ok = true, ok0 = true;
        for (std::size_t i = 0; i < 5; ++i) {
            if (W.allison_tensor(i).lie.dim != want[i]) ok = false;
            if (W.allison_tensor(i).lie.degree_dim(0) != want0[i]) ok0 = false;
        }
        rep.add("dims.tensor.row", ok);
        rep.add("dims.tensor.g0.row", ok0);
    }

    {
        const std::array<std::size_t, 4> want{52, 78, 133, 248};
        const std::array<std::size_t, 4> want0{22, 36, 67, 134};
        bool ok = true, ok0 = true;
        for (std::size_t i = 0; i < 4; ++i) {
            if (W.allison_freud(i).lie.dim != want[i]) ok = false;
            if (W.allison_freud(i).lie.degree_dim(0) != want0[i]) ok0 = false;
        }
        rep.add("dims.freudenthal.row", ok);
        rep.add("dims.freudenthal.g0.row", ok0);
    }

    for (std::size_t i = 0; i < 5; ++i)
        detail_suites::lie_battery(rep, cfg, W.allison_tensor(i).lie, 78);
    for (std::size_t i = 0; i < 4; ++i)
        detail_suites::lie_battery(rep, cfg, W.allison_freud(i).lie, 78);

    {
        // [zp(r), zm(s)] = L_r L_s in the degree-0 coordinates.
        const auto& A = W.allison_tensor(3); // BxC
        const auto& L = A.lie;
        const std::size_t ds = A.skew.dim(), da = A.A.dim, d0 = A.instrl.dim();
        bool ok = true;
        for (std::size_t u = 0; u < ds && ok; ++u)
            for (std::size_t w = 0; w < ds; ++w) {
                Vec<F> br = L.bracket_basis(ds + 2 * da + d0 + u, w);
                Matrix<F> op = op_LL(A.A, A.A.skew[u], A.A.skew[w]);
                Vec<F> coords = A.instrl.coords_or_throw(op, "L_r L_s");
                Vec<F> want(L.dim, F(0));
                for (std::size_t t = 0; t < d0; ++t) want[ds + da + t] = coords[t];
                if (br != want) {
                    ok = false;
                    break;
                }
            }
        rep.add("bracket.zeta.LL", ok);
    }

    {
        // allison(kxC) embeds in allison(CxC) through unit (x) id.
        const auto& ch = W.chain();
        const auto& src = W.allison_tensor(1);
        const auto& dst = W.allison_tensor(4);
        Matrix<F> emb(dst.A.dim, src.A.dim);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t t = 0; t < 8; ++t) emb(i * 8 + t, t) = ch.emb_kC(i, 0);
        auto e = induced_embedding(src, dst, emb);
        rep.add("embedding.kxC.in.CxC", e.ok());
    }

    {
        // Two-step nilpotent algebra on CxC (+) its skew part: every bracket
        // image lands in the 14-dim z-part, and the z-part is central.
        auto H = heisenberg(W.tensor(4));
        bool ok = H.dim == 78 && H.grading_respected();
        std::vector<char> central(H.dim, 1);
        for (std::size_t m = 0; m < H.dim; ++m)
            for (std::size_t k = 0; k < H.dim; ++k)
                if (!H.entry(m, k).empty()) {
                    central[m] = 0;
                    break;
                }
        Subspace<F> derived(H.dim);
        for (std::size_t i = 0; i < H.dim && ok; ++i)
            for (std::size_t j = i + 1; j < H.dim; ++j) {
                if (!H.entry(i, j).empty()) derived.insert(H.bracket_basis(i, j));
                for (const auto& [m, c] : H.entry(i, j)) {
                    (void)c;
                    if (!central[m]) ok = false;
                }
            }
        for (std::size_t t = 64; t < H.dim; ++t)
            if (!central[t]) ok = false;
        rep.add("heisenberg.CxC", ok && derived.dim() == 14);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// dualpairs
// ---------------------------------------------------------------------------

template <typename F>
Report suite_dualpairs(Workspace<F>& W, const RunConfig& cfg) {
    using namespace detail_suites;
    Report rep;
    rep.suite = "dualpairs";
    rep.config = cfg;
    const auto& ch = W.chain();

    // Operator-span helpers for derivation algebras (treated as abstract
    // Lie algebras of flattened matrices under commutator).
    auto flat_span = [](const std::vector<Matrix<F>>& ops, std::size_t n) {
        Subspace<F> S(n * n);
        for (const auto& m : ops) S.insert(mat_flat(m));
        return S;
    };
    auto commutator_span = [](const std::vector<Matrix<F>>& ops, std::size_t n) {
        Subspace<F> S(n * n);
        for (std::size_t a = 0; a < ops.size(); ++a)
            for (std::size_t b = a + 1; b < ops.size(); ++b)
                S.insert(mat_flat(ops[a] * ops[b] - ops[b] * ops[a]));
        return S;
    };

    {
        auto ders = derivation_algebra(static_cast<const UnitalAlgebra<F>&>(ch.C));
        rep.add("der.C.dim", ders.size() == 14);

        bool leibniz = true;
        for (const auto& D : ders)
            for (std::size_t i = 0; i < 8 && leibniz; ++i)
                for (std::size_t j = 0; j < 8; ++j) {
                    Vec<F> lhs = D.apply(ch.C.mul(ch.C.basis_vec(i), ch.C.basis_vec(j)));
                    Vec<F> rhs = ch.C.mul(D.apply(ch.C.basis_vec(i)), ch.C.basis_vec(j));
                    Vec<F> r2 = ch.C.mul(ch.C.basis_vec(i), D.apply(ch.C.basis_vec(j)));
                    for (std::size_t t = 0; t < 8; ++t) rhs[t] += r2[t];
                    if (lhs != rhs) {
                        leibniz = false;
                        break;
                    }
                }
        rep.add("der.C.leibniz", leibniz);

        auto span = flat_span(ders, 8);
        auto derived = commutator_span(ders, 8);
        bool closed = true;
        for (const auto& v : derived.basis())
            if (!span.contains(v)) closed = false;
        rep.add("der.C.closed", closed);
        rep.add("der.C.perfect", derived.dim() == span.dim());

        // Center: solve sum_i c_i [D_i, D_j] = 0 for all j.
        const std::size_t n = ders.size();
        Matrix<F> M(n * 64, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                Matrix<F> c = ders[i] * ders[j] - ders[j] * ders[i];
                Vec<F> fc = mat_flat(c);
                for (std::size_t t = 0; t < 64; ++t) M(j * 64 + t, i) = fc[t];
            }
        rep.add("der.C.centerless", nullspace(M).empty());
    }

    {
        std::vector<Vec<F>> fixK;
        for (std::size_t i = 0; i < 2; ++i) {
            Vec<F> e(2, F(0));
            e[i] = F(1);
            fixK.push_back(ch.emb_KC.apply(e));
        }
        auto ders = derivation_algebra(static_cast<const UnitalAlgebra<F>&>(ch.C), fixK);
        rep.add("der.C.fixK.dim", ders.size() == 8);
    }

    rep.add("der.k.trivial",
            derivation_algebra(static_cast<const UnitalAlgebra<F>&>(ch.k)).empty());

    // Centralizers of the three dual-pair inclusions.
    auto image_gens = [](const Matrix<F>& m) {
        std::vector<Vec<F>> g;
        for (std::size_t i = 0; i < m.cols(); ++i) {
            Vec<F> e(m.cols(), F(0));
            e[i] = F(1);
            g.push_back(m.apply(e));
        }
        return g;
    };
    auto centralizer_case = [&](Report& r, const std::string& name, const GradedLie<F>& big,
                                const Matrix<F>& map, std::size_t want_dim, bool probe_structure) {
        auto gens = image_gens(map);
        auto Z = centralizer(big, gens);
        r.add("centralizer." + name + ".dim", Z.dim() == want_dim,
              nlohmann::ordered_json({{"dim", Z.dim()}}));
        bool annihilates = true;
        for (const auto& z : Z.basis())
            for (const auto& g : gens)
                if (!is_zero_vec(big.bracket(z, g))) annihilates = false;
        r.add("centralizer." + name + ".annihilates", annihilates);
        r.add("centralizer." + name + ".closed", closed_under_bracket(big, Z));
        if (probe_structure) {
            auto D = derived_subalgebra(big, Z);
            auto C0 = center_of(big, Z);
            r.add("centralizer." + name + ".perfect", D.dim() == Z.dim());
            r.add("centralizer." + name + ".centerless", C0.dim() == 0);
        }
    };

    {
        auto e1 = induced_embedding(W.koecher_alg(0), W.koecher_alg(3),
                                    jordan_embedding(W.jordan(0), W.jordan(3), ch.emb_kC));
        rep.add("embedding.koecher.Jk", e1.ok());
        centralizer_case(rep, "koecher.Jk", W.koecher_alg(3).lie, e1.map, 14, true);

        auto e2 = induced_embedding(W.koecher_alg(1), W.koecher_alg(3),
                                    jordan_embedding(W.jordan(1), W.jordan(3), ch.emb_KC));
        rep.add("embedding.koecher.JK", e2.ok());
        centralizer_case(rep, "koecher.JK", W.koecher_alg(3).lie, e2.map, 8, false);
    }

    {
        const auto& src = W.allison_tensor(1);
        const auto& dst = W.allison_tensor(4);
        Matrix<F> emb(dst.A.dim, src.A.dim);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t t = 0; t < 8; ++t) emb(i * 8 + t, t) = ch.emb_kC(i, 0);
        auto e = induced_embedding(src, dst, emb);
        rep.add("embedding.allison.kxC", e.ok());
        centralizer_case(rep, "allison.kxC", dst.lie, e.map, 14, false);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// cosets
// ---------------------------------------------------------------------------

template <typename F>
Report suite_cosets(Workspace<F>&, const RunConfig& cfg) {
    Report rep;
    rep.suite = "cosets";
    rep.config = cfg;

    Matrix<F> a = weyl_a<F>(), b = weyl_b<F>(), c = weyl_c<F>();
    {
        Matrix<F> want(6, 6);
        for (std::size_t i = 0; i < 6; ++i) want(i, i) = (i == 2 || i == 3) ? F(1) : F(-1);
        rep.add("weyl.a.squared", a * a == want);
        Matrix<F> b2 = b * b;
        rep.add("weyl.b.fourth", b2 * b2 == Matrix<F>::identity(6));
        bool sims = similitude(a) == F(1) && similitude(b) == F(1) && similitude(c) == F(1);
        for (const auto& [name, m] : sigma_reps<F>()) {
            (void)name;
            if (!(similitude(m) == F(1))) sims = false;
        }
        rep.add("weyl.similitudes", sims);
    }

    auto audit = double_coset_audit<F>();
    rep.add("group.order", audit.group_order == 384);
    rep.add("diagonal.order", audit.diagonal_order == 8);
    rep.add("weyl.order", audit.weyl_order == 48);
    rep.add("wj.order", audit.wj_order == 4);
    {
        std::vector<std::size_t> want{4, 4, 8, 16, 16};
        rep.add("coset.count", audit.coset_sizes.size() == 5,
                nlohmann::ordered_json({{"sizes", audit.coset_sizes}}));
        rep.add("coset.sizes", audit.coset_sizes == want);
    }
    rep.add("coset.cover", audit.covers);
    {
        bool minimal = true;
        for (bool m : audit.sigma_minimal) minimal = minimal && m;
        rep.add("sigma.minimal", minimal);
        std::set<std::string> distinct(audit.sigma_coset.begin(), audit.sigma_coset.end());
        rep.add("sigma.distinct", distinct.size() == 5);
    }
    rep.add("audit.pass", audit.pass);
    return rep;
}

// ---------------------------------------------------------------------------
// shalika
// ---------------------------------------------------------------------------

template <typename F>
Report suite_shalika(Workspace<F>&, const RunConfig& cfg) {
    using namespace detail_suites;
    Report rep;
    rep.suite = "shalika";
    rep.config = cfg;

    {
        bool ok = similitude(Matrix<F>::identity(6)) == F(1)
                  && similitude(Matrix<F>::identity(6) * F(3)) == F(9)
                  && similitude(J3mat<F>()) == F(1);
        Rng rng = rng_for(cfg, "shalika", "sim.examples");
        for (std::size_t s = 0; s < 100 && ok; ++s) {
            Matrix<F> g = detail::rand_gl2<F>(rng);
            if (!(similitude(delta3(g)) == det2(g))) ok = false;
            if (!(similitude(eta3(g)) == det2(g))) ok = false;
        }
        rep.add("sim.examples", ok);
    }

    {
        Rng rng = rng_for(cfg, "shalika", "sim.mult");
        auto rand_member = [&rng]() {
            switch (rng.below(4)) {
                case 0: return delta3(detail::rand_gl2<F>(rng));
                case 1: return eta3(detail::rand_gl2<F>(rng));
                case 2:
                    return u3mat(mat2(rng.scalar<F>(), rng.scalar<F>(), rng.scalar<F>(),
                                      rng.scalar<F>()));
            }
            auto sig = sigma_reps<F>();
            auto it = sig.begin();
            std::advance(it, rng.below(sig.size()));
            return it->second;
        };
        const std::size_t n = count_of(cfg, 1000);
        bool mult = true, transp = true;
        for (std::size_t s = 0; s < n && (mult || transp); ++s) {
            Matrix<F> g = rand_member(), h = rand_member();
            auto sg = similitude(g), sh = similitude(h), sgh = similitude(g * h);
            if (!sg || !sh || !sgh || *sgh != *sg * *sh) mult = false;
            auto st = similitude(g.transpose());
            if (!st || *st != *sg) transp = false;
        }
        rep.add("sim.multiplicative", mult);
        rep.add("sim.transpose.stable", transp);
    }

    {
        // u3 membership, Z-solution space, arg conventions.
        Rng rng = rng_for(cfg, "shalika", "u3");
        bool ok = true;
        for (std::size_t s = 0; s < 100 && ok; ++s) {
            Matrix<F> X = mat2(rng.scalar<F>(), rng.scalar<F>(), rng.scalar<F>(), rng.scalar<F>());
            // random Z with Tr(Z) = -det(X)
            F z1 = rng.scalar<F>();
            Matrix<F> Z = mat2(z1, rng.scalar<F>(), rng.scalar<F>(), -z1 - det2(X));
            Matrix<F> u = u3mat(X, Z);
            auto se = ShalikaElement<F>::from_matrix(u);
            if (!se || !(se->arg() == -X.trace())) ok = false;
            auto sd = ShalikaElement<F>::from_matrix(delta3(detail::rand_gl2<F>(rng)));
            if (!sd || !sd->arg().is_zero()) ok = false;
        }
        rep.add("u3.membership", ok);

        // Homogeneous Z-plane Z J + J Z^T = 0 is 3-dimensional.
        Matrix<F> M(4, 4);
        Matrix<F> J = Jmat<F>();
        for (std::size_t v = 0; v < 4; ++v) {
            Matrix<F> Z(2, 2);
            Z(v / 2, v % 2) = F(1);
            Matrix<F> R = Z * J + J * Z.transpose();
            for (std::size_t t = 0; t < 4; ++t) M(t, v) = R(t / 2, t % 2);
        }
        rep.add("u3.Z.affine.dim3", nullspace(M).size() == 3);
    }

    {
        // S closed under product and inverse; arg additive on U3.
        Rng rng = rng_for(cfg, "shalika", "closure");
        auto rand_s = [&rng]() {
            Matrix<F> g = detail::rand_gl2<F>(rng);
            Matrix<F> X = mat2(rng.scalar<F>(), rng.scalar<F>(), rng.scalar<F>(), rng.scalar<F>());
            F z1 = rng.scalar<F>();
            Matrix<F> Z = mat2(z1, rng.scalar<F>(), rng.scalar<F>(), -z1 - det2(X));
            return ShalikaElement<F>::from_blocks(g, X, Z);
        };
        bool closed = true, arg_add = true;
        for (std::size_t s = 0; s < 100 && (closed || arg_add); ++s) {
            auto s1 = rand_s(), s2 = rand_s();
            if (!ShalikaElement<F>::from_matrix(s1.mat * s2.mat)) closed = false;
            if (!ShalikaElement<F>::from_matrix(detail::inv6(s1.mat))) closed = false;
            Matrix<F> X1 = mat2(rng.scalar<F>(), rng.scalar<F>(), rng.scalar<F>(), rng.scalar<F>());
            Matrix<F> X2 = mat2(rng.scalar<F>(), rng.scalar<F>(), rng.scalar<F>(), rng.scalar<F>());
            auto p = ShalikaElement<F>::from_matrix(u3mat(X1) * u3mat(X2));
            if (!p || !(p->arg() == -(X1.trace() + X2.trace()))) arg_add = false;
        }
        rep.add("S.closure", closed);
        rep.add("arg.additive", arg_add);
    }

    {
        Rng rng = rng_for(cfg, "shalika", "levi");
        bool ok = true;
        for (std::size_t s = 0; s < 100 && ok; ++s) {
            Matrix<F> p = detail::rand_gl2<F>(rng), q = detail::rand_gl2<F>(rng);
            Matrix<F> l = delta3(p) * eta3(q);
            auto [pp, qq] = levi_factor(l);
            if (delta3(pp) * eta3(qq) != l) ok = false;
        }
        rep.add("levi.factorization", ok);
    }

    {
        // Conjugation-identity registry: every case over many seeds.
        const std::size_t seeds = count_of(cfg, 100);
        for (const auto& id : dist_case_ids()) {
            std::vector<char> ok(seeds, 1);
            std::vector<std::string> why(seeds);
            parallel_for(seeds, [&](std::size_t s) {
                auto r = dist_case_check<F>(id, cfg.seed + s);
                if (!r.pass()) {
                    ok[s] = 0;
                    for (const auto& a : r.assertions)
                        if (!a.pass) why[s] = a.name;
                }
            });
            std::size_t bad = seeds;
            for (std::size_t s = 0; s < seeds; ++s)
                if (!ok[s]) {
                    bad = s;
                    break;
                }
            rep.add("registry." + id, bad == seeds,
                    bad == seeds ? nlohmann::ordered_json(nullptr)
                                 : nlohmann::ordered_json(
                                       {{"seed", cfg.seed + bad}, {"assertion", why[bad]}}));
        }
    }

    {
        // The natural map S -> GL2(k[e]/e^3), s = Delta(g) u(X,Z) -> g + gX e + gZ e^2.
        Rng rng = rng_for(cfg, "shalika", "dualring");
        auto rand_s = [&rng](bool traceless) {
            Matrix<F> g = detail::rand_gl2<F>(rng);
            F x1 = rng.scalar<F>(), x2 = rng.scalar<F>(), x3 = rng.scalar<F>();
            F x4 = traceless ? -x1 : rng.scalar<F>();
            Matrix<F> X = mat2(x1, x2, x3, x4);
            F z1 = rng.scalar<F>();
            Matrix<F> Z = mat2(z1, rng.scalar<F>(), rng.scalar<F>(), -z1 - det2(X));
            return ShalikaElement<F>::from_blocks(g, X, Z);
        };

        bool round = true, inj = true;
        for (std::size_t s = 0; s < 100 && (round || inj); ++s) {
            auto s1 = rand_s(false), s2 = rand_s(false);
            auto b1 = dual_ring_unmap(dual_ring_map(s1));
            if (!b1 || b1->mat != s1.mat) round = false;
            if (s1.mat != s2.mat && dual_ring_map(s1) == dual_ring_map(s2)) inj = false;
        }
        rep.add("dualring.roundtrip", round);
        rep.add("dualring.injective", inj);

        bool zero_ok = true, zero_closed = true;
        for (std::size_t s = 0; s < 200 && zero_ok; ++s) {
            auto s1 = rand_s(true), s2 = rand_s(true);
            auto prod = ShalikaElement<F>::from_matrix(s1.mat * s2.mat);
            if (!prod) {
                zero_ok = false;
                break;
            }
            if (!prod->X.trace().is_zero()) zero_closed = false;
            if (!(dual_ring_map(*prod) == dual_ring_map(s1) * dual_ring_map(s2))) zero_ok = false;
        }
        rep.add("dualring.hom.tracezero", zero_ok);
        rep.add("dualring.tracezero.closed", zero_closed);

        // The full homomorphism property off the trace-zero subgroup. This
        // check FAILS: no linear change of the (X, Z) coordinates makes the
        // map multiplicative on all of S, and the failure is reported with
        // an explicit witness pair rather than hidden.
        const std::size_t n = count_of(cfg, 1000);
        bool hom = true;
        nlohmann::ordered_json wit;
        for (std::size_t s = 0; s < n && hom; ++s) {
            auto s1 = rand_s(false), s2 = rand_s(false);
            auto prod = ShalikaElement<F>::from_matrix(s1.mat * s2.mat);
            if (!prod) continue;
            if (!(dual_ring_map(*prod) == dual_ring_map(s1) * dual_ring_map(s2))) {
                hom = false;
                wit = {{"s1", jmat(s1.mat)}, {"s2", jmat(s2.mat)}};
            }
        }
        auto& c = rep.add("dualring.hom.general", hom, hom ? nlohmann::ordered_json(nullptr) : wit);
        c.note = "known defect of the claimed embedding: the map is a genuine "
                 "injective homomorphism only on the trace-zero subgroup "
                 "(see dualring.hom.tracezero); off it, multiplicativity fails "
                 "for every linear coordinate change";

        auto tb = dual_ring_tangent_basis<F>();
        rep.add("dualring.tangent.11of12", span_rank(tb).first == 11 && tb[0].size() == 12);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"composition", "jordan",  "structurable",
                                                   "koecher",     "allison", "dualpairs",
                                                   "cosets",      "shalika"};
    return names;
}

template <typename F>
Report run_suite(Workspace<F>& W, const std::string& name, const RunConfig& cfg) {
    if (name == "composition") return suite_composition(W, cfg);
    if (name == "jordan") return suite_jordan(W, cfg);
    if (name == "structurable") return suite_structurable(W, cfg);
    if (name == "koecher") return suite_koecher(W, cfg);
    if (name == "allison") return suite_allison(W, cfg);
    if (name == "dualpairs") return suite_dualpairs(W, cfg);
    if (name == "cosets") return suite_cosets(W, cfg);
    if (name == "shalika") return suite_shalika(W, cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace excalg

#endif // EXCALG_SUITES_HPP
