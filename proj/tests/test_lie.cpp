#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <excalg/lie.hpp>
#include <excalg/workspace.hpp>

using namespace excalg;

static Workspace<Rat>& ws() {
    static Workspace<Rat> W;
    return W;
}

TEST_CASE("koecher algebra over J_k") {
    const auto& K = ws().koecher_alg(0);
    CHECK(K.lie.dim == 21);
    CHECK(K.g0.dim() == 9);
    CHECK(K.lie.grading_respected());
    CHECK(jacobi_check_exhaustive(K.lie).pass);
    Matrix<Rat> G = killing_gram(K.lie);
    CHECK(certified_rank(G) == 21);
}

TEST_CASE("allison algebra over kxB") {
    const auto& A = ws().allison_tensor(0);
    CHECK(A.lie.dim == 21);
    CHECK(A.lie.degree_dim(0) == 7);
    CHECK(A.lie.degree_dim(2) == 3);
    CHECK(A.lie.degree_dim(-2) == 3);
    CHECK(A.lie.grading_respected());
    CHECK(jacobi_check_exhaustive(A.lie).pass);
    CHECK(certified_rank(killing_gram(A.lie)) == 21);
}

TEST_CASE("killing form is graded-orthogonal") {
    const auto& L = ws().allison_tensor(0).lie;
    Matrix<Rat> G = killing_gram(L);
    for (std::size_t a = 0; a < L.dim; ++a)
        for (std::size_t b = 0; b < L.dim; ++b)
            if (L.degree[a] + L.degree[b] != 0) CHECK(G(a, b).is_zero());
}

TEST_CASE("killing form is ad-invariant on sampled triples") {
    const auto& L = ws().koecher_alg(1).lie; // dim 35
    Matrix<Rat> G = killing_gram(L);
    Rng rng = Rng::for_suite(23, "test.killing.invariance");
    for (int s = 0; s < 500; ++s) {
        std::size_t i = rng.below(L.dim), j = rng.below(L.dim), k = rng.below(L.dim);
        Rat lhs(0), rhs(0);
        for (const auto& [m, c] : L.entry(i, j)) lhs += c * G(m, k);
        for (const auto& [m, c] : L.entry(j, k)) rhs += G(i, m) * c;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("jacobi detector catches a corrupted table") {
    GradedLie<Rat> L = ws().koecher_alg(0).lie;
    // Corrupt one bracket entry; jacobi must now fail.
    Vec<Rat> v = L.bracket_basis(0, 1);
    v[2] += Rat(1);
    L.set_bracket(0, 1, v);
    CHECK_FALSE(jacobi_check_exhaustive(L).pass);
}

TEST_CASE("koecher embeddings compose along the chain") {
    auto& W = ws();
    const auto& ch = W.chain();
    auto e1 = induced_embedding(W.koecher_alg(0), W.koecher_alg(1),
                                jordan_embedding(W.jordan(0), W.jordan(1), ch.emb_kK));
    auto e2 = induced_embedding(W.koecher_alg(1), W.koecher_alg(2),
                                jordan_embedding(W.jordan(1), W.jordan(2), ch.emb_KB));
    auto e3 = induced_embedding(W.koecher_alg(0), W.koecher_alg(2),
                                jordan_embedding(W.jordan(0), W.jordan(2), ch.emb_kB));
    CHECK(e1.ok());
    CHECK(e2.ok());
    CHECK(e3.ok());
    CHECK(e2.map * e1.map == e3.map);
}

TEST_CASE("derivations of the octonions") {
    auto ders = derivation_algebra(static_cast<const UnitalAlgebra<Rat>&>(ws().chain().C));
    CHECK(ders.size() == 14);
    // Closed under commutator.
    Subspace<Rat> span(64);
    for (const auto& d : ders) span.insert(mat_flat(d));
    for (std::size_t a = 0; a < ders.size(); ++a)
        for (std::size_t b = a + 1; b < ders.size(); ++b)
            CHECK(span.contains(mat_flat(ders[a] * ders[b] - ders[b] * ders[a])));
}

TEST_CASE("centralizer machinery on a small case") {
    // The centralizer of the whole algebra is its center: zero here.
    const auto& L = ws().koecher_alg(0).lie;
    auto Z = centralizer(L, whole_space(L).basis());
    CHECK(Z.dim() == 0);
}

TEST_CASE("structure dump is stable and parseable") {
    const auto& L = ws().koecher_alg(0).lie;
    std::string d1 = dump_structure(L), d2 = dump_structure(L);
    CHECK(d1 == d2);
    CHECK(d1.find("\"algebra\"") != std::string::npos);
    CHECK(d1.find("\"dim\":21") != std::string::npos);
}
