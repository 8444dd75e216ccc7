#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <excalg/composition.hpp>
#include <excalg/rng.hpp>
#include <excalg/scalar.hpp>

using namespace excalg;

static const CompositionChain<Rat>& chain() {
    static CompositionChain<Rat> c = build_chain<Rat>();
    return c;
}

TEST_CASE("chain dimensions and units") {
    CHECK(chain().k.dim == 1);
    CHECK(chain().K.dim == 2);
    CHECK(chain().B.dim == 4);
    CHECK(chain().C.dim == 8);
    for (const CompositionAlgebra<Rat>* A : {&chain().k, &chain().K, &chain().B, &chain().C})
        CHECK(A->norm(A->unit) == Rat(1));
}

TEST_CASE("zorn coordinates multiply as vector matrices") {
    const auto& C = chain().C;
    // e1 (v-slot 1) times e2 (v-slot 2) = cross product in the w-slots.
    Vec<Rat> p = C.mul(C.basis_vec(1), C.basis_vec(2));
    CHECK(p == C.basis_vec(6));
    // idempotents: e0 * e0 = e0, e7 * e7 = e7, e0 * e7 = 0.
    CHECK(C.mul(C.basis_vec(0), C.basis_vec(0)) == C.basis_vec(0));
    CHECK(C.mul(C.basis_vec(7), C.basis_vec(7)) == C.basis_vec(7));
    bool zero = true;
    for (const auto& c : C.mul(C.basis_vec(0), C.basis_vec(7)))
        if (!c.is_zero()) zero = false;
    CHECK(zero);
    // unit = e0 + e7
    Vec<Rat> u(8, Rat(0));
    u[0] = Rat(1);
    u[7] = Rat(1);
    CHECK(C.unit == u);
}

TEST_CASE("norm is multiplicative on random octonions") {
    Rng rng = Rng::for_suite(3, "test.norm.mult");
    for (int s = 0; s < 200; ++s) {
        Vec<Rat> x = rng.vector<Rat>(8), y = rng.vector<Rat>(8);
        CHECK(chain().C.norm(chain().C.mul(x, y)) == chain().C.norm(x) * chain().C.norm(y));
    }
}

TEST_CASE("conjugation identities") {
    Rng rng = Rng::for_suite(3, "test.conj");
    for (int s = 0; s < 100; ++s) {
        Vec<Rat> x = rng.vector<Rat>(8);
        // x + conj(x) = Tr(x) 1, x * conj(x) = N(x) 1.
        Vec<Rat> sum = x;
        Vec<Rat> cx = chain().C.conj(x);
        for (std::size_t t = 0; t < 8; ++t) sum[t] += cx[t];
        Rat tr = chain().C.trace(x);
        for (std::size_t t = 0; t < 8; ++t) CHECK(sum[t] == tr * chain().C.unit[t]);
        Vec<Rat> prod = chain().C.mul(x, cx);
        Rat n = chain().C.norm(x);
        for (std::size_t t = 0; t < 8; ++t) CHECK(prod[t] == n * chain().C.unit[t]);
    }
}

TEST_CASE("random isotropic vectors are trace-zero square-zero") {
    Rng rng = Rng::for_suite(5, "test.isotropic");
    for (int s = 0; s < 50; ++s) {
        Vec<Rat> x = random_isotropic(chain().C, rng);
        CHECK(chain().C.norm(x).is_zero());
        CHECK(chain().C.trace(x).is_zero());
        bool sq_zero = true;
        for (const auto& c : chain().C.mul(x, x))
            if (!c.is_zero()) sq_zero = false;
        CHECK(sq_zero);
    }
}

TEST_CASE("nil-space and associator-line audits") {
    // {e1, e6} multiply to zero in every order: a genuine nil-space.
    auto nil = nilspace_audit(chain().C, {chain().C.basis_vec(1), chain().C.basis_vec(6)});
    CHECK(nil.is_nil);
    // The v-slot span is totally isotropic but not nil (e1 e2 = e6); its
    // associators all sit on one line.
    std::vector<Vec<Rat>> span;
    for (std::size_t i = 1; i <= 3; ++i) span.push_back(chain().C.basis_vec(i));
    auto audit = nilspace_audit(chain().C, span);
    CHECK_FALSE(audit.is_nil);
    REQUIRE(audit.associator_line.has_value());
    bool nonzero = false;
    for (const auto& c : *audit.associator_line)
        if (!c.is_zero()) nonzero = true;
    CHECK(nonzero);
    CHECK(audit.line_ok);
}

TEST_CASE("perturbed table breaks norm multiplicativity") {
    UnitalAlgebra<Rat> P = static_cast<const UnitalAlgebra<Rat>&>(chain().C);
    P.structure(1, 2, 0) += Rat(1);
    auto quad = [](const Vec<Rat>& x) { return chain().C.norm_pair(x, x) / Rat(2); };
    Rng rng = Rng::for_suite(3, "test.negcontrol");
    bool broke = false;
    for (int s = 0; s < 100 && !broke; ++s) {
        Vec<Rat> x = rng.vector<Rat>(8), y = rng.vector<Rat>(8);
        if (quad(P.mul(x, y)) != quad(x) * quad(y)) broke = true;
    }
    CHECK(broke);
}

TEST_CASE("embeddings are isometric algebra maps") {
    const auto& B = chain().B;
    for (std::size_t i = 0; i < B.dim; ++i)
        for (std::size_t j = 0; j < B.dim; ++j) {
            Vec<Rat> lhs = chain().emb_BC.apply(B.mul(B.basis_vec(i), B.basis_vec(j)));
            Vec<Rat> rhs =
                chain().C.mul(chain().emb_BC.apply(B.basis_vec(i)), chain().emb_BC.apply(B.basis_vec(j)));
            CHECK(lhs == rhs);
            CHECK(B.norm_pair(B.basis_vec(i), B.basis_vec(j))
                  == chain().C.norm_pair(chain().emb_BC.apply(B.basis_vec(i)),
                                    chain().emb_BC.apply(B.basis_vec(j))));
        }
    CHECK(chain().emb_kC == chain().emb_BC * chain().emb_kB);
}
