#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <excalg/echelon.hpp>
#include <excalg/gsp6.hpp>
#include <excalg/scalar.hpp>

using namespace excalg;

TEST_CASE("similitude factors") {
    CHECK(similitude(Matrix<Rat>::identity(6)) == Rat(1));
    CHECK(similitude(Matrix<Rat>::identity(6) * Rat(2)) == Rat(4));
    CHECK(similitude(J3mat<Rat>()) == Rat(1));
    Rng rng = Rng::for_suite(31, "test.sim");
    for (int s = 0; s < 50; ++s) {
        Matrix<Rat> g = detail::rand_gl2<Rat>(rng);
        CHECK(similitude(delta3(g)) == det2(g));
        CHECK(similitude(eta3(g)) == det2(g));
        CHECK(similitude(etap3(g)) == Rat(1)); // Delta(g) eta(g^-1): factors cancel
    }
    // A matrix violating the similitude relation has no factor.
    Matrix<Rat> bad = Matrix<Rat>::identity(6);
    bad(0, 1) = Rat(1);
    CHECK_FALSE(similitude(bad).has_value());
}

TEST_CASE("unipotent block and Shalika membership") {
    Rng rng = Rng::for_suite(31, "test.u3");
    for (int s = 0; s < 50; ++s) {
        Matrix<Rat> X =
            mat2(rng.scalar<Rat>(), rng.scalar<Rat>(), rng.scalar<Rat>(), rng.scalar<Rat>());
        Matrix<Rat> u = u3mat(X);
        CHECK(similitude(u) == Rat(1));
        auto se = ShalikaElement<Rat>::from_matrix(u);
        REQUIRE(se.has_value());
        CHECK(se->arg() == -X.trace());
        CHECK(se->X == X);
    }
    // Outside S: the long Weyl-ish flip is not of the Delta * u3 shape.
    CHECK_FALSE(ShalikaElement<Rat>::from_matrix(weyl_b<Rat>()).has_value());
}

TEST_CASE("S is closed under products and inverses") {
    Rng rng = Rng::for_suite(31, "test.closure");
    auto rand_s = [&rng]() {
        Matrix<Rat> g = detail::rand_gl2<Rat>(rng);
        Matrix<Rat> X =
            mat2(rng.scalar<Rat>(), rng.scalar<Rat>(), rng.scalar<Rat>(), rng.scalar<Rat>());
        return ShalikaElement<Rat>::from_blocks(g, X);
    };
    for (int s = 0; s < 50; ++s) {
        auto a = rand_s(), b = rand_s();
        CHECK(ShalikaElement<Rat>::from_matrix(a.mat * b.mat).has_value());
        CHECK(ShalikaElement<Rat>::from_matrix(detail::inv6(a.mat)).has_value());
    }
}

TEST_CASE("weyl double-coset audit") {
    auto audit = double_coset_audit<Rat>();
    CHECK(audit.group_order == 384);
    CHECK(audit.diagonal_order == 8);
    CHECK(audit.weyl_order == 48);
    CHECK(audit.wj_order == 4);
    std::vector<std::size_t> want{4, 4, 8, 16, 16};
    CHECK(audit.coset_sizes == want);
    CHECK(audit.covers);
    CHECK(audit.pass);
    for (bool m : audit.sigma_minimal) CHECK(m);
}

TEST_CASE("conjugation-identity registry cases pass on several seeds") {
    for (const auto& id : dist_case_ids())
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            auto r = dist_case_check<Rat>(id, seed);
            INFO(id << " seed " << seed);
            CHECK(r.pass());
        }
}

TEST_CASE("dual-ring map round-trips and has tangent dimension 11") {
    Rng rng = Rng::for_suite(31, "test.dualring");
    for (int s = 0; s < 50; ++s) {
        Matrix<Rat> g = detail::rand_gl2<Rat>(rng);
        Matrix<Rat> X =
            mat2(rng.scalar<Rat>(), rng.scalar<Rat>(), rng.scalar<Rat>(), rng.scalar<Rat>());
        Rat z1 = rng.scalar<Rat>();
        Matrix<Rat> Z = mat2(z1, rng.scalar<Rat>(), rng.scalar<Rat>(), -z1 - det2(X));
        auto se = ShalikaElement<Rat>::from_blocks(g, X, Z);
        auto back = dual_ring_unmap(dual_ring_map(se));
        REQUIRE(back.has_value());
        CHECK(back->mat == se.mat);
    }
    auto tb = dual_ring_tangent_basis<Rat>();
    CHECK(tb.size() == 11);
    CHECK(span_rank(tb).first == 11);
}

TEST_CASE("levi factorization") {
    Rng rng = Rng::for_suite(31, "test.levi");
    for (int s = 0; s < 50; ++s) {
        Matrix<Rat> p = detail::rand_gl2<Rat>(rng), q = detail::rand_gl2<Rat>(rng);
        auto [pp, qq] = levi_factor(delta3(p) * eta3(q));
        CHECK(pp == p);
        CHECK(qq == q);
    }
}
