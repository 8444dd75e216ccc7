#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <excalg/report.hpp>
#include <excalg/suites.hpp>
#include <excalg/workspace.hpp>

using namespace excalg;

TEST_CASE("jordan dimensions over the chain") {
    Workspace<Rat> W;
    CHECK(W.jordan(0).dim == 6);
    CHECK(W.jordan(1).dim == 9);
    CHECK(W.jordan(2).dim == 15);
    CHECK(W.jordan(3).dim == 27);
}

TEST_CASE("diagonal examples in the 27-dim algebra") {
    Workspace<Rat> W;
    const auto& J = W.jordan(3);
    Vec<Rat> d = JordanAlgebra<Rat>::diag_elt(Rat(1), Rat(2), Rat(3), J.dim);
    CHECK(J.sharp(d) == JordanAlgebra<Rat>::diag_elt(Rat(6), Rat(3), Rat(2), J.dim));
    CHECK(J.norm(d) == Rat(6));
    CHECK(J.pairing(J.unit, J.unit) == Rat(3));
    CHECK(J.sharp(J.unit) == J.unit);
}

TEST_CASE("adjoint and unit-direction identities") {
    Workspace<Rat> W;
    const auto& J = W.jordan(3);
    Rng rng = Rng::for_suite(11, "test.adjoint");
    for (int s = 0; s < 100; ++s) {
        Vec<Rat> j = rng.vector<Rat>(J.dim, 2);
        Rat n = J.norm(j);
        Vec<Rat> js = J.sharp(j);
        Vec<Rat> lhs = J.sharp(js);
        for (std::size_t t = 0; t < J.dim; ++t) CHECK(lhs[t] == n * j[t]);
        Vec<Rat> u = J.jprod(j, js);
        for (std::size_t t = 0; t < J.dim; ++t) CHECK(u[t] == n * J.unit[t]);
    }
}

TEST_CASE("the cross-product form of the adjoint identity is false") {
    Workspace<Rat> W;
    const auto& J = W.jordan(3);
    Vec<Rat> d = JordanAlgebra<Rat>::diag_elt(Rat(1), Rat(2), Rat(3), J.dim);
    Vec<Rat> lhs = J.cross(d, J.sharp(d));
    Rat n = J.norm(d);
    bool equal = true;
    for (std::size_t t = 0; t < J.dim; ++t)
        if (lhs[t] != n * d[t]) equal = false;
    CHECK_FALSE(equal);
}

TEST_CASE("jordan identity on random elements") {
    Workspace<Rat> W;
    const auto& J = W.jordan(3);
    Rng rng = Rng::for_suite(11, "test.jordan.identity");
    for (int s = 0; s < 100; ++s) {
        Vec<Rat> x = rng.vector<Rat>(J.dim, 2), y = rng.vector<Rat>(J.dim, 2);
        Vec<Rat> x2 = J.jprod(x, x);
        CHECK(J.jprod(J.jprod(x2, y), x) == J.jprod(x2, J.jprod(y, x)));
    }
}

TEST_CASE("the full jordan suite passes over the rationals") {
    Workspace<Rat> W;
    RunConfig cfg;
    cfg.samples = 50;
    Report r = suite_jordan(W, cfg);
    for (const auto& c : r.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("the full jordan suite passes over F_5") {
    Fp::set_modulus(5);
    Workspace<Fp> W;
    RunConfig cfg;
    cfg.field = "fp:5";
    cfg.samples = 50;
    Report r = suite_jordan(W, cfg);
    for (const auto& c : r.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}
