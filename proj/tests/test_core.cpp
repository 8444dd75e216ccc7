#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <excalg/echelon.hpp>
#include <excalg/matrix.hpp>
#include <excalg/parallel.hpp>
#include <excalg/rng.hpp>
#include <excalg/scalar.hpp>
#include <excalg/subspace.hpp>

using namespace excalg;

TEST_CASE("rational arithmetic is exact") {
    Rat a = Rat(1) / Rat(3), b = Rat(1) / Rat(6);
    CHECK(a + b == Rat(1) / Rat(2));
    CHECK((a - a).is_zero());
    CHECK(a * Rat(3) == Rat(1));
    CHECK(Rat::parse("22/7").str() == "22/7");
    CHECK(Rat::parse("-5").str() == "-5");
    CHECK_THROWS(a / Rat(0));
}

TEST_CASE("prime field arithmetic") {
    Fp::set_modulus(101);
    Fp x(45), y(77);
    CHECK(x * x.inv() == Fp(1));
    CHECK((x + y) - y == x);
    CHECK(Fp(-1) == Fp(100));
    CHECK_THROWS(Fp::set_modulus(91)); // 7 * 13
    Fp::set_modulus(101);
}

TEST_CASE("determinant, inverse, solve") {
    Matrix<Rat> m(3, 3);
    long vals[9] = {2, 1, 0, 1, 3, 1, 0, 1, 2};
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = Rat(vals[i]);
    CHECK(bareiss_det(m) == Rat(8));
    Matrix<Rat> inv;
    REQUIRE(invert(m, inv));
    CHECK(m * inv == Matrix<Rat>::identity(3));
    Vec<Rat> b{Rat(1), Rat(0), Rat(1)}, x;
    REQUIRE(solve_linear(m, b, x));
    CHECK(m.apply(x) == b);
}

TEST_CASE("nullspace and span rank") {
    Matrix<Rat> m(2, 3); // rank 1: second row is twice the first
    m(0, 0) = Rat(1);
    m(0, 1) = Rat(2);
    m(0, 2) = Rat(3);
    m(1, 0) = Rat(2);
    m(1, 1) = Rat(4);
    m(1, 2) = Rat(6);
    auto ns = nullspace(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns)
        for (const auto& c : m.apply(v)) CHECK(c.is_zero());

    std::vector<Vec<Rat>> vecs{{Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(5)}};
    CHECK(span_rank(vecs).first == 2);
}

TEST_CASE("subspace coordinates round-trip") {
    Subspace<Rat> S(3);
    CHECK(S.insert({Rat(1), Rat(1), Rat(0)}));
    CHECK(S.insert({Rat(0), Rat(1), Rat(1)}));
    CHECK_FALSE(S.insert({Rat(1), Rat(2), Rat(1)})); // dependent
    CHECK(S.dim() == 2);
    Vec<Rat> v{Rat(2), Rat(5), Rat(3)};
    auto c = S.coords(v);
    REQUIRE(c.has_value());
    Vec<Rat> back(3, Rat(0));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t t = 0; t < 3; ++t) back[t] += (*c)[i] * S.basis()[i][t];
    CHECK(back == v);
    CHECK_FALSE(S.coords({Rat(1), Rat(0), Rat(0)}).has_value());
}

TEST_CASE("rng streams are deterministic and name-separated") {
    Rng a = Rng::for_suite(7, "alpha");
    Rng b = Rng::for_suite(7, "alpha");
    Rng c = Rng::for_suite(7, "beta");
    bool same = true, diff = false;
    for (int i = 0; i < 64; ++i) {
        auto x = a.below(1000), y = b.below(1000), z = c.below(1000);
        if (x != y) same = false;
        if (x != z) diff = true;
    }
    CHECK(same);
    CHECK(diff);
}

TEST_CASE("parallel_for matches serial order-independent results") {
    std::vector<int> out(100, 0);
    parallel_for(100, [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
    for (int i = 0; i < 100; ++i) CHECK(out[i] == i * i);
    CHECK(parallel_first_failure(50, [](std::size_t i) { return i != 31; }) == 31);
    CHECK(parallel_first_failure(50, [](std::size_t) { return true; }) == 50);
}
