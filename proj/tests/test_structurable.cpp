#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <excalg/structurable.hpp>
#include <excalg/workspace.hpp>

using namespace excalg;

static Workspace<Rat>& ws() {
    static Workspace<Rat> W;
    return W;
}

TEST_CASE("tensor and Freudenthal dimensions") {
    const std::size_t wantA[5] = {4, 8, 16, 32, 64};
    const std::size_t wantS[5] = {3, 7, 8, 10, 14};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(ws().tensor(i).dim == wantA[i]);
        CHECK(ws().tensor(i).skew.size() == wantS[i]);
    }
    const std::size_t wantF[4] = {14, 20, 32, 56};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(ws().freudenthal(i).dim == wantF[i]);
        CHECK(ws().freudenthal(i).skew.size() == 1);
    }
}

TEST_CASE("quartic identity on random triples") {
    Rng rng = Rng::for_suite(17, "test.quartic");
    for (const StructurableAlgebra<Rat>* Ap : {&ws().tensor(3), &ws().freudenthal(1)}) {
        const auto& A = *Ap;
        auto r = check_structurable(A, 25, rng);
        INFO(A.name);
        CHECK(r.pass);
    }
}

TEST_CASE("literal Freudenthal product variant fails the quartic identity") {
    auto lit = build_freudenthal(ws().jordan(2), true);
    Rng rng = Rng::for_suite(17, "test.freudenthal.literal");
    auto r = check_structurable(lit, 25, rng);
    CHECK_FALSE(r.pass);
}

TEST_CASE("operator form of D agrees with the associator definition") {
    const auto& A = ws().tensor(3);
    Rng rng = Rng::for_suite(17, "test.D");
    for (int s = 0; s < 10; ++s) {
        Vec<Rat> x = rng.vector<Rat>(A.dim, 2), y = rng.vector<Rat>(A.dim, 2);
        Matrix<Rat> D = op_D(A, x, y);
        for (int t = 0; t < 5; ++t) {
            Vec<Rat> z = rng.vector<Rat>(A.dim, 2);
            // definitional value:
            //   1/3 [[x,y] + [xbar,ybar], z] + [z,y,x] - [z,xbar,ybar]
            Vec<Rat> xb = A.conj(x), yb = A.conj(y);
            Vec<Rat> c = alg_comm(A, x, y);
            Vec<Rat> cb = alg_comm(A, xb, yb);
            for (std::size_t i = 0; i < A.dim; ++i) c[i] += cb[i];
            Vec<Rat> expect = alg_comm(A, c, z);
            for (auto& v : expect) v = v / Rat(3);
            Vec<Rat> a1 = alg_assoc(A, z, y, x);
            Vec<Rat> a2 = alg_assoc(A, z, xb, yb);
            for (std::size_t i = 0; i < A.dim; ++i) expect[i] += a1[i] - a2[i];
            CHECK(D.apply(z) == expect);
        }
    }
}

TEST_CASE("L_r L_s identity with the required factor of two") {
    const auto& A = ws().tensor(4);
    Rng rng = Rng::for_suite(17, "test.LL");
    for (int s = 0; s < 30; ++s) {
        const Vec<Rat>& r = A.skew[rng.below(A.skew.size())];
        const Vec<Rat>& t = A.skew[rng.below(A.skew.size())];
        Matrix<Rat> lhs = op_LL(A, r, t) * Rat(2);
        Matrix<Rat> rhs = op_T(A, A.mul(r, t)) - op_V(A, r, t);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("V operators close in the inner structure span") {
    const auto& A = ws().tensor(0); // kxB, small
    InstrlSpan<Rat> I(A);
    CHECK(I.dim() == 7);
    Rng rng = Rng::for_suite(17, "test.instrl");
    for (int s = 0; s < 20; ++s) {
        Vec<Rat> x = rng.vector<Rat>(A.dim, 2), y = rng.vector<Rat>(A.dim, 2);
        CHECK(I.contains(op_V(A, x, y)));
        std::size_t u = rng.below(I.dim()), w = rng.below(I.dim());
        Matrix<Rat> X = I.basis_op(u), Y = I.basis_op(w);
        CHECK(I.contains(X * Y - Y * X));
    }
}

TEST_CASE("epsilon is an involution intertwined with delta") {
    const auto& A = ws().tensor(0);
    InstrlSpan<Rat> I(A);
    for (std::size_t t = 0; t < I.dim(); ++t) {
        Matrix<Rat> X = I.basis_op(t);
        CHECK(I.eps(I.eps(X)) == X);
        CHECK(I.contains(I.eps(X)));
    }
}
