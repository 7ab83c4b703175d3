#include "doctest.h"

#include "fhopf/linalg.hpp"
#include "support.hpp"

using namespace fhopf;
using fhopf::testing::random_matrix;
using fhopf::testing::uniform;

namespace {

const RationalField Q;

Mat<Rational> qmat(std::initializer_list<std::initializer_list<long>> rows) {
    Mat<Rational> M(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (auto& r : rows) {
        Index j = 0;
        for (long v : r) M(i, j++) = Rational(v);
        ++i;
    }
    return M;
}

Mat<Fp> fmat(const PrimeField& F, std::initializer_list<std::initializer_list<long>> rows) {
    Mat<Fp> M(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (auto& r : rows) {
        Index j = 0;
        for (long v : r) M(i, j++) = F(v);
        ++i;
    }
    return M;
}

}  // namespace

TEST_CASE("rational scalars stay reduced") {
    Rational a = Rational::parse("6/-4");
    CHECK(a.to_string() == "-3/2");
    CHECK(a.denominator() == 2);
    CHECK((a * Rational(2)).to_string() == "-3");
    CHECK(Rational::parse(" 7 ") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational(0).inverse(), NotInvertible);
}

TEST_CASE("prime field arithmetic and tagging") {
    PrimeField F7(7), F5(5);
    CHECK(F7(10).value() == 3);
    CHECK(F7(-1).value() == 6);
    CHECK((F7(3) * F7(5)).value() == 1);
    CHECK((F7(2).inverse()).value() == 4);
    CHECK_THROWS_AS(F7(0).inverse(), NotInvertible);
    CHECK_THROWS_AS(F7(1) + F5(1), FieldMismatch);
    CHECK(F7.parse("-15").value() == 6);
    CHECK_THROWS_AS(PrimeField(8), std::invalid_argument);

    Fp literal_one(1);
    CHECK((literal_one * F7(3)).value() == 3);
    CHECK((Fp(0) + F7(9)).modulus() == 7);
    CHECK(Fp(7) == F7(0));
    CHECK(F7.format(Fp(-1)) == "6");
}

TEST_CASE("brute-force prime check agrees with trial tables") {
    int count = 0;
    for (std::uint64_t n = 0; n < 100; ++n) count += is_prime(n) ? 1 : 0;
    CHECK(count == 25);
}

TEST_CASE("kernel examples") {
    Mat<Rational> K = kernel(Q, qmat({{1, 1}, {1, 1}}));
    REQUIRE(K.cols() == 1);
    CHECK(K(0, 0) == Rational(-1));
    CHECK(K(1, 0) == Rational(1));

    CHECK(kernel(Q, identity(Q, 3)).cols() == 0);

    PrimeField F7(7);
    Mat<Fp> M = fmat(F7, {{2, 4}});
    Mat<Fp> Kf = kernel(F7, M);
    REQUIRE(Kf.cols() == 1);
    // brute-force oracle over F7^2
    std::vector<std::pair<long, long>> solutions;
    for (long x = 0; x < 7; ++x)
        for (long y = 0; y < 7; ++y)
            if ((2 * x + 4 * y) % 7 == 0) solutions.emplace_back(x, y);
    CHECK(solutions.size() == 7);
    for (auto [x, y] : solutions) {
        bool found = false;
        for (long t = 0; t < 7; ++t)
            if ((F7(t) * Kf(0, 0)).value() == static_cast<std::uint64_t>(x) &&
                (F7(t) * Kf(1, 0)).value() == static_cast<std::uint64_t>(y))
                found = true;
        CHECK(found);
    }
    // the canonical representative has 1 on the free column
    CHECK(Kf(1, 0).value() == 1);
    CHECK(Kf(0, 0).value() == 5);
    CHECK((F7(1) * Kf(0, 0) * F7(2) + Kf(1, 0) * F7(4)).is_zero());
    Mat<Fp> normalised = Kf / Kf(0, 0);
    CHECK(normalised(1, 0).value() == 3);
}

TEST_CASE("solve examples") {
    Vec<Rational> rhs(2);
    rhs << Rational(3), Rational(4);
    auto x = solve(Q, identity(Q, 2), rhs);
    REQUIRE(x);
    CHECK(*x == rhs);

    Vec<Rational> bad(2);
    bad << Rational(1), Rational(3);
    CHECK_FALSE(solve(Q, qmat({{1, 1}, {2, 2}}), bad).has_value());

    Vec<Rational> b(2);
    b << Rational::parse("5/6"), Rational::parse("1/3");
    auto y = solve(Q, qmat({{1, 1}, {0, 1}}), b);
    REQUIRE(y);
    // back-substitution oracle
    Rational y1 = b(1);
    Rational y0 = b(0) - y1;
    CHECK((*y)(0) == y0);
    CHECK((*y)(1) == y1);
    CHECK((*y)(0) == Rational::parse("1/2"));
}

TEST_CASE("kronecker examples") {
    CHECK(kronecker(identity(Q, 2), identity(Q, 2)) == identity(Q, 4));
    CHECK(kronecker(qmat({{2}}), qmat({{3}})) == qmat({{6}}));
    Mat<Rational> A = qmat({{0, 1}, {1, 0}});
    Mat<Rational> B = identity(Q, 2);
    Mat<Rational> K = kronecker(A, B);
    Mat<Rational> oracle = zeros(Q, 4, 4);
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j)
            for (Index k = 0; k < 2; ++k)
                for (Index l = 0; l < 2; ++l) oracle(i * 2 + k, j * 2 + l) = A(i, j) * B(k, l);
    CHECK(K == oracle);
    CHECK(K == qmat({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
}

TEST_CASE("property: rank plus nullity over F7") {
    PrimeField F7(7);
    for (int trial = 0; trial < 60; ++trial) {
        Index r = uniform(1, 8), c = uniform(1, 8);
        Mat<Fp> M = random_matrix(F7, r, c, 0.5);
        Mat<Fp> K = kernel(F7, M);
        CHECK(rank(F7, M) + K.cols() == c);
        CHECK(is_zero_matrix(Mat<Fp>(M * K)));
        CHECK(rank(F7, K) == K.cols());
    }
}

TEST_CASE("property: consistent solves reproduce the right-hand side") {
    PrimeField F7(7);
    for (int trial = 0; trial < 60; ++trial) {
        Index r = uniform(1, 7), c = uniform(1, 7);
        Mat<Fp> M = random_matrix(F7, r, c, 0.6);
        Vec<Fp> x0 = fhopf::testing::random_vector(F7, c);
        Vec<Fp> rhs = M * x0;
        auto x = solve(F7, M, rhs);
        REQUIRE(x);
        CHECK(Vec<Fp>(M * *x) == rhs);
    }
    for (int trial = 0; trial < 30; ++trial) {
        Index n = uniform(1, 5);
        Mat<Rational> M = random_matrix(Q, n, n);
        Vec<Rational> rhs = fhopf::testing::random_vector(Q, n);
        auto x = solve(Q, M, rhs);
        if (x) CHECK(Vec<Rational>(M * *x) == rhs);
        auto inv = inverse(Q, M);
        if (inv) CHECK(is_identity(Mat<Rational>(M * *inv)));
        CHECK(inv.has_value() == (rank(Q, M) == n));
    }
}

TEST_CASE("property: kronecker mixed product") {
    PrimeField F7(7);
    for (int trial = 0; trial < 30; ++trial) {
        Index a = uniform(1, 3), b = uniform(1, 3), c = uniform(1, 3), d = uniform(1, 3), e = uniform(1, 3),
              f = uniform(1, 3);
        Mat<Fp> A = random_matrix(F7, a, b), C = random_matrix(F7, b, c);
        Mat<Fp> B = random_matrix(F7, d, e), D = random_matrix(F7, e, f);
        CHECK(Mat<Fp>(kronecker(A, B) * kronecker(C, D)) == kronecker(Mat<Fp>(A * C), Mat<Fp>(B * D)));
    }
}

TEST_CASE("canonical span depends only on the subspace") {
    PrimeField F7(7);
    for (int trial = 0; trial < 30; ++trial) {
        Index n = uniform(2, 6), k = uniform(1, n);
        Mat<Fp> B = random_matrix(F7, n, k);
        Mat<Fp> change = random_matrix(F7, k, k);
        if (rank(F7, change) != k) continue;
        Mat<Fp> B2 = B * change;
        CHECK(canonical_span(F7, B) == canonical_span(F7, B2));
        CHECK(same_span(F7, B, B2));
    }
}

TEST_CASE("incremental kernel agrees with one-shot kernel") {
    PrimeField F5(5);
    for (int trial = 0; trial < 30; ++trial) {
        Index n = uniform(2, 7);
        Mat<Fp> top = random_matrix(F5, uniform(1, 4), n, 0.4);
        Mat<Fp> bottom = random_matrix(F5, uniform(1, 4), n, 0.4);
        Mat<Fp> all(top.rows() + bottom.rows(), n);
        all << top, bottom;
        IncrementalKernel<Fp> inc(F5, n);
        inc.impose(top);
        inc.impose(bottom);
        CHECK(inc.canonical() == kernel(F5, all));
    }
}

TEST_CASE("matrix order") {
    Mat<Rational> swap = qmat({{0, 1}, {1, 0}});
    CHECK(multiplicative_order(Q, swap, 10) == 2);
    CHECK(multiplicative_order(Q, identity(Q, 3), 10) == 1);
    CHECK_FALSE(multiplicative_order(Q, qmat({{2}}), 10).has_value());
}
