#include "doctest.h"

#include "fhopf/catalog.hpp"
#include "support.hpp"

using namespace fhopf;
using fhopf::testing::random_vector;
using fhopf::testing::uniform;

namespace {

const RationalField Q;

Vec<Rational> e(Index n, Index i) {
    return unit_vector(Q, n, i);
}

StructureAlgebra<Rational> ground_field() {
    return make_algebra(Q, 1, [](Index, Index) { return e(1, 0); }, e(1, 0));
}

}  // namespace

TEST_CASE("verify_algebra accepts group algebras and Sweedler's algebra") {
    CHECK(verify_algebra(group_algebra(cyclic_group(2), Q).alg).passed());
    CHECK(verify_algebra(group_algebra(dihedral_group(3), Q).alg).passed());
    CHECK(verify_algebra(sweedler().alg).passed());
}

TEST_CASE("verify_algebra reports a perturbed multiplication table") {
    StructureAlgebra<Rational> A = group_algebra(cyclic_group(2), Q).alg;
    A.mul.coeffRef(0, 0) += Rational(1);
    Report r = verify_algebra(A);
    CHECK_FALSE(r.passed());
    REQUIRE(r.find("unit"));
    CHECK(r.find("unit")->detail == "unit law failed at basis 0");
    REQUIRE(r.find("associativity"));
    // (e0 e0) e1 = 2 e1 but e0 (e0 e1) = e1; the triple (0,0,0) itself stays associative
    CHECK(r.find("associativity")->detail == "associativity failed at triple (0,0,1)");
}

TEST_CASE("multiply examples") {
    HopfAlgebra<Rational> C2 = group_algebra(cyclic_group(2), Q);
    Vec<Rational> v(2);
    v << Rational(3), Rational::parse("-1/2");
    CHECK(multiply(C2.alg, C2.alg.unit, v) == v);
    CHECK(multiply(C2.alg, e(2, 1), e(2, 1)) == e(2, 0));

    StructureAlgebra<Rational> H4 = sweedler().alg;
    Vec<Rational> g = e(4, 1), x = e(4, 2);
    CHECK(multiply(H4, x, g) == Vec<Rational>(-multiply(H4, g, x)));
    CHECK(multiply(H4, g, x) == e(4, 3));
    CHECK(multiply(H4, x, x) == Vec<Rational>::Constant(4, Rational(0)));
}

TEST_CASE("tensor algebra examples") {
    StructureAlgebra<Rational> C2 = group_algebra(cyclic_group(2), Q).alg;
    StructureAlgebra<Rational> T = tensor_algebra(C2, C2);
    StructureAlgebra<Rational> K4 = group_algebra(direct_product(cyclic_group(2), cyclic_group(2)), Q).alg;
    CHECK(T == K4);

    StructureAlgebra<Rational> H4 = sweedler().alg;
    CHECK(tensor_algebra(H4, ground_field()) == H4);
    CHECK(tensor_algebra(ground_field(), H4) == H4);

    StructureAlgebra<Rational> HH = tensor_algebra(H4, H4);
    CHECK(HH.dim == 16);
    CHECK(verify_algebra(HH).passed());
}

TEST_CASE("opposite algebra examples") {
    StructureAlgebra<Rational> C3 = group_algebra(cyclic_group(3), Q).alg;
    CHECK(opposite(C3) == C3);

    StructureAlgebra<Rational> H4 = sweedler().alg;
    StructureAlgebra<Rational> op = opposite(H4);
    CHECK_FALSE(op == H4);
    for (Index k = 0; k < 4; ++k) {
        CHECK(op.coeff(2, 1, k) == H4.coeff(1, 2, k));
        CHECK(op.coeff(1, 2, k) == H4.coeff(2, 1, k));
    }
    CHECK(verify_algebra(op).passed());
    CHECK(opposite(op) == H4);
}

TEST_CASE("property: multiplication is bilinear") {
    PrimeField F7(7);
    HopfAlgebra<Fp> T = taft(3, 7, 2);
    for (int trial = 0; trial < 40; ++trial) {
        Vec<Fp> a = random_vector(F7, 9), a2 = random_vector(F7, 9), b = random_vector(F7, 9);
        Fp c = testing::random_scalar(F7);
        CHECK(multiply(T.alg, Vec<Fp>(a + a2), b) == Vec<Fp>(multiply(T.alg, a, b) + multiply(T.alg, a2, b)));
        CHECK(multiply(T.alg, Vec<Fp>(c * a), b) == Vec<Fp>(c * multiply(T.alg, a, b)));
        CHECK(multiply(T.alg, b, Vec<Fp>(a + a2)) == Vec<Fp>(multiply(T.alg, b, a) + multiply(T.alg, b, a2)));
    }
}

TEST_CASE("property: tensor factors commute up to index transposition") {
    std::vector<StructureAlgebra<Rational>> algebras{group_algebra(cyclic_group(3), Q).alg, sweedler().alg,
                                                    group_algebra(dihedral_group(3), Q).alg};
    for (const auto& A : algebras)
        for (const auto& B : algebras) {
            StructureAlgebra<Rational> AB = tensor_algebra(A, B), BA = tensor_algebra(B, A);
            const Index na = A.dim, nb = B.dim;
            auto swap = [&](Index I) { return (I % nb) * na + I / nb; };
            bool same = true;
            for (Index I = 0; I < AB.dim && same; ++I)
                for (Index J = 0; J < AB.dim && same; ++J)
                    for (Index K = 0; K < AB.dim; ++K)
                        if (AB.coeff(I, J, K) != BA.coeff(swap(I), swap(J), swap(K))) {
                            same = false;
                            break;
                        }
            CHECK(same);
        }
}

TEST_CASE("generator-reduced associativity matches the full triple check") {
    StructureAlgebra<Rational> HH = tensor_algebra(sweedler().alg, sweedler().alg);
    Report full = verify_algebra(HH, 100), reduced = verify_algebra(HH, 1);
    CHECK(full.passed());
    CHECK(reduced.passed());
    CHECK(reduced.find("associativity")->detail.find("generator-reduced") == 0);

    std::vector<Index> gens = algebra_generators(HH);
    CHECK(gens.size() < 16);

    // perturb a product not involving the unit; both checks must notice
    for (int trial = 0; trial < 10; ++trial) {
        StructureAlgebra<Rational> bad = HH;
        Index i = uniform(1, 15), j = uniform(1, 15), k = uniform(0, 15);
        bad.mul.coeffRef(k, i * 16 + j) += Rational(1);
        CHECK(verify_algebra(bad, 100).passed() == verify_algebra(bad, 1).passed());
    }
}

TEST_CASE("algebra maps") {
    StructureAlgebra<Rational> H4 = sweedler().alg;
    StructureAlgebra<Rational> C2 = group_algebra(cyclic_group(2), Q).alg;
    Mat<Rational> iota = zeros(Q, 4, 2);
    iota(0, 0) = Rational(1);
    iota(1, 1) = Rational(1);
    CHECK(is_algebra_map(C2, H4, iota));
    iota(1, 1) = Rational(-1);
    CHECK(is_algebra_map(C2, H4, iota));
    iota(0, 0) = Rational(2);
    CHECK_FALSE(is_algebra_map(C2, H4, iota));
}
