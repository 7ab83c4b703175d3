#include "doctest.h"

#include "fhopf/catalog.hpp"
#include "fhopf/separability.hpp"

using namespace fhopf;

namespace {

const RationalField Q;

/// (1/|G|) sum_g g (x) g^-1 straight from the Cayley table.
Vec<Rational> group_idempotent(const CayleyTable& t) {
    const Index n = static_cast<Index>(t.size());
    Vec<Rational> e = Vec<Rational>::Constant(n * n, Rational(0));
    for (Index g = 0; g < n; ++g)
        for (Index h = 0; h < n; ++h)
            if (t[g][h] == 0) e(g * n + h) = Rational(mpz_class(1), mpz_class(n));
    return e;
}

template <class S>
std::vector<HopfAlgebra<S>> small_prime_field_algebras(const Field<S>& F) {
    std::vector<HopfAlgebra<S>> out;
    for (const CayleyTable& G : {cyclic_group(2), cyclic_group(3), cyclic_group(4), cyclic_group(5),
                                 direct_product(cyclic_group(2), cyclic_group(2)), dihedral_group(3)}) {
        out.push_back(group_algebra(G, F));
        out.push_back(dual_hopf(out.back()));
    }
    return out;
}

}  // namespace

TEST_CASE("QC3 is separable with the averaging idempotent") {
    CayleyTable C3 = cyclic_group(3);
    HopfAlgebra<Rational> H = group_algebra(C3, Q);
    IntegralData<Rational> d = build_integral_data(H);
    CHECK((H.counit * d.norm)(0, 0) == Rational(3));
    SeparabilityVerdict<Rational> v = is_separable_hopf(H, d);
    REQUIRE(v.separable);
    REQUIRE(v.certificate);
    CHECK(verify_separability_certificate(H.alg, *v.certificate).passed());
    CHECK(v.certificate->element == group_idempotent(C3));
}

TEST_CASE("F3C3 is not separable and no idempotent exists") {
    HopfAlgebra<Fp> H = group_algebra(cyclic_group(3), PrimeField(3));
    SeparabilityVerdict<Fp> v = is_separable_hopf(H, build_integral_data(H));
    CHECK_FALSE(v.separable);
    CHECK_FALSE(v.certificate);
    IdempotentSearch<Fp> s = search_separability_idempotent(H.alg);
    CHECK(s.ran);
    CHECK_FALSE(s.idempotent);
}

TEST_CASE("Sweedler's algebra is not separable") {
    HopfAlgebra<Rational> H = sweedler();
    IntegralData<Rational> d = build_integral_data(H);
    CHECK(is_zero((H.counit * d.norm)(0, 0)));
    CHECK_FALSE(is_separable_hopf(H, d).separable);
    CHECK_FALSE(search_separability_idempotent(H.alg).ran);
}

TEST_CASE("a certificate with the wrong multiplication is rejected") {
    HopfAlgebra<Rational> H = group_algebra(cyclic_group(3), Q);
    SeparabilityCertificate<Rational> bad{group_idempotent(cyclic_group(3)), SeparabilityKind::ordinary};
    bad.element(0) += Rational(1);
    CHECK_FALSE(verify_separability_certificate(H.alg, bad).passed());
    // 1 (x) 1 has mu = 1 but does not commute with g
    SeparabilityCertificate<Rational> trivial{Vec<Rational>::Constant(9, Rational(0)), SeparabilityKind::ordinary};
    trivial.element(0) = Rational(1);
    Report r = verify_separability_certificate(H.alg, trivial);
    CHECK(r.find("mu(e) = 1")->passed);
    CHECK_FALSE(r.find("a e = e a")->passed);
}

TEST_CASE("separability from a Frobenius system") {
    HopfAlgebra<Rational> C2 = group_algebra(cyclic_group(2), Q);
    FrobeniusSystem<Rational> s2 = frobenius_system_from_norm(C2, build_integral_data(C2));
    Vec<Rational> half = C2.alg.unit / Rational(2);
    auto c2 = separability_from_system(C2.alg, s2, half);
    REQUIRE(c2);
    CHECK(verify_separability_certificate(C2.alg, *c2).passed());
    CHECK_FALSE(separability_from_system(C2.alg, s2, C2.alg.unit));

    HopfAlgebra<Rational> C3 = group_algebra(cyclic_group(3), Q);
    FrobeniusSystem<Rational> s3 = frobenius_system_from_norm(C3, build_integral_data(C3));
    CHECK(separability_from_system(C3.alg, s3, Vec<Rational>(C3.alg.unit / Rational(3))));

    // over F2 every one of the four elements d fails
    PrimeField F2(2);
    HopfAlgebra<Fp> B = group_algebra(cyclic_group(2), F2);
    FrobeniusSystem<Fp> sb = frobenius_system_from_norm(B, build_integral_data(B));
    int found = 0;
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b) {
            Vec<Fp> d(2);
            d << F2(a), F2(b);
            if (separability_from_system(B.alg, sb, d)) ++found;
        }
    CHECK(found == 0);
}

TEST_CASE("strong separability and Kanzaki elements") {
    HopfAlgebra<Rational> S3 = group_algebra(dihedral_group(3), Q);
    IntegralData<Rational> d = build_integral_data(S3);
    FrobeniusSystem<Rational> sys = frobenius_system_from_norm(S3, d);
    CHECK(dual_basis_product(S3.alg, sys) == Vec<Rational>(Rational(6) * S3.alg.unit));
    auto k = strong_separability(S3.alg, sys);
    REQUIRE(k);
    CHECK(k->kind == SeparabilityKind::kanzaki);
    CHECK(verify_separability_certificate(S3.alg, *k).passed());

    HopfAlgebra<Fp> C5 = group_algebra(cyclic_group(5), PrimeField(5));
    FrobeniusSystem<Fp> s5 = frobenius_system_from_norm(C5, build_integral_data(C5));
    CHECK(is_zero_matrix(Mat<Fp>(dual_basis_product(C5.alg, s5))));
    CHECK_FALSE(strong_separability(C5.alg, s5));

    HopfAlgebra<Rational> C2 = group_algebra(cyclic_group(2), Q);
    FrobeniusSystem<Rational> s2 = frobenius_system_from_norm(C2, build_integral_data(C2));
    CHECK(dual_basis_product(C2.alg, s2) == Vec<Rational>(Rational(2) * C2.alg.unit));
    auto k2 = strong_separability(C2.alg, s2);
    REQUIRE(k2);
    Vec<Rational> expected(4);
    expected << Rational(1, 2), Rational(0), Rational(0), Rational(1, 2);
    CHECK(k2->element == expected);
}

TEST_CASE("Etingof-Gelaki check") {
    HopfAlgebra<Rational> S3 = group_algebra(dihedral_group(3), Q);
    Report r = etingof_gelaki_check(S3, build_integral_data(S3));
    CHECK(r.passed());
    REQUIRE(r.find("S^2 = id"));

    HopfAlgebra<Rational> H = sweedler();
    Report rh = etingof_gelaki_check(H, build_integral_data(H));
    CHECK(rh.passed());
    CHECK(rh.find("hypotheses")->detail == "hypotheses not met");

    HopfAlgebra<Fp> D = dual_hopf(group_algebra(cyclic_group(3), PrimeField(7)));
    Report rd = etingof_gelaki_check(D, build_integral_data(D));
    CHECK(rd.passed());
    CHECK(rd.find("S^2 = id"));
}

TEST_CASE("criterion matches the idempotent search over small prime fields") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        PrimeField F(p);
        for (const HopfAlgebra<Fp>& H : small_prime_field_algebras(F)) {
            CAPTURE(p);
            CAPTURE(H.dim());
            IntegralData<Fp> d = build_integral_data(H);
            IdempotentSearch<Fp> s = search_separability_idempotent(H.alg);
            REQUIRE(s.ran);
            CHECK(is_separable_hopf(H, d).separable == s.idempotent.has_value());
            if (s.idempotent) {
                SeparabilityCertificate<Fp> c{*s.idempotent, SeparabilityKind::ordinary};
                CHECK(verify_separability_certificate(H.alg, c).passed());
            }
        }
    }
}

TEST_CASE("property: group algebras are separable iff the order is invertible") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        PrimeField F(p);
        for (const CayleyTable& G : {cyclic_group(2), cyclic_group(3), cyclic_group(5), dihedral_group(3),
                                     cyclic_group(7)}) {
            HopfAlgebra<Fp> H = group_algebra(G, F);
            IntegralData<Fp> d = build_integral_data(H);
            CHECK(d.norm == Vec<Fp>::Constant(H.dim(), F.one()));
            CHECK((H.counit * d.norm)(0, 0) == F(static_cast<long>(G.size())));
            CHECK(is_separable_hopf(H, d).separable == (G.size() % p != 0));
        }
    }
}

TEST_CASE("property: separable entries are unimodular and Kanzaki transposes are idempotents") {
    for (const CatalogEntry& entry : catalog()) {
        CAPTURE(entry.name);
        std::visit(
            [&](const auto& H) {
                using S = typename std::decay_t<decltype(H)>::Scalar;
                auto d = build_integral_data(H);
                auto sys = frobenius_system_from_norm(H, d);
                SeparabilityVerdict<S> v = is_separable_hopf(H, d);
                CHECK(v.separable == entry.separable);
                if (v.separable) CHECK(d.m == H.counit);
                CHECK(etingof_gelaki_check(H, d).passed());

                Vec<S> u = dual_basis_product(H.alg, sys);
                auto k = strong_separability(H.alg, sys);
                CHECK(k.has_value() == (rank(H.field(), left_multiplication(H.alg, u)) == H.dim()));
                if (k) {
                    const Index n = H.dim();
                    Vec<S> t(n * n);
                    for (Index i = 0; i < n; ++i)
                        for (Index j = 0; j < n; ++j) t(j * n + i) = k->element(i * n + j);
                    CHECK(verify_separability_certificate(H.alg, SeparabilityCertificate<S>{t}).passed());
                }
            },
            entry.hopf);
    }
}
