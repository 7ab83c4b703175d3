#include "doctest.h"

#include "fhopf/catalog.hpp"
#include "fhopf/double.hpp"
#include "fhopf/frobenius.hpp"
#include "support.hpp"

using namespace fhopf;

namespace {

const RationalField Q;

int inverse_in(const CayleyTable& t, int x) {
    for (int y = 0; y < static_cast<int>(t.size()); ++y)
        if (t[x][y] == 0) return y;
    return -1;
}

}  // namespace

TEST_CASE("double of QC2") {
    HopfAlgebra<Rational> H = group_algebra(cyclic_group(2), Q);
    DoubleReport<Rational> r = double_fh_check(H);
    const HopfAlgebra<Rational>& D = r.double_algebra;
    CHECK(D.dim() == 4);
    CHECK(r.report.passed());
    CHECK(r.dual_left_integrals == 1);
    CHECK(opposite(D.alg) == D.alg);
    CHECK(same_structure(dual_hopf(dual_hopf(D)), D));
    CHECK(opposite(dual_hopf(D).alg) == dual_hopf(D).alg);
}

TEST_CASE("double of Sweedler's algebra") {
    HopfAlgebra<Rational> H = sweedler();
    DoubleReport<Rational> r = double_fh_check(H);
    const HopfAlgebra<Rational>& D = r.double_algebra;
    CHECK(D.dim() == 16);
    CHECK(r.report.passed());
    CHECK(r.dual_left_integrals == 1);
    CHECK(verify_hopf(D).passed());
    CHECK(D.names[1 * 4 + 2] == "g*.x");

    IntegralData<Rational> d = build_integral_data(D);
    CHECK(verify_radford(D, d).passed());
    FrobeniusSystem<Rational> sys = frobenius_system_from_norm(D, d);
    CHECK(verify_nakayama_closed_form(D, d, sys.nakayama).passed());
    CHECK(compare_systems(D.alg, sys, transform_by_antipode(D, d, sys)).derivative == d.b);
    CHECK_FALSE(opposite(D.alg) == D.alg);
}

TEST_CASE("double of F5C5 is Frobenius although F5C5 is not separable") {
    HopfAlgebra<Fp> H = group_algebra(cyclic_group(5), PrimeField(5));
    DoubleReport<Fp> r = double_fh_check(H);
    CHECK(r.double_algebra.dim() == 25);
    CHECK(r.report.passed());
    CHECK(r.dual_left_integrals == 1);
}

TEST_CASE("straightening in a group double is conjugation") {
    // x delta_b = delta_{x b x^-1} x
    CayleyTable t = dihedral_group(3);
    HopfAlgebra<Rational> H = group_algebra(t, Q);
    for (int x = 0; x < 6; ++x)
        for (int b = 0; b < 6; ++b) {
            Mat<Rational> expected = zeros(Q, 6, 6);
            expected(t[t[x][b]][inverse_in(t, x)], x) = Rational(1);
            CHECK(straighten_by_actions(H, x, b) == expected);
            CHECK(straighten_by_bimodule(H, x, b) == expected);
        }
}

TEST_CASE("the two straightening rules agree on every catalog entry") {
    for (const CatalogEntry& entry : catalog()) {
        CAPTURE(entry.name);
        std::visit([](const auto& H) { CHECK_FALSE(straightening_mismatch(H)); }, entry.hopf);
    }
}

TEST_CASE("property: basis elements factor as (f (x) 1)(1 (x) x)") {
    HopfAlgebra<Fp> H = taft(3, 7, 2);
    HopfAlgebra<Fp> D = drinfeld_double(H);
    const Mat<Fp> EH = embed_hopf_factor(H), ED = embed_dual_factor(H);
    for (Index a = 0; a < 9; ++a)
        for (Index j = 0; j < 9; ++j)
            CHECK(multiply(D.alg, Vec<Fp>(ED.col(a)), Vec<Fp>(EH.col(j))) == unit_vector(H.field(), 81, a * 9 + j));
}

TEST_CASE("property: embeddings are Hopf-compatible on random elements") {
    HopfAlgebra<Rational> H = sweedler();
    HopfAlgebra<Rational> D = drinfeld_double(H);
    const Mat<Rational> EH = embed_hopf_factor(H);
    for (int trial = 0; trial < 20; ++trial) {
        Vec<Rational> x = testing::random_vector(Q, 4), y = testing::random_vector(Q, 4);
        CHECK(Vec<Rational>(EH * multiply(H.alg, x, y)) == multiply(D.alg, Vec<Rational>(EH * x), Vec<Rational>(EH * y)));
        CHECK(Vec<Rational>(D.antipode * EH * x) == Vec<Rational>(EH * H.antipode * x));
        CHECK(coproduct(D, Vec<Rational>(EH * x)) == Vec<Rational>(kronecker(EH, EH) * coproduct(H, x)));
    }
}

TEST_CASE("a corrupted antipode does not produce a valid double") {
    HopfAlgebra<Rational> H = sweedler();
    H.antipode.col(2) = -H.antipode.col(2);
    bool rejected = false;
    try {
        rejected = !verify_hopf(drinfeld_double(H)).passed();
    } catch (const TheoremViolation&) {
        rejected = true;
    }
    CHECK(rejected);
}
