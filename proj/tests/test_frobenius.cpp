#include "doctest.h"

#include "fhopf/catalog.hpp"
#include "fhopf/frobenius.hpp"
#include "support.hpp"

using namespace fhopf;
using fhopf::testing::random_nonzero;
using fhopf::testing::random_vector;

namespace {

const RationalField Q;

template <class S>
Vec<S> vec(const Field<S>& F, std::initializer_list<long> values) {
    Vec<S> v(static_cast<Index>(values.size()));
    Index i = 0;
    for (long x : values) v(i++) = F(x);
    return v;
}

template <class S>
RowVec<S> covec(const Field<S>& F, std::initializer_list<long> values) {
    return vec(F, values).transpose();
}

/// Characters of a Taft-type algebra on g^i x^j, enumerated from their values on g and x.
template <class S>
std::vector<RowVec<S>> taft_characters(const HopfAlgebra<S>& H, int n, long p) {
    const Field<S>& F = H.field();
    std::vector<RowVec<S>> out;
    for (long vg = 0; vg < p; ++vg)
        for (long vx = 0; vx < p; ++vx) {
            RowVec<S> f(n * n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) {
                    S v = F.one();
                    for (int t = 0; t < i; ++t) v *= F(vg);
                    for (int t = 0; t < j; ++t) v *= F(vx);
                    f(j * n + i) = v;
                }
            if (is_character(H, f)) out.push_back(f);
        }
    return out;
}

template <class S>
void check_entry(const HopfAlgebra<S>& H) {
    IntegralData<S> data = build_integral_data(H);
    FrobeniusSystem<S> sys = frobenius_system_from_norm(H, data);
    CHECK(verify_frobenius_system(H.alg, sys).passed());
    CHECK(verify_nakayama_closed_form(H, data, sys.nakayama).passed());
    CHECK(verify_prop_G(H, data).passed());
    CHECK(verify_radford(H, data).passed());
    CHECK(dual_frobenius_check(H, data).passed());
    CHECK(verify_modular_invariants(H, data, sys).passed());
    Orders o = orders(H, data);
    CHECK(o.antipode_divides);
    CHECK(o.nakayama_divides);

    FrobeniusSystem<S> t = transform_by_antipode(H, data, sys);
    Comparison<S> c = compare_systems(H.alg, sys, t);
    CHECK(c.report.passed());
    CHECK(c.derivative == data.b);
}

}  // namespace

TEST_CASE("dual integrals examples") {
    DualIntegrals<Rational> c2 = dual_integrals(group_algebra(cyclic_group(2), Q));
    CHECK(c2.left == Mat<Rational>(vec(Q, {1, 0})));
    CHECK(c2.right == c2.left);

    DualIntegrals<Rational> h4 = dual_integrals(sweedler());
    CHECK_FALSE(same_span(Q, h4.left, h4.right));

    for (const CayleyTable& G : {cyclic_group(5), dihedral_group(3), quaternion_group()}) {
        DualIntegrals<Rational> d = dual_integrals(group_algebra(G, Q));
        CHECK(same_span(Q, d.left, d.right));
    }

    HopfAlgebra<Rational> broken = group_algebra(cyclic_group(2), Q);
    broken.comul = SpMat<Rational>(4, 2);
    CHECK_THROWS_AS(dual_integrals(broken), InvalidStructure);
}

TEST_CASE("integral data of QC2") {
    HopfAlgebra<Rational> H = group_algebra(cyclic_group(2), Q);
    IntegralData<Rational> d = build_integral_data(H);
    CHECK(d.psi == covec(Q, {1, 0}));
    CHECK(d.norm == vec(Q, {1, 1}));
    CHECK(d.m == H.counit);
    CHECK(d.b == H.alg.unit);
}

TEST_CASE("integral data of Sweedler's algebra") {
    HopfAlgebra<Rational> H = sweedler();
    IntegralData<Rational> d = build_integral_data(H);
    CHECK(d.m == covec(Q, {1, -1, 0, 0}));
    CHECK(d.b == vec(Q, {0, 1, 0, 0}));
    // the left integrals of H, found as a kernel, span (1+g)x
    Mat<Rational> T = left_integrals(H);
    CHECK(same_span(Q, T, Mat<Rational>(vec(Q, {0, 0, 1, 1}))));
    CHECK(same_span(Q, T, Mat<Rational>(d.norm)));
}

TEST_CASE("integral data of taft(3,7,2) against enumerated characters and group-likes") {
    PrimeField F7(7);
    HopfAlgebra<Fp> H = taft(3, 7, 2);
    IntegralData<Fp> d = build_integral_data(H);

    std::vector<RowVec<Fp>> chars = taft_characters(H, 3, 7);
    CHECK(chars.size() == 3);
    const Vec<Fp> T = left_integrals(H).col(0);
    int matches = 0;
    for (const RowVec<Fp>& chi : chars) {
        bool ok = true;
        for (Index a = 0; a < 9; ++a)
            ok = ok && multiply(H.alg, T, unit_vector(F7, 9, a)) == Vec<Fp>(chi(a) * T);
        if (ok) {
            ++matches;
            CHECK(d.m == chi);
        }
    }
    CHECK(matches == 1);
    CHECK(d.m(1) != F7.one());
    CHECK((d.m(1) == F7(2) || d.m(1) == F7(4)));

    matches = 0;
    for (Index i = 0; i < 3; ++i) {
        Vec<Fp> g = unit_vector(F7, 9, i);
        REQUIRE(is_group_like(H, g));
        bool ok = true;
        for (Index k = 0; k < 9; ++k) {
            RowVec<Fp> f = unit_vector(F7, 9, k).transpose();
            ok = ok && convolve(H, d.psi, f) == RowVec<Fp>(f(i) * d.psi);
        }
        if (ok) {
            ++matches;
            CHECK(d.b == g);
        }
    }
    CHECK(matches == 1);

    // values frozen after the enumeration above agreed
    CHECK(d.m == covec(F7, {1, 4, 2, 0, 0, 0, 0, 0, 0}));
    CHECK(d.b == vec(F7, {0, 1, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("an explicit psi outside the integrals is rejected") {
    HopfAlgebra<Rational> H = sweedler();
    CHECK_THROWS_AS(build_integral_data(H, covec(Q, {1, 0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(build_integral_data(H, covec(Q, {0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("Frobenius system from the norm") {
    HopfAlgebra<Rational> C2 = group_algebra(cyclic_group(2), Q);
    FrobeniusSystem<Rational> s2 = frobenius_system_from_norm(C2, build_integral_data(C2));
    REQUIRE(s2.xs.size() == 2);
    CHECK(s2.xs[0] == vec(Q, {1, 0}));
    CHECK(s2.ys[0] == vec(Q, {1, 0}));
    CHECK(s2.xs[1] == vec(Q, {0, 1}));
    CHECK(s2.ys[1] == vec(Q, {0, 1}));
    CHECK(is_identity(s2.nakayama));

    HopfAlgebra<Rational> H = sweedler();
    FrobeniusSystem<Rational> s4 = frobenius_system_from_norm(H, build_integral_data(H));
    CHECK_FALSE(is_identity(s4.nakayama));
    CHECK(Vec<Rational>(s4.nakayama.col(1)) == vec(Q, {0, -1, 0, 0}));

    HopfAlgebra<Fp> T = taft(3, 7, 2);
    IntegralData<Fp> dt = build_integral_data(T);
    FrobeniusSystem<Fp> st = frobenius_system_from_norm(T, dt);
    int ord = orders(T, dt).nakayama;
    CHECK((ord == 3 || ord == 6));
    CHECK(18 % ord == 0);
    CHECK(multiplicative_order(T.field(), st.nakayama, 100) == ord);
}

TEST_CASE("Nakayama closed form") {
    HopfAlgebra<Rational> C2 = group_algebra(cyclic_group(2), Q);
    CHECK(is_identity(nakayama_closed_form(C2, build_integral_data(C2))));

    HopfAlgebra<Rational> H = sweedler();
    IntegralData<Rational> d = build_integral_data(H);
    CHECK(nakayama_closed_form(H, d) == solve_nakayama(H.alg, d.psi));

    HopfAlgebra<Fp> T = taft(3, 7, 2);
    IntegralData<Fp> dt = build_integral_data(T);
    Mat<Fp> closed = nakayama_closed_form(T, dt);
    CHECK(closed == solve_nakayama(T.alg, dt.psi));
    Mat<Fp> Sbar = antipode_inverse(T);
    CHECK(closed != Mat<Fp>(Sbar * Sbar));

    Mat<Rational> wrong = identity(Q, 4);
    CHECK_FALSE(verify_nakayama_closed_form(H, d, wrong).passed());
}

TEST_CASE("compare_systems examples") {
    HopfAlgebra<Rational> H = sweedler();
    IntegralData<Rational> d = build_integral_data(H);
    FrobeniusSystem<Rational> sys = frobenius_system_from_norm(H, d);

    Comparison<Rational> same = compare_systems(H.alg, sys, sys);
    CHECK(same.derivative == H.alg.unit);
    CHECK(same.report.passed());

    Vec<Rational> g = vec(Q, {0, 1, 0, 0});
    FrobeniusSystem<Rational> shifted =
        frobenius_system_from_functional(H.alg, RowVec<Rational>(d.psi * left_multiplication(H.alg, g)));
    CHECK(verify_frobenius_system(H.alg, shifted).passed());
    Comparison<Rational> c = compare_systems(H.alg, sys, shifted);
    CHECK(c.derivative == g);
    CHECK(c.report.passed());

    FrobeniusSystem<Rational> t = transform_by_antipode(H, d, sys);
    CHECK(compare_systems(H.alg, sys, t).derivative == g);

    FrobeniusSystem<Rational> zero = sys;
    zero.psi = covec(Q, {0, 0, 0, 0});
    CHECK_THROWS_AS(compare_systems(H.alg, sys, zero), InvalidStructure);
}

TEST_CASE("transform_by_antipode examples") {
    HopfAlgebra<Rational> C3 = group_algebra(cyclic_group(3), Q);
    IntegralData<Rational> d3 = build_integral_data(C3);
    FrobeniusSystem<Rational> t3 = transform_by_antipode(C3, d3, frobenius_system_from_norm(C3, d3));
    CHECK(is_identity(t3.nakayama));
    CHECK(t3.psi == RowVec<Rational>(d3.psi * antipode_inverse(C3)));

    // S^2(x) = -x and (-x) <- m = x; S^2(g) = g and g <- m = -g
    HopfAlgebra<Rational> H = sweedler();
    IntegralData<Rational> d = build_integral_data(H);
    FrobeniusSystem<Rational> sys = frobenius_system_from_norm(H, d);
    FrobeniusSystem<Rational> t = transform_by_antipode(H, d, sys);
    Mat<Rational> alpha = zeros(Q, 4, 4);
    alpha(0, 0) = Rational(1);
    alpha(1, 1) = Rational(-1);
    alpha(2, 2) = Rational(1);
    alpha(3, 3) = Rational(-1);
    CHECK(t.nakayama == alpha);

    // a second transform gives psi o S^-2 = psi(b (-) b^-1) = psi d with d = nu(b^-1) b,
    // which is -1 here since nu(g) = -g
    FrobeniusSystem<Rational> twice = transform_by_anti_automorphism(H.alg, t, antipode_inverse(H));
    Comparison<Rational> c2 = compare_systems(H.alg, sys, twice);
    CHECK(c2.report.passed());
    Vec<Rational> binv = H.antipode * d.b;
    CHECK(c2.derivative == multiply(H.alg, Vec<Rational>(sys.nakayama * binv), d.b));
    CHECK(c2.derivative == vec(Q, {-1, 0, 0, 0}));

    FrobeniusSystem<Rational> foreign = frobenius_system_from_functional(H.alg, covec(Q, {0, 0, 1, 0}));
    CHECK_THROWS_AS(transform_by_antipode(H, d, foreign), std::invalid_argument);
}

TEST_CASE("psi o S^-1 = psi b") {
    HopfAlgebra<Rational> C2 = group_algebra(cyclic_group(2), Q);
    IntegralData<Rational> d2 = build_integral_data(C2);
    CHECK(verify_prop_G(C2, d2).passed());
    CHECK(RowVec<Rational>(d2.psi * antipode_inverse(C2)) == d2.psi);

    HopfAlgebra<Rational> H = sweedler();
    IntegralData<Rational> d = build_integral_data(H);
    Vec<Rational> g = vec(Q, {0, 1, 0, 0});
    CHECK(RowVec<Rational>(d.psi * antipode_inverse(H)) == RowVec<Rational>(d.psi * left_multiplication(H.alg, g)));
    CHECK(verify_prop_G(H, d).passed());

    HopfAlgebra<Fp> T = taft(3, 7, 2);
    CHECK(verify_prop_G(T, build_integral_data(T)).passed());
}

TEST_CASE("Radford's formula") {
    HopfAlgebra<Rational> C4 = group_algebra(cyclic_group(4), Q);
    IntegralData<Rational> d4 = build_integral_data(C4);
    CHECK(verify_radford(C4, d4).passed());
    CHECK(is_identity(Mat<Rational>(C4.antipode * C4.antipode)));

    // a = x: S^4(x) = x and g (m -> x <- m^-1) g = g(-x)g = x
    HopfAlgebra<Rational> H = sweedler();
    IntegralData<Rational> d = build_integral_data(H);
    Vec<Rational> x = vec(Q, {0, 0, 1, 0}), g = vec(Q, {0, 1, 0, 0});
    Vec<Rational> inner = act_right(H, act_left(H, d.m, x), RowVec<Rational>(d.m * H.antipode));
    CHECK(inner == Vec<Rational>(-x));
    CHECK(multiply(H.alg, multiply(H.alg, g, inner), g) == x);
    Report r = verify_radford(H, d);
    CHECK(r.passed());
    CHECK(r.checks().size() == 4);
    CHECK(r.find("radford at x"));

    HopfAlgebra<Fp> T = taft(4, 5, 2);
    Mat<Fp> S2 = T.antipode * T.antipode;
    CHECK_FALSE(is_identity(Mat<Fp>(S2 * S2)));
    CHECK(verify_radford(T, build_integral_data(T)).passed());

    IntegralData<Rational> bad = d;
    bad.b = H.alg.unit;
    CHECK_FALSE(verify_radford(H, bad).passed());
}

TEST_CASE("orders of S and nu") {
    HopfAlgebra<Rational> C2 = group_algebra(cyclic_group(2), Q);
    CHECK(orders(C2, build_integral_data(C2)).antipode == 1);

    HopfAlgebra<Rational> H = sweedler();
    Orders o = orders(H, build_integral_data(H));
    CHECK(o.antipode == 4);
    CHECK(o.antipode_squared == 2);
    CHECK(o.antipode_divides);
    CHECK(o.nakayama_divides);

    HopfAlgebra<Fp> T = taft(3, 7, 2);
    Orders ot = orders(T, build_integral_data(T));
    CHECK(ot.antipode == 6);
    CHECK(36 % ot.antipode == 0);
}

TEST_CASE("the norm as a Frobenius homomorphism of the dual") {
    HopfAlgebra<Rational> C2 = group_algebra(cyclic_group(2), Q);
    IntegralData<Rational> d2 = build_integral_data(C2);
    Report r2 = dual_frobenius_check(C2, d2);
    CHECK(r2.passed());
    CHECK(act_left(C2, d2.psi, d2.norm) == C2.alg.unit);
    CHECK(same_span(Q, left_integrals(C2), Mat<Rational>(vec(Q, {1, 1}))));

    HopfAlgebra<Rational> H = sweedler();
    IntegralData<Rational> d = build_integral_data(H);
    CHECK(dual_frobenius_check(H, d).passed());
    CHECK(same_span(Q, Mat<Rational>(d.norm), Mat<Rational>(vec(Q, {0, 0, 1, 1}))));
}

TEST_CASE("every catalog entry satisfies the Frobenius identities") {
    for (const CatalogEntry& entry : catalog()) {
        CAPTURE(entry.name);
        std::visit([](const auto& H) { check_entry(H); }, entry.hopf);
    }
}

TEST_CASE("catalog flags agree with the computed modular data") {
    for (const CatalogEntry& entry : catalog()) {
        CAPTURE(entry.name);
        std::visit(
            [&](const auto& H) {
                auto d = build_integral_data(H);
                CHECK((d.m == H.counit) == entry.unimodular);
                CHECK(is_identity(decltype(H.antipode)(H.antipode * H.antipode)) == entry.involutive);
            },
            entry.hopf);
    }
}

TEST_CASE("property: rescaling psi leaves m, b, nu and Radford unchanged") {
    for (const CatalogEntry& entry : catalog()) {
        CAPTURE(entry.name);
        std::visit(
            [](const auto& H) {
                using S = typename std::decay_t<decltype(H)>::Scalar;
                auto base = build_integral_data(H);
                Mat<S> nu = frobenius_system_from_norm(H, base).nakayama;
                for (int trial = 0; trial < 3; ++trial) {
                    S c = random_nonzero(H.field());
                    auto scaled = build_integral_data(H, RowVec<S>(c * base.psi));
                    CHECK(scaled.m == base.m);
                    CHECK(scaled.b == base.b);
                    CHECK(scaled.norm == Vec<S>(base.norm / c));
                    CHECK(frobenius_system_from_norm(H, scaled).nakayama == nu);
                    CHECK(verify_radford(H, scaled).passed());
                }
            },
            entry.hopf);
    }
}

TEST_CASE("property: compare_systems recovers a random invertible derivative") {
    HopfAlgebra<Fp> T = taft(3, 7, 2);
    IntegralData<Fp> d = build_integral_data(T);
    FrobeniusSystem<Fp> sys = frobenius_system_from_norm(T, d);
    int tried = 0;
    for (int trial = 0; trial < 40 && tried < 15; ++trial) {
        Vec<Fp> u = random_vector(T.field(), 9);
        if (rank(T.field(), left_multiplication(T.alg, u)) != 9) continue;
        ++tried;
        RowVec<Fp> phi = d.psi * left_multiplication(T.alg, u);
        FrobeniusSystem<Fp> other = frobenius_system_from_functional(T.alg, phi);
        CHECK(verify_frobenius_system(T.alg, other).passed());
        Comparison<Fp> c = compare_systems(T.alg, sys, other);
        CHECK(c.derivative == u);
        CHECK(c.report.passed());
    }
    CHECK(tried > 5);
}

TEST_CASE("Nakayama automorphism sends the left norm to a right integral") {
    // nu(x) = -x and nu(gx) = gx, so nu((1+g)x) = (g-1)x, a right and not a left integral
    HopfAlgebra<Rational> H = sweedler();
    IntegralData<Rational> d = build_integral_data(H);
    Vec<Rational> image = frobenius_system_from_norm(H, d).nakayama * d.norm;
    CHECK(same_span(Q, Mat<Rational>(image), Mat<Rational>(vec(Q, {0, 0, -1, 1}))));
    CHECK(same_span(Q, Mat<Rational>(image), right_integrals(H)));
    CHECK_FALSE(same_span(Q, Mat<Rational>(image), left_integrals(H)));
}

TEST_CASE("property: a broken dual-basis list is detected") {
    HopfAlgebra<Rational> H = sweedler();
    FrobeniusSystem<Rational> sys = frobenius_system_from_norm(H, build_integral_data(H));
    for (size_t i = 0; i < sys.ys.size(); ++i) {
        FrobeniusSystem<Rational> bad = sys;
        bad.ys[i] = Vec<Rational>(bad.ys[i] * Rational(2));
        CHECK_FALSE(verify_frobenius_system(H.alg, bad).passed());
    }
}
