#include "fhopf/double.hpp"

#include <tuple>

#include "sparse_ops.hpp"

namespace fhopf {

using detail::Accumulator;

namespace {

template <class S>
using Triple = std::tuple<Index, Index, Index, S>;

/// Precomputed pieces shared by the two straightening rules.
template <class S>
struct DoubleContext {
    const HopfAlgebra<S>& H;
    Index n;
    Mat<S> Sbar;
    SpMat<S> mul_rows;                     // mul transposed: column b is row b of mul
    std::vector<std::vector<Triple<S>>> delta2;       // Delta^2(e_j) = sum c e_p (x) e_q (x) e_r
    std::vector<std::vector<Triple<S>>> dual_delta2;  // Delta^2(e^b) in H*
    std::vector<Mat<S>> sandwich;                     // [r*n+p](b, a): coefficient of e_b in S^-1(e_r) e_a e_p

    explicit DoubleContext(const HopfAlgebra<S>& h)
        : H(h), n(h.dim()), Sbar(antipode_inverse(h)), mul_rows(h.alg.mul.transpose()), delta2(n), dual_delta2(n) {
        for (Index j = 0; j < n; ++j)
            for (typename SpMat<S>::InnerIterator t(H.comul, j); t; ++t) {
                Index s = t.row() / n, r = t.row() % n;
                for (typename SpMat<S>::InnerIterator u(H.comul, s); u; ++u)
                    delta2[j].emplace_back(u.row() / n, u.row() % n, r, t.value() * u.value());
            }
        // Delta_{H*}(e^b) = sum mul(b, u*n+v) e^u (x) e^v
        for (Index b = 0; b < n; ++b)
            for (typename SpMat<S>::InnerIterator t(mul_rows, b); t; ++t) {
                Index s = t.row() / n, w = t.row() % n;
                for (typename SpMat<S>::InnerIterator u(mul_rows, s); u; ++u)
                    dual_delta2[b].emplace_back(u.row() / n, u.row() % n, w, t.value() * u.value());
            }
        std::vector<Mat<S>> right(n);
        for (Index p = 0; p < n; ++p) right[p] = right_multiplication(H.alg, unit_vector(H.field(), n, p));
        for (Index r = 0; r < n; ++r) {
            const Mat<S> left = left_multiplication(H.alg, Vec<S>(Sbar.col(r)));
            for (Index p = 0; p < n; ++p) sandwich.push_back(right[p] * left);
        }
    }
};

template <class S>
Straightening<S> by_actions(const DoubleContext<S>& c, Index j, Index b) {
    const Field<S>& F = c.H.field();
    const Index n = c.n;
    Straightening<S> X = zeros(F, n, n);
    const Vec<S> x = unit_vector(F, n, j);
    for (const auto& [u, v, w, coeff] : c.dual_delta2[b]) {
        RowVec<S> sbar_g1 = c.Sbar.row(u);
        RowVec<S> g3 = unit_vector(F, n, w).transpose();
        Vec<S> h = act_right(c.H, act_left(c.H, sbar_g1, x), g3);
        X.row(v) += coeff * h.transpose();
    }
    return X;
}

template <class S>
Straightening<S> by_bimodule(const DoubleContext<S>& c, Index j, Index b) {
    const Field<S>& F = c.H.field();
    const Index n = c.n;
    Straightening<S> X = zeros(F, n, n);
    // (x_1 g S^-1 x_3)(e_a) = g(S^-1(x_3) e_a x_1)
    for (const auto& [p, q, r, coeff] : c.delta2[j]) {
        const Mat<S>& M = c.sandwich[r * n + p];
        for (Index a = 0; a < n; ++a)
            if (!is_zero(M(b, a))) X(a, q) += coeff * M(b, a);
    }
    return X;
}

template <class S>
std::string basis_name(const HopfAlgebra<S>& H, Index i) {
    return H.names.empty() ? "e" + std::to_string(i) : H.names[i];
}

}  // namespace

template <class S>
Straightening<S> straighten_by_actions(const HopfAlgebra<S>& H, Index j, Index b) {
    return by_actions(DoubleContext<S>(H), j, b);
}

template <class S>
Straightening<S> straighten_by_bimodule(const HopfAlgebra<S>& H, Index j, Index b) {
    return by_bimodule(DoubleContext<S>(H), j, b);
}

template <class S>
std::optional<std::pair<Index, Index>> straightening_mismatch(const HopfAlgebra<S>& H) {
    DoubleContext<S> c(H);
    for (Index j = 0; j < c.n; ++j)
        for (Index b = 0; b < c.n; ++b)
            if (by_actions(c, j, b) != by_bimodule(c, j, b)) return std::make_pair(j, b);
    return std::nullopt;
}

template <class S>
HopfAlgebra<S> drinfeld_double(const HopfAlgebra<S>& H) {
    check_shape(H);
    const Field<S>& F = H.field();
    DoubleContext<S> c(H);
    const Index n = c.n, N = n * n;

    std::vector<Straightening<S>> rules(N);
    for (Index j = 0; j < n; ++j)
        for (Index b = 0; b < n; ++b) {
            rules[j * n + b] = by_actions(c, j, b);
            if (rules[j * n + b] != by_bimodule(c, j, b))
                throw TheoremViolation("straightening rules disagree at basis pair (" + std::to_string(j) + "," +
                                       std::to_string(b) + ")");
        }

    // e^a * e^v = sum_s comul(a*n+v, s) e^s
    const SpMat<S> comul_rows = H.comul.transpose();
    HopfAlgebra<S> D;
    D.alg.field = F;
    D.alg.dim = N;
    std::vector<Eigen::Triplet<S>> triplets;
    Accumulator<S> acc(F, N);
    for (Index a = 0; a < n; ++a)
        for (Index j = 0; j < n; ++j)
            for (Index b = 0; b < n; ++b) {
                const Straightening<S>& X = rules[j * n + b];
                for (Index k = 0; k < n; ++k) {
                    for (Index v = 0; v < n; ++v)
                        for (Index q = 0; q < n; ++q) {
                            if (is_zero(X(v, q))) continue;
                            for (typename SpMat<S>::InnerIterator s(comul_rows, a * n + v); s; ++s)
                                for (typename SpMat<S>::InnerIterator t(H.alg.mul, q * n + k); t; ++t)
                                    acc.add(s.row() * n + t.row(), X(v, q) * s.value() * t.value());
                        }
                    SpVec<S> col = acc.take();
                    const Index column = (a * n + j) * N + (b * n + k);
                    for (typename SpVec<S>::InnerIterator it(col); it; ++it)
                        triplets.emplace_back(it.index(), column, it.value());
                }
            }
    D.alg.mul = SpMat<S>(N, N * N);
    D.alg.mul.setFromTriplets(triplets.begin(), triplets.end());
    D.alg.unit = kronecker(Mat<S>(H.counit.transpose()), Mat<S>(H.alg.unit)).col(0);

    // Delta(e^a (x) e_j) = sum (e^v (x) x_1) (x) (e^u (x) x_2) over Delta_{H*}(e^a) = sum e^u (x) e^v
    triplets.clear();
    for (Index a = 0; a < n; ++a)
        for (Index j = 0; j < n; ++j)
            for (typename SpMat<S>::InnerIterator f(c.mul_rows, a); f; ++f) {
                Index u = f.row() / n, v = f.row() % n;
                for (typename SpMat<S>::InnerIterator x(H.comul, j); x; ++x) {
                    Index x1 = x.row() / n, x2 = x.row() % n;
                    triplets.emplace_back((v * n + x1) * N + (u * n + x2), a * n + j, f.value() * x.value());
                }
            }
    D.comul = SpMat<S>(N * N, N);
    D.comul.setFromTriplets(triplets.begin(), triplets.end());

    D.counit = RowVec<S>(N);
    for (Index a = 0; a < n; ++a)
        for (Index j = 0; j < n; ++j) D.counit(a * n + j) = H.alg.unit(a) * H.counit(j);

    D.antipode = Mat<S>(N, N);
    const Mat<S> eps_col = H.counit.transpose(), unit_col = H.alg.unit;
    for (Index a = 0; a < n; ++a)
        for (Index j = 0; j < n; ++j) {
            Vec<S> sx = kronecker(eps_col, Mat<S>(H.antipode.col(j))).col(0);
            Vec<S> sg = kronecker(Mat<S>(c.Sbar.row(a).transpose()), unit_col).col(0);
            D.antipode.col(a * n + j) = multiply(D.alg, sx, sg);
        }

    for (Index a = 0; a < n; ++a)
        for (Index j = 0; j < n; ++j) D.names.push_back(basis_name(H, a) + "*." + basis_name(H, j));
    return D;
}

template <class S>
Mat<S> embed_hopf_factor(const HopfAlgebra<S>& H) {
    const Index n = H.dim();
    Mat<S> E(n * n, n);
    for (Index j = 0; j < n; ++j)
        E.col(j) = kronecker(Mat<S>(H.counit.transpose()), Mat<S>(unit_vector(H.field(), n, j))).col(0);
    return E;
}

template <class S>
Mat<S> embed_dual_factor(const HopfAlgebra<S>& H) {
    const Index n = H.dim();
    Mat<S> E(n * n, n);
    for (Index a = 0; a < n; ++a)
        E.col(a) = kronecker(Mat<S>(unit_vector(H.field(), n, a)), Mat<S>(H.alg.unit)).col(0);
    return E;
}

template <class S>
DoubleReport<S> double_fh_check(const HopfAlgebra<S>& H) {
    DoubleReport<S> out;
    out.double_algebra = drinfeld_double(H);
    const HopfAlgebra<S>& D = out.double_algebra;
    Report& r = out.report;
    r.merge(verify_hopf(D));
    r.add("dimension", D.dim() == H.dim() * H.dim());
    r.add("straightening rules agree", !straightening_mismatch(H));

    const Mat<S> EH = embed_hopf_factor(H), ED = embed_dual_factor(H);
    r.add("H is a subalgebra", is_algebra_map(H.alg, D.alg, EH));
    r.add("H*cop is a subalgebra", is_algebra_map(dual_hopf(H).alg, D.alg, ED));
    r.add("S'^2 restricts to S^2", Mat<S>(D.antipode * D.antipode * EH) == Mat<S>(EH * H.antipode * H.antipode));

    out.dual_left_integrals = left_dual_integrals(D).cols();
    r.add("left integrals of D(H)* are one-dimensional", out.dual_left_integrals == 1,
          "dimension " + std::to_string(out.dual_left_integrals));
    const Mat<S> left = left_integrals(D);
    out.left_integrals = left.cols();
    out.unimodular = same_span(H.field(), left, right_integrals(D));
    return out;
}

#define FHOPF_INSTANTIATE_DOUBLE(S)                                                                 \
    template Straightening<S> straighten_by_actions(const HopfAlgebra<S>&, Index, Index);           \
    template Straightening<S> straighten_by_bimodule(const HopfAlgebra<S>&, Index, Index);          \
    template std::optional<std::pair<Index, Index>> straightening_mismatch(const HopfAlgebra<S>&);  \
    template HopfAlgebra<S> drinfeld_double(const HopfAlgebra<S>&);                                 \
    template Mat<S> embed_hopf_factor(const HopfAlgebra<S>&);                                       \
    template Mat<S> embed_dual_factor(const HopfAlgebra<S>&);                                       \
    template DoubleReport<S> double_fh_check(const HopfAlgebra<S>&);

FHOPF_INSTANTIATE_DOUBLE(Rational)
FHOPF_INSTANTIATE_DOUBLE(Fp)

}  // namespace fhopf
