#include "fhopf/subext.hpp"

#include <stdexcept>

#include "fhopf/catalog.hpp"

namespace fhopf {

namespace {

template <class S>
Mat<S> nakayama_of(const HopfAlgebra<S>& H, const IntegralData<S>& data) {
    return solve_nakayama(H.alg, data.psi);
}

/// Matrix with column vec index c*rows + r for E(r, c).
template <class S>
Vec<S> vec_columns(const Mat<S>& E) {
    Vec<S> v(E.size());
    for (Index c = 0; c < E.cols(); ++c)
        for (Index r = 0; r < E.rows(); ++r) v(c * E.rows() + r) = E(r, c);
    return v;
}

template <class S>
Mat<S> unvec_columns(const Vec<S>& v, Index rows) {
    const Index cols = v.size() / rows;
    Mat<S> E(rows, cols);
    for (Index c = 0; c < cols; ++c)
        for (Index r = 0; r < rows; ++r) E(r, c) = v(c * rows + r);
    return E;
}

template <class S>
Mat<S> act(const Field<S>& F, const RightModule<S>& M, const Vec<S>& a) {
    Mat<S> out = zeros(F, M.dim(), M.dim());
    for (Index c = 0; c < a.size(); ++c)
        if (!is_zero(a(c))) out += a(c) * M.action[c];
    return out;
}

template <class S>
Mat<S> hstack(const std::vector<Mat<S>>& blocks, Index rows) {
    Index cols = 0;
    for (const Mat<S>& b : blocks) cols += b.cols();
    Mat<S> out(rows, cols);
    Index at = 0;
    for (const Mat<S>& b : blocks) {
        out.middleCols(at, b.cols()) = b;
        at += b.cols();
    }
    return out;
}

template <class S>
Mat<S> x_to_E_x(const SubalgebraEmbedding<S>& emb, const Mat<S>& E) {
    const Field<S>& F = emb.H.field();
    const Index h = emb.H.dim();
    Mat<S> Phi(E.size(), h);
    for (Index t = 0; t < h; ++t)
        Phi.col(t) = vec_columns(Mat<S>(E * left_multiplication(emb.H.alg, unit_vector(F, h, t))));
    return Phi;
}

}  // namespace

template <class S>
Report verify_embedding(const SubalgebraEmbedding<S>& emb) {
    const HopfAlgebra<S>& K = emb.K;
    const HopfAlgebra<S>& H = emb.H;
    const Mat<S>& iota = emb.iota;
    check_shape(K);
    check_shape(H);
    if (iota.rows() != H.dim() || iota.cols() != K.dim())
        throw std::invalid_argument("embedding matrix must be dim H x dim K");
    if (rank(H.field(), iota) != K.dim()) throw std::invalid_argument("embedding is not injective");

    Report r;
    r.add("algebra map", is_algebra_map(K.alg, H.alg, iota));
    r.add("coproduct", Mat<S>(H.comul * iota) == Mat<S>(kronecker(iota, iota) * K.comul));
    r.add("counit", RowVec<S>(H.counit * iota) == K.counit);
    r.add("antipode", Mat<S>(H.antipode * iota) == Mat<S>(iota * K.antipode));
    const Mat<S> nu = nakayama_of(H, build_integral_data(H));
    r.add("nakayama preserves K", same_span(H.field(), Mat<S>(nu * iota), iota));
    return r;
}

template <class S>
SubalgebraEmbedding<S> cyclic_subalgebra(const HopfAlgebra<S>& H, const Vec<S>& g) {
    if (!is_group_like(H, g)) throw std::invalid_argument("generator is not group-like");
    std::vector<Vec<S>> powers{H.alg.unit};
    for (;;) {
        Vec<S> next = multiply(H.alg, powers.back(), g);
        if (next == H.alg.unit) break;
        powers.push_back(next);
        if (static_cast<Index>(powers.size()) > H.dim()) throw std::invalid_argument("group-like of unbounded order");
    }
    const int n = static_cast<int>(powers.size());
    SubalgebraEmbedding<S> emb;
    emb.K = group_algebra(cyclic_group(n), H.field());
    emb.H = H;
    emb.iota = Mat<S>(H.dim(), n);
    for (int i = 0; i < n; ++i) emb.iota.col(i) = powers[i];
    return emb;
}

template <class S>
SubalgebraEmbedding<S> identity_embedding(const HopfAlgebra<S>& H) {
    return SubalgebraEmbedding<S>{H, H, identity(H.field(), H.dim())};
}

template <class S>
RelativeNakayama<S> relative_nakayama(const SubalgebraEmbedding<S>& emb) {
    const Field<S>& F = emb.H.field();
    const IntegralData<S> dH = build_integral_data(emb.H), dK = build_integral_data(emb.K);
    const Mat<S> nuH = nakayama_of(emb.H, dH), nuK = nakayama_of(emb.K, dK);
    if (!same_span(F, Mat<S>(nuH * emb.iota), emb.iota))
        throw TheoremViolation("Nakayama automorphism of H does not preserve K");

    RelativeNakayama<S> out;
    auto restricted = solve_many(F, emb.iota, Mat<S>(*inverse(F, nuH) * emb.iota));
    if (!restricted) throw TheoremViolation("inverse Nakayama automorphism of H does not preserve K");
    out.by_composition = nuK * *restricted;

    const RowVec<S> mH_inverse_on_K = dH.m * emb.H.antipode * emb.iota;
    out.character = convolve(emb.K, dK.m, mH_inverse_on_K);
    out.by_character = act_left_matrix(emb.K, out.character);

    Report& r = out.report;
    r.add("character", is_character(emb.K, out.character));
    r.add("composition equals character action", out.by_composition == out.by_character);
    r.add("beta is an automorphism", is_algebra_map(emb.K.alg, emb.K.alg, out.by_composition) &&
                                         rank(F, out.by_composition) == emb.K.dim());
    return out;
}

template <class S>
std::optional<std::vector<Vec<S>>> right_free_basis(const SubalgebraEmbedding<S>& emb) {
    const Field<S>& F = emb.H.field();
    const Index h = emb.H.dim(), k = emb.K.dim();
    std::vector<Vec<S>> us;
    Mat<S> span(h, 0);
    for (Index j = 0; j < h && span.cols() < h; ++j) {
        const Vec<S> u = unit_vector(F, h, j);
        Mat<S> grown(h, span.cols() + k);
        grown << span, left_multiplication(emb.H.alg, u) * emb.iota;
        if (rank(F, grown) == span.cols() + k) {
            us.push_back(u);
            span = grown;
        }
    }
    if (span.cols() != h) return std::nullopt;
    return us;
}

template <class S>
Mat<S> twisted_bimodule_maps(const SubalgebraEmbedding<S>& emb, const Mat<S>& beta) {
    const Field<S>& F = emb.H.field();
    const Index h = emb.H.dim(), k = emb.K.dim();
    const Mat<S> Ih = identity(F, h), Ik = identity(F, k);
    IncrementalKernel<S> space(F, k * h);
    for (Index a = 0; a < k; ++a) {
        const Vec<S> ea = unit_vector(F, k, a), ia = emb.iota.col(a);
        const Mat<S> left_K = left_multiplication(emb.K.alg, Vec<S>(beta * ea));
        const Mat<S> left_H = left_multiplication(emb.H.alg, ia);
        space.impose(kronecker(Ih, left_K) - kronecker(Mat<S>(left_H.transpose()), Ik));
        const Mat<S> right_K = right_multiplication(emb.K.alg, ea);
        const Mat<S> right_H = right_multiplication(emb.H.alg, ia);
        space.impose(kronecker(Ih, right_K) - kronecker(Mat<S>(right_H.transpose()), Ik));
    }
    return space.canonical();
}

template <class S>
Index frobenius_rank(const SubalgebraEmbedding<S>& emb, const Mat<S>& E) {
    return rank(emb.H.field(), x_to_E_x(emb, E));
}

template <class S>
RelativeFrobeniusData<S> beta_frobenius_structure(const SubalgebraEmbedding<S>& emb, const Mat<S>& beta) {
    const Field<S>& F = emb.H.field();
    const Index h = emb.H.dim(), k = emb.K.dim();
    RelativeFrobeniusData<S> out;
    out.beta = beta;
    const Mat<S> maps = twisted_bimodule_maps(emb, beta);
    out.bimodule_maps = maps.cols();
    if (maps.cols() == 0) throw TheoremViolation("no twisted bimodule map H -> K");

    std::vector<Vec<S>> candidates;
    for (Index i = 0; i < maps.cols(); ++i) candidates.push_back(maps.col(i));
    Vec<S> combined = Vec<S>::Constant(k * h, F.zero());
    for (Index i = 0; i < maps.cols(); ++i) combined += F(static_cast<long>(i + 1)) * maps.col(i);
    candidates.push_back(combined);
    bool found = false;
    for (const Vec<S>& c : candidates) {
        const Mat<S> E = unvec_columns(c, k);
        if (frobenius_rank(emb, E) == h) {
            out.E = E;
            found = true;
            break;
        }
    }
    if (!found) throw TheoremViolation("no nondegenerate twisted bimodule map among the candidates");

    auto us = right_free_basis(emb);
    if (!us) throw std::runtime_error("greedy search for a right free basis was inconclusive");
    std::vector<Mat<S>> blocks;
    for (const Vec<S>& u : *us) blocks.push_back(left_multiplication(emb.H.alg, u) * emb.iota);
    const Mat<S> coordinates = *inverse(F, hstack(blocks, h));

    const Mat<S> Phi = x_to_E_x(emb, out.E);
    for (size_t i = 0; i < us->size(); ++i) {
        const Mat<S> c = coordinates.middleRows(static_cast<Index>(i) * k, k);
        auto v = solve(F, Phi, vec_columns(c));
        if (!v) throw TheoremViolation("coordinate functional is not of the form E(v -)");
        out.us.push_back((*us)[i]);
        out.vs.push_back(*v);
    }
    Report r = verify_relative_frobenius(emb, out);
    if (!r.passed()) throw TheoremViolation("relative Frobenius data: " + r.first_failure()->name);
    return out;
}

template <class S>
Report verify_relative_frobenius(const SubalgebraEmbedding<S>& emb, const RelativeFrobeniusData<S>& data) {
    const Field<S>& F = emb.H.field();
    const Index h = emb.H.dim(), k = emb.K.dim();
    const Mat<S>& E = data.E;
    Report r;
    auto beta_inverse = inverse(F, data.beta);
    r.add("beta is an automorphism", beta_inverse && is_algebra_map(emb.K.alg, emb.K.alg, data.beta));
    if (!beta_inverse) return r;

    bool bimodule = true;
    for (Index a = 0; a < k && bimodule; ++a) {
        const Vec<S> ea = unit_vector(F, k, a), ia = emb.iota.col(a);
        bimodule = Mat<S>(E * left_multiplication(emb.H.alg, ia)) ==
                       Mat<S>(left_multiplication(emb.K.alg, Vec<S>(data.beta * ea)) * E) &&
                   Mat<S>(E * right_multiplication(emb.H.alg, ia)) ==
                       Mat<S>(right_multiplication(emb.K.alg, ea) * E);
    }
    r.add("twisted bimodule map", bimodule);

    Mat<S> first = zeros(F, h, h), second = zeros(F, h, h);
    for (size_t i = 0; i < data.us.size(); ++i) {
        first += left_multiplication(emb.H.alg, data.us[i]) * emb.iota * E *
                 left_multiplication(emb.H.alg, data.vs[i]);
        second += right_multiplication(emb.H.alg, data.vs[i]) * emb.iota * *beta_inverse * E *
                  right_multiplication(emb.H.alg, data.us[i]);
    }
    r.add("sum u iota(E(v x)) = x", is_identity(first));
    r.add("sum iota(beta^-1(E(x u))) v = x", is_identity(second));
    return r;
}

template <class S>
void check_right_module(const StructureAlgebra<S>& K, const RightModule<S>& M) {
    const Field<S>& F = K.field;
    const Index d = M.dim();
    if (static_cast<Index>(M.action.size()) != K.dim)
        throw InvalidStructure("module needs one action matrix per basis element");
    for (const Mat<S>& A : M.action)
        if (A.rows() != d || A.cols() != d) throw InvalidStructure("action matrices must be square of equal size");
    if (!is_identity(act(F, M, K.unit))) throw InvalidStructure("unit does not act as the identity");
    for (Index a = 0; a < K.dim; ++a)
        for (Index b = 0; b < K.dim; ++b) {
            Vec<S> ab = multiply(K, unit_vector(F, K.dim, a), unit_vector(F, K.dim, b));
            if (act(F, M, ab) != Mat<S>(M.action[b] * M.action[a]))
                throw InvalidStructure("module associativity fails at basis pair (" + std::to_string(a) + "," +
                                       std::to_string(b) + ")");
        }
}

template <class S>
RightModule<S> trivial_module(const HopfAlgebra<S>& K) {
    RightModule<S> M;
    for (Index b = 0; b < K.dim(); ++b) M.action.push_back(Mat<S>::Constant(1, 1, K.counit(b)));
    return M;
}

template <class S>
RightModule<S> regular_module(const StructureAlgebra<S>& K) {
    RightModule<S> M;
    for (Index b = 0; b < K.dim; ++b) M.action.push_back(right_multiplication(K, unit_vector(K.field, K.dim, b)));
    return M;
}

template <class S>
RightModule<S> cyclic_module(const StructureAlgebra<S>& K, const Mat<S>& generator) {
    RightModule<S> M;
    Mat<S> power = identity(K.field, generator.rows());
    for (Index b = 0; b < K.dim; ++b) {
        M.action.push_back(power);
        power = (power * generator).eval();
    }
    return M;
}

template <class S>
Report induction_coinduction_check(const SubalgebraEmbedding<S>& emb, const RelativeFrobeniusData<S>& data,
                                   const RightModule<S>& M) {
    const Field<S>& F = emb.H.field();
    check_right_module(emb.K.alg, M);
    const Index h = emb.H.dim(), k = emb.K.dim(), d = M.dim(), n = d * h;
    const Mat<S> Ih = identity(F, h), Id = identity(F, d);
    auto beta_inverse = inverse(F, data.beta);
    if (!beta_inverse) throw InvalidStructure("beta is not invertible");
    const Mat<S> twisted_E = *beta_inverse * data.E;

    // m (x) e_j -> (e_x -> m . beta^-1(E(e_j e_x))), both sides indexed m*h + (j or x)
    const Mat<S> mul(emb.H.alg.mul);
    Mat<S> Phi = zeros(F, n, n);
    for (Index j = 0; j < h; ++j)
        for (Index x = 0; x < h; ++x) {
            const Mat<S> R = act(F, M, Vec<S>(twisted_E * mul.col(j * h + x)));
            for (Index m = 0; m < d; ++m)
                for (Index mp = 0; mp < d; ++mp) Phi(mp * h + x, m * h + j) = R(mp, m);
        }

    std::vector<Mat<S>> relations;
    IncrementalKernel<S> hom(F, n);
    for (Index a = 0; a < k; ++a) {
        const Vec<S> ia = emb.iota.col(a);
        relations.push_back(kronecker(M.action[a], Ih) - kronecker(Id, left_multiplication(emb.H.alg, ia)));
        const Mat<S> twist = act(F, M, Vec<S>(Vec<S>(beta_inverse->col(a))));
        hom.impose(kronecker(Id, Mat<S>(right_multiplication(emb.H.alg, ia).transpose())) - kronecker(twist, Ih));
    }
    const Mat<S> rel = hstack(relations, n);
    const Index induced = n - rank(F, rel), coinduced = hom.dimension();

    Report r;
    r.add("dimensions", induced == coinduced && induced * k == n,
          "induced " + std::to_string(induced) + ", coinduced " + std::to_string(coinduced));
    r.add("relations map to zero", is_zero_matrix(Mat<S>(Phi * rel)));
    r.add("kernel is spanned by the relations", same_span(F, kernel(F, Phi), rel));
    r.add("image is the co-induced module", same_span(F, Phi, hom.basis()));
    bool linear = true;
    for (Index t = 0; t < h && linear; ++t) {
        const Vec<S> et = unit_vector(F, h, t);
        linear = Mat<S>(Phi * kronecker(Id, right_multiplication(emb.H.alg, et))) ==
                 Mat<S>(kronecker(Id, Mat<S>(left_multiplication(emb.H.alg, et).transpose())) * Phi);
    }
    r.add("H-module map", linear);
    return r;
}

#define FHOPF_INSTANTIATE_SUBEXT(S)                                                                            \
    template Report verify_embedding(const SubalgebraEmbedding<S>&);                                           \
    template SubalgebraEmbedding<S> cyclic_subalgebra(const HopfAlgebra<S>&, const Vec<S>&);                   \
    template SubalgebraEmbedding<S> identity_embedding(const HopfAlgebra<S>&);                                 \
    template RelativeNakayama<S> relative_nakayama(const SubalgebraEmbedding<S>&);                             \
    template std::optional<std::vector<Vec<S>>> right_free_basis(const SubalgebraEmbedding<S>&);               \
    template Mat<S> twisted_bimodule_maps(const SubalgebraEmbedding<S>&, const Mat<S>&);                       \
    template Index frobenius_rank(const SubalgebraEmbedding<S>&, const Mat<S>&);                               \
    template RelativeFrobeniusData<S> beta_frobenius_structure(const SubalgebraEmbedding<S>&, const Mat<S>&);  \
    template Report verify_relative_frobenius(const SubalgebraEmbedding<S>&, const RelativeFrobeniusData<S>&); \
    template void check_right_module(const StructureAlgebra<S>&, const RightModule<S>&);                       \
    template RightModule<S> trivial_module(const HopfAlgebra<S>&);                                             \
    template RightModule<S> regular_module(const StructureAlgebra<S>&);                                        \
    template RightModule<S> cyclic_module(const StructureAlgebra<S>&, const Mat<S>&);                          \
    template Report induction_coinduction_check(const SubalgebraEmbedding<S>&, const RelativeFrobeniusData<S>&, \
                                                const RightModule<S>&);

FHOPF_INSTANTIATE_SUBEXT(Rational)
FHOPF_INSTANTIATE_SUBEXT(Fp)

}  // namespace fhopf
