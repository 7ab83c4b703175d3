#include "fhopf/hopf.hpp"

#include <map>
#include <sstream>

#include "sparse_ops.hpp"

namespace fhopf {

using detail::Accumulator;
using detail::sparse_column;
using detail::sparse_equal;

template <class S>
S HopfAlgebra<S>::comul_coeff(Index i, Index j, Index k) const {
    return field().tag(comul.coeff(j * dim() + k, i));
}

template <class S>
void check_shape(const HopfAlgebra<S>& H) {
    check_shape(H.alg);
    const Index n = H.dim();
    if (H.comul.rows() != n * n || H.comul.cols() != n)
        throw std::invalid_argument("comultiplication tensor has the wrong shape");
    if (H.counit.size() != n) throw std::invalid_argument("counit has the wrong length");
    if (H.antipode.rows() != n || H.antipode.cols() != n) throw std::invalid_argument("antipode has the wrong shape");
    if (!H.names.empty() && static_cast<Index>(H.names.size()) != n)
        throw std::invalid_argument("basis name count differs from the dimension");
}

namespace {

template <class S>
using Terms = std::map<Index, S>;

template <class S>
void add_term(Terms<S>& t, Index i, const S& v) {
    auto [it, inserted] = t.try_emplace(i, v);
    if (!inserted) it->second += v;
}

template <class S>
bool same_terms(const Terms<S>& a, const Terms<S>& b) {
    auto ia = a.begin(), ib = b.begin();
    for (;;) {
        while (ia != a.end() && is_zero(ia->second)) ++ia;
        while (ib != b.end() && is_zero(ib->second)) ++ib;
        if (ia == a.end() || ib == b.end()) return ia == a.end() && ib == b.end();
        if (ia->first != ib->first || ia->second != ib->second) return false;
        ++ia;
        ++ib;
    }
}

template <class S>
std::string at_basis(const char* what, Index i) {
    return std::string(what) + " failed at basis " + std::to_string(i);
}

}  // namespace

template <class S>
Report verify_hopf(const HopfAlgebra<S>& H, Index full_limit) {
    check_shape(H);
    const Index n = H.dim();
    const Index n2 = n * n;
    const Field<S>& F = H.field();
    const StructureAlgebra<S>& A = H.alg;
    Report report = verify_algebra(A, full_limit);
    const bool associative = report.passed();

    std::vector<SpVec<S>> delta(n);
    for (Index i = 0; i < n; ++i) delta[i] = sparse_column(H.comul, i);

    // counit laws
    std::string failure;
    for (Index i = 0; i < n && failure.empty(); ++i) {
        Accumulator<S> left(F, n), right(F, n);
        for (typename SpVec<S>::InnerIterator it(delta[i]); it; ++it) {
            Index j = it.index() / n, k = it.index() % n;
            left.add(k, H.counit(j) * it.value());
            right.add(j, it.value() * H.counit(k));
        }
        SpVec<S> e = detail::sparse_unit(n, i, F.one());
        if (!sparse_equal(left.take(), e) || !sparse_equal(right.take(), e)) failure = at_basis<S>("counit law", i);
    }
    report.add("counit", failure.empty(), failure);

    // coassociativity
    failure.clear();
    for (Index i = 0; i < n && failure.empty(); ++i) {
        Terms<S> lhs, rhs;
        for (typename SpVec<S>::InnerIterator it(delta[i]); it; ++it) {
            Index j = it.index() / n, k = it.index() % n;
            for (typename SpVec<S>::InnerIterator d(delta[j]); d; ++d) add_term(lhs, d.index() * n + k, it.value() * d.value());
            for (typename SpVec<S>::InnerIterator d(delta[k]); d; ++d) add_term(rhs, j * n2 + d.index(), it.value() * d.value());
        }
        if (!same_terms(lhs, rhs)) failure = at_basis<S>("coassociativity", i);
    }
    report.add("coassociativity", failure.empty(), failure);

    // Delta and eps are unital algebra maps
    {
        SpVec<S> unit = to_sparse(A.unit);
        Accumulator<S> acc(F, n2);
        S eps_unit = F.zero();
        for (typename SpVec<S>::InnerIterator it(unit); it; ++it) {
            acc.add_column(H.comul, it.index(), it.value());
            eps_unit += H.counit(it.index()) * it.value();
        }
        SpVec<S> unit_unit = to_sparse(Vec<S>(kronecker(Mat<S>(A.unit), Mat<S>(A.unit)).col(0)));
        report.add("comultiplication unital", sparse_equal(acc.take(), unit_unit));
        report.add("counit unital", eps_unit.is_one());
    }

    std::vector<Index> first;
    if (n <= full_limit || !associative) {
        for (Index i = 0; i < n; ++i) first.push_back(i);
    } else {
        first = algebra_generators(A);
    }
    failure.clear();
    std::string eps_failure;
    Accumulator<S> acc(F, n2);
    for (Index i : first) {
        for (Index j = 0; j < n && failure.empty(); ++j) {
            SpVec<S> ij = sparse_column(A.mul, i * n + j);
            for (typename SpVec<S>::InnerIterator it(ij); it; ++it) acc.add_column(H.comul, it.index(), it.value());
            SpVec<S> lhs = acc.take();
            for (typename SpVec<S>::InnerIterator a(delta[i]); a; ++a) {
                Index a1 = a.index() / n, a2 = a.index() % n;
                for (typename SpVec<S>::InnerIterator b(delta[j]); b; ++b) {
                    Index b1 = b.index() / n, b2 = b.index() % n;
                    S c = a.value() * b.value();
                    for (typename SpMat<S>::InnerIterator p(A.mul, a1 * n + b1); p; ++p)
                        for (typename SpMat<S>::InnerIterator q(A.mul, a2 * n + b2); q; ++q)
                            acc.add(p.row() * n + q.row(), c * p.value() * q.value());
                }
            }
            if (!sparse_equal(lhs, acc.take())) {
                std::ostringstream os;
                os << "comultiplication not multiplicative at basis pair (" << i << "," << j << ")";
                failure = os.str();
            }
        }
        if (!failure.empty()) break;
    }
    for (Index i = 0; i < n && eps_failure.empty(); ++i)
        for (Index j = 0; j < n; ++j) {
            S lhs = F.zero();
            for (typename SpMat<S>::InnerIterator it(A.mul, i * n + j); it; ++it) lhs += H.counit(it.row()) * it.value();
            if (lhs != H.counit(i) * H.counit(j)) {
                std::ostringstream os;
                os << "counit not multiplicative at basis pair (" << i << "," << j << ")";
                eps_failure = os.str();
                break;
            }
        }
    report.add("comultiplication multiplicative", failure.empty(), failure);
    report.add("counit multiplicative", eps_failure.empty(), eps_failure);

    // antipode axiom
    failure.clear();
    std::vector<SpVec<S>> images(n);
    for (Index j = 0; j < n; ++j) images[j] = to_sparse(Vec<S>(H.antipode.col(j)));
    Accumulator<S> left(F, n), right(F, n);
    for (Index i = 0; i < n && failure.empty(); ++i) {
        for (typename SpVec<S>::InnerIterator it(delta[i]); it; ++it) {
            Index j = it.index() / n, k = it.index() % n;
            for (typename SpVec<S>::InnerIterator s(images[j]); s; ++s)
                left.add_column(A.mul, s.index() * n + k, it.value() * s.value());
            for (typename SpVec<S>::InnerIterator s(images[k]); s; ++s)
                right.add_column(A.mul, j * n + s.index(), it.value() * s.value());
        }
        SpVec<S> expected = to_sparse(Vec<S>(A.unit * H.counit(i)));
        if (!sparse_equal(left.take(), expected) || !sparse_equal(right.take(), expected))
            failure = at_basis<S>("antipode axiom", i);
    }
    report.add("antipode", failure.empty(), failure);
    report.add("antipode invertible", rank(F, H.antipode) == n);
    return report;
}

template <class S>
Vec<S> coproduct(const HopfAlgebra<S>& H, const Vec<S>& a) {
    return to_dense(H.field(), SpVec<S>(H.comul * to_sparse(a)));
}

template <class S>
Mat<S> antipode_inverse(const HopfAlgebra<S>& H) {
    auto inv = inverse(H.field(), H.antipode);
    if (!inv) throw NotInvertible("antipode is not invertible");
    return *inv;
}

template <class S>
HopfAlgebra<S> dual_hopf(const HopfAlgebra<S>& H) {
    HopfAlgebra<S> D;
    const Index n = H.dim();
    D.alg.field = H.field();
    D.alg.dim = n;
    D.alg.mul = SpMat<S>(H.comul.transpose());
    D.alg.unit = H.counit.transpose();
    D.comul = SpMat<S>(H.alg.mul.transpose());
    D.counit = H.alg.unit.transpose();
    D.antipode = H.antipode.transpose();
    for (Index i = 0; i < n; ++i)
        D.names.push_back(H.names.empty() ? "e" + std::to_string(i) + "*" : H.names[i] + "*");
    return D;
}

template <class S>
RowVec<S> convolve(const HopfAlgebra<S>& H, const RowVec<S>& f, const RowVec<S>& g) {
    const Index n = H.dim();
    RowVec<S> out = RowVec<S>::Constant(n, H.field().zero());
    for (Index a = 0; a < n; ++a)
        for (typename SpMat<S>::InnerIterator it(H.comul, a); it; ++it)
            out(a) += it.value() * f(it.row() / n) * g(it.row() % n);
    return out;
}

template <class S>
Vec<S> act_left(const HopfAlgebra<S>& H, const RowVec<S>& g, const Vec<S>& a) {
    const Index n = H.dim();
    Vec<S> out = Vec<S>::Constant(n, H.field().zero());
    for (Index i = 0; i < n; ++i) {
        if (is_zero(a(i))) continue;
        for (typename SpMat<S>::InnerIterator it(H.comul, i); it; ++it)
            out(it.row() / n) += a(i) * it.value() * g(it.row() % n);
    }
    return out;
}

template <class S>
Vec<S> act_right(const HopfAlgebra<S>& H, const Vec<S>& a, const RowVec<S>& g) {
    const Index n = H.dim();
    Vec<S> out = Vec<S>::Constant(n, H.field().zero());
    for (Index i = 0; i < n; ++i) {
        if (is_zero(a(i))) continue;
        for (typename SpMat<S>::InnerIterator it(H.comul, i); it; ++it)
            out(it.row() % n) += a(i) * it.value() * g(it.row() / n);
    }
    return out;
}

template <class S>
Mat<S> act_left_matrix(const HopfAlgebra<S>& H, const RowVec<S>& g) {
    Mat<S> M(H.dim(), H.dim());
    for (Index i = 0; i < H.dim(); ++i) M.col(i) = act_left(H, g, unit_vector(H.field(), H.dim(), i));
    return M;
}

template <class S>
Mat<S> act_right_matrix(const HopfAlgebra<S>& H, const RowVec<S>& g) {
    Mat<S> M(H.dim(), H.dim());
    for (Index i = 0; i < H.dim(); ++i) M.col(i) = act_right(H, unit_vector(H.field(), H.dim(), i), g);
    return M;
}

template <class S>
bool is_group_like(const HopfAlgebra<S>& H, const Vec<S>& v) {
    S eps = (H.counit * v)(0, 0);
    if (!eps.is_one()) return false;
    return coproduct(H, v) == Vec<S>(kronecker(Mat<S>(v), Mat<S>(v)).col(0));
}

template <class S>
bool is_character(const HopfAlgebra<S>& H, const RowVec<S>& f) {
    const Index n = H.dim();
    if (!(f * H.alg.unit)(0, 0).is_one()) return false;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            S v = H.field().zero();
            for (typename SpMat<S>::InnerIterator it(H.alg.mul, i * n + j); it; ++it) v += f(it.row()) * it.value();
            if (v != f(i) * f(j)) return false;
        }
    return true;
}

namespace {

template <class S>
std::vector<Index> constraint_indices(const StructureAlgebra<S>& A) {
    if (A.dim <= 40) {
        std::vector<Index> all(A.dim);
        for (Index i = 0; i < A.dim; ++i) all[i] = i;
        return all;
    }
    return algebra_generators(A);
}

template <class S>
Mat<S> integrals_in(const HopfAlgebra<S>& H, bool left) {
    const Field<S>& F = H.field();
    const Index n = H.dim();
    IncrementalKernel<S> k(F, n);
    for (Index i : constraint_indices(H.alg)) {
        Vec<S> e = unit_vector(F, n, i);
        Mat<S> M = left ? left_multiplication(H.alg, e) : right_multiplication(H.alg, e);
        M -= H.counit(i) * identity(F, n);
        k.impose(M);
    }
    return k.canonical();
}

template <class S>
Mat<S> dual_integrals_in(const HopfAlgebra<S>& H, bool left) {
    const Field<S>& F = H.field();
    const Index n = H.dim();
    HopfAlgebra<S> D = dual_hopf(H);
    IncrementalKernel<S> k(F, n);
    for (Index i : constraint_indices(D.alg)) {
        Mat<S> M = zeros(F, n, n);
        for (Index a = 0; a < n; ++a)
            for (typename SpMat<S>::InnerIterator it(H.comul, a); it; ++it) {
                Index j = it.row() / n, l = it.row() % n;
                if (left && j == i) M(a, l) += it.value();
                if (!left && l == i) M(a, j) += it.value();
            }
        M -= H.alg.unit(i) * identity(F, n);
        k.impose(M);
    }
    return k.canonical();
}

}  // namespace

template <class S>
Mat<S> left_integrals(const HopfAlgebra<S>& H) {
    return integrals_in(H, true);
}

template <class S>
Mat<S> right_integrals(const HopfAlgebra<S>& H) {
    return integrals_in(H, false);
}

template <class S>
Mat<S> left_dual_integrals(const HopfAlgebra<S>& H) {
    return dual_integrals_in(H, true);
}

template <class S>
Mat<S> right_dual_integrals(const HopfAlgebra<S>& H) {
    return dual_integrals_in(H, false);
}

template <class S>
Mat<S> dual_coaction(const HopfAlgebra<S>& H) {
    const Index n = H.dim();
    Mat<S> C = zeros(H.field(), n * n, n);
    for (Index k = 0; k < n; ++k)
        for (typename SpMat<S>::InnerIterator it(H.comul, k); it; ++it) {
            Index i = it.row() / n, j = it.row() % n;
            C(k * n + i, j) += it.value();
        }
    return C;
}

template <class S>
HopfModuleDecomposition<S> hopf_module_decompose(const HopfAlgebra<S>& H) {
    const Field<S>& F = H.field();
    const Index n = H.dim();
    Mat<S> C = dual_coaction(H);
    for (Index j = 0; j < n; ++j)
        for (Index u = 0; u < n; ++u) C(j * n + u, j) -= H.alg.unit(u);
    Mat<S> P = kernel(F, C);
    if (P.cols() != 1) throw InvalidStructure("integral space not rank one");
    RowVec<S> lambda = P.col(0).transpose();
    Index pivot = 0;
    while (is_zero(lambda(pivot))) ++pivot;
    const S lambda_inv = inverse(lambda(pivot));

    Mat<S> backward = zeros(F, n, n);
    for (Index j = 0; j < n; ++j) {
        Mat<S> R = right_multiplication(H.alg, Vec<S>(H.antipode.col(j)));
        backward.col(j) = (lambda * R).transpose();
    }

    // forward: f -> sum_i sum (e^i * f) . S(e_i1) (x) e_i2, with (f . h)(x) = f(x S(h))
    Mat<S> S2 = H.antipode * H.antipode;
    std::vector<Mat<S>> right_by_s2(n);
    for (Index a = 0; a < n; ++a) right_by_s2[a] = right_multiplication(H.alg, Vec<S>(S2.col(a)));
    Mat<S> forward = zeros(F, n, n);
    for (Index j = 0; j < n; ++j) {
        RowVec<S> f = unit_vector(F, n, j).transpose();
        for (Index i = 0; i < n; ++i) {
            RowVec<S> fi = convolve(H, RowVec<S>(unit_vector(F, n, i).transpose()), f);
            for (typename SpMat<S>::InnerIterator it(H.comul, i); it; ++it) {
                Index a = it.row() / n, b = it.row() % n;
                RowVec<S> g = fi * right_by_s2[a];
                forward(b, j) += it.value() * g(pivot) * lambda_inv;
            }
        }
    }
    if (!is_identity(Mat<S>(forward * backward)) || !is_identity(Mat<S>(backward * forward)))
        throw InvalidStructure("Hopf module isomorphism check failed");
    return {P, forward, backward};
}

template <class S>
bool same_structure(const HopfAlgebra<S>& A, const HopfAlgebra<S>& B) {
    if (!(A.alg == B.alg)) return false;
    for (Index c = 0; c < A.dim(); ++c)
        if (!sparse_equal(sparse_column(A.comul, c), sparse_column(B.comul, c))) return false;
    return A.counit == B.counit && A.antipode == B.antipode;
}

template <class S>
bool is_hopf_isomorphism(const HopfAlgebra<S>& A, const HopfAlgebra<S>& B, const Mat<S>& M) {
    if (A.dim() != B.dim() || M.rows() != B.dim() || M.cols() != A.dim()) return false;
    if (rank(A.field(), M) != A.dim()) return false;
    if (!is_algebra_map(A.alg, B.alg, M)) return false;
    Mat<S> MM = kronecker(M, M);
    Mat<S> lhs = MM * Mat<S>(A.comul);
    Mat<S> rhs = Mat<S>(B.comul) * M;
    if (lhs != rhs) return false;
    if (RowVec<S>(B.counit * M) != A.counit) return false;
    return Mat<S>(B.antipode * M) == Mat<S>(M * A.antipode);
}

#define FHOPF_INSTANTIATE_HOPF(S)                                                                 \
    template struct HopfAlgebra<S>;                                                               \
    template void check_shape(const HopfAlgebra<S>&);                                             \
    template Report verify_hopf(const HopfAlgebra<S>&, Index);                                    \
    template Vec<S> coproduct(const HopfAlgebra<S>&, const Vec<S>&);                              \
    template Mat<S> antipode_inverse(const HopfAlgebra<S>&);                                      \
    template HopfAlgebra<S> dual_hopf(const HopfAlgebra<S>&);                                     \
    template RowVec<S> convolve(const HopfAlgebra<S>&, const RowVec<S>&, const RowVec<S>&);       \
    template Vec<S> act_left(const HopfAlgebra<S>&, const RowVec<S>&, const Vec<S>&);             \
    template Vec<S> act_right(const HopfAlgebra<S>&, const Vec<S>&, const RowVec<S>&);            \
    template Mat<S> act_left_matrix(const HopfAlgebra<S>&, const RowVec<S>&);                     \
    template Mat<S> act_right_matrix(const HopfAlgebra<S>&, const RowVec<S>&);                    \
    template bool is_group_like(const HopfAlgebra<S>&, const Vec<S>&);                            \
    template bool is_character(const HopfAlgebra<S>&, const RowVec<S>&);                          \
    template Mat<S> left_integrals(const HopfAlgebra<S>&);                                        \
    template Mat<S> right_integrals(const HopfAlgebra<S>&);                                       \
    template Mat<S> left_dual_integrals(const HopfAlgebra<S>&);                                   \
    template Mat<S> right_dual_integrals(const HopfAlgebra<S>&);                                  \
    template Mat<S> dual_coaction(const HopfAlgebra<S>&);                                         \
    template HopfModuleDecomposition<S> hopf_module_decompose(const HopfAlgebra<S>&);             \
    template bool same_structure(const HopfAlgebra<S>&, const HopfAlgebra<S>&);                   \
    template bool is_hopf_isomorphism(const HopfAlgebra<S>&, const HopfAlgebra<S>&, const Mat<S>&);

FHOPF_INSTANTIATE_HOPF(Rational)
FHOPF_INSTANTIATE_HOPF(Fp)

}  // namespace fhopf
