#include "fhopf/linalg.hpp"

#include <utility>

namespace fhopf {

template <class S>
Echelon<S> row_reduce(const Field<S>& F, const Mat<S>& M) {
    using RowMajor = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    RowMajor R = M;
    const Index rows = R.rows(), cols = R.cols();
    Echelon<S> out;
    std::vector<Index> support;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && is_zero(R(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) R.row(p).swap(R.row(r));
        S inv = inverse(R(r, c));
        support.clear();
        for (Index j = c; j < cols; ++j) {
            if (is_zero(R(r, j))) continue;
            R(r, j) *= inv;
            support.push_back(j);
        }
        for (Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(R(i, c))) continue;
            S factor = R(i, c);
            for (Index j : support) R(i, j) -= factor * R(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rref = R;
    for (Index i = 0; i < out.rref.rows(); ++i)
        for (Index j = 0; j < cols; ++j) out.rref(i, j) += F.zero();
    return out;
}

template <class S>
Mat<S> kernel(const Field<S>& F, const Mat<S>& M) {
    Echelon<S> e = row_reduce(F, M);
    const Index cols = M.cols();
    std::vector<bool> is_pivot(cols, false);
    for (Index c : e.pivots) is_pivot[c] = true;
    Mat<S> K = zeros(F, cols, cols - e.rank());
    Index k = 0;
    for (Index f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        K(f, k) = F.one();
        for (Index r = 0; r < e.rank(); ++r) K(e.pivots[r], k) = -e.rref(r, f);
        ++k;
    }
    return K;
}

template <class S>
Index rank(const Field<S>& F, const Mat<S>& M) {
    return row_reduce(F, M).rank();
}

template <class S>
std::optional<Vec<S>> solve(const Field<S>& F, const Mat<S>& M, const Vec<S>& rhs) {
    auto X = solve_many(F, M, Mat<S>(rhs));
    if (!X) return std::nullopt;
    return Vec<S>(X->col(0));
}

template <class S>
std::optional<Mat<S>> solve_many(const Field<S>& F, const Mat<S>& M, const Mat<S>& B) {
    if (M.rows() != B.rows()) throw std::invalid_argument("solve: row count mismatch");
    Mat<S> aug(M.rows(), M.cols() + B.cols());
    aug << M, B;
    Echelon<S> e = row_reduce(F, aug);
    for (Index c : e.pivots)
        if (c >= M.cols()) return std::nullopt;
    Mat<S> X = zeros(F, M.cols(), B.cols());
    for (Index r = 0; r < e.rank(); ++r)
        for (Index j = 0; j < B.cols(); ++j) X(e.pivots[r], j) = e.rref(r, M.cols() + j);
    return X;
}

template <class S>
std::optional<Mat<S>> inverse(const Field<S>& F, const Mat<S>& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("inverse: matrix is not square");
    Echelon<S> e = row_reduce(F, M);
    if (e.rank() != M.rows()) return std::nullopt;
    return solve_many(F, M, identity(F, M.rows()));
}

template <class S>
Mat<S> kronecker(const Mat<S>& A, const Mat<S>& B) {
    Mat<S> K(A.rows() * B.rows(), A.cols() * B.cols());
    for (Index i = 0; i < A.rows(); ++i)
        for (Index j = 0; j < A.cols(); ++j)
            K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return K;
}

template <class S>
Mat<S> identity(const Field<S>& F, Index n) {
    Mat<S> I = zeros(F, n, n);
    for (Index i = 0; i < n; ++i) I(i, i) = F.one();
    return I;
}

template <class S>
Mat<S> zeros(const Field<S>& F, Index rows, Index cols) {
    return Mat<S>::Constant(rows, cols, F.zero());
}

template <class S>
Vec<S> unit_vector(const Field<S>& F, Index n, Index i) {
    Vec<S> v = Vec<S>::Constant(n, F.zero());
    v(i) = F.one();
    return v;
}

template <class S>
Mat<S> canonical_span(const Field<S>& F, const Mat<S>& B) {
    Mat<S> annihilator = kernel(F, Mat<S>(B.transpose()));
    return kernel(F, Mat<S>(annihilator.transpose()));
}

template <class S>
bool same_span(const Field<S>& F, const Mat<S>& A, const Mat<S>& B) {
    if (A.rows() != B.rows()) return false;
    Index ra = rank(F, A), rb = rank(F, B);
    if (ra != rb) return false;
    Mat<S> both(A.rows(), A.cols() + B.cols());
    both << A, B;
    return rank(F, both) == ra;
}

template <class S>
std::optional<int> multiplicative_order(const Field<S>& F, const Mat<S>& M, int bound) {
    Mat<S> P = M;
    for (int k = 1; k <= bound; ++k) {
        if (is_identity(P)) return k;
        P = (P * M).eval();
    }
    (void)F;
    return std::nullopt;
}

template <class S>
bool is_identity(const Mat<S>& M) {
    if (M.rows() != M.cols()) return false;
    for (Index i = 0; i < M.rows(); ++i)
        for (Index j = 0; j < M.cols(); ++j) {
            if (i == j ? !M(i, j).is_one() : !is_zero(M(i, j))) return false;
        }
    return true;
}

template <class S>
bool is_zero_matrix(const Mat<S>& M) {
    for (Index i = 0; i < M.rows(); ++i)
        for (Index j = 0; j < M.cols(); ++j)
            if (!is_zero(M(i, j))) return false;
    return true;
}

template <class S>
IncrementalKernel<S>::IncrementalKernel(const Field<S>& F, Index unknowns)
    : field_(F), basis_(identity(F, unknowns)) {}

template <class S>
void IncrementalKernel<S>::impose(const Mat<S>& equations) {
    if (basis_.cols() == 0) return;
    Mat<S> restricted = equations * basis_;
    Mat<S> k = kernel(field_, restricted);
    basis_ = (basis_ * k).eval();
}

template <class S>
Mat<S> IncrementalKernel<S>::canonical() const {
    if (basis_.cols() == 0) return basis_;
    return canonical_span(field_, basis_);
}

template <class S>
Vec<S> to_dense(const Field<S>& F, const SpVec<S>& v) {
    Vec<S> d = Vec<S>::Constant(v.size(), F.zero());
    for (typename SpVec<S>::InnerIterator it(v); it; ++it) d(it.index()) = it.value();
    return d;
}

template <class S>
SpVec<S> to_sparse(const Vec<S>& v) {
    SpVec<S> s(v.size());
    for (Index i = 0; i < v.size(); ++i)
        if (!is_zero(v(i))) s.insert(i) = v(i);
    return s;
}

#define FHOPF_INSTANTIATE_LINALG(S)                                                          \
    template Echelon<S> row_reduce(const Field<S>&, const Mat<S>&);                          \
    template Mat<S> kernel(const Field<S>&, const Mat<S>&);                                  \
    template Index rank(const Field<S>&, const Mat<S>&);                                     \
    template std::optional<Vec<S>> solve(const Field<S>&, const Mat<S>&, const Vec<S>&);     \
    template std::optional<Mat<S>> solve_many(const Field<S>&, const Mat<S>&, const Mat<S>&); \
    template std::optional<Mat<S>> inverse(const Field<S>&, const Mat<S>&);                  \
    template Mat<S> kronecker(const Mat<S>&, const Mat<S>&);                                 \
    template Mat<S> identity(const Field<S>&, Index);                                        \
    template Mat<S> zeros(const Field<S>&, Index, Index);                                    \
    template Vec<S> unit_vector(const Field<S>&, Index, Index);                              \
    template Mat<S> canonical_span(const Field<S>&, const Mat<S>&);                          \
    template bool same_span(const Field<S>&, const Mat<S>&, const Mat<S>&);                  \
    template std::optional<int> multiplicative_order(const Field<S>&, const Mat<S>&, int);   \
    template bool is_identity(const Mat<S>&);                                                \
    template bool is_zero_matrix(const Mat<S>&);                                             \
    template class IncrementalKernel<S>;                                                     \
    template Vec<S> to_dense(const Field<S>&, const SpVec<S>&);                              \
    template SpVec<S> to_sparse(const Vec<S>&);

FHOPF_INSTANTIATE_LINALG(Rational)
FHOPF_INSTANTIATE_LINALG(Fp)

}  // namespace fhopf
