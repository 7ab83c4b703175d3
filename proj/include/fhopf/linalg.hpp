#ifndef FHOPF_LINALG_HPP
#define FHOPF_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "fhopf/scalar.hpp"

namespace fhopf {

using Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowVec = Eigen::Matrix<S, 1, Eigen::Dynamic>;
template <class S>
using SpMat = Eigen::SparseMatrix<S>;
template <class S>
using SpVec = Eigen::SparseVector<S>;

/// Reduced row echelon form together with the pivot column of each nonzero row.
template <class S>
struct Echelon {
    Mat<S> rref;
    std::vector<Index> pivots;
    Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class S>
Echelon<S> row_reduce(const Field<S>& F, const Mat<S>& M);

/// Canonical reduced-echelon kernel basis, one vector per column of the result.
/// Each free column f contributes the vector with 1 at f and -R[r][f] at pivot r.
template <class S>
Mat<S> kernel(const Field<S>& F, const Mat<S>& M);

template <class S>
Index rank(const Field<S>& F, const Mat<S>& M);

/// One solution of M x = rhs with free variables set to zero, or nullopt when
/// the system is inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Field<S>& F, const Mat<S>& M, const Vec<S>& rhs);

/// Solves M X = B column by column; nullopt if any column is inconsistent.
template <class S>
std::optional<Mat<S>> solve_many(const Field<S>& F, const Mat<S>& M, const Mat<S>& B);

template <class S>
std::optional<Mat<S>> inverse(const Field<S>& F, const Mat<S>& M);

template <class S>
Mat<S> kronecker(const Mat<S>& A, const Mat<S>& B);

template <class S>
Mat<S> identity(const Field<S>& F, Index n);

template <class S>
Mat<S> zeros(const Field<S>& F, Index rows, Index cols);

template <class S>
Vec<S> unit_vector(const Field<S>& F, Index n, Index i);

/// Basis of the subspace spanned by the columns of B, normalised so that it
/// depends only on the subspace: it is the canonical kernel basis of the
/// annihilator of that subspace.
template <class S>
Mat<S> canonical_span(const Field<S>& F, const Mat<S>& B);

/// True when the column spans of A and B coincide.
template <class S>
bool same_span(const Field<S>& F, const Mat<S>& A, const Mat<S>& B);

/// Smallest k >= 1 with M^k = I, or nullopt if none up to `bound`.
template <class S>
std::optional<int> multiplicative_order(const Field<S>& F, const Mat<S>& M, int bound);

template <class S>
bool is_identity(const Mat<S>& M);

template <class S>
bool is_zero_matrix(const Mat<S>& M);

/// Kernel of a linear system whose equations arrive in blocks. The current
/// solution space is kept as a basis K; each block E replaces K by
/// K * kernel(E K), so later blocks only touch a small matrix.
template <class S>
class IncrementalKernel {
   public:
    IncrementalKernel(const Field<S>& F, Index unknowns);

    void impose(const Mat<S>& equations);
    Index dimension() const { return basis_.cols(); }
    const Mat<S>& basis() const { return basis_; }
    /// Canonical basis of the final solution space.
    Mat<S> canonical() const;

   private:
    Field<S> field_;
    Mat<S> basis_;
};

/// Converts a sparse vector to dense, filling with tagged zeros.
template <class S>
Vec<S> to_dense(const Field<S>& F, const SpVec<S>& v);

template <class S>
SpVec<S> to_sparse(const Vec<S>& v);

}  // namespace fhopf

#endif  // FHOPF_LINALG_HPP
