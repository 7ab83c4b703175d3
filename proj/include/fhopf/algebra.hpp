#ifndef FHOPF_ALGEBRA_HPP
#define FHOPF_ALGEBRA_HPP

#include <vector>

#include "fhopf/linalg.hpp"
#include "fhopf/report.hpp"

namespace fhopf {

/// Finite-dimensional unital algebra given by structure constants.
///
/// `mul` is dim x dim^2: column i*dim+j holds the coordinates of e_i e_j.
template <class S>
struct StructureAlgebra {
    using Scalar = S;
    Field<S> field;
    Index dim = 0;
    SpMat<S> mul;
    Vec<S> unit;

    /// mul[i][j][k], the coefficient of e_k in e_i e_j.
    S coeff(Index i, Index j, Index k) const;
};

/// Builds an algebra from a callback returning e_i e_j as a dense vector.
template <class S, class Product>
StructureAlgebra<S> make_algebra(const Field<S>& F, Index dim, Product product, const Vec<S>& unit) {
    std::vector<Eigen::Triplet<S>> triplets;
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j) {
            Vec<S> v = product(i, j);
            for (Index k = 0; k < dim; ++k)
                if (!is_zero(v(k))) triplets.emplace_back(k, i * dim + j, v(k));
        }
    SpMat<S> mul(dim, dim * dim);
    mul.setFromTriplets(triplets.begin(), triplets.end());
    return StructureAlgebra<S>{F, dim, mul, unit};
}

/// Checks the shapes of the tensors; throws std::invalid_argument when malformed.
template <class S>
void check_shape(const StructureAlgebra<S>& A);

/// Unit laws and associativity. Algebras of dimension above `full_limit` are
/// checked through a generating set (see algebra_generators), which is
/// equivalent to the full triple check once the unit law holds.
template <class S>
Report verify_algebra(const StructureAlgebra<S>& A, Index full_limit = 40);

template <class S>
Vec<S> multiply(const StructureAlgebra<S>& A, const Vec<S>& a, const Vec<S>& b);

template <class S>
SpVec<S> multiply(const StructureAlgebra<S>& A, const SpVec<S>& a, const SpVec<S>& b);

/// Matrix of x -> a x.
template <class S>
Mat<S> left_multiplication(const StructureAlgebra<S>& A, const Vec<S>& a);

/// Matrix of x -> x a.
template <class S>
Mat<S> right_multiplication(const StructureAlgebra<S>& A, const Vec<S>& a);

/// (a (x) b)(a' (x) b') = aa' (x) bb' on the basis e_i (x) f_k with index i*dim(B)+k.
template <class S>
StructureAlgebra<S> tensor_algebra(const StructureAlgebra<S>& A, const StructureAlgebra<S>& B);

template <class S>
StructureAlgebra<S> opposite(const StructureAlgebra<S>& A);

/// Greedy basis indices G such that the right-nested words g1(g2(...(g_k 1)))
/// with g in G span A.
template <class S>
std::vector<Index> algebra_generators(const StructureAlgebra<S>& A);

/// True when x -> Mx is multiplicative and unital from A to B.
template <class S>
bool is_algebra_map(const StructureAlgebra<S>& A, const StructureAlgebra<S>& B, const Mat<S>& M);

/// Same structure constants and unit.
template <class S>
bool operator==(const StructureAlgebra<S>& A, const StructureAlgebra<S>& B);

}  // namespace fhopf

#endif  // FHOPF_ALGEBRA_HPP
