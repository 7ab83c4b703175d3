#include "fhopf/algebra.hpp"

#include <deque>
#include <sstream>

#include "sparse_ops.hpp"

namespace fhopf {

using detail::Accumulator;
using detail::sparse_column;
using detail::sparse_equal;

template <class S>
S StructureAlgebra<S>::coeff(Index i, Index j, Index k) const {
    return field.tag(mul.coeff(k, i * dim + j));
}

template <class S>
void check_shape(const StructureAlgebra<S>& A) {
    if (A.dim <= 0) throw std::invalid_argument("algebra dimension must be positive");
    if (A.mul.rows() != A.dim || A.mul.cols() != A.dim * A.dim)
        throw std::invalid_argument("multiplication tensor has the wrong shape");
    if (A.unit.size() != A.dim) throw std::invalid_argument("unit vector has the wrong length");
}

namespace {

template <class S>
SpVec<S> product_with_basis_right(const StructureAlgebra<S>& A, Accumulator<S>& acc, const SpVec<S>& x, Index k) {
    for (typename SpVec<S>::InnerIterator it(x); it; ++it) acc.add_column(A.mul, it.index() * A.dim + k, it.value());
    return acc.take();
}

template <class S>
SpVec<S> product_with_basis_left(const StructureAlgebra<S>& A, Accumulator<S>& acc, Index i, const SpVec<S>& y) {
    for (typename SpVec<S>::InnerIterator it(y); it; ++it) acc.add_column(A.mul, i * A.dim + it.index(), it.value());
    return acc.take();
}

}  // namespace

template <class S>
Report verify_algebra(const StructureAlgebra<S>& A, Index full_limit) {
    check_shape(A);
    Report report;
    const Index n = A.dim;
    const Field<S>& F = A.field;
    Accumulator<S> acc(F, n);
    SpVec<S> unit = to_sparse(A.unit);

    std::string unit_failure;
    for (Index i = 0; i < n && unit_failure.empty(); ++i) {
        SpVec<S> e = detail::sparse_unit(n, i, F.one());
        SpVec<S> left = multiply(A, unit, e);
        SpVec<S> right = multiply(A, e, unit);
        if (!sparse_equal(left, e) || !sparse_equal(right, e))
            unit_failure = "unit law failed at basis " + std::to_string(i);
    }
    report.add("unit", unit_failure.empty(), unit_failure);

    std::vector<Index> first;
    std::string mode = "all basis triples";
    if (n <= full_limit || !unit_failure.empty()) {
        for (Index i = 0; i < n; ++i) first.push_back(i);
    } else {
        first = algebra_generators(A);
        mode = "generator-reduced (" + std::to_string(first.size()) + " generators)";
    }
    std::string assoc_failure;
    for (Index i : first) {
        for (Index j = 0; j < n && assoc_failure.empty(); ++j) {
            SpVec<S> ij = sparse_column(A.mul, i * n + j);
            for (Index k = 0; k < n; ++k) {
                SpVec<S> lhs = product_with_basis_right(A, acc, ij, k);
                SpVec<S> jk = sparse_column(A.mul, j * n + k);
                SpVec<S> rhs = product_with_basis_left(A, acc, i, jk);
                if (!sparse_equal(lhs, rhs)) {
                    std::ostringstream os;
                    os << "associativity failed at triple (" << i << "," << j << "," << k << ")";
                    assoc_failure = os.str();
                    break;
                }
            }
        }
        if (!assoc_failure.empty()) break;
    }
    report.add("associativity", assoc_failure.empty(), assoc_failure.empty() ? mode : assoc_failure);
    return report;
}

template <class S>
Vec<S> multiply(const StructureAlgebra<S>& A, const Vec<S>& a, const Vec<S>& b) {
    if (a.size() != A.dim || b.size() != A.dim) throw std::invalid_argument("multiply: length mismatch");
    return to_dense(A.field, multiply(A, to_sparse(a), to_sparse(b)));
}

template <class S>
SpVec<S> multiply(const StructureAlgebra<S>& A, const SpVec<S>& a, const SpVec<S>& b) {
    if (a.size() != A.dim || b.size() != A.dim) throw std::invalid_argument("multiply: length mismatch");
    Accumulator<S> acc(A.field, A.dim);
    for (typename SpVec<S>::InnerIterator ia(a); ia; ++ia)
        for (typename SpVec<S>::InnerIterator ib(b); ib; ++ib)
            acc.add_column(A.mul, ia.index() * A.dim + ib.index(), ia.value() * ib.value());
    return acc.take();
}

template <class S>
Mat<S> left_multiplication(const StructureAlgebra<S>& A, const Vec<S>& a) {
    Mat<S> L = zeros(A.field, A.dim, A.dim);
    for (Index j = 0; j < A.dim; ++j) L.col(j) = multiply(A, a, unit_vector(A.field, A.dim, j));
    return L;
}

template <class S>
Mat<S> right_multiplication(const StructureAlgebra<S>& A, const Vec<S>& a) {
    Mat<S> R = zeros(A.field, A.dim, A.dim);
    for (Index j = 0; j < A.dim; ++j) R.col(j) = multiply(A, unit_vector(A.field, A.dim, j), a);
    return R;
}

template <class S>
StructureAlgebra<S> tensor_algebra(const StructureAlgebra<S>& A, const StructureAlgebra<S>& B) {
    if (!(A.field == B.field)) throw FieldMismatch("tensor_algebra: algebras over different fields");
    const Index na = A.dim, nb = B.dim, n = na * nb;
    std::vector<Eigen::Triplet<S>> triplets;
    for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < na; ++j)
            for (typename SpMat<S>::InnerIterator ia(A.mul, i * na + j); ia; ++ia)
                for (Index k = 0; k < nb; ++k)
                    for (Index l = 0; l < nb; ++l)
                        for (typename SpMat<S>::InnerIterator ib(B.mul, k * nb + l); ib; ++ib) {
                            Index I = i * nb + k, J = j * nb + l;
                            triplets.emplace_back(ia.row() * nb + ib.row(), I * n + J, ia.value() * ib.value());
                        }
    SpMat<S> mul(n, n * n);
    mul.setFromTriplets(triplets.begin(), triplets.end());
    Mat<S> unit = kronecker(Mat<S>(A.unit), Mat<S>(B.unit));
    return StructureAlgebra<S>{A.field, n, mul, Vec<S>(unit.col(0))};
}

template <class S>
StructureAlgebra<S> opposite(const StructureAlgebra<S>& A) {
    const Index n = A.dim;
    std::vector<Eigen::Triplet<S>> triplets;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (typename SpMat<S>::InnerIterator it(A.mul, j * n + i); it; ++it)
                triplets.emplace_back(it.row(), i * n + j, it.value());
    SpMat<S> mul(n, n * n);
    mul.setFromTriplets(triplets.begin(), triplets.end());
    return StructureAlgebra<S>{A.field, n, mul, A.unit};
}

template <class S>
std::vector<Index> algebra_generators(const StructureAlgebra<S>& A) {
    const Index n = A.dim;
    const Field<S>& F = A.field;
    detail::SpanTracker<S> span(F, n);
    std::vector<Vec<S>> words;
    std::vector<Index> gens;
    if (span.add(A.unit)) words.push_back(A.unit);

    for (Index i = 0; i < n && span.rank() < n; ++i) {
        Vec<S> e = unit_vector(F, n, i);
        if (span.contains(e)) continue;
        gens.push_back(i);
        // the new generator acts on every existing word; new words get all generators
        std::deque<std::pair<Vec<S>, bool>> queue;
        for (const Vec<S>& w : words) queue.emplace_back(w, false);
        while (!queue.empty() && span.rank() < n) {
            auto [w, all] = queue.front();
            queue.pop_front();
            std::vector<Index> apply = all ? gens : std::vector<Index>{gens.back()};
            for (Index g : apply) {
                Vec<S> product = multiply(A, unit_vector(F, n, g), w);
                if (span.add(product)) {
                    words.push_back(product);
                    queue.emplace_back(product, true);
                }
            }
        }
    }
    return gens;
}

template <class S>
bool is_algebra_map(const StructureAlgebra<S>& A, const StructureAlgebra<S>& B, const Mat<S>& M) {
    if (M.rows() != B.dim || M.cols() != A.dim) return false;
    if (Vec<S>(M * A.unit) != B.unit) return false;
    for (Index i = 0; i < A.dim; ++i)
        for (Index j = 0; j < A.dim; ++j) {
            Vec<S> lhs = M * to_dense(A.field, sparse_column(A.mul, i * A.dim + j));
            Vec<S> rhs = multiply(B, Vec<S>(M.col(i)), Vec<S>(M.col(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

template <class S>
bool operator==(const StructureAlgebra<S>& A, const StructureAlgebra<S>& B) {
    if (!(A.field == B.field) || A.dim != B.dim || A.unit != B.unit) return false;
    for (Index c = 0; c < A.mul.cols(); ++c)
        if (!sparse_equal(sparse_column(A.mul, c), sparse_column(B.mul, c))) return false;
    return true;
}

#define FHOPF_INSTANTIATE_ALGEBRA(S)                                                                    \
    template struct StructureAlgebra<S>;                                                                \
    template void check_shape(const StructureAlgebra<S>&);                                              \
    template Report verify_algebra(const StructureAlgebra<S>&, Index);                                  \
    template Vec<S> multiply(const StructureAlgebra<S>&, const Vec<S>&, const Vec<S>&);                 \
    template SpVec<S> multiply(const StructureAlgebra<S>&, const SpVec<S>&, const SpVec<S>&);           \
    template Mat<S> left_multiplication(const StructureAlgebra<S>&, const Vec<S>&);                     \
    template Mat<S> right_multiplication(const StructureAlgebra<S>&, const Vec<S>&);                    \
    template StructureAlgebra<S> tensor_algebra(const StructureAlgebra<S>&, const StructureAlgebra<S>&); \
    template StructureAlgebra<S> opposite(const StructureAlgebra<S>&);                                  \
    template std::vector<Index> algebra_generators(const StructureAlgebra<S>&);                         \
    template bool is_algebra_map(const StructureAlgebra<S>&, const StructureAlgebra<S>&, const Mat<S>&); \
    template bool operator==(const StructureAlgebra<S>&, const StructureAlgebra<S>&);

FHOPF_INSTANTIATE_ALGEBRA(Rational)
FHOPF_INSTANTIATE_ALGEBRA(Fp)

}  // namespace fhopf
