#ifndef FHOPF_HOPF_HPP
#define FHOPF_HOPF_HPP

#include <string>
#include <vector>

#include "fhopf/algebra.hpp"

namespace fhopf {

/// Finite-dimensional Hopf algebra by structure constants.
///
/// `comul` is dim^2 x dim: column i holds Delta(e_i), with row j*dim+k for e_j (x) e_k.
/// Column i of `antipode` is S(e_i). Functionals on H are row vectors in the
/// dual basis e^i(e_j) = delta_ij.
template <class S>
struct HopfAlgebra {
    using Scalar = S;
    StructureAlgebra<S> alg;
    SpMat<S> comul;
    RowVec<S> counit;
    Mat<S> antipode;
    std::vector<std::string> names;

    Index dim() const { return alg.dim; }
    const Field<S>& field() const { return alg.field; }
    /// comul[i][j][k], the coefficient of e_j (x) e_k in Delta(e_i).
    S comul_coeff(Index i, Index j, Index k) const;
};

template <class S>
void check_shape(const HopfAlgebra<S>& H);

/// Bialgebra and antipode axioms. Failures name the axiom and the first
/// offending basis index, e.g. "antipode axiom failed at basis 2".
template <class S>
Report verify_hopf(const HopfAlgebra<S>& H, Index full_limit = 40);

/// Delta(a) as a vector of length dim^2.
template <class S>
Vec<S> coproduct(const HopfAlgebra<S>& H, const Vec<S>& a);

/// Matrix inverse of the antipode; throws NotInvertible if singular.
template <class S>
Mat<S> antipode_inverse(const HopfAlgebra<S>& H);

/// Hopf algebra structure on H* in the dual basis.
template <class S>
HopfAlgebra<S> dual_hopf(const HopfAlgebra<S>& H);

/// Convolution product (f*g)(a) = sum f(a1) g(a2).
template <class S>
RowVec<S> convolve(const HopfAlgebra<S>& H, const RowVec<S>& f, const RowVec<S>& g);

/// g -> a = sum a1 g(a2).
template <class S>
Vec<S> act_left(const HopfAlgebra<S>& H, const RowVec<S>& g, const Vec<S>& a);

/// a <- g = sum g(a1) a2.
template <class S>
Vec<S> act_right(const HopfAlgebra<S>& H, const Vec<S>& a, const RowVec<S>& g);

/// Matrix of a -> g -> a.
template <class S>
Mat<S> act_left_matrix(const HopfAlgebra<S>& H, const RowVec<S>& g);

/// Matrix of a -> a <- g.
template <class S>
Mat<S> act_right_matrix(const HopfAlgebra<S>& H, const RowVec<S>& g);

/// Delta(v) = v (x) v and eps(v) = 1.
template <class S>
bool is_group_like(const HopfAlgebra<S>& H, const Vec<S>& v);

/// f is an algebra map H -> k.
template <class S>
bool is_character(const HopfAlgebra<S>& H, const RowVec<S>& f);

/// Canonical basis (as columns) of left integrals {t : a t = eps(a) t} in H.
template <class S>
Mat<S> left_integrals(const HopfAlgebra<S>& H);

/// Canonical basis (as columns) of right integrals {t : t a = eps(a) t} in H.
template <class S>
Mat<S> right_integrals(const HopfAlgebra<S>& H);

/// Canonical basis (columns, coordinates in the dual basis) of left integrals
/// {l : f l = f(1) l for all f} in H*.
template <class S>
Mat<S> left_dual_integrals(const HopfAlgebra<S>& H);

/// Same for right integrals {r : r f = f(1) r} in H*.
template <class S>
Mat<S> right_dual_integrals(const HopfAlgebra<S>& H);

/// H* as a right Hopf module over H, split as coinvariants (x) H.
///
/// forward: H* -> H, f -> sum P(f_0) (x) f_1 in coordinates of the single
/// coinvariant generator; backward: H -> H*, h -> (x -> l(x S(h))).
template <class S>
struct HopfModuleDecomposition {
    Mat<S> coinvariants;
    Mat<S> iso_forward;
    Mat<S> iso_backward;
};

template <class S>
HopfModuleDecomposition<S> hopf_module_decompose(const HopfAlgebra<S>& H);

/// Right coaction of H on H*: chi(f) = sum_i (e^i * f) (x) e_i, as a dim^2 x dim
/// matrix acting on dual coordinates with row k*dim+i for e^k (x) e_i.
template <class S>
Mat<S> dual_coaction(const HopfAlgebra<S>& H);

/// True when the two Hopf algebras have identical structure constants.
template <class S>
bool same_structure(const HopfAlgebra<S>& A, const HopfAlgebra<S>& B);

/// True when M (dim B x dim A) is an invertible map of Hopf algebras A -> B.
template <class S>
bool is_hopf_isomorphism(const HopfAlgebra<S>& A, const HopfAlgebra<S>& B, const Mat<S>& M);

}  // namespace fhopf

#endif  // FHOPF_HOPF_HPP
