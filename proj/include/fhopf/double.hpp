#ifndef FHOPF_DOUBLE_HPP
#define FHOPF_DOUBLE_HPP

#include "fhopf/hopf.hpp"

namespace fhopf {

/// The straightening rule x g = f (x) y, written as an n x n matrix whose
/// (a, q) entry is the coefficient of e^a (x) e_q.
template <class S>
using Straightening = Mat<S>;

/// x g = sum g_2 (S^-1 g_1 -> x <- g_3) for x = e_j, g = e^b.
template <class S>
Straightening<S> straighten_by_actions(const HopfAlgebra<S>& H, Index j, Index b);

/// x g = sum (x_1 g S^-1 x_3) x_2 for x = e_j, g = e^b, where (a f c)(y) = f(c y a).
template <class S>
Straightening<S> straighten_by_bimodule(const HopfAlgebra<S>& H, Index j, Index b);

/// D(H) = H*cop (x) H on the basis e^a (x) e_j with index a*dim + j.
/// Multiplication comes from straighten_by_actions; coproduct
/// (f (x) x) -> (f_2 (x) x_1) (x) (f_1 (x) x_2); antipode S'(g x) = S(x) S^-1(g).
template <class S>
HopfAlgebra<S> drinfeld_double(const HopfAlgebra<S>& H);

/// First basis pair (j, b) where the two straightening rules differ.
template <class S>
std::optional<std::pair<Index, Index>> straightening_mismatch(const HopfAlgebra<S>& H);

/// Matrices of x -> 1 (x) x and f -> f (x) 1.
template <class S>
Mat<S> embed_hopf_factor(const HopfAlgebra<S>& H);
template <class S>
Mat<S> embed_dual_factor(const HopfAlgebra<S>& H);

template <class S>
struct DoubleReport {
    HopfAlgebra<S> double_algebra;
    Report report;
    Index dual_left_integrals = 0;
    Index left_integrals = 0;
    bool unimodular = false;
};

/// Builds D(H) and checks the axioms, the agreement of the two straightening
/// rules, the embeddings of H and H*cop, S'^2 on H, and that the left integrals
/// of D(H)* are one-dimensional. Unimodularity of D(H) is reported, not asserted.
template <class S>
DoubleReport<S> double_fh_check(const HopfAlgebra<S>& H);

}  // namespace fhopf

#endif  // FHOPF_DOUBLE_HPP
