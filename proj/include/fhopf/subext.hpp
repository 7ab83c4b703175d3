#ifndef FHOPF_SUBEXT_HPP
#define FHOPF_SUBEXT_HPP

#include <optional>
#include <vector>

#include "fhopf/frobenius.hpp"

namespace fhopf {

/// Hopf subalgebra K of H given by the injective map iota (dim H x dim K).
template <class S>
struct SubalgebraEmbedding {
    HopfAlgebra<S> K;
    HopfAlgebra<S> H;
    Mat<S> iota;
};

/// iota is a unital algebra map commuting with Delta, eps and S, and the
/// Nakayama automorphism of H maps iota(K) onto itself. Throws
/// std::invalid_argument on mismatched shapes or a non-injective iota.
template <class S>
Report verify_embedding(const SubalgebraEmbedding<S>& emb);

/// k<g> inside H for a group-like g of finite order, with e_i -> g^i.
/// Throws std::invalid_argument if g is not group-like of order at most dim H.
template <class S>
SubalgebraEmbedding<S> cyclic_subalgebra(const HopfAlgebra<S>& H, const Vec<S>& g);

/// K = H with iota = id.
template <class S>
SubalgebraEmbedding<S> identity_embedding(const HopfAlgebra<S>& H);

/// The relative Nakayama automorphism of K, computed both as
/// nu_K o nu_H^-1 restricted to K and as chi -> (-) for the character
/// chi(a) = sum m_K(a_1) m_H^-1(iota(a_2)).
template <class S>
struct RelativeNakayama {
    Mat<S> by_composition;
    Mat<S> by_character;
    RowVec<S> character;
    Report report;
};

/// Throws TheoremViolation if nu_H does not preserve iota(K).
template <class S>
RelativeNakayama<S> relative_nakayama(const SubalgebraEmbedding<S>& emb);

/// E: H -> K with E(iota(a) x iota(b)) = beta(a) E(x) b, together with
/// sum_i u_i iota(E(v_i x)) = x and sum_i iota(beta^-1(E(x u_i))) v_i = x.
template <class S>
struct RelativeFrobeniusData {
    Mat<S> beta;
    Mat<S> E;
    std::vector<Vec<S>> us;
    std::vector<Vec<S>> vs;
    Index bimodule_maps = 0;  // dimension of the solved space of E
};

/// Elements u_1..u_r with H = (+) u_i iota(K), chosen greedily from the
/// basis of H, or nullopt if the greedy choice does not exhaust H.
template <class S>
std::optional<std::vector<Vec<S>>> right_free_basis(const SubalgebraEmbedding<S>& emb);

/// Canonical basis (columns, vec index c*dim K + r for E(r,c)) of the maps
/// E satisfying the (beta,1)-bimodule condition.
template <class S>
Mat<S> twisted_bimodule_maps(const SubalgebraEmbedding<S>& emb, const Mat<S>& beta);

/// Rank of x -> E(x -), as a map H -> Hom_k(H, K).
template <class S>
Index frobenius_rank(const SubalgebraEmbedding<S>& emb, const Mat<S>& E);

/// Solves the bimodule maps, selects the first nondegenerate candidate among
/// the canonical generators followed by the combination sum (i+1) E_i, and
/// solves the dual bases against a right free basis. Throws TheoremViolation
/// when no candidate is nondegenerate or an identity fails.
template <class S>
RelativeFrobeniusData<S> beta_frobenius_structure(const SubalgebraEmbedding<S>& emb, const Mat<S>& beta);

/// Bimodule condition, both dual-basis identities and beta an automorphism.
template <class S>
Report verify_relative_frobenius(const SubalgebraEmbedding<S>& emb, const RelativeFrobeniusData<S>& data);

/// Right K-module on k^d: action[b] is the matrix of m -> m . e_b.
template <class S>
struct RightModule {
    std::vector<Mat<S>> action;
    Index dim() const { return action.empty() ? 0 : action.front().rows(); }
};

/// Throws InvalidStructure unless 1 acts as the identity and
/// action(e_a e_b) = action(e_b) action(e_a).
template <class S>
void check_right_module(const StructureAlgebra<S>& K, const RightModule<S>& M);

template <class S>
RightModule<S> trivial_module(const HopfAlgebra<S>& K);
template <class S>
RightModule<S> regular_module(const StructureAlgebra<S>& K);
/// Module given by the images of the generators of a cyclic K = k<g>.
template <class S>
RightModule<S> cyclic_module(const StructureAlgebra<S>& K, const Mat<S>& generator);

/// Builds M (x)_K H and Hom_K(H, M (x)_K P) for P the beta-twist of K and checks
/// that m (x) h -> (x -> m . beta^-1(E(h x))) is a bijective H-module map.
template <class S>
Report induction_coinduction_check(const SubalgebraEmbedding<S>& emb, const RelativeFrobeniusData<S>& data,
                                   const RightModule<S>& M);

}  // namespace fhopf

#endif  // FHOPF_SUBEXT_HPP
