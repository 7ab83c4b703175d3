#ifndef FHOPF_FROBENIUS_HPP
#define FHOPF_FROBENIUS_HPP

#include <optional>
#include <vector>

#include "fhopf/hopf.hpp"

namespace fhopf {

/// Frobenius homomorphism psi with dual bases and Nakayama automorphism:
///   sum_i psi(a x_i) q_i y_i = a,  sum_i x_i q_i psi(y_i a) = a,
///   psi(x a) = psi(nu(a) x).
/// Over a field the invertible module is k itself, so every q_i, chi and gamma is 1.
template <class S>
struct FrobeniusSystem {
    RowVec<S> psi;
    std::vector<Vec<S>> xs;
    std::vector<Vec<S>> ys;
    std::vector<S> qs;
    Mat<S> nakayama;
    S chi;
    S gamma;
};

/// Left integral psi in H*, its left norm N (psi(a N) = eps(a)), the left
/// modular function m of H (N a = m(a) N) and the group-like b in H with
/// psi f = f(b) psi.
template <class S>
struct IntegralData {
    RowVec<S> psi;
    Vec<S> norm;
    RowVec<S> m;
    Vec<S> b;
};

template <class S>
struct DualIntegrals {
    Mat<S> left;
    Mat<S> right;
};

/// Canonical bases of the left and right integrals in H*; throws
/// InvalidStructure unless both are one-dimensional.
template <class S>
DualIntegrals<S> dual_integrals(const HopfAlgebra<S>& H);

/// G(i,k) = phi(e_i e_k).
template <class S>
Mat<S> gram_matrix(const StructureAlgebra<S>& A, const RowVec<S>& phi);

/// Integral data for the canonical left integral, or for `psi` when given
/// (it must span the left integrals). Every invariant is re-checked; a
/// singular Gram matrix throws InvalidStructure("not Frobenius") and any other
/// inconsistency throws InvalidStructure.
template <class S>
IntegralData<S> build_integral_data(const HopfAlgebra<S>& H);

template <class S>
IntegralData<S> build_integral_data(const HopfAlgebra<S>& H, const RowVec<S>& psi);

/// Dual bases read off an element w of H: for each nonzero coefficient c of
/// e_j (x) e_k in Delta(w), in row-major (j,k) order, x = c e_k and y = S^-1(e_j).
template <class S>
void dual_bases_from_coproduct(const HopfAlgebra<S>& H, const Vec<S>& w, std::vector<Vec<S>>& xs,
                               std::vector<Vec<S>>& ys);

/// Nakayama automorphism of phi, solved from G^T nu = G.
template <class S>
Mat<S> solve_nakayama(const StructureAlgebra<S>& A, const RowVec<S>& phi);

/// Frobenius system with psi the integral and dual bases {N_2}, {S^-1(N_1)}.
/// Throws TheoremViolation if the result fails verify_frobenius_system.
template <class S>
FrobeniusSystem<S> frobenius_system_from_norm(const HopfAlgebra<S>& H, const IntegralData<S>& data);

/// Frobenius system for an arbitrary nondegenerate functional: x_i = e_i and
/// y_i from the inverse Gram matrix. Throws InvalidStructure if phi is degenerate.
template <class S>
FrobeniusSystem<S> frobenius_system_from_functional(const StructureAlgebra<S>& A, const RowVec<S>& phi);

/// Both dual-basis identities on every basis element, the Nakayama relation,
/// and that nakayama is an algebra automorphism.
template <class S>
Report verify_frobenius_system(const StructureAlgebra<S>& A, const FrobeniusSystem<S>& sys);

/// Matrix of a -> S^-2(m -> a).
template <class S>
Mat<S> nakayama_closed_form(const HopfAlgebra<S>& H, const IntegralData<S>& data);

/// The two factorizations of the closed form agree with each other and with `solved`.
template <class S>
Report verify_nakayama_closed_form(const HopfAlgebra<S>& H, const IntegralData<S>& data, const Mat<S>& solved);

/// Invertible d with psi' = psi d, together with the checks on the dual bases
/// and Nakayama automorphisms.
template <class S>
struct Comparison {
    Vec<S> derivative;
    Report report;
};

/// Throws InvalidStructure("systems not comparable") if no invertible d exists.
template <class S>
Comparison<S> compare_systems(const StructureAlgebra<S>& A, const FrobeniusSystem<S>& sys,
                              const FrobeniusSystem<S>& other);

/// New system (psi o alpha, alpha^-1(y_i), alpha^-1(x_i), alpha^-1 nu^-1 alpha)
/// for an anti-automorphism alpha. Throws TheoremViolation if it is not a system.
template <class S>
FrobeniusSystem<S> transform_by_anti_automorphism(const StructureAlgebra<S>& A, const FrobeniusSystem<S>& sys,
                                                  const Mat<S>& alpha);

/// Transform of the norm system by alpha = S^-1, giving (psi o S^-1, N_1, S(N_2)).
/// Its Nakayama automorphism must be x -> S^2(x) <- m and psi o S^-1 must be a
/// right integral; either failure throws TheoremViolation.
template <class S>
FrobeniusSystem<S> transform_by_antipode(const HopfAlgebra<S>& H, const IntegralData<S>& data,
                                         const FrobeniusSystem<S>& sys);

/// psi o S^-1 = psi b and psi(S^-1(N)) = 1.
template <class S>
Report verify_prop_G(const HopfAlgebra<S>& H, const IntegralData<S>& data);

/// S^4(a) = b^-1 (m -> a <- m^-1) b on every basis element, with m^-1 = m o S.
template <class S>
Report verify_radford(const HopfAlgebra<S>& H, const IntegralData<S>& data);

struct Orders {
    int antipode = 0;
    int nakayama = 0;
    int antipode_squared = 0;
    bool antipode_divides = false;
    bool nakayama_divides = false;
};

/// Orders of S, nu and S^2; throws TheoremViolation if S or nu does not reach
/// the identity within 4 dim powers.
template <class S>
Orders orders(const HopfAlgebra<S>& H, const IntegralData<S>& data);

/// The norm viewed from H*: N is a Frobenius homomorphism for H* with dual
/// bases {psi_2}, {S^-1(psi_1)}; psi -> N = 1; S_{H*}(g) = sum N(g psi_2) psi_1;
/// every left integral T of H is psi(T) N; the left integrals of H are span{N};
/// and the modular function of H* read from the Nakayama automorphism of N is b.
template <class S>
Report dual_frobenius_check(const HopfAlgebra<S>& H, const IntegralData<S>& data);

/// m o S = m^-1, m o S^2 = m, S^2(b) = b, Gram invertible, and nu(N) spanning
/// the right integrals of H.
template <class S>
Report verify_modular_invariants(const HopfAlgebra<S>& H, const IntegralData<S>& data,
                                 const FrobeniusSystem<S>& sys);

}  // namespace fhopf

#endif  // FHOPF_FROBENIUS_HPP
