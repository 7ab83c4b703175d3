#ifndef FHOPF_SEPARABILITY_HPP
#define FHOPF_SEPARABILITY_HPP

#include <optional>

#include "fhopf/frobenius.hpp"

namespace fhopf {

enum class SeparabilityKind { ordinary, kanzaki };

/// e = sum z_j (x) w_j in A (x) A, stored with index i*dim+k for e_i (x) e_k.
///   ordinary: mu(e) = 1 and a e = e a;
///   kanzaki:  mu(e) = 1 and sum z_j a (x) w_j = sum z_j (x) a w_j.
template <class S>
struct SeparabilityCertificate {
    Vec<S> element;
    SeparabilityKind kind = SeparabilityKind::ordinary;
};

/// Invertibility of a scalar of the base ring; over a field, nonzero.
template <class S>
bool is_morita_invertible(const S& s) {
    return !is_zero(s);
}

template <class S>
Report verify_separability_certificate(const StructureAlgebra<S>& A, const SeparabilityCertificate<S>& cert);

template <class S>
struct SeparabilityVerdict {
    bool separable = false;
    std::optional<SeparabilityCertificate<S>> certificate;
};

/// Separable iff eps(N) is invertible; the certificate is
/// eps(N)^-1 sum N_2 (x) S^-1(N_1). Throws TheoremViolation if it fails verification.
template <class S>
SeparabilityVerdict<S> is_separable_hopf(const HopfAlgebra<S>& H, const IntegralData<S>& data);

/// e = sum x_i (x) q_i d y_i when sum x_i q_i d y_i = 1, otherwise nothing.
template <class S>
std::optional<SeparabilityCertificate<S>> separability_from_system(const StructureAlgebra<S>& A,
                                                                   const FrobeniusSystem<S>& sys, const Vec<S>& d);

/// u = sum q_i y_i x_i.
template <class S>
Vec<S> dual_basis_product(const StructureAlgebra<S>& A, const FrobeniusSystem<S>& sys);

/// When u is invertible, the Kanzaki element sum y_i (x) x_i u^-1, checked
/// together with nu(a) = u a u^-1; throws TheoremViolation if a check fails.
template <class S>
std::optional<SeparabilityCertificate<S>> strong_separability(const StructureAlgebra<S>& A,
                                                              const FrobeniusSystem<S>& sys);

/// Result of solving the linear conditions on a separability idempotent.
template <class S>
struct IdempotentSearch {
    bool ran = false;
    std::optional<Vec<S>> idempotent;
};

/// Solves mu(e) = 1, a e = e a for e in A (x) A. Runs only for dim(A (x) A) <= 64
/// over F_p with p <= 7; otherwise `ran` is false.
template <class S>
IdempotentSearch<S> search_separability_idempotent(const StructureAlgebra<S>& A);

/// If H and H* are both separable (and 2 != 0), S^2 = id; a separable H has m = eps.
/// Reports "hypotheses not met" when H is not separable.
template <class S>
Report etingof_gelaki_check(const HopfAlgebra<S>& H, const IntegralData<S>& data);

}  // namespace fhopf

#endif  // FHOPF_SEPARABILITY_HPP
