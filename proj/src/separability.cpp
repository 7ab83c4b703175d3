#include "fhopf/separability.hpp"

namespace fhopf {

namespace {

/// E(i,k) is the coefficient of e_i (x) e_k.
template <class S>
Mat<S> as_matrix(const Vec<S>& e, Index n) {
    Mat<S> E(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index k = 0; k < n; ++k) E(i, k) = e(i * n + k);
    return E;
}

template <class S>
Vec<S> as_vector(const Mat<S>& E) {
    const Index n = E.rows();
    Vec<S> e(n * n);
    for (Index i = 0; i < n; ++i)
        for (Index k = 0; k < n; ++k) e(i * n + k) = E(i, k);
    return e;
}

template <class S>
Vec<S> tensor_sum(const Field<S>& F, Index n, const std::vector<Vec<S>>& left, const std::vector<Vec<S>>& right) {
    Mat<S> E = zeros(F, n, n);
    for (size_t t = 0; t < left.size(); ++t) E += left[t] * right[t].transpose();
    return as_vector(E);
}

template <class S>
Vec<S> contract(const StructureAlgebra<S>& A, const Vec<S>& e) {
    return to_dense(A.field, SpVec<S>(A.mul * to_sparse(e)));
}

template <class S>
std::optional<Vec<S>> invert(const StructureAlgebra<S>& A, const Vec<S>& u) {
    auto z = solve(A.field, left_multiplication(A, u), A.unit);
    if (!z || multiply(A, *z, u) != A.unit) return std::nullopt;
    return z;
}

}  // namespace

template <class S>
Report verify_separability_certificate(const StructureAlgebra<S>& A, const SeparabilityCertificate<S>& cert) {
    const Index n = A.dim;
    const Mat<S> E = as_matrix(cert.element, n);
    Report r;
    r.add("mu(e) = 1", contract(A, cert.element) == A.unit);
    std::optional<Index> bad;
    for (Index a = 0; a < n && !bad; ++a) {
        Vec<S> ea = unit_vector(A.field, n, a);
        const Mat<S> L = left_multiplication(A, ea), R = right_multiplication(A, ea);
        bool ok = cert.kind == SeparabilityKind::ordinary ? Mat<S>(L * E) == Mat<S>(E * R.transpose())
                                                          : Mat<S>(R * E) == Mat<S>(E * L.transpose());
        if (!ok) bad = a;
    }
    const char* name = cert.kind == SeparabilityKind::ordinary ? "a e = e a" : "kanzaki identity";
    r.add(name, !bad, bad ? "failed at basis " + std::to_string(*bad) : std::string{});
    return r;
}

template <class S>
SeparabilityVerdict<S> is_separable_hopf(const HopfAlgebra<S>& H, const IntegralData<S>& data) {
    const Field<S>& F = H.field();
    SeparabilityVerdict<S> out;
    const S epsN = (H.counit * data.norm)(0, 0);
    out.separable = is_morita_invertible(epsN);
    if (!out.separable) return out;
    std::vector<Vec<S>> xs, ys;
    dual_bases_from_coproduct(H, data.norm, xs, ys);
    const S p = F.one() / epsN;
    for (Vec<S>& y : ys) y *= p;
    SeparabilityCertificate<S> cert{tensor_sum(F, H.dim(), xs, ys), SeparabilityKind::ordinary};
    Report r = verify_separability_certificate(H.alg, cert);
    if (!r.passed()) throw TheoremViolation("separability idempotent: " + r.first_failure()->name);
    out.certificate = cert;
    return out;
}

template <class S>
std::optional<SeparabilityCertificate<S>> separability_from_system(const StructureAlgebra<S>& A,
                                                                   const FrobeniusSystem<S>& sys, const Vec<S>& d) {
    const Field<S>& F = A.field;
    const Index n = A.dim;
    std::vector<Vec<S>> xs, dys;
    Vec<S> total = Vec<S>::Constant(n, F.zero());
    for (size_t i = 0; i < sys.xs.size(); ++i) {
        Vec<S> dy = sys.qs[i] * multiply(A, d, sys.ys[i]);
        total += multiply(A, sys.xs[i], dy);
        xs.push_back(sys.xs[i]);
        dys.push_back(dy);
    }
    if (total != A.unit) return std::nullopt;
    SeparabilityCertificate<S> cert{tensor_sum(F, n, xs, dys), SeparabilityKind::ordinary};
    if (!verify_separability_certificate(A, cert).passed()) return std::nullopt;
    return cert;
}

template <class S>
Vec<S> dual_basis_product(const StructureAlgebra<S>& A, const FrobeniusSystem<S>& sys) {
    Vec<S> u = Vec<S>::Constant(A.dim, A.field.zero());
    for (size_t i = 0; i < sys.xs.size(); ++i) u += sys.qs[i] * multiply(A, sys.ys[i], sys.xs[i]);
    return u;
}

template <class S>
std::optional<SeparabilityCertificate<S>> strong_separability(const StructureAlgebra<S>& A,
                                                              const FrobeniusSystem<S>& sys) {
    const Field<S>& F = A.field;
    const Index n = A.dim;
    const Vec<S> u = dual_basis_product(A, sys);
    auto uinv = invert(A, u);
    if (!uinv) return std::nullopt;

    std::vector<Vec<S>> ys, xus;
    for (size_t i = 0; i < sys.xs.size(); ++i) {
        ys.push_back(sys.ys[i]);
        xus.push_back(sys.qs[i] * multiply(A, sys.xs[i], *uinv));
    }
    SeparabilityCertificate<S> cert{tensor_sum(F, n, ys, xus), SeparabilityKind::kanzaki};
    Report r = verify_separability_certificate(A, cert);
    if (!r.passed()) throw TheoremViolation("kanzaki element: " + r.first_failure()->name);
    const Mat<S> conj = left_multiplication(A, u) * right_multiplication(A, *uinv);
    if (conj != sys.nakayama) throw TheoremViolation("nu(a) = u a u^-1 fails");
    return cert;
}

template <class S>
IdempotentSearch<S> search_separability_idempotent(const StructureAlgebra<S>& A) {
    const Field<S>& F = A.field;
    const Index n = A.dim;
    IdempotentSearch<S> out;
    const std::uint64_t p = F.characteristic();
    if (p == 0 || p > 7 || n * n > 64) return out;
    out.ran = true;
    const Mat<S> I = identity(F, n);
    Mat<S> system = zeros(F, n * n * n + n, n * n);
    Vec<S> rhs = Vec<S>::Constant(n * n * n + n, F.zero());
    for (Index a = 0; a < n; ++a) {
        Vec<S> ea = unit_vector(F, n, a);
        system.middleRows(a * n * n, n * n) =
            kronecker(left_multiplication(A, ea), I) - kronecker(I, right_multiplication(A, ea));
    }
    system.bottomRows(n) = Mat<S>(A.mul);
    rhs.tail(n) = A.unit;
    out.idempotent = solve(F, system, rhs);
    return out;
}

template <class S>
Report etingof_gelaki_check(const HopfAlgebra<S>& H, const IntegralData<S>& data) {
    Report r;
    const bool sep = is_separable_hopf(H, data).separable;
    if (!sep) {
        r.add("hypotheses", true, "hypotheses not met");
        return r;
    }
    r.add("separable implies m = eps", data.m == H.counit);
    const HopfAlgebra<S> D = dual_hopf(H);
    const bool cosep = is_separable_hopf(D, build_integral_data(D)).separable;
    if (!cosep) {
        r.add("hypotheses", true, "not coseparable; involutivity not asserted");
        return r;
    }
    if (H.field().characteristic() == 2) {
        r.add("hypotheses", true, "characteristic 2; involutivity not asserted");
        return r;
    }
    r.add("S^2 = id", is_identity(Mat<S>(H.antipode * H.antipode)));
    return r;
}

#define FHOPF_INSTANTIATE_SEPARABILITY(S)                                                                      \
    template Report verify_separability_certificate(const StructureAlgebra<S>&,                               \
                                                    const SeparabilityCertificate<S>&);                        \
    template SeparabilityVerdict<S> is_separable_hopf(const HopfAlgebra<S>&, const IntegralData<S>&);          \
    template std::optional<SeparabilityCertificate<S>> separability_from_system(                               \
        const StructureAlgebra<S>&, const FrobeniusSystem<S>&, const Vec<S>&);                                 \
    template Vec<S> dual_basis_product(const StructureAlgebra<S>&, const FrobeniusSystem<S>&);                 \
    template std::optional<SeparabilityCertificate<S>> strong_separability(const StructureAlgebra<S>&,         \
                                                                           const FrobeniusSystem<S>&);         \
    template IdempotentSearch<S> search_separability_idempotent(const StructureAlgebra<S>&);                   \
    template Report etingof_gelaki_check(const HopfAlgebra<S>&, const IntegralData<S>&);

FHOPF_INSTANTIATE_SEPARABILITY(Rational)
FHOPF_INSTANTIATE_SEPARABILITY(Fp)

}  // namespace fhopf
