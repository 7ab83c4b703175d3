#include "fhopf/frobenius.hpp"

#include <stdexcept>

namespace fhopf {

namespace {

template <class S>
Mat<S> power(const Field<S>& F, const Mat<S>& M, int k) {
    Mat<S> P = identity(F, M.rows());
    for (int i = 0; i < k; ++i) P = P * M;
    return P;
}

/// First column where the matrices differ.
template <class S>
std::optional<Index> first_bad_column(const Mat<S>& A, const Mat<S>& B) {
    for (Index j = 0; j < A.cols(); ++j)
        for (Index i = 0; i < A.rows(); ++i)
            if (A(i, j) != B(i, j)) return j;
    return std::nullopt;
}

template <class S>
void add_matrix_check(Report& r, const std::string& name, const Mat<S>& lhs, const Mat<S>& rhs) {
    auto bad = first_bad_column(lhs, rhs);
    r.add(name, !bad, bad ? "failed at basis " + std::to_string(*bad) : std::string{});
}

template <class S>
Index first_nonzero(const Vec<S>& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!is_zero(v(i))) return i;
    return v.size();
}

/// sum_i x_i q_i y_i^T, the dual-basis tensor as a matrix.
template <class S>
Mat<S> dual_basis_tensor(const Field<S>& F, Index n, const FrobeniusSystem<S>& sys) {
    Mat<S> M = zeros(F, n, n);
    for (size_t t = 0; t < sys.xs.size(); ++t) {
        const Vec<S>& x = sys.xs[t];
        const Vec<S>& y = sys.ys[t];
        for (Index i = 0; i < n; ++i) {
            if (is_zero(x(i))) continue;
            S xi = x(i) * sys.qs[t];
            for (Index j = 0; j < n; ++j)
                if (!is_zero(y(j))) M(i, j) += xi * y(j);
        }
    }
    return M;
}

template <class S>
Vec<S> inverse_element(const StructureAlgebra<S>& A, const Vec<S>& d) {
    auto z = solve(A.field, left_multiplication(A, d), A.unit);
    if (!z || multiply(A, *z, d) != A.unit) throw InvalidStructure("element is not invertible");
    return *z;
}

}  // namespace

template <class S>
DualIntegrals<S> dual_integrals(const HopfAlgebra<S>& H) {
    DualIntegrals<S> out{left_dual_integrals(H), right_dual_integrals(H)};
    if (out.left.cols() != 1 || out.right.cols() != 1)
        throw InvalidStructure("integral space of the dual is not one-dimensional");
    return out;
}

template <class S>
Mat<S> gram_matrix(const StructureAlgebra<S>& A, const RowVec<S>& phi) {
    const Index n = A.dim;
    Mat<S> G = zeros(A.field, n, n);
    for (Index c = 0; c < A.mul.outerSize(); ++c)
        for (typename SpMat<S>::InnerIterator it(A.mul, c); it; ++it) G(c / n, c % n) += phi(it.row()) * it.value();
    return G;
}

namespace {

template <class S>
IntegralData<S> integral_data(const HopfAlgebra<S>& H, const RowVec<S>* psi) {
    check_shape(H);
    const Field<S>& F = H.field();
    const Index n = H.dim();
    if (n == 0) throw InvalidStructure("zero-dimensional algebra");

    IntegralData<S> data;
    DualIntegrals<S> ints = dual_integrals(H);
    data.psi = ints.left.col(0).transpose();
    if (psi) {
        if (psi->size() != n || first_nonzero(Vec<S>(psi->transpose())) == n ||
            !same_span(F, Mat<S>(psi->transpose()), ints.left))
            throw std::invalid_argument("psi is not a nonzero left integral");
        data.psi = *psi;
    }

    Mat<S> G = gram_matrix(H.alg, data.psi);
    if (rank(F, G) != n) throw InvalidStructure("not Frobenius: Gram matrix is singular");
    data.norm = *solve(F, G, Vec<S>(H.counit.transpose()));

    const Index p = first_nonzero(data.norm);
    data.m = RowVec<S>(n);
    for (Index a = 0; a < n; ++a) {
        Vec<S> v = multiply(H.alg, data.norm, unit_vector(F, n, a));
        data.m(a) = v(p) / data.norm(p);
        if (v != Vec<S>(data.m(a) * data.norm))
            throw InvalidStructure("norm is not an eigenvector of right multiplication");
    }

    const Index q = first_nonzero(Vec<S>(data.psi.transpose()));
    data.b = Vec<S>(n);
    for (Index i = 0; i < n; ++i) {
        RowVec<S> f = convolve(H, data.psi, RowVec<S>(unit_vector(F, n, i).transpose()));
        data.b(i) = f(q) / data.psi(q);
        if (f != RowVec<S>(data.b(i) * data.psi))
            throw InvalidStructure("psi e^" + std::to_string(i) + " is not proportional to psi");
    }

    for (Index i = 0; i < n; ++i) {
        RowVec<S> f = convolve(H, RowVec<S>(unit_vector(F, n, i).transpose()), data.psi);
        if (f != RowVec<S>(H.alg.unit(i) * data.psi)) throw InvalidStructure("psi is not a left integral");
        Vec<S> aN = multiply(H.alg, unit_vector(F, n, i), data.norm);
        if (aN != Vec<S>(H.counit(i) * data.norm)) throw InvalidStructure("norm is not a left integral");
    }
    if (Vec<S>(G * data.norm) != Vec<S>(H.counit.transpose()))
        throw InvalidStructure("norm does not satisfy psi(a N) = eps(a)");
    if (!is_character(H, data.m)) throw InvalidStructure("modular function is not a character");
    if (!is_group_like(H, data.b)) throw InvalidStructure("modular element is not group-like");
    return data;
}

}  // namespace

template <class S>
IntegralData<S> build_integral_data(const HopfAlgebra<S>& H) {
    return integral_data<S>(H, nullptr);
}

template <class S>
IntegralData<S> build_integral_data(const HopfAlgebra<S>& H, const RowVec<S>& psi) {
    return integral_data(H, &psi);
}

template <class S>
void dual_bases_from_coproduct(const HopfAlgebra<S>& H, const Vec<S>& w, std::vector<Vec<S>>& xs,
                               std::vector<Vec<S>>& ys) {
    const Field<S>& F = H.field();
    const Index n = H.dim();
    const Mat<S> Sbar = antipode_inverse(H);
    const Vec<S> dw = coproduct(H, w);
    xs.clear();
    ys.clear();
    for (Index r = 0; r < n * n; ++r) {
        if (is_zero(dw(r))) continue;
        xs.push_back(dw(r) * unit_vector(F, n, r % n));
        ys.push_back(Sbar.col(r / n));
    }
}

template <class S>
Mat<S> solve_nakayama(const StructureAlgebra<S>& A, const RowVec<S>& phi) {
    Mat<S> G = gram_matrix(A, phi);
    if (rank(A.field, G) != A.dim) throw InvalidStructure("not Frobenius: Gram matrix is singular");
    return *solve_many(A.field, Mat<S>(G.transpose()), G);
}

template <class S>
FrobeniusSystem<S> frobenius_system_from_norm(const HopfAlgebra<S>& H, const IntegralData<S>& data) {
    const Field<S>& F = H.field();
    FrobeniusSystem<S> sys;
    sys.psi = data.psi;
    dual_bases_from_coproduct(H, data.norm, sys.xs, sys.ys);
    sys.qs.assign(sys.xs.size(), F.one());
    sys.nakayama = solve_nakayama(H.alg, data.psi);
    sys.chi = F.one();
    sys.gamma = F.one();
    Report r = verify_frobenius_system(H.alg, sys);
    if (!r.passed()) throw TheoremViolation(r.first_failure()->name + ": " + r.first_failure()->detail);
    return sys;
}

template <class S>
FrobeniusSystem<S> frobenius_system_from_functional(const StructureAlgebra<S>& A, const RowVec<S>& phi) {
    const Field<S>& F = A.field;
    const Index n = A.dim;
    auto Ginv = inverse(F, gram_matrix(A, phi));
    if (!Ginv) throw InvalidStructure("functional is degenerate");
    FrobeniusSystem<S> sys;
    sys.psi = phi;
    for (Index i = 0; i < n; ++i) {
        sys.xs.push_back(unit_vector(F, n, i));
        sys.ys.push_back(Ginv->row(i).transpose());
    }
    sys.qs.assign(n, F.one());
    sys.nakayama = solve_nakayama(A, phi);
    sys.chi = F.one();
    sys.gamma = F.one();
    return sys;
}

template <class S>
Report verify_frobenius_system(const StructureAlgebra<S>& A, const FrobeniusSystem<S>& sys) {
    const Field<S>& F = A.field;
    const Index n = A.dim;
    Report r;
    if (sys.xs.size() != sys.ys.size() || sys.xs.size() != sys.qs.size()) {
        r.add("shape", false, "dual basis lists have different lengths");
        return r;
    }
    const Mat<S> G = gram_matrix(A, sys.psi);
    const Mat<S> M = dual_basis_tensor(F, n, sys);
    const Mat<S> I = identity(F, n);
    // sum psi(a x_i) q_i y_i = a is G M = I column by column; sum x_i q_i psi(y_i a) = a is M G = I.
    add_matrix_check(r, "dual basis psi(a x) y", Mat<S>(G * M), I);
    add_matrix_check(r, "dual basis x psi(y a)", Mat<S>(M * G), I);
    add_matrix_check(r, "nakayama relation", Mat<S>(G.transpose() * sys.nakayama), G);
    bool automorphism = rank(F, sys.nakayama) == n && is_algebra_map(A, A, sys.nakayama);
    r.add("nakayama automorphism", automorphism);
    r.add("chi gamma", sys.chi * sys.gamma == F.one());
    return r;
}

template <class S>
Mat<S> nakayama_closed_form(const HopfAlgebra<S>& H, const IntegralData<S>& data) {
    const Mat<S> Sbar = antipode_inverse(H);
    return Mat<S>(Sbar * Sbar * act_left_matrix(H, data.m));
}

template <class S>
Report verify_nakayama_closed_form(const HopfAlgebra<S>& H, const IntegralData<S>& data, const Mat<S>& solved) {
    const Mat<S> Sbar = antipode_inverse(H);
    const Mat<S> Sbar2 = Sbar * Sbar;
    const Mat<S> Lm = act_left_matrix(H, data.m);
    const Mat<S> closed = nakayama_closed_form(H, data);
    Report r;
    add_matrix_check(r, "closed form factorizations", Mat<S>(Sbar2 * Lm), Mat<S>(Lm * Sbar2));
    add_matrix_check(r, "closed form equals solved", closed, solved);
    return r;
}

template <class S>
Comparison<S> compare_systems(const StructureAlgebra<S>& A, const FrobeniusSystem<S>& sys,
                              const FrobeniusSystem<S>& other) {
    const Field<S>& F = A.field;
    const Index n = A.dim;
    const Mat<S> G = gram_matrix(A, sys.psi);
    auto d = solve(F, Mat<S>(G.transpose()), Vec<S>(other.psi.transpose()));
    if (!d) throw InvalidStructure("systems not comparable");
    Vec<S> dinv;
    try {
        dinv = inverse_element(A, *d);
    } catch (const InvalidStructure&) {
        throw InvalidStructure("systems not comparable");
    }
    const Mat<S> Ld = left_multiplication(A, *d);
    const Mat<S> Ldinv = left_multiplication(A, dinv);
    const Mat<S> Rd = right_multiplication(A, *d);

    Comparison<S> out;
    out.derivative = *d;
    Report& r = out.report;
    r.add("functional", other.psi == RowVec<S>(sys.psi * Ld));
    r.add("derivative invertible", multiply(A, *d, dinv) == A.unit && multiply(A, dinv, *d) == A.unit);
    // sum x'_j (x) y'_j = sum x_i (x) d^-1 y_i
    const Mat<S> M = dual_basis_tensor(F, n, sys), M2 = dual_basis_tensor(F, n, other);
    add_matrix_check(r, "dual bases", M2, Mat<S>(M * Ldinv.transpose()));
    add_matrix_check(r, "nakayama conjugation", other.nakayama, Mat<S>(Ldinv * Rd * sys.nakayama));
    return out;
}

template <class S>
FrobeniusSystem<S> transform_by_anti_automorphism(const StructureAlgebra<S>& A, const FrobeniusSystem<S>& sys,
                                                  const Mat<S>& alpha) {
    const Field<S>& F = A.field;
    auto abar = inverse(F, alpha);
    if (!abar) throw std::invalid_argument("alpha is not invertible");
    auto nubar = inverse(F, sys.nakayama);
    if (!nubar) throw std::invalid_argument("nakayama matrix is not invertible");
    FrobeniusSystem<S> out;
    out.psi = sys.psi * alpha;
    for (size_t i = 0; i < sys.xs.size(); ++i) {
        out.xs.push_back(*abar * sys.ys[i]);
        out.ys.push_back(*abar * sys.xs[i]);
    }
    out.qs = sys.qs;
    out.nakayama = *abar * *nubar * alpha;
    out.chi = sys.chi;
    out.gamma = sys.gamma;
    Report r = verify_frobenius_system(A, out);
    if (!r.passed()) throw TheoremViolation("transformed system: " + r.first_failure()->name);
    return out;
}

template <class S>
FrobeniusSystem<S> transform_by_antipode(const HopfAlgebra<S>& H, const IntegralData<S>& data,
                                         const FrobeniusSystem<S>& sys) {
    if (sys.psi != data.psi) throw std::invalid_argument("system does not belong to the integral data");
    const Field<S>& F = H.field();
    const Index n = H.dim();
    FrobeniusSystem<S> out = transform_by_anti_automorphism(H.alg, sys, antipode_inverse(H));

    const Mat<S> expected = act_right_matrix(H, data.m) * H.antipode * H.antipode;
    if (out.nakayama != expected) throw TheoremViolation("transformed Nakayama automorphism is not S^2(-) <- m");
    for (Index i = 0; i < n; ++i) {
        Vec<S> e = unit_vector(F, n, i);
        if (act_right(H, e, out.psi) != Vec<S>(out.psi(i) * H.alg.unit))
            throw TheoremViolation("psi o S^-1 is not a right integral at basis " + std::to_string(i));
    }
    return out;
}

template <class S>
Report verify_prop_G(const HopfAlgebra<S>& H, const IntegralData<S>& data) {
    const Mat<S> Sbar = antipode_inverse(H);
    Report r;
    RowVec<S> lhs = data.psi * Sbar;
    RowVec<S> rhs = data.psi * left_multiplication(H.alg, data.b);
    r.add("psi o S^-1 = psi b", lhs == rhs);
    r.add("psi(S^-1 N) = 1", (data.psi * Sbar * data.norm)(0, 0) == H.field().one());
    return r;
}

template <class S>
Report verify_radford(const HopfAlgebra<S>& H, const IntegralData<S>& data) {
    const Field<S>& F = H.field();
    const Index n = H.dim();
    const Mat<S> S4 = power(F, H.antipode, 4);
    const Vec<S> binv = H.antipode * data.b;
    const RowVec<S> minv = data.m * H.antipode;
    const Mat<S> rhs = left_multiplication(H.alg, binv) * right_multiplication(H.alg, data.b) *
                       act_left_matrix(H, data.m) * act_right_matrix(H, minv);
    Report r;
    for (Index i = 0; i < n; ++i) {
        std::string name = H.names.empty() ? "e" + std::to_string(i) : H.names[i];
        r.add("radford at " + name, S4.col(i) == rhs.col(i));
    }
    return r;
}

template <class S>
Orders orders(const HopfAlgebra<S>& H, const IntegralData<S>& data) {
    const Field<S>& F = H.field();
    const int n = static_cast<int>(H.dim());
    Orders o;
    auto s = multiplicative_order(F, H.antipode, 4 * n);
    if (!s) throw TheoremViolation("antipode order exceeds 4 dim");
    auto nu = multiplicative_order(F, solve_nakayama(H.alg, data.psi), 4 * n);
    if (!nu) throw TheoremViolation("Nakayama order exceeds 4 dim");
    auto s2 = multiplicative_order(F, Mat<S>(H.antipode * H.antipode), 4 * n);
    o.antipode = *s;
    o.nakayama = *nu;
    o.antipode_squared = *s2;
    o.antipode_divides = (4 * n) % o.antipode == 0;
    o.nakayama_divides = (2 * n) % o.nakayama == 0;
    return o;
}

template <class S>
Report dual_frobenius_check(const HopfAlgebra<S>& H, const IntegralData<S>& data) {
    const Field<S>& F = H.field();
    const Index n = H.dim();
    const HopfAlgebra<S> D = dual_hopf(H);
    const RowVec<S> evaluate_at_norm = data.norm.transpose();
    Report r;

    FrobeniusSystem<S> sys;
    sys.psi = evaluate_at_norm;
    dual_bases_from_coproduct(D, Vec<S>(data.psi.transpose()), sys.xs, sys.ys);
    sys.qs.assign(sys.xs.size(), F.one());
    sys.chi = F.one();
    sys.gamma = F.one();
    try {
        sys.nakayama = solve_nakayama(D.alg, evaluate_at_norm);
        r.merge(verify_frobenius_system(D.alg, sys), "dual ");
        RowVec<S> modular = H.alg.unit.transpose() * sys.nakayama;
        r.add("dual modular function is b", modular == RowVec<S>(data.b.transpose()));
    } catch (const InvalidStructure& e) {
        r.add("dual Frobenius homomorphism", false, e.what());
    }

    r.add("psi -> N = 1", act_left(H, data.psi, data.norm) == H.alg.unit);

    // S_{H*}(e^i) = sum c_jk N(e^i e^k) e^j over Delta_{H*}(psi) = sum c_jk e^j (x) e^k
    const Vec<S> dpsi = coproduct(D, Vec<S>(data.psi.transpose()));
    Mat<S> dual_antipode = zeros(F, n, n);
    for (Index i = 0; i < n; ++i)
        for (Index t = 0; t < n * n; ++t) {
            if (is_zero(dpsi(t))) continue;
            Vec<S> prod = multiply(D.alg, unit_vector(F, n, i), unit_vector(F, n, t % n));
            dual_antipode(t / n, i) += dpsi(t) * (evaluate_at_norm * prod)(0, 0);
        }
    add_matrix_check(r, "dual antipode from the norm", dual_antipode, Mat<S>(H.antipode.transpose()));

    const Mat<S> T = left_integrals(H);
    bool useful = true;
    for (Index c = 0; c < T.cols(); ++c)
        useful = useful && Vec<S>(T.col(c)) == Vec<S>((data.psi * T.col(c))(0, 0) * data.norm);
    r.add("T = psi(T) N", useful);
    r.add("left integrals spanned by N", T.cols() == 1 && same_span(F, T, Mat<S>(data.norm)));
    return r;
}

template <class S>
Report verify_modular_invariants(const HopfAlgebra<S>& H, const IntegralData<S>& data,
                                 const FrobeniusSystem<S>& sys) {
    const Field<S>& F = H.field();
    const Index n = H.dim();
    const RowVec<S> mS = data.m * H.antipode;
    Report r;
    r.add("m o S = m^-1", convolve(H, mS, data.m) == H.counit && convolve(H, data.m, mS) == H.counit);
    r.add("m o S^2 = m", RowVec<S>(mS * H.antipode) == data.m);
    r.add("S^2 b = b", Vec<S>(H.antipode * H.antipode * data.b) == data.b);
    r.add("gram invertible", rank(F, gram_matrix(H.alg, data.psi)) == n);
    Vec<S> image = sys.nakayama * data.norm;
    r.add("nakayama maps N to a right integral", same_span(F, Mat<S>(image), right_integrals(H)));
    return r;
}

#define FHOPF_INSTANTIATE_FROBENIUS(S)                                                                             \
    template DualIntegrals<S> dual_integrals(const HopfAlgebra<S>&);                                               \
    template Mat<S> gram_matrix(const StructureAlgebra<S>&, const RowVec<S>&);                                     \
    template IntegralData<S> build_integral_data(const HopfAlgebra<S>&);                                           \
    template IntegralData<S> build_integral_data(const HopfAlgebra<S>&, const RowVec<S>&);                         \
    template void dual_bases_from_coproduct(const HopfAlgebra<S>&, const Vec<S>&, std::vector<Vec<S>>&,            \
                                            std::vector<Vec<S>>&);                                                 \
    template Mat<S> solve_nakayama(const StructureAlgebra<S>&, const RowVec<S>&);                                  \
    template FrobeniusSystem<S> frobenius_system_from_norm(const HopfAlgebra<S>&, const IntegralData<S>&);         \
    template FrobeniusSystem<S> frobenius_system_from_functional(const StructureAlgebra<S>&, const RowVec<S>&);    \
    template Report verify_frobenius_system(const StructureAlgebra<S>&, const FrobeniusSystem<S>&);                \
    template Mat<S> nakayama_closed_form(const HopfAlgebra<S>&, const IntegralData<S>&);                           \
    template Report verify_nakayama_closed_form(const HopfAlgebra<S>&, const IntegralData<S>&, const Mat<S>&);     \
    template Comparison<S> compare_systems(const StructureAlgebra<S>&, const FrobeniusSystem<S>&,                  \
                                           const FrobeniusSystem<S>&);                                             \
    template FrobeniusSystem<S> transform_by_anti_automorphism(const StructureAlgebra<S>&,                         \
                                                               const FrobeniusSystem<S>&, const Mat<S>&);          \
    template FrobeniusSystem<S> transform_by_antipode(const HopfAlgebra<S>&, const IntegralData<S>&,               \
                                                      const FrobeniusSystem<S>&);                                  \
    template Report verify_prop_G(const HopfAlgebra<S>&, const IntegralData<S>&);                                  \
    template Report verify_radford(const HopfAlgebra<S>&, const IntegralData<S>&);                                 \
    template Orders orders(const HopfAlgebra<S>&, const IntegralData<S>&);                                         \
    template Report dual_frobenius_check(const HopfAlgebra<S>&, const IntegralData<S>&);                           \
    template Report verify_modular_invariants(const HopfAlgebra<S>&, const IntegralData<S>&,                       \
                                              const FrobeniusSystem<S>&);

FHOPF_INSTANTIATE_FROBENIUS(Rational)
FHOPF_INSTANTIATE_FROBENIUS(Fp)

}  // namespace fhopf
