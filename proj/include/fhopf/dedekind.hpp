#ifndef FHOPF_DEDEKIND_HPP
#define FHOPF_DEDEKIND_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fhopf/report.hpp"

namespace fhopf {

/// (a + b w) / d in Q(w), w^2 = -5, kept with d > 0 and gcd(a, b, d) = 1.
class QuadElement {
   public:
    QuadElement() : a_(0), b_(0), d_(1) {}
    QuadElement(long a, long b = 0) : QuadElement(mpz_class(a), mpz_class(b), mpz_class(1)) {}
    QuadElement(mpz_class a, mpz_class b, mpz_class d);

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& d() const { return d_; }
    mpq_class rational_part() const { return canonical(a_); }
    mpq_class w_part() const { return canonical(b_); }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_integral() const { return d_ == 1; }
    QuadElement conjugate() const { return QuadElement(a_, -b_, d_); }
    /// (a^2 + 5 b^2) / d^2.
    mpq_class norm() const;
    /// Throws std::domain_error on zero.
    QuadElement inverse() const;
    std::string str() const;

    friend QuadElement operator+(const QuadElement& x, const QuadElement& y);
    friend QuadElement operator-(const QuadElement& x, const QuadElement& y);
    friend QuadElement operator-(const QuadElement& x) { return QuadElement(-x.a_, -x.b_, x.d_); }
    friend QuadElement operator*(const QuadElement& x, const QuadElement& y);
    friend QuadElement operator/(const QuadElement& x, const QuadElement& y) { return x * y.inverse(); }
    friend bool operator==(const QuadElement& x, const QuadElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadElement& x, const QuadElement& y) { return !(x == y); }

   private:
    mpq_class canonical(const mpz_class& numerator) const {
        mpq_class q(numerator, d_);
        q.canonicalize();
        return q;
    }
    mpz_class a_, b_, d_;
};

/// sqrt(-5).
QuadElement root();

/// Nonzero ideal of Z[sqrt(-5)] as the lattice with rows (a, b), (0, c) in the
/// basis {1, w}, a, c > 0 and 0 <= b < c.
class QuadraticIdeal {
   public:
    /// Ideal generated by integral elements; throws std::invalid_argument if
    /// all are zero or one is not integral.
    static QuadraticIdeal generated_by(const std::vector<QuadElement>& generators);
    static QuadraticIdeal unit();

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    /// The Z-basis a + b w, c w.
    std::array<QuadElement, 2> basis() const;
    /// Index in R, equal to |det| of the lattice rows.
    mpz_class norm() const { return a_ * c_; }
    bool contains(const QuadElement& x) const;
    QuadraticIdeal conjugate() const;
    std::string str() const;

    friend bool operator==(const QuadraticIdeal& x, const QuadraticIdeal& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

   private:
    QuadraticIdeal(mpz_class a, mpz_class b, mpz_class c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
    mpz_class a_, b_, c_;
    friend class FractionalIdeal;
};

QuadraticIdeal operator*(const QuadraticIdeal& x, const QuadraticIdeal& y);

/// J / d with J integral, reduced so that no integer > 1 divides both J and d.
class FractionalIdeal {
   public:
    FractionalIdeal(QuadraticIdeal numerator, mpz_class denominator = 1);
    const QuadraticIdeal& numerator() const { return numerator_; }
    const mpz_class& denominator() const { return denominator_; }
    friend bool operator==(const FractionalIdeal& x, const FractionalIdeal& y) {
        return x.numerator_ == y.numerator_ && x.denominator_ == y.denominator_;
    }
    friend FractionalIdeal operator*(const FractionalIdeal& x, const FractionalIdeal& y);

   private:
    QuadraticIdeal numerator_;
    mpz_class denominator_;
};

/// conj(I) / N(I).
FractionalIdeal inverse(const QuadraticIdeal& I);

/// A generator of I, searched among the finitely many x = a + b w with
/// a^2 + 5 b^2 = N(I), or nullopt when I is not principal.
std::optional<QuadElement> principal_generator(const QuadraticIdeal& I);

using QuadMatrix = std::array<std::array<QuadElement, 2>, 2>;

QuadMatrix multiply(const QuadMatrix& x, const QuadMatrix& y);
QuadMatrix transpose(const QuadMatrix& x);
QuadMatrix matrix_unit(int p, int q);
std::string str(const QuadMatrix& x);

/// C = [[beta1, beta2], [-alpha2/gamma, alpha1/gamma]] where (alpha1, alpha2) = I,
/// beta_i in I^-1 with beta1 alpha1 + beta2 alpha2 = 1 and I^2 = (gamma).
struct SteinitzData {
    QuadElement alpha1, alpha2, beta1, beta2, gamma;
    QuadMatrix C;
};

/// Solves for beta exactly from I conj(I) = (N(I)); nullopt when I^2 is not
/// principal. Throws std::invalid_argument if alpha1, alpha2 do not generate I.
std::optional<SteinitzData> steinitz_matrix(const QuadraticIdeal& I, const QuadElement& alpha1,
                                            const QuadElement& alpha2);
/// Uses (g, 0) when I = (g) and the lattice basis of I otherwise.
std::optional<SteinitzData> steinitz_matrix(const QuadraticIdeal& I);

/// (x y) -> (x y) C^t maps the Z-basis of I (+) I into R (+) R, the 4 x 4 lattice
/// determinant is +-1, and N(det C) N(I)^2 = 1.
Report verify_steinitz(const QuadraticIdeal& I, const QuadMatrix& C);

/// Hom_R(M_2(R), I) = M_2(I) with X . B = B X^t, and Psi(X) = (C X)^t is an
/// A-linear bijection M_2(I) -> M_2(R): checked on matrix units, on `pairs`
/// random (Y, X) with entries bounded by 10, and at the lattice level.
Report verify_matrix_hom_isomorphism(const QuadraticIdeal& I, const QuadMatrix& C, std::uint64_t seed = 1,
                                     int pairs = 20);

}  // namespace fhopf

#endif  // FHOPF_DEDEKIND_HPP
