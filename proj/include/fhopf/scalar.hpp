#ifndef FHOPF_SCALAR_HPP
#define FHOPF_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace fhopf {

/// Raised when two prime-field elements with different moduli meet.
class FieldMismatch : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Raised on division by zero or inversion of a non-unit.
class NotInvertible : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Raised by scalar/file parsers; carries a human-readable position when known.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
   public:
    Rational() = default;
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "a" or "a/b".
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    Rational inverse() const;
    std::string to_string() const;

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

   private:
    mpq_class q_;
};

/// Raised when input data cannot describe a valid structure of the expected
/// kind, e.g. an integral space that is not one-dimensional.
class InvalidStructure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Raised when an identity that must hold for every valid input fails.
class TheoremViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Element of the prime field F_p with a runtime modulus.
///
/// A value constructed from a bare integer carries no modulus ("untagged").
/// Untagged values behave as integers and are reduced the first time they
/// meet a tagged element. They exist so that Eigen can build its own
/// Scalar(0)/Scalar(1) constants; every value created from a Field is tagged.
class Fp {
   public:
    Fp() = default;
    Fp(int n) : lit_(n) {}
    Fp(long n) : lit_(n) {}
    Fp(long long n) : lit_(n) {}
    Fp(std::int64_t n, std::uint64_t modulus);

    std::uint64_t modulus() const { return p_; }
    bool tagged() const { return p_ != 0; }
    /// Canonical representative in [0, p); requires a tagged value.
    std::uint64_t value() const;

    bool is_zero() const { return p_ ? v_ == 0 : lit_ == 0; }
    bool is_one() const { return p_ ? v_ == 1 : lit_ == 1; }
    Fp inverse() const;
    std::string to_string() const;

    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a);
    friend bool operator==(const Fp& a, const Fp& b);
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.to_string(); }

   private:
    static std::uint64_t common_modulus(const Fp& a, const Fp& b);
    std::uint64_t reduced(std::uint64_t p) const;

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
    std::int64_t lit_ = 0;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return x.inverse(); }
inline Fp inverse(const Fp& x) { return x.inverse(); }

/// Constructor/descriptor for the scalars of one concrete field. Every
/// structure object carries its Field so that constants are always tagged.
template <class S>
struct Field;

template <>
struct Field<Rational> {
    using Scalar = Rational;
    Rational operator()(long n) const { return Rational(n); }
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational parse(std::string_view text) const { return Rational::parse(text); }
    std::string format(const Rational& x) const { return x.to_string(); }
    Rational tag(const Rational& x) const { return x; }
    std::string describe() const { return "rational"; }
    /// 0 for Q.
    std::uint64_t characteristic() const { return 0; }
    friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
struct Field<Fp> {
    using Scalar = Fp;
    Field() = default;
    explicit Field(std::uint64_t modulus);

    Fp operator()(long n) const { return Fp(n, p); }
    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp parse(std::string_view text) const;
    std::string format(const Fp& x) const { return std::to_string((x + zero()).value()); }
    /// Reduces an untagged constant into this field.
    Fp tag(const Fp& x) const { return x + zero(); }
    std::string describe() const { return "prime " + std::to_string(p); }
    std::uint64_t characteristic() const { return p; }
    friend bool operator==(const Field& a, const Field& b) { return a.p == b.p; }

    std::uint64_t p = 2;
};

using RationalField = Field<Rational>;
using PrimeField = Field<Fp>;

bool is_prime(std::uint64_t n);

}  // namespace fhopf

namespace Eigen {

template <>
struct NumTraits<fhopf::Rational> : GenericNumTraits<fhopf::Rational> {
    using Real = fhopf::Rational;
    using NonInteger = fhopf::Rational;
    using Literal = fhopf::Rational;
    using Nested = fhopf::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static int digits10() { return 0; }
    static int max_digits10() { return 0; }
};

template <>
struct NumTraits<fhopf::Fp> : GenericNumTraits<fhopf::Fp> {
    using Real = fhopf::Fp;
    using NonInteger = fhopf::Fp;
    using Literal = fhopf::Fp;
    using Nested = fhopf::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static int digits10() { return 0; }
    static int max_digits10() { return 0; }
};

}  // namespace Eigen

#endif  // FHOPF_SCALAR_HPP
