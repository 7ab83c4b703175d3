#include "fhopf/scalar.hpp"

#include <charconv>

namespace fhopf {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_token(s)) throw ParseError("malformed integer '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

std::int64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw NotInvertible("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text)));
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw NotInvertible("inverse of rational zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw NotInvertible("division by rational zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// ---------------------------------------------------------------- Fp

Fp::Fp(std::int64_t n, std::uint64_t modulus) : p_(modulus) {
    if (modulus < 2) throw std::invalid_argument("prime-field modulus must be at least 2");
    std::int64_t r = n % static_cast<std::int64_t>(modulus);
    if (r < 0) r += static_cast<std::int64_t>(modulus);
    v_ = static_cast<std::uint64_t>(r);
}

std::uint64_t Fp::value() const {
    if (!p_) throw FieldMismatch("untagged prime-field constant has no canonical value");
    return v_;
}

std::uint64_t Fp::reduced(std::uint64_t p) const {
    if (p_) return v_;
    std::int64_t r = lit_ % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t Fp::common_modulus(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_)
        throw FieldMismatch("prime-field elements mod " + std::to_string(a.p_) + " and mod " +
                            std::to_string(b.p_) + " combined");
    return a.p_ ? a.p_ : b.p_;
}

Fp& Fp::operator+=(const Fp& o) {
    std::uint64_t p = common_modulus(*this, o);
    if (!p) {
        if (__builtin_add_overflow(lit_, o.lit_, &lit_)) throw std::overflow_error("untagged Fp overflow");
        return *this;
    }
    std::uint64_t s = reduced(p) + o.reduced(p);
    v_ = s >= p ? s - p : s;
    p_ = p;
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    std::uint64_t p = common_modulus(*this, o);
    if (!p) {
        if (__builtin_sub_overflow(lit_, o.lit_, &lit_)) throw std::overflow_error("untagged Fp overflow");
        return *this;
    }
    std::uint64_t a = reduced(p), b = o.reduced(p);
    v_ = a >= b ? a - b : a + p - b;
    p_ = p;
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    std::uint64_t p = common_modulus(*this, o);
    if (!p) {
        if (__builtin_mul_overflow(lit_, o.lit_, &lit_)) throw std::overflow_error("untagged Fp overflow");
        return *this;
    }
    v_ = reduced(p) * o.reduced(p) % p;
    p_ = p;
    return *this;
}

Fp operator-(const Fp& a) {
    Fp r = a;
    if (!a.p_) {
        r.lit_ = -a.lit_;
    } else {
        r.v_ = a.v_ == 0 ? 0 : a.p_ - a.v_;
    }
    return r;
}

bool operator==(const Fp& a, const Fp& b) {
    std::uint64_t p = Fp::common_modulus(a, b);
    if (!p) return a.lit_ == b.lit_;
    return a.reduced(p) == b.reduced(p);
}

Fp Fp::inverse() const {
    if (!p_) {
        if (lit_ == 1 || lit_ == -1) return *this;
        throw NotInvertible("cannot invert an untagged prime-field constant");
    }
    if (v_ == 0) throw NotInvertible("inverse of zero in F_" + std::to_string(p_));
    Fp r;
    r.p_ = p_;
    r.v_ = static_cast<std::uint64_t>(mod_pow(v_, p_ - 2, p_));
    return r;
}

std::string Fp::to_string() const {
    if (!p_) return std::to_string(lit_);
    return std::to_string(v_);
}

// ---------------------------------------------------------------- fields

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field<Fp>::Field(std::uint64_t modulus) : p(modulus) {
    if (!is_prime(modulus)) throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not prime");
    if (modulus >= (std::uint64_t{1} << 32)) throw std::invalid_argument("modulus must fit in 32 bits");
}

Fp Field<Fp>::parse(std::string_view text) const {
    text = trim(text);
    if (!is_integer_token(text)) throw ParseError("malformed prime-field scalar '" + std::string(text) + "'");
    mpz_class z = parse_integer(text);
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return Fp(static_cast<std::int64_t>(r.get_si()), p);
}

}  // namespace fhopf
