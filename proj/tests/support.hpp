#ifndef FHOPF_TESTS_SUPPORT_HPP
#define FHOPF_TESTS_SUPPORT_HPP

#include <random>

#include "fhopf/linalg.hpp"

namespace fhopf::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20261015);
    return gen;
}

inline long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational random_rational(long bound = 9) {
    long den = uniform(1, bound);
    return Rational(mpz_class(uniform(-bound, bound)), mpz_class(den));
}

template <class S>
S random_scalar(const Field<S>& F, long bound = 9) {
    if constexpr (std::is_same_v<S, Rational>) {
        (void)F;
        return random_rational(bound);
    } else {
        return F(uniform(0, static_cast<long>(F.p) - 1));
    }
}

template <class S>
S random_nonzero(const Field<S>& F) {
    for (;;) {
        S s = random_scalar(F);
        if (!is_zero(s)) return s;
    }
}

template <class S>
Mat<S> random_matrix(const Field<S>& F, Index r, Index c, double density = 1.0) {
    Mat<S> M = zeros(F, r, c);
    std::bernoulli_distribution keep(density);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j)
            if (keep(rng())) M(i, j) = random_scalar(F);
    return M;
}

template <class S>
Vec<S> random_vector(const Field<S>& F, Index n) {
    return Vec<S>(random_matrix(F, n, 1).col(0));
}

}  // namespace fhopf::testing

#endif  // FHOPF_TESTS_SUPPORT_HPP
