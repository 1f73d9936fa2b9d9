#ifndef WITTLAB_BIGINT_HPP
#define WITTLAB_BIGINT_HPP

#include <gmpxx.h>

#include "wittlab/error.hpp"

namespace wittlab {

// Arbitrary-precision signed integer. Witt structure constants outgrow any
// fixed width quickly, so everything integral goes through GMP.
using BigInt = mpz_class;
using BigRat = mpq_class;

// quotient a/b, raising IntegralityViolation unless b divides a exactly
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    require(b != 0, ErrorKind::DivisionByZero, "exact_div by zero");
    require(mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0, ErrorKind::IntegralityViolation,
            "inexact integer division");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace wittlab

#endif
