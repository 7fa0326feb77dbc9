#pragma once

#include <gmpxx.h>

#include <string>

#include "pdeform/errors.hpp"

namespace pdeform {

// Exact rational scalar. Backed by GMP; always canonical (lowest terms,
// positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with arbitrary-precision integers.
Rational rational_from_string(const std::string& s);

// Prints "p" or "p/q"; denominator omitted when 1.
std::string rational_to_string(const Rational& q);

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), e);
    Rational r(num.get_num(), den.get_num());
    r.canonicalize();
    return r;
}

inline Rational factorial_inverse(unsigned long k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    Rational r(1, f);
    r.canonicalize();
    return r;
}

}  // namespace pdeform
