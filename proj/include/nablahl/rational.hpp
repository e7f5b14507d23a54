// Exact rational scalars (GMP-backed) and small integer helpers.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nablahl {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// gcd on rationals: gcd of numerators over lcm of denominators, >= 0.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    Integer gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    if (gn == 0) return Rational(0);
    return make_rational(gn, ld);
}

// binomial(n, 2) for any integer n, negative included.
inline long binom2(long n) { return n * (n - 1) / 2; }

inline Integer integer_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r = make_rational(integer_pow(base.get_num(), a), integer_pow(base.get_den(), a));
    if (e < 0) return Rational(1) / r;
    return r;
}

}  // namespace nablahl
