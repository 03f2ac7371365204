// rational.hpp
//
// Exact rational scalars. Thin aliases and helpers over GMP's mpq_class;
// everything downstream assumes values are kept in canonical form.

#ifndef DIFFALG_RATIONAL_HPP
#define DIFFALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace diffalg {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Renders as "n" or "n/d".
inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace diffalg

#endif
