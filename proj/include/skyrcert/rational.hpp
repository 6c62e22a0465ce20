#ifndef SKYRCERT_RATIONAL_HPP
#define SKYRCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace skyr {

// The universal scalar of the certified path: arbitrary-precision fractions,
// always in canonical reduced form (positive denominator, gcd(|p|,q)=1).
// GMP maintains the canonical form through every arithmetic operation, so
// no rounding or widening can ever occur.
using Rational = mpq_class;
using Integer = mpz_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or plain integers ("13039/72146", "-437/24", "5").
inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw DomainError("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

// Canonical textual form; integral values print without the "/1".
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational pow_int(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    // num and den stay coprime under powering, no canonicalize needed
    return r;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Decides a^2 + b^2 <= c^2 entirely in Q, so that comparisons against
// square roots never leave the rationals.
inline bool sum_sq_le(const Rational& a, const Rational& b, const Rational& c) {
    return a * a + b * b <= c * c;
}

inline Rational rat_min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace skyr

#endif  // SKYRCERT_RATIONAL_HPP
