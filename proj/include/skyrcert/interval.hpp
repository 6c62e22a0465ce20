#ifndef SKYRCERT_INTERVAL_HPP
#define SKYRCERT_INTERVAL_HPP

#include <algorithm>
#include <stdexcept>
#include <string>

#include "skyrcert/rational.hpp"

namespace skyr {

struct DivisionByIntervalContainingZero : std::domain_error {
    DivisionByIntervalContainingZero()
        : std::domain_error("interval division by an interval containing zero") {}
};

/**
 * Closed interval with rational endpoints. All operations return the exact
 * interval determined by the endpoint formulas; since every endpoint is an
 * exact rational expression in the input endpoints there is no widening.
 * Scalars embed as degenerate intervals [a,a].
 */
struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
        if (lo > hi) throw DomainError("interval with lo > hi");
    }
    explicit RatInterval(const Rational& a) : lo(a), hi(a) {}

    static RatInterval point(const Rational& a) { return RatInterval(a); }

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    // Magnitude bound: max |x| over x in the interval.
    Rational mag() const { return rat_max(abs(lo), abs(hi)); }

    std::string str() const { return "[" + rat_str(lo) + ", " + rat_str(hi) + "]"; }
};

inline bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

inline RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

// All four endpoint products, exact min/max. Slightly more work than a sign
// case analysis but provably the same result.
inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {rat_min(rat_min(p1, p2), rat_min(p3, p4)),
            rat_max(rat_max(p1, p2), rat_max(p3, p4))};
}

inline RatInterval operator*(const Rational& c, const RatInterval& a) {
    if (c >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

inline RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw DivisionByIntervalContainingZero();
    return a * RatInterval(1 / b.hi, 1 / b.lo);
}

enum class IntervalOp { add, sub, mul, div };

inline RatInterval interval_binop(IntervalOp op, const RatInterval& a, const RatInterval& b) {
    switch (op) {
        case IntervalOp::add: return a + b;
        case IntervalOp::sub: return a - b;
        case IntervalOp::mul: return a * b;
        case IntervalOp::div: return a / b;
    }
    throw std::logic_error("unknown interval op");
}

// Smallest interval containing the union.
inline RatInterval interval_hull(const RatInterval& a, const RatInterval& b) {
    return {rat_min(a.lo, b.lo), rat_max(a.hi, b.hi)};
}

// Tight image of x^n over the interval. For even n a straddling interval
// maps to [0, mag^n] instead of the sign-losing product chain; this
// tightness is what makes the canonical-form enclosures reproduce the
// expected bounds at sane subdivision depths.
inline RatInterval pow_tight(const RatInterval& a, unsigned long n) {
    if (n == 0) return RatInterval(Rational(1));
    if (n == 1) return a;
    if (n % 2 == 1 || a.lo >= 0) return {pow_int(a.lo, n), pow_int(a.hi, n)};
    if (a.hi <= 0) return {pow_int(a.hi, n), pow_int(a.lo, n)};
    return {Rational(0), pow_int(a.mag(), n)};
}

}  // namespace skyr

#endif  // SKYRCERT_INTERVAL_HPP
