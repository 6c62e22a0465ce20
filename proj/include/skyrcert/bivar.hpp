#ifndef SKYRCERT_BIVAR_HPP
#define SKYRCERT_BIVAR_HPP

#include <map>
#include <string>
#include <vector>

#include "skyrcert/cheb.hpp"
#include "skyrcert/errors.hpp"
#include "skyrcert/interval.hpp"
#include "skyrcert/rational.hpp"

namespace skyr {

/**
 * Two-variable polynomial in the canonical form
 *
 *     sum_k (1+x)^{alpha_k} (1-x)^{beta_k} P_k(x) y^k,
 *
 * one term per y-power, with P_k(±1) != 0 unless the term is absent.
 * The factors of (1 ± x) are kept explicit because the quality of interval
 * enclosures depends on the representation; normalization extracts the
 * maximal powers after every sum, which is also what surfaces the
 * cancellations the construction relies on.
 */
class BivarCanonical {
  public:
    struct Term {
        long alpha = 0, beta = 0;
        PowerPoly p;
    };

    BivarCanonical() = default;

    static BivarCanonical term(long ypow, long alpha, long beta, PowerPoly p) {
        if (ypow < 0 || alpha < 0 || beta < 0)
            throw CanonicalFormViolation("canonical term with negative exponent");
        BivarCanonical b;
        if (p.is_zero()) return b;
        normalize_term(alpha, beta, p);
        b.terms_.emplace(ypow, Term{alpha, beta, std::move(p)});
        return b;
    }

    const std::map<long, Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long ydegree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    // Total degree in x of the expanded polynomial.
    long xdegree() const {
        long d = -1;
        for (const auto& [k, t] : terms_) d = std::max(d, t.alpha + t.beta + t.p.degree());
        return d;
    }

    friend BivarCanonical operator+(const BivarCanonical& a, const BivarCanonical& b) {
        BivarCanonical r = a;
        for (const auto& [k, t] : b.terms_) r.add_term(k, t);
        return r;
    }

    friend BivarCanonical operator-(const BivarCanonical& a, const BivarCanonical& b) {
        return a + (Rational(-1) * b);
    }

    friend BivarCanonical operator*(const Rational& s, const BivarCanonical& a) {
        BivarCanonical r;
        if (s == 0) return r;
        for (const auto& [k, t] : a.terms_) r.terms_.emplace(k, Term{t.alpha, t.beta, s * t.p});
        return r;
    }

    friend BivarCanonical operator*(const BivarCanonical& a, const BivarCanonical& b) {
        BivarCanonical r;
        for (const auto& [ka, ta] : a.terms_)
            for (const auto& [kb, tb] : b.terms_)
                // P_k(±1) != 0 is preserved under products, but accumulation
                // across (ka, kb) pairs can still cancel, so go through add_term.
                r.add_term(ka + kb, Term{ta.alpha + tb.alpha, ta.beta + tb.beta, ta.p * tb.p});
        return r;
    }

    friend bool operator==(const BivarCanonical& a, const BivarCanonical& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            if (ia->second.alpha != ib->second.alpha || ia->second.beta != ib->second.beta ||
                !(ia->second.p == ib->second.p))
                return false;
        }
        return true;
    }

    // Partial derivative in y.
    BivarCanonical dy() const {
        BivarCanonical r;
        for (const auto& [k, t] : terms_) {
            if (k == 0) continue;
            r.terms_.emplace(k - 1, Term{t.alpha, t.beta, Rational(k) * t.p});
        }
        return r;
    }

    // Exact division by (1+x)^a (1-x)^b; per-term exponent decrement. A term
    // that cannot absorb the decrement signals a missing cancellation.
    BivarCanonical divide_factors(long a, long b, const char* what = "factor division") const {
        BivarCanonical r;
        for (const auto& [k, t] : terms_) {
            if (t.alpha < a || t.beta < b)
                throw CancellationFailure(std::string(what) + ": term y^" + std::to_string(k) +
                                          " lacks the (1±x) factors");
            r.terms_.emplace(k, Term{t.alpha - a, t.beta - b, t.p});
        }
        return r;
    }

    BivarCanonical divide_1mx2(const char* what = "division by 1-x^2") const {
        return divide_factors(1, 1, what);
    }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational acc(0);
        long prev = -1;
        // Horner in y over the sparse terms, highest power first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (prev >= 0)
                for (long j = 0; j < prev - it->first; ++j) acc *= y;
            acc += term_value(it->second, x);
            prev = it->first;
        }
        if (prev > 0)
            for (long j = 0; j < prev; ++j) acc *= y;
        return acc;
    }

    double eval_double(double x, double y) const {
        double acc = 0;
        long prev = -1;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (prev >= 0) acc *= std::pow(y, double(prev - it->first));
            const Term& t = it->second;
            double v = t.p.eval_double(x);
            acc += v * std::pow(1 + x, double(t.alpha)) * std::pow(1 - x, double(t.beta));
            prev = it->first;
        }
        if (prev > 0) acc *= std::pow(y, double(prev));
        return acc;
    }

    // Enclosure of the range over a box: tight interval powers of (1±x),
    // Horner in x for the P_k, then Horner in y across terms.
    RatInterval eval_interval(const RatInterval& x, const RatInterval& y) const {
        RatInterval acc(Rational(0));
        RatInterval xp1 = x + RatInterval(Rational(1));
        RatInterval mx1 = RatInterval(Rational(1)) - x;
        long prev = -1;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (prev >= 0)
                for (long j = 0; j < prev - it->first; ++j) acc = acc * y;
            const Term& t = it->second;
            RatInterval v = horner_interval(t.p, x);
            if (t.alpha) v = v * pow_tight(xp1, t.alpha);
            if (t.beta) v = v * pow_tight(mx1, t.beta);
            acc = acc + v;
            prev = it->first;
        }
        if (prev > 0)
            for (long j = 0; j < prev; ++j) acc = acc * y;
        return acc;
    }

    // Substitutes y := g(x) and expands to a univariate polynomial.
    PowerPoly subst_y(const PowerPoly& g) const {
        PowerPoly acc;
        long prev = -1;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (prev >= 0)
                for (long j = 0; j < prev - it->first; ++j) acc = acc * g;
            acc = acc + expand_term(it->second);
            prev = it->first;
        }
        if (prev > 0) acc = acc * g.pow(prev);
        return acc;
    }

    // Coefficient polynomial in y on the boundary x = ±1. Only terms whose
    // (1 ∓ x)-power vanishes survive; the remaining factor contributes 2^exp.
    PowerPoly boundary_profile(int side) const {
        std::vector<Rational> ycoeffs(ydegree() + 1 >= 0 ? ydegree() + 1 : 0, Rational(0));
        for (const auto& [k, t] : terms_) {
            Rational v;
            if (side < 0) {
                if (t.alpha != 0) continue;
                v = t.p.eval(Rational(-1)) * pow_int(Rational(2), t.beta);
            } else {
                if (t.beta != 0) continue;
                v = t.p.eval(Rational(1)) * pow_int(Rational(2), t.alpha);
            }
            ycoeffs[k] = v;
        }
        return PowerPoly(std::move(ycoeffs));
    }

    // Expanded univariate coefficient of y^k (mainly for identity checks).
    PowerPoly ycoeff_expanded(long k) const {
        auto it = terms_.find(k);
        if (it == terms_.end()) return {};
        return expand_term(it->second);
    }

  private:
    static void normalize_term(long& alpha, long& beta, PowerPoly& p) {
        while (!p.is_zero() && p.eval(Rational(-1)) == 0) {
            p = p.divide_exact(one_plus_x(), "canonical normalization");
            ++alpha;
        }
        while (!p.is_zero() && p.eval(Rational(1)) == 0) {
            p = p.divide_exact(one_minus_x(), "canonical normalization");
            ++beta;
        }
    }

    void add_term(long ypow, const Term& t) {
        if (t.p.is_zero()) return;
        auto it = terms_.find(ypow);
        if (it == terms_.end()) {
            long a = t.alpha, b = t.beta;
            PowerPoly p = t.p;
            normalize_term(a, b, p);
            terms_.emplace(ypow, Term{a, b, std::move(p)});
            return;
        }
        Term& cur = it->second;
        long a = std::min(cur.alpha, t.alpha);
        long b = std::min(cur.beta, t.beta);
        PowerPoly combined = shift_factors(cur.p, cur.alpha - a, cur.beta - b) +
                             shift_factors(t.p, t.alpha - a, t.beta - b);
        if (combined.is_zero()) {
            terms_.erase(it);
            return;
        }
        normalize_term(a, b, combined);
        cur.alpha = a;
        cur.beta = b;
        cur.p = std::move(combined);
    }

    static PowerPoly shift_factors(const PowerPoly& p, long da, long db) {
        PowerPoly r = p;
        if (da > 0) r = r * one_plus_x().pow(da);
        if (db > 0) r = r * one_minus_x().pow(db);
        return r;
    }

    static PowerPoly expand_term(const Term& t) {
        return shift_factors(t.p, t.alpha, t.beta);
    }

    static Rational term_value(const Term& t, const Rational& x) {
        Rational v = t.p.eval(x);
        if (t.alpha) v *= pow_int(Rational(1 + x), t.alpha);
        if (t.beta) v *= pow_int(Rational(1 - x), t.beta);
        return v;
    }

    static RatInterval horner_interval(const PowerPoly& p, const RatInterval& x) {
        RatInterval acc(Rational(0));
        const auto& c = p.coeffs();
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + RatInterval(c[i]);
        return acc;
    }

    std::map<long, Term> terms_;
};

/**
 * Rational function of (x, y, z): a polynomial in z with canonical-form
 * coefficients over a canonical-form denominator power,
 *     (N_0 + N_1 z + ... ) / D^m.
 * Carrier of the second partials of the field nonlinearity.
 */
struct CanonRatZ {
    std::vector<BivarCanonical> num;  // z^j coefficients
    BivarCanonical den;
    unsigned den_pow = 1;

    long zdegree() const {
        long d = -1;
        for (std::size_t j = 0; j < num.size(); ++j)
            if (!num[j].is_zero()) d = static_cast<long>(j);
        return d;
    }

    Rational eval(const Rational& x, const Rational& y, const Rational& z) const {
        Rational d = den.eval(x, y);
        if (d == 0) throw ZeroDenominator("rational function denominator vanishes");
        Rational n(0);
        for (std::size_t j = num.size(); j-- > 0;) n = n * z + num[j].eval(x, y);
        return n / pow_int(d, den_pow);
    }

    double eval_double(double x, double y, double z) const {
        double n = 0;
        for (std::size_t j = num.size(); j-- > 0;) n = n * z + num[j].eval_double(x, y);
        return n / std::pow(den.eval_double(x, y), double(den_pow));
    }

    RatInterval eval_interval(const RatInterval& x, const RatInterval& y,
                              const RatInterval& z) const {
        RatInterval d = den.eval_interval(x, y);
        if (d.contains_zero())
            throw DenominatorMayVanish("denominator enclosure contains zero");
        RatInterval n(Rational(0));
        for (std::size_t j = num.size(); j-- > 0;) n = n * z + num[j].eval_interval(x, y);
        return n / pow_tight(d, den_pow);
    }
};

}  // namespace skyr

#endif  // SKYRCERT_BIVAR_HPP
