#ifndef SKYRCERT_CHEB_HPP
#define SKYRCERT_CHEB_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "skyrcert/errors.hpp"
#include "skyrcert/parallel.hpp"
#include "skyrcert/rational.hpp"

namespace skyr {

class ChebSeries;

/**
 * Polynomial with rational coefficients in the monomial basis.
 * coeffs()[i] is the coefficient of x^i; trailing zeros are trimmed so that
 * degree() is the index of the last structurally nonzero coefficient.
 */
class PowerPoly {
  public:
    PowerPoly() = default;
    explicit PowerPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PowerPoly constant(const Rational& a) { return PowerPoly({a}); }
    // Convenience for small integer-coefficient polynomials, lowest degree first.
    static PowerPoly from_ints(std::initializer_list<long> cs) {
        std::vector<Rational> v;
        v.reserve(cs.size());
        for (long x : cs) v.emplace_back(x);
        return PowerPoly(std::move(v));
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
        return acc;
    }

    PowerPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return PowerPoly(std::move(d));
    }

    // Antiderivative with zero constant term.
    PowerPoly antiderivative() const {
        if (c_.empty()) return {};
        std::vector<Rational> a(c_.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
        return PowerPoly(std::move(a));
    }

    // Exact integral over [-1,1]: only even powers contribute.
    Rational integrate_unit() const {
        Rational s(0);
        for (std::size_t i = 0; i < c_.size(); i += 2) s += c_[i] * rat(2, static_cast<long>(i + 1));
        return s;
    }

    friend PowerPoly operator+(const PowerPoly& a, const PowerPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return PowerPoly(std::move(r));
    }

    friend PowerPoly operator-(const PowerPoly& a, const PowerPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return PowerPoly(std::move(r));
    }

    friend PowerPoly operator-(const PowerPoly& a) {
        std::vector<Rational> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = -a.c_[i];
        return PowerPoly(std::move(r));
    }

    friend PowerPoly operator*(const Rational& s, const PowerPoly& a) {
        if (s == 0) return {};
        std::vector<Rational> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
        return PowerPoly(std::move(r));
    }

    // Schoolbook product; independent output coefficients fan out across
    // workers once the term count makes it worthwhile.
    friend PowerPoly operator*(const PowerPoly& a, const PowerPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::size_t na = a.c_.size(), nb = b.c_.size();
        std::vector<Rational> r(na + nb - 1, Rational(0));
        if (na * nb >= 200000) {
            parallel_for(r.size(), [&](std::size_t k) {
                std::size_t ilo = k >= nb ? k - nb + 1 : 0;
                std::size_t ihi = std::min(k, na - 1);
                Rational acc(0);
                for (std::size_t i = ilo; i <= ihi; ++i) acc += a.c_[i] * b.c_[k - i];
                r[k] = std::move(acc);
            });
        } else {
            for (std::size_t i = 0; i < na; ++i)
                for (std::size_t j = 0; j < nb; ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return PowerPoly(std::move(r));
    }

    friend bool operator==(const PowerPoly& a, const PowerPoly& b) { return a.c_ == b.c_; }

    PowerPoly pow(unsigned long e) const {
        PowerPoly result = constant(Rational(1));
        PowerPoly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    // Long division: returns {quotient, remainder} with deg(rem) < deg(divisor).
    std::pair<PowerPoly, PowerPoly> divide(const PowerPoly& divisor) const {
        if (divisor.is_zero()) throw DomainError("polynomial division by zero");
        std::vector<Rational> rem = c_;
        long dd = divisor.degree();
        const Rational& lead = divisor.c_.back();
        if (static_cast<long>(rem.size()) - 1 < dd) return {PowerPoly{}, PowerPoly(std::move(rem))};
        std::vector<Rational> quot(rem.size() - dd, Rational(0));
        for (long k = static_cast<long>(rem.size()) - 1; k >= dd; --k) {
            if (rem[k] == 0) continue;
            Rational q = rem[k] / lead;
            quot[k - dd] = q;
            for (long j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.c_[j];
        }
        return {PowerPoly(std::move(quot)), PowerPoly(std::move(rem))};
    }

    // Division that must be exact; a nonzero remainder is a hard error.
    PowerPoly divide_exact(const PowerPoly& divisor, const char* what = "exact division") const {
        auto [q, r] = divide(divisor);
        if (!r.is_zero()) throw CancellationFailure(std::string(what) + ": nonzero remainder");
        return q;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline PowerPoly one_plus_x() { return PowerPoly::from_ints({1, 1}); }
inline PowerPoly one_minus_x() { return PowerPoly::from_ints({1, -1}); }

struct NormBoundTriple {
    Rational f_bound;    // sup |f|   via sum |c_n|,            ||T_n|| <= 1
    Rational df_bound;   // sup |f'|  via sum n^2 |c_n|,        ||T_n'|| <= n^2
    Rational d2f_bound;  // sup |f''| via sum n^2(n^2-1)/3|c_n|
};

/**
 * Finite Chebyshev expansion sum c_n T_n with rational coefficients.
 * Evaluation is exact Clenshaw recurrence, restricted to [-1,1] where the
 * T_n norm bounds (and every certificate built on them) are stated.
 */
class ChebSeries {
  public:
    ChebSeries() = default;
    explicit ChebSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ChebSeries basis(std::size_t n, const Rational& scale = Rational(1)) {
        std::vector<Rational> v(n + 1, Rational(0));
        v[n] = scale;
        return ChebSeries(std::move(v));
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational eval(const Rational& x) const {
        if (x < -1 || x > 1) throw DomainError("Chebyshev evaluation outside [-1,1]");
        return eval_unchecked(x);
    }

    double eval_double(double x) const {
        double b1 = 0, b2 = 0;
        for (std::size_t k = c_.size(); k-- > 1;) {
            double b = c_[k].get_d() + 2 * x * b1 - b2;
            b2 = b1;
            b1 = b;
        }
        return (c_.empty() ? 0.0 : c_[0].get_d()) + x * b1 - b2;
    }

    // Standard Chebyshev derivative recurrence, exact:
    // d[k-1] = d[k+1] + 2k c_k for k = n..1, with d[n] = d[n+1] = 0.
    ChebSeries derivative() const {
        if (c_.size() <= 1) return {};
        std::size_t n = c_.size() - 1;  // degree
        std::vector<Rational> d(n, Rational(0));
        for (std::size_t k = n; k >= 1; --k) {
            Rational above = (k + 1 < n) ? d[k + 1] : Rational(0);
            d[k - 1] = above + Rational(2 * static_cast<long>(k)) * c_[k];
            if (k == 1) break;
        }
        d[0] /= 2;
        return ChebSeries(std::move(d));
    }

    NormBoundTriple norm_bounds() const {
        NormBoundTriple nb{Rational(0), Rational(0), Rational(0)};
        for (std::size_t n = 0; n < c_.size(); ++n) {
            Rational a = abs(c_[n]);
            Rational nn(static_cast<long>(n));
            nb.f_bound += a;
            nb.df_bound += nn * nn * a;
            nb.d2f_bound += nn * nn * (nn * nn - 1) / 3 * a;
        }
        return nb;
    }

    friend ChebSeries operator+(const ChebSeries& a, const ChebSeries& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return ChebSeries(std::move(r));
    }

    friend ChebSeries operator-(const ChebSeries& a, const ChebSeries& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return ChebSeries(std::move(r));
    }

    friend ChebSeries operator*(const Rational& s, const ChebSeries& a) {
        if (s == 0) return {};
        std::vector<Rational> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
        return ChebSeries(std::move(r));
    }

    // Product via T_m T_n = (T_{m+n} + T_{|m-n|}) / 2.
    friend ChebSeries operator*(const ChebSeries& a, const ChebSeries& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                Rational half = a.c_[i] * b.c_[j] / 2;
                r[i + j] += half;
                r[i >= j ? i - j : j - i] += half;
            }
        }
        return ChebSeries(std::move(r));
    }

    friend bool operator==(const ChebSeries& a, const ChebSeries& b) { return a.c_ == b.c_; }

    PowerPoly to_power() const {
        // T_{n+1} = 2x T_n - T_{n-1}, accumulated exactly
        PowerPoly acc;
        PowerPoly tprev = PowerPoly::constant(Rational(1));  // T_0
        PowerPoly tcur = PowerPoly::from_ints({0, 1});       // T_1
        if (!c_.empty() && c_[0] != 0) acc = acc + c_[0] * tprev;
        if (c_.size() > 1 && c_[1] != 0) acc = acc + c_[1] * tcur;
        PowerPoly two_x = PowerPoly::from_ints({0, 2});
        for (std::size_t n = 2; n < c_.size(); ++n) {
            PowerPoly tnext = two_x * tcur - tprev;
            tprev = std::move(tcur);
            tcur = std::move(tnext);
            if (c_[n] != 0) acc = acc + c_[n] * tcur;
        }
        return acc;
    }

    // Horner in the Chebyshev algebra: S <- x*S + a_k from the top monomial.
    static ChebSeries from_power(const PowerPoly& p) {
        std::vector<Rational> s;  // Chebyshev coefficients of the partial result
        const auto& a = p.coeffs();
        for (std::size_t k = a.size(); k-- > 0;) {
            std::vector<Rational> t(s.size() + 1, Rational(0));
            for (std::size_t n = 0; n < s.size(); ++n) {
                if (s[n] == 0) continue;
                if (n == 0) {
                    t[1] += s[0];
                } else {
                    Rational half = s[n] / 2;
                    t[n + 1] += half;
                    t[n - 1] += half;
                }
            }
            t[0] += a[k];
            s = std::move(t);
        }
        return ChebSeries(std::move(s));
    }

  private:
    Rational eval_unchecked(const Rational& x) const {
        Rational b1(0), b2(0);
        for (std::size_t k = c_.size(); k-- > 1;) {
            Rational b = c_[k] + 2 * x * b1 - b2;
            b2 = std::move(b1);
            b1 = std::move(b);
        }
        return (c_.empty() ? Rational(0) : c_[0]) + x * b1 - b2;
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace skyr

#endif  // SKYRCERT_CHEB_HPP
