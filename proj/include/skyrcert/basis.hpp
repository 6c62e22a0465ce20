#ifndef SKYRCERT_BASIS_HPP
#define SKYRCERT_BASIS_HPP

#include <vector>

#include "skyrcert/cheb.hpp"
#include "skyrcert/rational.hpp"

namespace skyr {

enum class Sign { minus, plus };

// phi_n = T_n + a_n (1+x) + b_n (1-x) with a_n = (-1)^n (n^2 - 1/2) and
// b_n = n^2 - 1/2, which builds the regularity conditions
// phi'(-1) + phi(-1)/2 = phi'(1) - phi(1)/2 = 0 into the basis.
// In Chebyshev coefficients the linear tail collapses to
//   even n:  T_n + (2n^2 - 1) T_0
//   odd  n:  T_n - (2n^2 - 1) T_1
// and phi_0 = phi_1 = 0.
inline ChebSeries basis_phi(long n) {
    if (n < 0) throw DomainError("basis_phi: negative index");
    if (n <= 1) return {};
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    Rational tail(2 * n * n - 1);
    if (n % 2 == 0)
        c[0] = tail;
    else
        c[1] = -tail;
    c[static_cast<std::size_t>(n)] = 1;
    return ChebSeries(std::move(c));
}

// psi_{±,n} = T_n ± [T_n'(±1) ∓ 2 T_n(±1)](1 ∓ x), n >= 1, with the
// regularity psi'(±1) = ±2 psi(±1) built in. Using T_n(±1) = (±1)^n and
// T_n'(±1) = (±1)^{n+1} n^2 this reduces to
//   plus:  T_n + (n^2 - 2)(1 - x)
//   minus: T_n + (-1)^n (n^2 - 2)(1 + x).
inline ChebSeries basis_psi(Sign sign, long n) {
    if (n < 1) throw DomainError("basis_psi: index must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    Rational k(n * n - 2);
    if (sign == Sign::plus) {
        c[0] = k;
        c[1] = -k;
    } else {
        Rational s = (n % 2 == 0) ? k : -k;
        c[0] = s;
        c[1] = s;
    }
    c[static_cast<std::size_t>(n)] += 1;
    return ChebSeries(std::move(c));
}

// Assembles sum c_n phi_n from coefficients starting at index first (>= 2).
inline ChebSeries assemble_phi(const std::vector<Rational>& coeffs, long first = 2) {
    ChebSeries g;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        g = g + coeffs[i] * basis_phi(first + static_cast<long>(i));
    return g;
}

// Assembles w = sum_{n=1}^{N} c_n psi_{sign,n} from the full coefficient
// vector (index 0 holds c_1).
inline ChebSeries assemble_psi(Sign sign, const std::vector<Rational>& coeffs) {
    ChebSeries w;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        w = w + coeffs[i] * basis_psi(sign, 1 + static_cast<long>(i));
    return w;
}

}  // namespace skyr

#endif  // SKYRCERT_BASIS_HPP
