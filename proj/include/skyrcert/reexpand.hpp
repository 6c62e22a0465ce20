#ifndef SKYRCERT_REEXPAND_HPP
#define SKYRCERT_REEXPAND_HPP

#include <functional>
#include <string>
#include <vector>

#include "skyrcert/cheb.hpp"
#include "skyrcert/errors.hpp"
#include "skyrcert/parallel.hpp"
#include "skyrcert/rational.hpp"

namespace skyr {

using ExactFn = std::function<Rational(const Rational&)>;

// The default evaluation node family x_k = -1/2 + k/D, k = 0..D. Keeps the
// nodes away from the endpoints where the re-expanded quantities have
// removable singularities.
inline std::vector<Rational> uniform_nodes(long d) {
    std::vector<Rational> xs;
    xs.reserve(d + 1);
    for (long k = 0; k <= d; ++k) xs.push_back(rat(2 * k - d, 2 * d));
    return xs;
}

namespace detail {

// Exact interpolation through the first (degree+1) nodes by Newton divided
// differences, returned in the monomial basis. Solving the interpolation
// linear system by elimination gives the identical (unique) polynomial but
// with far larger intermediates at the sizes used here.
inline PowerPoly newton_interpolate(const std::vector<Rational>& nodes,
                                    const std::vector<Rational>& values, std::size_t count) {
    std::vector<Rational> dd(values.begin(), values.begin() + count);
    std::vector<Rational> coeff(count);
    coeff[0] = dd[0];
    for (std::size_t level = 1; level < count; ++level) {
        for (std::size_t i = 0; i + level < count; ++i) {
            Rational dx = nodes[i + level] - nodes[i];
            if (dx == 0) throw SingularSystem("duplicate interpolation node");
            dd[i] = (dd[i + 1] - dd[i]) / dx;
        }
        dd.pop_back();
        coeff[level] = dd[0];
    }
    // Expand Newton form sum coeff[k] * prod_{i<k}(x - x_i)
    PowerPoly result;
    PowerPoly basis = PowerPoly::constant(Rational(1));
    for (std::size_t k = 0; k < count; ++k) {
        if (coeff[k] != 0) result = result + coeff[k] * basis;
        if (k + 1 < count)
            basis = basis * PowerPoly({-nodes[k], Rational(1)});
    }
    return result;
}

inline PowerPoly reexpand_core(const ExactFn& f, long degree, const std::vector<Rational>& nodes,
                               const char* what) {
    if (degree < 0) throw DomainError("reexpand: negative degree");
    std::size_t need = static_cast<std::size_t>(degree) + 1;
    if (nodes.size() < need) throw DomainError("reexpand: too few nodes for requested degree");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] < -1 || nodes[i] > 1) throw DomainError("reexpand: node outside [-1,1]");
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j]) throw SingularSystem("duplicate interpolation node");
    }
    std::vector<Rational> values(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) { values[i] = f(nodes[i]); });

    PowerPoly p = newton_interpolate(nodes, values, need);

    // Every node, including the overdetermined ones, must be matched exactly;
    // a mismatch means the claimed degree bound is wrong.
    std::vector<char> ok(nodes.size(), 1);
    parallel_for(nodes.size(), [&](std::size_t i) { ok[i] = (p.eval(nodes[i]) == values[i]); });
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!ok[i])
            throw InconsistentOverdetermined(std::string(what) +
                                             ": sample inconsistent with claimed degree " +
                                             std::to_string(degree));
    return p;
}

}  // namespace detail

// Chebyshev re-expansion of an exactly evaluable function known to be a
// polynomial of the stated degree. Exact rational solve; overdetermined
// systems are checked, never least-squares fitted.
inline ChebSeries reexpand(const ExactFn& f, long degree, const std::vector<Rational>& nodes,
                           const char* what = "reexpand") {
    return ChebSeries::from_power(detail::reexpand_core(f, degree, nodes, what));
}

// Monomial-basis variant of the same solve.
inline PowerPoly reexpand_monomial(const ExactFn& f, long degree, const std::vector<Rational>& nodes,
                                   const char* what = "reexpand") {
    return detail::reexpand_core(f, degree, nodes, what);
}

}  // namespace skyr

#endif  // SKYRCERT_REEXPAND_HPP
