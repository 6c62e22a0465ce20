#ifndef SKYRCERT_MODEL_HPP
#define SKYRCERT_MODEL_HPP

#include <functional>
#include <utility>

#include "skyrcert/basis.hpp"
#include "skyrcert/bivar.hpp"
#include "skyrcert/cheb.hpp"
#include "skyrcert/errors.hpp"
#include "skyrcert/rational.hpp"

namespace skyr {

// Multiplies a canonical form by a plain polynomial in x (renormalizing the
// (1±x) factors afterwards).
inline BivarCanonical mul_xpoly(const BivarCanonical& f, const PowerPoly& m) {
    BivarCanonical r;
    for (const auto& [k, t] : f.terms())
        r = r + BivarCanonical::term(k, t.alpha, t.beta, t.p * m);
    return r;
}

/**
 * The exact model data of the reduced soliton equation
 *     g'' + Phi(x, g, g') = 0,  Phi = (Phi_0 + Phi_1 z + Phi_2 z^2) / Psi,
 * with every polynomial in canonical form. Construction verifies the
 * boundary identities that guard against transcription errors.
 */
struct PhiData {
    BivarCanonical Phi0, Phi1, Phi2, Psi;
    BivarCanonical PsiHat;   // Psi / (1-x^2)
    BivarCanonical PhiHat2;  // Phi_2 / (1-x^2)

    // Exact interior evaluation of Phi.
    Rational eval_phi(const Rational& x, const Rational& y, const Rational& z) const {
        if (x == 1 || x == -1)
            throw BoundaryPole("Phi has a pole at x = ±1 (Psi(±1, y) = 0)");
        Rational den = Psi.eval(x, y);
        if (den == 0) throw ZeroDenominator("Psi(x, y) = 0 at an interior point");
        Rational num = Phi0.eval(x, y) + Phi1.eval(x, y) * z + Phi2.eval(x, y) * z * z;
        return num / den;
    }

    double eval_phi_double(double x, double y, double z) const {
        double den = Psi.eval_double(x, y);
        double num = Phi0.eval_double(x, y) + Phi1.eval_double(x, y) * z +
                     Phi2.eval_double(x, y) * z * z;
        return num / den;
    }

    // First partials by the quotient rule, for the float solver and for
    // independent cross-checks of the cancelled forms.
    double d2_phi_double(double x, double y, double z) const {
        double psi = Psi.eval_double(x, y);
        double num = Phi0.dy_cache().eval_double(x, y) + Phi1.dy_cache().eval_double(x, y) * z +
                     Phi2.dy_cache().eval_double(x, y) * z * z;
        // cached derivative forms are built once in build_phi_data
        return (num - eval_phi_double(x, y, z) * Psi.dy_cache().eval_double(x, y)) / psi;
    }

    double d3_phi_double(double x, double y, double z) const {
        return (Phi1.eval_double(x, y) + 2 * Phi2.eval_double(x, y) * z) / Psi.eval_double(x, y);
    }
};

}  // namespace skyr

#endif  // SKYRCERT_MODEL_HPP
