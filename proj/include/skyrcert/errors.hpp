#ifndef SKYRCERT_ERRORS_HPP
#define SKYRCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skyr {

// A cancellation or exact division the construction relies on left a
// remainder; signals a transcription error in the model data.
struct CancellationFailure : std::runtime_error {
    explicit CancellationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct CanonicalFormViolation : std::runtime_error {
    explicit CanonicalFormViolation(const std::string& what) : std::runtime_error(what) {}
};

struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

// An overdetermined re-expansion failed its consistency equations: the
// claimed degree bound does not hold.
struct InconsistentOverdetermined : std::runtime_error {
    explicit InconsistentOverdetermined(const std::string& what) : std::runtime_error(what) {}
};

struct BoundNotAchieved : std::runtime_error {
    explicit BoundNotAchieved(const std::string& what) : std::runtime_error(what) {}
};

// Inconclusive, not a disproof: some subdomain's denominator enclosure still
// contains zero at the depth cap.
struct DenominatorMayVanish : std::runtime_error {
    explicit DenominatorMayVanish(const std::string& what) : std::runtime_error(what) {}
};

struct BoundaryPole : std::runtime_error {
    explicit BoundaryPole(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDenominator : std::runtime_error {
    explicit ZeroDenominator(const std::string& what) : std::runtime_error(what) {}
};

struct NewtonDivergence : std::runtime_error {
    explicit NewtonDivergence(const std::string& what) : std::runtime_error(what) {}
};

struct JacobianSingular : std::runtime_error {
    explicit JacobianSingular(const std::string& what) : std::runtime_error(what) {}
};

struct LinearSystemSingular : std::runtime_error {
    explicit LinearSystemSingular(const std::string& what) : std::runtime_error(what) {}
};

struct TargetVanishes : std::runtime_error {
    explicit TargetVanishes(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedExponent : std::runtime_error {
    explicit UnsupportedExponent(const std::string& what) : std::runtime_error(what) {}
};

struct ContractionFails : std::runtime_error {
    explicit ContractionFails(const std::string& what) : std::runtime_error(what) {}
};

struct EnvelopeOrderViolated : std::runtime_error {
    explicit EnvelopeOrderViolated(const std::string& what) : std::runtime_error(what) {}
};

struct MissingCertificates : std::runtime_error {
    explicit MissingCertificates(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skyr

#endif  // SKYRCERT_ERRORS_HPP
