#ifndef NCLAB_VERDICT_HPP
#define NCLAB_VERDICT_HPP

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace nclab {

inline constexpr double kVerdictTol = 1e-10;

// Outcome of one inequality test. Every criterion in this library is phrased
// as "lhs >= rhs holds for the null model (separable / classical states)", so
// margin = lhs - rhs and a clearly negative margin is a violation. A verdict
// that is not violated is inconclusive: none of these tests can certify
// separability or classicality.
struct CriterionVerdict {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool violated = false;
    std::map<std::string, double> parameters;
};

inline CriterionVerdict make_verdict(std::string label, double lhs, double rhs,
                                     std::map<std::string, double> parameters = {}) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs))
        throw std::domain_error("criterion '" + label + "': non-finite side");
    CriterionVerdict v;
    v.label = std::move(label);
    v.lhs = lhs;
    v.rhs = rhs;
    v.margin = lhs - rhs;
    v.violated = v.margin < -kVerdictTol;
    v.parameters = std::move(parameters);
    return v;
}

// Error taxonomy shared by the Fock-space modules.
struct DegeneratePhaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nclab

#endif
