#ifndef NCLAB_REGISTRY_HPP
#define NCLAB_REGISTRY_HPP

#include <functional>
#include <string>
#include <vector>

#include "nclab/fock.hpp"
#include "nclab/gaussian.hpp"
#include "nclab/verdict.hpp"

namespace nclab {

// Single source of truth for the criteria the CLI can evaluate. `check`
// resolves names here and `soundness` iterates the whole table, so the two
// commands cannot drift apart.

enum class CriterionKind {
    EntanglementExact,      // separability-sound as an operator inequality
    EntanglementAsymptotic, // sound only in the gamma >> 1 regime
    Conjecture,             // no soundness proof; reported, never gated
    Nonclassicality,        // null model is classical states, not separable ones
};

enum class InputKind { GaussianCovariance, FockTwoMode };

struct CriterionInfo {
    std::string name;
    CriterionKind kind;
    InputKind input;
    std::function<CriterionVerdict(const TwoModeCovariance&)> eval_gaussian;
    std::function<CriterionVerdict(const TwoModeEnsemble&)> eval_fock;
};

const std::vector<CriterionInfo>& criterion_registry();
const CriterionInfo* find_criterion(const std::string& name);
std::vector<std::string> criterion_names();

const char* kind_name(CriterionKind kind);

} // namespace nclab

#endif
