#include "nclab/registry.hpp"

#include <cmath>

#include "nclab/gaussian_criteria.hpp"
#include "nclab/nphi_criteria.hpp"

namespace nclab {

namespace {

constexpr double kPi = 3.141592653589793238462643383280;

CriterionVerdict noise_area_lambda_gaussian(const TwoModeCovariance& v) {
    // Per-mode minimum noises of the reduced states; correlations ignored.
    const auto stripped = strip_correlations(v);
    return make_verdict("noise_area_lambda",
                        stripped.first.lambda_sm * stripped.second.lambda_sm, 1.0);
}

FockOperator quadrature_x(int d) {
    const LadderOperators lad = ladder_operators(d);
    return {(lad.a + lad.adag) / std::sqrt(2.0), true};
}

FockOperator quadrature_p(int d) {
    const LadderOperators lad = ladder_operators(d);
    return {std::complex<double>(0.0, 1.0) * (lad.adag - lad.a) / std::sqrt(2.0), true};
}

FockOperator amp_sq_y1(int d) {
    const LadderOperators lad = ladder_operators(d);
    return {lad.adag * lad.adag + lad.a * lad.a, true};
}

FockOperator amp_sq_y2(int d) {
    const LadderOperators lad = ladder_operators(d);
    return {std::complex<double>(0.0, 1.0) * (lad.adag * lad.adag - lad.a * lad.a), true};
}

std::vector<CriterionInfo> build_registry() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<CriterionInfo> reg;

    reg.push_back({"sr", CriterionKind::EntanglementExact, InputKind::GaussianCovariance,
                   [](const TwoModeCovariance& v) { return sr_criterion(v, kPi / 4.0); }, nullptr});
    reg.push_back({"mancini", CriterionKind::EntanglementExact, InputKind::GaussianCovariance,
                   [](const TwoModeCovariance& v) { return mancini_product(v, kPi / 4.0); },
                   nullptr});
    reg.push_back({"dgcz", CriterionKind::EntanglementExact, InputKind::GaussianCovariance,
                   [](const TwoModeCovariance& v) { return dgcz_sum(v, kPi / 4.0); }, nullptr});
    reg.push_back({"simon", CriterionKind::EntanglementExact, InputKind::GaussianCovariance,
                   [](const TwoModeCovariance& v) { return simon_mu(v); }, nullptr});
    reg.push_back({"noise_area_lambda", CriterionKind::Nonclassicality,
                   InputKind::GaussianCovariance, noise_area_lambda_gaussian, nullptr});

    reg.push_back({"hz_product", CriterionKind::EntanglementExact, InputKind::FockTwoMode, nullptr,
                   [](const TwoModeEnsemble& e) { return hz_criterion(e).product; }});
    reg.push_back({"hz_sum", CriterionKind::EntanglementExact, InputKind::FockTwoMode, nullptr,
                   [](const TwoModeEnsemble& e) { return hz_criterion(e).sum; }});
    reg.push_back({"nha_zubairy_sr", CriterionKind::EntanglementExact, InputKind::FockTwoMode,
                   nullptr,
                   [](const TwoModeEnsemble& e) { return nha_zubairy_sr(e).verdict; }});
    reg.push_back({"sr_nphi", CriterionKind::EntanglementExact, InputKind::FockTwoMode, nullptr,
                   [](const TwoModeEnsemble& e) { return sr_nphi(e, kPi / 4.0); }});
    reg.push_back({"raymer_nphi", CriterionKind::EntanglementExact, InputKind::FockTwoMode,
                   nullptr,
                   [](const TwoModeEnsemble& e) { return raymer_product_nphi(e, kPi / 4.0); }});
    reg.push_back(
        {"generic_xp", CriterionKind::EntanglementExact, InputKind::FockTwoMode, nullptr,
         [inv_sqrt2](const TwoModeEnsemble& e) {
             return generic_product_bound(quadrature_x(e.dim), quadrature_p(e.dim),
                                          quadrature_x(e.dim), quadrature_p(e.dim), inv_sqrt2,
                                          inv_sqrt2, true, e);
         }});
    reg.push_back(
        {"generic_y1y2", CriterionKind::EntanglementExact, InputKind::FockTwoMode, nullptr,
         [inv_sqrt2](const TwoModeEnsemble& e) {
             return generic_product_bound(amp_sq_y1(e.dim), amp_sq_y2(e.dim), amp_sq_y1(e.dim),
                                          amp_sq_y2(e.dim), inv_sqrt2, inv_sqrt2, true, e);
         }});
    reg.push_back({"simon_nphi", CriterionKind::EntanglementAsymptotic, InputKind::FockTwoMode,
                   nullptr, [](const TwoModeEnsemble& e) { return simon_like_mu_nphi(e); }});
    reg.push_back({"area_conjecture", CriterionKind::Conjecture, InputKind::FockTwoMode, nullptr,
                   [](const TwoModeEnsemble& e) { return rotated_area_conjecture(e); }});
    reg.push_back({"hz_rotated_sum", CriterionKind::Nonclassicality, InputKind::FockTwoMode,
                   nullptr, [](const TwoModeEnsemble& e) { return rotated_hz(e).sz_sy_sum; }});
    reg.push_back({"sz_area", CriterionKind::Nonclassicality, InputKind::FockTwoMode, nullptr,
                   [](const TwoModeEnsemble& e) { return rotated_hz(e).sz_area; }});
    reg.push_back({"number_sum", CriterionKind::Nonclassicality, InputKind::FockTwoMode, nullptr,
                   [](const TwoModeEnsemble& e) { return rotated_hz(e).number_sum; }});
    reg.push_back({"number_area", CriterionKind::Nonclassicality, InputKind::FockTwoMode, nullptr,
                   [](const TwoModeEnsemble& e) { return number_noise_area(e).product; }});
    return reg;
}

} // namespace

const std::vector<CriterionInfo>& criterion_registry() {
    static const std::vector<CriterionInfo> reg = build_registry();
    return reg;
}

const CriterionInfo* find_criterion(const std::string& name) {
    for (const auto& c : criterion_registry())
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::string> criterion_names() {
    std::vector<std::string> names;
    for (const auto& c : criterion_registry()) names.push_back(c.name);
    return names;
}

const char* kind_name(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::EntanglementExact: return "entanglement";
        case CriterionKind::EntanglementAsymptotic: return "entanglement_asymptotic";
        case CriterionKind::Conjecture: return "conjecture";
        case CriterionKind::Nonclassicality: return "nonclassicality";
    }
    return "unknown";
}

} // namespace nclab
