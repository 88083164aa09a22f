#ifndef NCLAB_NPHI_CRITERIA_HPP
#define NCLAB_NPHI_CRITERIA_HPP

#include <complex>
#include <vector>

#include "nclab/fock.hpp"
#include "nclab/gaussian_criteria.hpp"
#include "nclab/verdict.hpp"

namespace nclab {

// Entanglement and nonclassicality tests for number-phase squeezed states.
// All take convex mixtures of two-mode pure states; wrap a pure state with
// TwoModeEnsemble::pure. Pseudo-spin operators: S+ = a2^dag a1,
// Sx = (S+ + S-)/2, Sy = -i(S+ - S-)/2, Sz = (n2 - n1)/2, N+ = n1 + n2.

// Means and variances of the pseudo-spin set on an ensemble.
struct PseudoSpinMoments {
    double sx_mean, sy_mean, sz_mean, nplus_mean;
    double sx_var, sy_var, sz_var, nplus_var;
};
PseudoSpinMoments pseudo_spin_moments(const TwoModeEnsemble& ens);

struct HZVerdicts {
    CriterionVerdict product; // <n1 n2> >= |<a2^dag a1>|^2
    CriterionVerdict sum;     // Var(Sx) + Var(Sy) >= <N+>/2
};
HZVerdicts hz_criterion(const TwoModeEnsemble& ens);

// SR-based criterion on u = a2^dag a1 + a1^dag a2, v = i(a2^dag a1 - a1^dag a2).
// Default evaluates the raw-moment reading (<u^2>+1)(<v^2>+1) >= <N+> + extra^2;
// variance_form switches to (Var u + 1)(Var v + 1) >= (<N+>+1)^2 + extra^2.
struct NhaZubairyResult {
    CriterionVerdict verdict;
    double extra;    // <Delta u Delta v>_S
    double extra_sq;
};
NhaZubairyResult nha_zubairy_sr(const TwoModeEnsemble& ens, bool variance_form = false);

// Intelligent(r, nbar) state pre-rotated by phi in its n-Phi plane, mixed with
// |alpha> at theta_bs; reports the SR extra term at each phi.
std::vector<ProfilePoint> extra_term_profile_nphi(double r, double nbar, double theta_bs,
                                                  const std::vector<double>& phi_values, int d,
                                                  std::complex<double> alpha);

struct NPhiQuadratures {
    ScaledMode mode1, mode2;
    Eigen::MatrixXcd q1, p1, q2, p2; // single-mode matrices, apply on own mode
};
// Per-mode scaled quadratures; gammas and <C_i> frozen from the ensemble's
// marginals. Throws DegeneratePhaseError when a marginal phase is undefined.
NPhiQuadratures nphi_quadratures(const TwoModeEnsemble& ens);

// Symmetrized covariance of (Q1, P1, Q2, P2) on the ensemble; symmetric with
// positive diagonal.
Eigen::Matrix4d nphi_covariance(const TwoModeEnsemble& ens, const NPhiQuadratures& quad);

// Simon-style determinant test on the (Q1, P1, Q2, P2) noise matrix.
// Exact only in the gamma >> 1 regime; see the soundness notes in the README.
CriterionVerdict simon_like_mu_nphi(const TwoModeEnsemble& ens);

// SR criterion for u = cos(t) n1 + sin(t) n2 against the partially transposed
// phase combination, plus the weaker product bound 4 cos^2 sin^2 <n1><n2>.
CriterionVerdict sr_nphi(const TwoModeEnsemble& ens, double theta);
CriterionVerdict raymer_product_nphi(const TwoModeEnsemble& ens, double theta);

struct RotatedHZVerdicts {
    CriterionVerdict sz_sy_sum;  // Var(Sz) + Var(Sy) >= <N+>/2
    CriterionVerdict sz_area;    // Var(Sz) >= <N+>/4
    CriterionVerdict number_sum; // Var(n1) + Var(n2) >= <n1> + <n2>
};
RotatedHZVerdicts rotated_hz(const TwoModeEnsemble& ens);

struct NumberNoiseAreaVerdicts {
    CriterionVerdict product; // [Var(n1)/<n1>][Var(n2)/<n2>] >= 1
    CriterionVerdict sum;     // Var(n1) + Var(n2) >= <n1> + <n2>
};
NumberNoiseAreaVerdicts number_noise_area(const TwoModeEnsemble& ens);

// Conjectured splitter-rotated number noise-area bound:
// Var(N+ + Sx) Var(N+ - Sx) >= <N+>^2 - <Sx>^2. Reported as an observation;
// no separability proof is known for this inequality.
CriterionVerdict rotated_area_conjecture(const TwoModeEnsemble& ens);

// Appendix product bound for u = alpha A1 + beta A2, v = alpha B1 +/- beta B2:
// Var(u) Var(v) >= alpha^2 beta^2 C1 C2, C_i = |<[A_i, B_i]>|.
CriterionVerdict generic_product_bound(const FockOperator& a1, const FockOperator& b1,
                                       const FockOperator& a2, const FockOperator& b2,
                                       double alpha, double beta, bool minus_sign,
                                       const TwoModeEnsemble& ens);

} // namespace nclab

#endif
