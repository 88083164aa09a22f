#ifndef NCLAB_GAUSSIAN_CRITERIA_HPP
#define NCLAB_GAUSSIAN_CRITERIA_HPP

#include <utility>
#include <vector>

#include "nclab/gaussian.hpp"
#include "nclab/optimize.hpp"
#include "nclab/verdict.hpp"

namespace nclab {

// Logarithmic negativity from the closed-form symplectic spectrum of the
// partially transposed covariance matrix.
double log_negativity(const TwoModeCovariance& v);

// E_N of a beam-splitter output from the input nonclassical depths.
double en_from_input_depths(double tau1, double tau2);
// Same at the lambda level; admits thermal inputs with lambda > 1.
double en_from_input_lambdas(double lambda1, double lambda2);

// log2 of output/input noise-area ratio.
double s_n(std::pair<double, double> lambda_in, std::pair<double, double> lambda_out);

// Entanglement generated by a beam splitter in units of nonclassical depth.
double tau_ent(const SingleModeGaussian& s1, const SingleModeGaussian& s2, double theta_bs);

struct UVVariances {
    double var_u;
    double var_v;
    double cross_s; // symmetrized <Delta u Delta v>
};

// Variances of u = cos(t) x1 + sin(t) x2 and v = cos(t) p1 -/+ sin(t) p2.
// pt = true selects the minus sign (the partially transposed pairing).
UVVariances dgcz_uv_variances(const TwoModeCovariance& v, double theta, bool pt);

// Separability tests built on the u, v pair above. The uncertainty bound on
// the right-hand side is the one inherited from the untransposed conjugate
// pair, |<[u, v_+]>| = 1, so the product bound is 1/4 at every theta.
CriterionVerdict sr_criterion(const TwoModeCovariance& v, double theta);
CriterionVerdict mancini_product(const TwoModeCovariance& v, double theta);
CriterionVerdict dgcz_sum(const TwoModeCovariance& v, double theta);

struct ProfilePoint {
    double angle;
    double cross_s;
    double cross_s_sq;
};

// Sweep of the SR extra term: input 1 is pre-rotated by phi1 away from its
// minimum-noise alignment, input 2 stays aligned, the pair is mixed at
// theta_bs and <Delta u Delta v>_S is read off at theta = pi/4.
std::vector<ProfilePoint> extra_term_profile(const SingleModeGaussian& s1,
                                             const SingleModeGaussian& s2, double theta_bs,
                                             const std::vector<double>& phi1_values);

// DGCZ noise area 4 var(u) var(v) after local rotations, vacuum -> 1.
double omega_dgcz(const TwoModeCovariance& v, double theta, double phi1, double phi2);

// Global minimum of omega_dgcz over phi1, phi2 in [0, pi) and
// theta in (-pi/2, pi/2]. argmin = (phi1, phi2, theta).
OptimizationResult minimize_omega_dgcz(const TwoModeCovariance& v);

// Simon determinant test; violated (mu < 0) witnesses entanglement.
CriterionVerdict simon_mu(const TwoModeCovariance& v);
// The same determinant combination on a raw 4x4 noise matrix. Shared with the
// number-phase variant, which feeds scaled-quadrature moments through it.
double simon_mu_from_matrix(const Eigen::Matrix4d& v);

struct QuadratureNonclassicality {
    CriterionVerdict product_x;   // <dx1^2><dx2^2> >= 1/4
    CriterionVerdict lambda_area; // lambda1 lambda2 >= 1
    CriterionVerdict sum_x;       // <dx1^2> + <dx2^2> >= 1
};

// P-function nonclassicality conditions on a pair of single-mode states.
// The x-quadrature forms are evaluated at the given orientation; callers
// align states to minimum noise first when that is intended.
QuadratureNonclassicality quadrature_nonclassicality(const SingleModeGaussian& s1,
                                                     const SingleModeGaussian& s2);

} // namespace nclab

#endif
