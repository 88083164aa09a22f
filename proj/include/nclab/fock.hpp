#ifndef NCLAB_FOCK_HPP
#define NCLAB_FOCK_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "nclab/gaussian.hpp"
#include "nclab/verdict.hpp"

namespace nclab {

// Truncated Fock-space engine. Single-mode states live in C^d with basis
// |0>..|d-1>; two-mode states in C^(d^2) with index n1*d + n2.

struct FockState {
    Eigen::VectorXcd amp;
    int dim = 0;

    FockState() = default;
    FockState(Eigen::VectorXcd a, int d);

    double tail_mass() const { return std::norm(amp(dim - 1)); }
    bool truncation_converged(double tol = 1e-8) const { return tail_mass() <= tol; }
};

struct TwoModeFockState {
    Eigen::VectorXcd amp;
    int dim = 0; // per-mode dimension; amp.size() == dim*dim

    TwoModeFockState() = default;
    TwoModeFockState(Eigen::VectorXcd a, int d);
};

struct FockOperator {
    Eigen::MatrixXcd mat;
    bool hermitian = false;

    FockOperator() = default;
    FockOperator(Eigen::MatrixXcd m, bool herm);
};

struct LadderOperators {
    Eigen::MatrixXcd a, adag, n;
};
LadderOperators ladder_operators(int d);

// Sine/cosine phase operators built from e_- = (n+1)^(-1/2) a.
struct SCOperators {
    Eigen::MatrixXcd s, c;
};
SCOperators sc_operators(int d);

// State factories (amplitudes renormalized inside the truncation).
FockState fock_basis_state(int n, int d);
FockState coherent_state(std::complex<double> alpha, int d);
FockState squeezed_vacuum_fock(double r, double phase, int d);
TwoModeFockState tensor_product(const FockState& s1, const FockState& s2);
TwoModeFockState two_mode_squeezed_fock(double r, int d);

// Frozen scaled-mode context: a_n = (n + i (gamma/<C>) S)/sqrt(2 gamma).
struct ScaledMode {
    int dim = 0;
    double gamma = 0.0; // 2<n>
    double c_exp = 0.0; // <C>
    Eigen::MatrixXcd a_n;
};

ScaledMode scaled_mode_from_moments(double n_mean, double c_exp, int d);
// Context frozen from the supplied state; throws DegeneratePhaseError when
// <n> vanishes or |<C>| <= 1e-6.
ScaledMode scaled_annihilation(const FockState& state);

// Self-consistent pseudo-eigenvector of E = n + i gamma' S/<C> with
// gamma' = 2 r <n>, computed as the smallest singular vector of (E - nbar).
// Real amplitudes by construction, phase-aligned (<S> = 0).
FockState intelligent_state(double r, double nbar_target, int d);

// Saturating state whose minimum-noise direction is rotated by phi in the
// n-Phi plane of intelligent_state(r, nbar): the pseudo-eigenvector of
// Q_phi + i r P_phi with (Q, P) frozen from the phi = 0 state. At phi = 0
// this is intelligent_state itself; at phi = pi/2 it is the r -> 1/r state.
// Both endpoints have real amplitudes, which the extra-term sweeps rely on.
FockState rotated_intelligent_state(double r, double nbar_target, int d, double phi);

// exp(i phi a_n^dag a_n) with a_n frozen from `state` (or the given context).
// Rotates the whole n-Phi plane about its origin, so the centroid moves too.
FockState rotate_nphi(const FockState& state, double phi);
FockState rotate_nphi(const FockState& state, double phi, const ScaledMode& ctx);

// exp(i phi b^dag b) with b = a_n - <a_n>: rotates the noise ellipse about the
// state's own centroid, turning number squeezing into phase squeezing at
// phi = pi/2 while the occupation stays put. This is the rotation the
// extra-term and criterion sweeps use.
FockState rotate_nphi_centered(const FockState& state, double phi);
FockState rotate_nphi_centered(const FockState& state, double phi, const ScaledMode& ctx);

// exp(beta a_n^dag - beta* a_n), same freezing rule.
FockState displace_nphi(const FockState& state, std::complex<double> beta);
FockState displace_nphi(const FockState& state, std::complex<double> beta, const ScaledMode& ctx);

// exp[theta (a1^dag a2 - a1 a2^dag)], evaluated sector-by-sector in the
// conserved total photon number.
TwoModeFockState bs_apply(const TwoModeFockState& state, double theta_bs);

struct NPhiNoise {
    Eigen::Matrix2d v; // [[<dn^2>/gamma, cross], [cross, gamma <dPhi^2>]]
    double lambda_sm = 0.0;
    double lambda_lg = 0.0;
};
NPhiNoise nphi_noise_matrix(const FockState& state);
NPhiNoise nphi_noise_matrix(const FockState& state, const ScaledMode& ctx);
// Measurement in a frozen plane with the phase surrogate re-linearized around
// the measured state's own <C>. This is the evaluation under which the noise
// eigenvalues are invariant when a state is rotated or displaced in its
// n-Phi plane (the sine surrogate is linear only locally).
NPhiNoise nphi_noise_matrix_relinearized(const FockState& state, const ScaledMode& plane);

// Symmetrized quadrature covariance of a two-mode state (means subtracted).
TwoModeCovariance covariance_from_fock(const TwoModeFockState& state);

// Convex mixture of two-mode pure states; weights must sum to 1.
struct WeightedComponent {
    double weight;
    TwoModeFockState state;
};
struct TwoModeEnsemble {
    int dim = 0;
    std::vector<WeightedComponent> components;

    static TwoModeEnsemble pure(TwoModeFockState s);
};

struct DensityMatrix {
    Eigen::MatrixXcd rho; // (d^2) x (d^2)
    int dim = 0;          // per-mode dimension
};
// Oracle support only; guarded to dim <= 40 per mode.
DensityMatrix density_from_ensemble(const TwoModeEnsemble& ens);
// Sum of |negative eigenvalues| of rho^T2.
double pt_negativity(const DensityMatrix& rho);
// log2 || rho^T2 ||_1.
double log_negativity_fock(const DensityMatrix& rho);

// ---- moment plumbing ----------------------------------------------------

// Apply a single-mode operator to one mode of a two-mode state vector.
Eigen::VectorXcd apply_mode_op(const Eigen::MatrixXcd& op, const Eigen::VectorXcd& amp, int dim,
                               int mode);
Eigen::VectorXcd apply_annihilation(const Eigen::VectorXcd& amp, int dim, int mode);
Eigen::VectorXcd apply_creation(const Eigen::VectorXcd& amp, int dim, int mode);
Eigen::VectorXcd apply_number(const Eigen::VectorXcd& amp, int dim, int mode);

template <class F>
std::complex<double> ensemble_mean_c(const TwoModeEnsemble& ens, F&& f) {
    std::complex<double> acc = 0.0;
    for (const auto& c : ens.components) acc += c.weight * f(c.state);
    return acc;
}

template <class F>
double ensemble_mean(const TwoModeEnsemble& ens, F&& f) {
    return ensemble_mean_c(ens, std::forward<F>(f)).real();
}

// Marginal <n_i> and <C_i> of an ensemble, mode in {1, 2}.
std::pair<double, double> marginal_n_and_c(const TwoModeEnsemble& ens, int mode);

} // namespace nclab

#endif
