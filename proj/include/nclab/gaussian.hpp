#ifndef NCLAB_GAUSSIAN_HPP
#define NCLAB_GAUSSIAN_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "nclab/rng.hpp"

namespace nclab {

// Conventions used throughout: quadrature basis (x1, p1, x2, p2), vacuum
// covariance = I/2, and dimensionless noise eigenvalues lambda = 2*Lambda so
// the standard quantum limit sits at lambda = 1.

// Zero-mean single-mode Gaussian state described by its complex-form noise
// pair: a = <a^dag a> + 1/2 (real) and b = <a^2>.
struct SingleModeGaussian {
    double a;
    std::complex<double> b;

    SingleModeGaussian(double a_in, std::complex<double> b_in);

    static SingleModeGaussian vacuum() { return {0.5, 0.0}; }
    static SingleModeGaussian thermal(double nbar) { return {nbar + 0.5, 0.0}; }
    // Min noise along x at phase = 0; optional thermal occupation.
    static SingleModeGaussian squeezed(double r, double phase = 0.0, double nbar = 0.0);
    // State with annihilation operator rotated as a -> e^{i phi} a.
    SingleModeGaussian rotated(double phi) const;
};

struct NoiseEigenpair {
    double lambda_sm;
    double lambda_lg;
};

// Real symmetric 4x4 two-mode covariance matrix over (x1, p1, x2, p2).
class TwoModeCovariance {
  public:
    // Symmetrizes the input; rejects matrices that are not symmetric to 1e-12.
    explicit TwoModeCovariance(const Eigen::Matrix4d& m);

    const Eigen::Matrix4d& matrix() const { return m_; }
    Eigen::Matrix2d block_a() const { return m_.block<2, 2>(0, 0); }
    Eigen::Matrix2d block_b() const { return m_.block<2, 2>(2, 2); }
    Eigen::Matrix2d block_c() const { return m_.block<2, 2>(0, 2); }

    // Smallest eigenvalue of V + i Omega/2; physical states have >= -1e-10.
    double physicality_eigenvalue() const;
    bool is_physical(double tol = 1e-10) const { return physicality_eigenvalue() >= -tol; }
    void assert_physical(double tol = 1e-10) const;

  private:
    Eigen::Matrix4d m_;
};

// (a, b) noise pair of one real symmetric 2x2 covariance block.
SingleModeGaussian single_mode_from_block(const Eigen::Matrix2d& block);
// Real 2x2 block from an (a, b) noise pair.
Eigen::Matrix2d block_from_single_mode(const SingleModeGaussian& s);

// Complex-form covariance T V T^dag over (alpha1, alpha1*, alpha2, alpha2*),
// with T the per-mode direct sum of [1, i; 1, -i]/sqrt(2).
Eigen::Matrix4cd complex_representation(const TwoModeCovariance& v);

NoiseEigenpair noise_eigenvalues(const SingleModeGaussian& s);

// <x_phi^2> of the zero-mean state at quadrature angle phi.
double quadrature_noise_at_angle(const SingleModeGaussian& s, double phi);

// tau = max{0, (1 - lambda_sm)/2}.
double nonclassical_depth(double lambda_sm);

// Lossless beam-splitter mixing of two single-mode Gaussian inputs.
TwoModeCovariance bs_mix(const SingleModeGaussian& s1, const SingleModeGaussian& s2,
                         double theta_bs);

// Residual single-mode noises of blocks A and B once C is wiped out.
std::pair<NoiseEigenpair, NoiseEigenpair> strip_correlations(const TwoModeCovariance& v);

// Noise areas in lambda units (two vacua give 1).
double noise_area_in(const SingleModeGaussian& s1, const SingleModeGaussian& s2);
double noise_area_out(const SingleModeGaussian& s1, const SingleModeGaussian& s2,
                      double theta_bs);

TwoModeCovariance two_mode_squeezed_vacuum(double r);

// V' = R V R^T with independent planar rotations of (x1,p1) and (x2,p2).
TwoModeCovariance local_rotation(const TwoModeCovariance& v, double phi1, double phi2);

// p2 -> -p2. The result may be unphysical; that is the entanglement signal.
TwoModeCovariance partial_transpose(const TwoModeCovariance& v);

// Symplectic spectrum {nu_minus, nu_plus} via the two-mode closed form.
std::pair<double, double> symplectic_eigenvalues(const TwoModeCovariance& v);

// Seeded random physical single-mode state: r in [0, 1.2], uniform phase,
// optional thermal occupation nbar in [0, 1]. Physical by construction.
SingleModeGaussian random_single_mode(SplitMix64& rng, bool allow_thermal = true);

} // namespace nclab

#endif
