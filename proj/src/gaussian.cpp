#include "nclab/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace nclab {

using std::complex;
namespace {

constexpr double kPhysTol = 1e-9;

Eigen::Matrix2d planar_rotation(double phi) {
    Eigen::Matrix2d r;
    r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return r;
}

// 4x4 symplectic form over (x1, p1, x2, p2).
Eigen::Matrix4d symplectic_form() {
    Eigen::Matrix4d o = Eigen::Matrix4d::Zero();
    o(0, 1) = 1.0;
    o(1, 0) = -1.0;
    o(2, 3) = 1.0;
    o(3, 2) = -1.0;
    return o;
}

} // namespace

SingleModeGaussian::SingleModeGaussian(double a_in, complex<double> b_in) : a(a_in), b(b_in) {
    if (!(a >= 0.5 - kPhysTol))
        throw std::invalid_argument("SingleModeGaussian: a < 1/2");
    if (a * a - std::norm(b) < 0.25 - kPhysTol)
        throw std::invalid_argument("SingleModeGaussian: a^2 - |b|^2 < 1/4 (unphysical)");
}

SingleModeGaussian SingleModeGaussian::squeezed(double r, double phase, double nbar) {
    const double scale = 1.0 + 2.0 * nbar;
    const double a = scale * std::cosh(2.0 * r) / 2.0;
    const complex<double> b =
        -scale * std::sinh(2.0 * r) / 2.0 * std::exp(complex<double>(0.0, 2.0 * phase));
    return {a, b};
}

SingleModeGaussian SingleModeGaussian::rotated(double phi) const {
    return {a, b * std::exp(complex<double>(0.0, 2.0 * phi))};
}

TwoModeCovariance::TwoModeCovariance(const Eigen::Matrix4d& m) {
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("TwoModeCovariance: matrix not symmetric");
    m_ = 0.5 * (m + m.transpose());
}

double TwoModeCovariance::physicality_eigenvalue() const {
    Eigen::Matrix4cd h = m_.cast<complex<double>>();
    h += complex<double>(0.0, 0.5) * symplectic_form().cast<complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
    return es.eigenvalues().minCoeff();
}

void TwoModeCovariance::assert_physical(double tol) const {
    if (!is_physical(tol))
        throw std::invalid_argument("TwoModeCovariance: V + i Omega/2 has eigenvalue below -tol");
}

SingleModeGaussian single_mode_from_block(const Eigen::Matrix2d& block) {
    const double a = 0.5 * (block(0, 0) + block(1, 1));
    const complex<double> b(0.5 * (block(0, 0) - block(1, 1)),
                            0.5 * (block(0, 1) + block(1, 0)));
    return {a, b};
}

Eigen::Matrix2d block_from_single_mode(const SingleModeGaussian& s) {
    Eigen::Matrix2d m;
    m << s.a + s.b.real(), s.b.imag(), s.b.imag(), s.a - s.b.real();
    return m;
}

Eigen::Matrix4cd complex_representation(const TwoModeCovariance& v) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd t1;
    t1 << complex<double>(inv_sqrt2, 0), complex<double>(0, inv_sqrt2),
        complex<double>(inv_sqrt2, 0), complex<double>(0, -inv_sqrt2);
    Eigen::Matrix4cd t2 = Eigen::Matrix4cd::Zero();
    t2.block<2, 2>(0, 0) = t1;
    t2.block<2, 2>(2, 2) = t1;
    return t2 * v.matrix().cast<complex<double>>() * t2.adjoint();
}

NoiseEigenpair noise_eigenvalues(const SingleModeGaussian& s) {
    if (s.a * s.a - std::norm(s.b) < 0.25 - kPhysTol)
        throw std::invalid_argument("noise_eigenvalues: unphysical state");
    const double babs = std::abs(s.b);
    return {2.0 * (s.a - babs), 2.0 * (s.a + babs)};
}

double quadrature_noise_at_angle(const SingleModeGaussian& s, double phi) {
    return s.a + (s.b * std::exp(complex<double>(0.0, -2.0 * phi))).real();
}

double nonclassical_depth(double lambda_sm) {
    if (!(lambda_sm > 0.0))
        throw std::invalid_argument("nonclassical_depth: lambda_sm must be positive");
    return std::max(0.0, 0.5 * (1.0 - lambda_sm));
}

TwoModeCovariance bs_mix(const SingleModeGaussian& s1, const SingleModeGaussian& s2,
                         double theta_bs) {
    const double c2 = std::cos(theta_bs) * std::cos(theta_bs);
    const double s2q = std::sin(theta_bs) * std::sin(theta_bs);
    const double sc = std::sin(theta_bs) * std::cos(theta_bs);

    const SingleModeGaussian blk_a{c2 * s1.a + s2q * s2.a, c2 * s1.b + s2q * s2.b};
    const SingleModeGaussian blk_b{s2q * s1.a + c2 * s2.a, s2q * s1.b + c2 * s2.b};
    // C block in complex form: sc * [(a1-a2), (b1-b2); (b1-b2)*, (a1-a2)].
    const double cp = sc * (s1.a - s2.a);
    const complex<double> cq = sc * (s1.b - s2.b);

    Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
    v.block<2, 2>(0, 0) = block_from_single_mode(blk_a);
    v.block<2, 2>(2, 2) = block_from_single_mode(blk_b);
    Eigen::Matrix2d c_real;
    c_real << cp + cq.real(), cq.imag(), cq.imag(), cp - cq.real();
    v.block<2, 2>(0, 2) = c_real;
    v.block<2, 2>(2, 0) = c_real.transpose();
    return TwoModeCovariance(v);
}

std::pair<NoiseEigenpair, NoiseEigenpair> strip_correlations(const TwoModeCovariance& v) {
    return {noise_eigenvalues(single_mode_from_block(v.block_a())),
            noise_eigenvalues(single_mode_from_block(v.block_b()))};
}

double noise_area_in(const SingleModeGaussian& s1, const SingleModeGaussian& s2) {
    return noise_eigenvalues(s1).lambda_sm * noise_eigenvalues(s2).lambda_sm;
}

double noise_area_out(const SingleModeGaussian& s1, const SingleModeGaussian& s2,
                      double theta_bs) {
    const double l1 = noise_eigenvalues(s1).lambda_sm;
    const double l2 = noise_eigenvalues(s2).lambda_sm;
    const double c2 = std::cos(theta_bs) * std::cos(theta_bs);
    const double s2q = std::sin(theta_bs) * std::sin(theta_bs);
    return (l1 * c2 + l2 * s2q) * (l2 * c2 + l1 * s2q);
}

TwoModeCovariance two_mode_squeezed_vacuum(double r) {
    Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
    const double ch = std::cosh(2.0 * r) / 2.0;
    const double sh = std::sinh(2.0 * r) / 2.0;
    v.block<2, 2>(0, 0) = ch * Eigen::Matrix2d::Identity();
    v.block<2, 2>(2, 2) = ch * Eigen::Matrix2d::Identity();
    Eigen::Matrix2d c;
    c << sh, 0.0, 0.0, -sh;
    v.block<2, 2>(0, 2) = c;
    v.block<2, 2>(2, 0) = c;
    return TwoModeCovariance(v);
}

TwoModeCovariance local_rotation(const TwoModeCovariance& v, double phi1, double phi2) {
    Eigen::Matrix4d r = Eigen::Matrix4d::Zero();
    r.block<2, 2>(0, 0) = planar_rotation(phi1);
    r.block<2, 2>(2, 2) = planar_rotation(phi2);
    return TwoModeCovariance(r * v.matrix() * r.transpose());
}

TwoModeCovariance partial_transpose(const TwoModeCovariance& v) {
    Eigen::Matrix4d p = Eigen::Matrix4d::Identity();
    p(3, 3) = -1.0;
    return TwoModeCovariance(p * v.matrix() * p);
}

std::pair<double, double> symplectic_eigenvalues(const TwoModeCovariance& v) {
    const double det_a = v.block_a().determinant();
    const double det_b = v.block_b().determinant();
    const double det_c = v.block_c().determinant();
    const double det_v = v.matrix().determinant();
    const double delta = det_a + det_b + 2.0 * det_c;
    const double disc = std::sqrt(std::max(delta * delta - 4.0 * det_v, 0.0));
    const double lo = std::sqrt(std::max(0.5 * (delta - disc), 0.0));
    const double hi = std::sqrt(std::max(0.5 * (delta + disc), 0.0));
    return {lo, hi};
}

SingleModeGaussian random_single_mode(SplitMix64& rng, bool allow_thermal) {
    const double r = rng.uniform(0.0, 1.2);
    const double phase = rng.uniform(0.0, 3.141592653589793238462643383280);
    double nbar = 0.0;
    if (allow_thermal && rng.next_double() < 0.5) nbar = rng.uniform(0.0, 1.0);
    return SingleModeGaussian::squeezed(r, phase, nbar);
}

} // namespace nclab
