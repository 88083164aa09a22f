#include "nclab/gaussian_criteria.hpp"

#include <cmath>
#include <stdexcept>

namespace nclab {

namespace {
constexpr double kPi = 3.141592653589793238462643383280;
} // namespace

double log_negativity(const TwoModeCovariance& v) {
    const double det_v = v.matrix().determinant();
    if (det_v < -1e-12) throw std::invalid_argument("log_negativity: det V < 0");
    const double det_a = v.block_a().determinant();
    const double det_b = v.block_b().determinant();
    const double det_c = v.block_c().determinant();
    const double delta_t = det_a + det_b - 2.0 * det_c;
    const double disc = std::sqrt(std::max(delta_t * delta_t - 4.0 * det_v, 0.0));
    const double nu_sq = std::max(0.5 * (delta_t - disc), 1e-300);
    return std::max(0.0, -std::log2(2.0 * std::sqrt(nu_sq)));
}

double en_from_input_depths(double tau1, double tau2) {
    if (tau1 < 0.0 || tau1 >= 0.5 || tau2 < 0.0 || tau2 >= 0.5)
        throw std::invalid_argument("en_from_input_depths: tau must lie in [0, 1/2)");
    return en_from_input_lambdas(1.0 - 2.0 * tau1, 1.0 - 2.0 * tau2);
}

double en_from_input_lambdas(double lambda1, double lambda2) {
    if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
        throw std::invalid_argument("en_from_input_lambdas: lambdas must be positive");
    return std::max(0.0, -0.5 * std::log2(lambda1 * lambda2));
}

double s_n(std::pair<double, double> lambda_in, std::pair<double, double> lambda_out) {
    if (!(lambda_in.first > 0.0 && lambda_in.second > 0.0 && lambda_out.first > 0.0 &&
          lambda_out.second > 0.0))
        throw std::invalid_argument("s_n: lambdas must be positive");
    return std::log2((lambda_out.first * lambda_out.second) /
                     (lambda_in.first * lambda_in.second));
}

double tau_ent(const SingleModeGaussian& s1, const SingleModeGaussian& s2, double theta_bs) {
    return std::abs(std::sin(theta_bs) * std::cos(theta_bs)) *
           (std::abs(s1.a - s2.a) + std::abs(s1.b - s2.b));
}

UVVariances dgcz_uv_variances(const TwoModeCovariance& v, double theta, bool pt) {
    const Eigen::Matrix4d& m = v.matrix();
    const double c = std::cos(theta), s = std::sin(theta);
    const double sgn = pt ? -1.0 : 1.0;
    UVVariances out;
    out.var_u = c * c * m(0, 0) + s * s * m(2, 2) + 2.0 * c * s * m(0, 2);
    out.var_v = c * c * m(1, 1) + s * s * m(3, 3) + sgn * 2.0 * c * s * m(1, 3);
    out.cross_s = c * c * m(0, 1) + sgn * c * s * m(0, 3) + c * s * m(2, 1) +
                  sgn * s * s * m(2, 3);
    return out;
}

CriterionVerdict sr_criterion(const TwoModeCovariance& v, double theta) {
    const UVVariances uv = dgcz_uv_variances(v, theta, true);
    return make_verdict("sr", uv.var_u * uv.var_v, 0.25 + uv.cross_s * uv.cross_s,
                        {{"theta", theta}, {"cross_s", uv.cross_s}});
}

CriterionVerdict mancini_product(const TwoModeCovariance& v, double theta) {
    const UVVariances uv = dgcz_uv_variances(v, theta, true);
    return make_verdict("mancini", uv.var_u * uv.var_v, 0.25, {{"theta", theta}});
}

CriterionVerdict dgcz_sum(const TwoModeCovariance& v, double theta) {
    const UVVariances uv = dgcz_uv_variances(v, theta, true);
    return make_verdict("dgcz", uv.var_u + uv.var_v, 1.0, {{"theta", theta}});
}

std::vector<ProfilePoint> extra_term_profile(const SingleModeGaussian& s1,
                                             const SingleModeGaussian& s2, double theta_bs,
                                             const std::vector<double>& phi1_values) {
    std::vector<ProfilePoint> out;
    out.reserve(phi1_values.size());
    for (double phi1 : phi1_values) {
        const TwoModeCovariance v = bs_mix(s1.rotated(phi1), s2, theta_bs);
        const double cross = dgcz_uv_variances(v, kPi / 4.0, true).cross_s;
        out.push_back({phi1, cross, cross * cross});
    }
    return out;
}

double omega_dgcz(const TwoModeCovariance& v, double theta, double phi1, double phi2) {
    const UVVariances uv = dgcz_uv_variances(local_rotation(v, phi1, phi2), theta, true);
    return 4.0 * uv.var_u * uv.var_v;
}

OptimizationResult minimize_omega_dgcz(const TwoModeCovariance& v) {
    SearchBox box;
    box.dims = 3;
    box.lo = {0.0, 0.0, -kPi / 2.0};
    box.hi = {kPi, kPi, kPi / 2.0};
    box.resolution = 64;
    box.tolerance = 1e-8;
    return grid_refine_minimize(
        [&](const std::array<double, 3>& x) { return omega_dgcz(v, x[2], x[0], x[1]); }, box);
}

double simon_mu_from_matrix(const Eigen::Matrix4d& v) {
    const Eigen::Matrix2d a = v.block<2, 2>(0, 0);
    const Eigen::Matrix2d b = v.block<2, 2>(2, 2);
    const Eigen::Matrix2d c = v.block<2, 2>(0, 2);
    Eigen::Matrix2d j;
    j << 0.0, 1.0, -1.0, 0.0;
    const double det_a = a.determinant();
    const double det_b = b.determinant();
    const double det_c = c.determinant();
    const double tr = (a * j * c * j * b * j * c.transpose() * j).trace();
    return det_a * det_b + (0.25 - std::abs(det_c)) * (0.25 - std::abs(det_c)) - tr -
           0.25 * (det_a + det_b);
}

CriterionVerdict simon_mu(const TwoModeCovariance& v) {
    return make_verdict("simon", simon_mu_from_matrix(v.matrix()), 0.0);
}

QuadratureNonclassicality quadrature_nonclassicality(const SingleModeGaussian& s1,
                                                     const SingleModeGaussian& s2) {
    const double vx1 = quadrature_noise_at_angle(s1, 0.0);
    const double vx2 = quadrature_noise_at_angle(s2, 0.0);
    const double l1 = noise_eigenvalues(s1).lambda_sm;
    const double l2 = noise_eigenvalues(s2).lambda_sm;
    QuadratureNonclassicality out{
        make_verdict("noise_area_x_product", vx1 * vx2, 0.25),
        make_verdict("noise_area_lambda", l1 * l2, 1.0),
        make_verdict("noise_area_x_sum", vx1 + vx2, 1.0),
    };
    return out;
}

} // namespace nclab
