#include "nclab/nphi_criteria.hpp"

#include <cmath>
#include <stdexcept>

namespace nclab {

using std::complex;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

// Per-component application of the pseudo-spin set; everything downstream is
// inner products of these vectors.
struct SpinVectors {
    VectorXcd sx, sy, sz, nplus;
};

SpinVectors spin_apply(const TwoModeFockState& s) {
    const int d = s.dim;
    const VectorXcd a1psi = apply_annihilation(s.amp, d, 1);
    const VectorXcd a2psi = apply_annihilation(s.amp, d, 2);
    const VectorXcd sp = apply_creation(a1psi, d, 2); // S+ = a2^dag a1
    const VectorXcd sm = apply_creation(a2psi, d, 1); // S- = a1^dag a2
    SpinVectors v;
    v.sx = 0.5 * (sp + sm);
    v.sy = complex<double>(0.0, -0.5) * (sp - sm);
    v.sz = 0.5 * (apply_number(s.amp, d, 2) - apply_number(s.amp, d, 1));
    v.nplus = apply_number(s.amp, d, 1) + apply_number(s.amp, d, 2);
    return v;
}

// Mixture mean and variance of a Hermitian observable given its per-component
// applied vectors.
struct MeanVar {
    double mean;
    double var;
};

template <class Apply>
MeanVar mean_var(const TwoModeEnsemble& ens, Apply&& apply) {
    double mean = 0.0, second = 0.0;
    for (const auto& c : ens.components) {
        const VectorXcd v = apply(c.state);
        mean += c.weight * c.state.amp.dot(v).real();
        second += c.weight * v.squaredNorm();
    }
    return {mean, second - mean * mean};
}

// Symmetrized covariance <{A,B}>/2 - <A><B> for Hermitian A, B.
template <class ApplyA, class ApplyB>
double sym_cov(const TwoModeEnsemble& ens, ApplyA&& fa, ApplyB&& fb) {
    double cross = 0.0, ma = 0.0, mb = 0.0;
    for (const auto& c : ens.components) {
        const VectorXcd va = fa(c.state);
        const VectorXcd vb = fb(c.state);
        cross += c.weight * va.dot(vb).real();
        ma += c.weight * c.state.amp.dot(va).real();
        mb += c.weight * c.state.amp.dot(vb).real();
    }
    return cross - ma * mb;
}

double expect_n(const TwoModeEnsemble& ens, int mode) {
    return ensemble_mean(ens, [&](const TwoModeFockState& s) {
        return s.amp.dot(apply_number(s.amp, s.dim, mode));
    });
}

MeanVar number_mean_var(const TwoModeEnsemble& ens, int mode) {
    return mean_var(ens,
                    [&](const TwoModeFockState& s) { return apply_number(s.amp, s.dim, mode); });
}

} // namespace

PseudoSpinMoments pseudo_spin_moments(const TwoModeEnsemble& ens) {
    const MeanVar sx = mean_var(ens, [](const TwoModeFockState& s) { return spin_apply(s).sx; });
    const MeanVar sy = mean_var(ens, [](const TwoModeFockState& s) { return spin_apply(s).sy; });
    const MeanVar sz = mean_var(ens, [](const TwoModeFockState& s) { return spin_apply(s).sz; });
    const MeanVar np =
        mean_var(ens, [](const TwoModeFockState& s) { return spin_apply(s).nplus; });
    PseudoSpinMoments out{sx.mean, sy.mean, sz.mean, np.mean,
                          sx.var,  sy.var,  sz.var,  np.var};
    if (out.sx_var < -1e-10 || out.sy_var < -1e-10 || out.sz_var < -1e-10 ||
        out.nplus_var < -1e-10 || out.nplus_mean < 0.0)
        throw std::domain_error("pseudo_spin_moments: inconsistent second moments");
    return out;
}

HZVerdicts hz_criterion(const TwoModeEnsemble& ens) {
    const double n1n2 = ensemble_mean(ens, [&](const TwoModeFockState& s) {
        return s.amp.dot(apply_number(apply_number(s.amp, s.dim, 2), s.dim, 1));
    });
    const complex<double> splus = ensemble_mean_c(ens, [&](const TwoModeFockState& s) {
        return s.amp.dot(apply_creation(apply_annihilation(s.amp, s.dim, 1), s.dim, 2));
    });
    CriterionVerdict product = make_verdict("hz_product", n1n2, std::norm(splus));

    const MeanVar sx = mean_var(ens, [](const TwoModeFockState& s) { return spin_apply(s).sx; });
    const MeanVar sy = mean_var(ens, [](const TwoModeFockState& s) { return spin_apply(s).sy; });
    const double nplus = expect_n(ens, 1) + expect_n(ens, 2);
    CriterionVerdict sum = make_verdict("hz_sum", sx.var + sy.var, 0.5 * nplus);
    return {product, sum};
}

NhaZubairyResult nha_zubairy_sr(const TwoModeEnsemble& ens, bool variance_form) {
    // u = S+ + S-, v = i(S+ - S-).
    auto apply_u = [](const TwoModeFockState& s) {
        const int d = s.dim;
        return (apply_creation(apply_annihilation(s.amp, d, 1), d, 2) +
                apply_creation(apply_annihilation(s.amp, d, 2), d, 1))
            .eval();
    };
    auto apply_v = [](const TwoModeFockState& s) {
        const int d = s.dim;
        return (complex<double>(0.0, 1.0) *
                (apply_creation(apply_annihilation(s.amp, d, 1), d, 2) -
                 apply_creation(apply_annihilation(s.amp, d, 2), d, 1)))
            .eval();
    };
    const MeanVar u = mean_var(ens, apply_u);
    const MeanVar v = mean_var(ens, apply_v);
    const double extra = sym_cov(ens, apply_u, apply_v);
    const double nplus = expect_n(ens, 1) + expect_n(ens, 2);

    CriterionVerdict verdict;
    if (variance_form) {
        verdict = make_verdict("nha_zubairy_sr_var", (u.var + 1.0) * (v.var + 1.0),
                               (nplus + 1.0) * (nplus + 1.0) + extra * extra,
                               {{"extra", extra}});
    } else {
        const double u2 = u.var + u.mean * u.mean;
        const double v2 = v.var + v.mean * v.mean;
        verdict = make_verdict("nha_zubairy_sr", (u2 + 1.0) * (v2 + 1.0),
                               nplus + extra * extra, {{"extra", extra}});
    }
    return {verdict, extra, extra * extra};
}

std::vector<ProfilePoint> extra_term_profile_nphi(double r, double nbar, double theta_bs,
                                                  const std::vector<double>& phi_values, int d,
                                                  complex<double> alpha) {
    const FockState partner = coherent_state(alpha, d);
    std::vector<ProfilePoint> out;
    out.reserve(phi_values.size());
    for (double phi : phi_values) {
        const FockState rotated = rotated_intelligent_state(r, nbar, d, phi);
        const TwoModeFockState joint = bs_apply(tensor_product(rotated, partner), theta_bs);
        const NhaZubairyResult res = nha_zubairy_sr(TwoModeEnsemble::pure(joint));
        out.push_back({phi, res.extra, res.extra_sq});
    }
    return out;
}

NPhiQuadratures nphi_quadratures(const TwoModeEnsemble& ens) {
    const auto [n1, c1] = marginal_n_and_c(ens, 1);
    const auto [n2, c2] = marginal_n_and_c(ens, 2);
    NPhiQuadratures out;
    out.mode1 = scaled_mode_from_moments(n1, c1, ens.dim);
    out.mode2 = scaled_mode_from_moments(n2, c2, ens.dim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    out.q1 = inv_sqrt2 * (out.mode1.a_n.adjoint() + out.mode1.a_n);
    out.p1 = complex<double>(0.0, inv_sqrt2) * (out.mode1.a_n.adjoint() - out.mode1.a_n);
    out.q2 = inv_sqrt2 * (out.mode2.a_n.adjoint() + out.mode2.a_n);
    out.p2 = complex<double>(0.0, inv_sqrt2) * (out.mode2.a_n.adjoint() - out.mode2.a_n);
    return out;
}

Eigen::Matrix4d nphi_covariance(const TwoModeEnsemble& ens, const NPhiQuadratures& quad) {
    const Eigen::MatrixXcd* ops[4] = {&quad.q1, &quad.p1, &quad.q2, &quad.p2};
    const int modes[4] = {1, 1, 2, 2};
    Eigen::Matrix4d v;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const double cov = sym_cov(
                ens,
                [&](const TwoModeFockState& s) {
                    return apply_mode_op(*ops[i], s.amp, s.dim, modes[i]);
                },
                [&](const TwoModeFockState& s) {
                    return apply_mode_op(*ops[j], s.amp, s.dim, modes[j]);
                });
            v(i, j) = cov;
            v(j, i) = cov;
        }
    for (int i = 0; i < 4; ++i)
        if (!(v(i, i) > 0.0))
            throw std::domain_error("nphi_covariance: non-positive diagonal variance");
    return v;
}

CriterionVerdict simon_like_mu_nphi(const TwoModeEnsemble& ens) {
    const NPhiQuadratures quad = nphi_quadratures(ens);
    const Eigen::Matrix4d v = nphi_covariance(ens, quad);
    return make_verdict("simon_nphi", simon_mu_from_matrix(v), 0.0,
                        {{"gamma1", quad.mode1.gamma},
                         {"gamma2", quad.mode2.gamma},
                         {"c1", quad.mode1.c_exp},
                         {"c2", quad.mode2.c_exp}});
}

CriterionVerdict sr_nphi(const TwoModeEnsemble& ens, double theta) {
    const auto [n1, c1] = marginal_n_and_c(ens, 1);
    const auto [n2, c2] = marginal_n_and_c(ens, 2);
    const SCOperators sc = sc_operators(ens.dim);
    const double g1 = 2.0 * n1, g2 = 2.0 * n2;
    if (std::abs(c1) <= 1e-6 || std::abs(c2) <= 1e-6)
        throw DegeneratePhaseError("sr_nphi: marginal <C> degenerate");
    const MatrixXcd phi1 = sc.s / c1;
    const MatrixXcd phi2 = sc.s / c2;
    const double c = std::cos(theta), s = std::sin(theta);

    auto apply_u = [&](const TwoModeFockState& st) {
        return (c * apply_number(st.amp, st.dim, 1) + s * apply_number(st.amp, st.dim, 2)).eval();
    };
    auto apply_v = [&](const TwoModeFockState& st) {
        return (c * g1 * apply_mode_op(phi1, st.amp, st.dim, 1) -
                s * g2 * apply_mode_op(phi2, st.amp, st.dim, 2))
            .eval();
    };
    const MeanVar u = mean_var(ens, apply_u);
    const MeanVar v = mean_var(ens, apply_v);
    const double extra = sym_cov(ens, apply_u, apply_v);
    const double bound = c * c * n1 + s * s * n2;
    return make_verdict("sr_nphi", u.var * v.var, bound * bound + extra * extra,
                        {{"theta", theta}, {"extra", extra}});
}

CriterionVerdict raymer_product_nphi(const TwoModeEnsemble& ens, double theta) {
    const auto [n1, c1] = marginal_n_and_c(ens, 1);
    const auto [n2, c2] = marginal_n_and_c(ens, 2);
    const SCOperators sc = sc_operators(ens.dim);
    if (std::abs(c1) <= 1e-6 || std::abs(c2) <= 1e-6)
        throw DegeneratePhaseError("raymer_product_nphi: marginal <C> degenerate");
    const MatrixXcd phi1 = sc.s / c1;
    const MatrixXcd phi2 = sc.s / c2;
    const double g1 = 2.0 * n1, g2 = 2.0 * n2;
    const double c = std::cos(theta), s = std::sin(theta);

    const MeanVar u = mean_var(ens, [&](const TwoModeFockState& st) {
        return (c * apply_number(st.amp, st.dim, 1) + s * apply_number(st.amp, st.dim, 2)).eval();
    });
    const MeanVar v = mean_var(ens, [&](const TwoModeFockState& st) {
        return (c * g1 * apply_mode_op(phi1, st.amp, st.dim, 1) -
                s * g2 * apply_mode_op(phi2, st.amp, st.dim, 2))
            .eval();
    });
    return make_verdict("raymer_nphi", u.var * v.var,
                        4.0 * c * c * s * s * n1 * n2, {{"theta", theta}});
}

RotatedHZVerdicts rotated_hz(const TwoModeEnsemble& ens) {
    const MeanVar sz = mean_var(ens, [](const TwoModeFockState& s) { return spin_apply(s).sz; });
    const MeanVar sy = mean_var(ens, [](const TwoModeFockState& s) { return spin_apply(s).sy; });
    const MeanVar num1 = number_mean_var(ens, 1);
    const MeanVar num2 = number_mean_var(ens, 2);
    const double nplus = num1.mean + num2.mean;
    RotatedHZVerdicts out{
        make_verdict("hz_rotated_sum", sz.var + sy.var, 0.5 * nplus),
        make_verdict("sz_area", sz.var, 0.25 * nplus),
        make_verdict("number_sum", num1.var + num2.var, nplus),
    };
    return out;
}

NumberNoiseAreaVerdicts number_noise_area(const TwoModeEnsemble& ens) {
    const MeanVar num1 = number_mean_var(ens, 1);
    const MeanVar num2 = number_mean_var(ens, 2);
    if (num1.mean <= 1e-9 || num2.mean <= 1e-9)
        throw std::invalid_argument("number_noise_area: zero mean photon number");
    NumberNoiseAreaVerdicts out{
        make_verdict("number_area", (num1.var / num1.mean) * (num2.var / num2.mean), 1.0),
        make_verdict("number_sum", num1.var + num2.var, num1.mean + num2.mean),
    };
    return out;
}

CriterionVerdict rotated_area_conjecture(const TwoModeEnsemble& ens) {
    auto apply_plus = [](const TwoModeFockState& s) {
        const SpinVectors v = spin_apply(s);
        return (v.nplus + v.sx).eval();
    };
    auto apply_minus = [](const TwoModeFockState& s) {
        const SpinVectors v = spin_apply(s);
        return (v.nplus - v.sx).eval();
    };
    const MeanVar up = mean_var(ens, apply_plus);
    const MeanVar um = mean_var(ens, apply_minus);
    const MeanVar sx = mean_var(ens, [](const TwoModeFockState& s) { return spin_apply(s).sx; });
    const double nplus = expect_n(ens, 1) + expect_n(ens, 2);
    return make_verdict("area_conjecture", up.var * um.var, nplus * nplus - sx.mean * sx.mean);
}

CriterionVerdict generic_product_bound(const FockOperator& a1, const FockOperator& b1,
                                       const FockOperator& a2, const FockOperator& b2,
                                       double alpha, double beta, bool minus_sign,
                                       const TwoModeEnsemble& ens) {
    if (!a1.hermitian || !b1.hermitian || !a2.hermitian || !b2.hermitian)
        throw std::invalid_argument("generic_product_bound: operators must be Hermitian");
    const double sgn = minus_sign ? -1.0 : 1.0;

    const MeanVar u = mean_var(ens, [&](const TwoModeFockState& s) {
        return (alpha * apply_mode_op(a1.mat, s.amp, s.dim, 1) +
                beta * apply_mode_op(a2.mat, s.amp, s.dim, 2))
            .eval();
    });
    const MeanVar v = mean_var(ens, [&](const TwoModeFockState& s) {
        return (alpha * apply_mode_op(b1.mat, s.amp, s.dim, 1) +
                sgn * beta * apply_mode_op(b2.mat, s.amp, s.dim, 2))
            .eval();
    });
    const MatrixXcd comm1 = a1.mat * b1.mat - b1.mat * a1.mat;
    const MatrixXcd comm2 = a2.mat * b2.mat - b2.mat * a2.mat;
    const double c1 = std::abs(ensemble_mean_c(
        ens, [&](const TwoModeFockState& s) { return s.amp.dot(apply_mode_op(comm1, s.amp, s.dim, 1)); }));
    const double c2 = std::abs(ensemble_mean_c(
        ens, [&](const TwoModeFockState& s) { return s.amp.dot(apply_mode_op(comm2, s.amp, s.dim, 2)); }));
    return make_verdict("generic_product", u.var * v.var,
                        alpha * alpha * beta * beta * c1 * c2,
                        {{"alpha", alpha}, {"beta", beta}, {"c1", c1}, {"c2", c2}});
}

} // namespace nclab
