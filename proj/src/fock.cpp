#include "nclab/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace nclab {

using std::complex;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

namespace {

void check_norm(const VectorXcd& amp, const char* who) {
    if (std::abs(amp.norm() - 1.0) > 1e-10)
        throw std::invalid_argument(std::string(who) + ": amplitudes not normalized");
}

VectorXcd normalized(VectorXcd v) {
    const double n = v.norm();
    if (n <= 0.0) throw std::invalid_argument("normalized: zero vector");
    return v / n;
}

// exp(i phi H) psi for Hermitian H via eigendecomposition.
VectorXcd unitary_exp_apply(const MatrixXcd& h, double phi, const VectorXcd& psi) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
    const VectorXcd phases =
        (complex<double>(0.0, phi) * es.eigenvalues().cast<complex<double>>()).array().exp();
    return es.eigenvectors() * (phases.asDiagonal() * (es.eigenvectors().adjoint() * psi));
}

} // namespace

FockState::FockState(VectorXcd a, int d) : amp(std::move(a)), dim(d) {
    if (dim < 2 || amp.size() != dim) throw std::invalid_argument("FockState: bad dimension");
    check_norm(amp, "FockState");
}

TwoModeFockState::TwoModeFockState(VectorXcd a, int d) : amp(std::move(a)), dim(d) {
    if (dim < 2 || amp.size() != static_cast<Eigen::Index>(dim) * dim)
        throw std::invalid_argument("TwoModeFockState: bad dimension");
    check_norm(amp, "TwoModeFockState");
}

FockOperator::FockOperator(MatrixXcd m, bool herm) : mat(std::move(m)), hermitian(herm) {
    if (hermitian && (mat - mat.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("FockOperator: tagged hermitian but is not");
}

LadderOperators ladder_operators(int d) {
    if (d < 2) throw std::invalid_argument("ladder_operators: d >= 2 required");
    MatrixXcd a = MatrixXcd::Zero(d, d);
    MatrixXcd n = MatrixXcd::Zero(d, d);
    for (int k = 1; k < d; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    for (int k = 0; k < d; ++k) n(k, k) = k;
    return {a, a.adjoint(), n};
}

SCOperators sc_operators(int d) {
    if (d < 2) throw std::invalid_argument("sc_operators: d >= 2 required");
    // e_- = (n+1)^{-1/2} a annihilates exactly one quantum: entries are 1.
    MatrixXcd em = MatrixXcd::Zero(d, d);
    for (int k = 1; k < d; ++k) em(k - 1, k) = 1.0;
    const MatrixXcd ep = em.adjoint();
    const complex<double> i2(0.0, 2.0);
    MatrixXcd s = (em - ep) / i2;
    MatrixXcd c = (em + ep) / 2.0;
    return {s, c};
}

FockState fock_basis_state(int n, int d) {
    if (n < 0 || n >= d) throw std::invalid_argument("fock_basis_state: n out of range");
    VectorXcd v = VectorXcd::Zero(d);
    v(n) = 1.0;
    return {v, d};
}

FockState coherent_state(complex<double> alpha, int d) {
    VectorXcd v(d);
    complex<double> term = 1.0;
    v(0) = term;
    for (int n = 1; n < d; ++n) {
        term *= alpha / std::sqrt(static_cast<double>(n));
        v(n) = term;
    }
    return {normalized(v), d};
}

FockState squeezed_vacuum_fock(double r, double phase, int d) {
    VectorXcd v = VectorXcd::Zero(d);
    const complex<double> mu = -std::exp(complex<double>(0.0, phase)) * std::tanh(r);
    complex<double> term = 1.0;
    v(0) = term;
    for (int m = 1; 2 * m < d; ++m) {
        // c_{2m}/c_{2m-2} = mu * sqrt((2m-1)/(2m))
        term *= mu * std::sqrt((2.0 * m - 1.0) / (2.0 * m));
        v(2 * m) = term;
    }
    return {normalized(v), d};
}

TwoModeFockState tensor_product(const FockState& s1, const FockState& s2) {
    if (s1.dim != s2.dim) throw std::invalid_argument("tensor_product: dimension mismatch");
    const int d = s1.dim;
    VectorXcd v(static_cast<Eigen::Index>(d) * d);
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2) v(n1 * d + n2) = s1.amp(n1) * s2.amp(n2);
    return {v, d};
}

TwoModeFockState two_mode_squeezed_fock(double r, int d) {
    VectorXcd v = VectorXcd::Zero(static_cast<Eigen::Index>(d) * d);
    const double t = std::tanh(r);
    double term = 1.0;
    for (int n = 0; n < d; ++n) {
        v(n * d + n) = term;
        term *= t;
    }
    return {normalized(v), d};
}

ScaledMode scaled_mode_from_moments(double n_mean, double c_exp, int d) {
    if (n_mean <= 1e-9) throw DegeneratePhaseError("scaled mode: <n> vanishes");
    if (std::abs(c_exp) <= 1e-6) throw DegeneratePhaseError("scaled mode: |<C>| <= 1e-6");
    const double gamma = 2.0 * n_mean;
    const LadderOperators lad = ladder_operators(d);
    const SCOperators sc = sc_operators(d);
    ScaledMode ctx;
    ctx.dim = d;
    ctx.gamma = gamma;
    ctx.c_exp = c_exp;
    ctx.a_n = (lad.n + complex<double>(0.0, gamma / c_exp) * sc.s) / std::sqrt(2.0 * gamma);
    return ctx;
}

ScaledMode scaled_annihilation(const FockState& state) {
    const LadderOperators lad = ladder_operators(state.dim);
    const SCOperators sc = sc_operators(state.dim);
    const double n_mean = (state.amp.adjoint() * lad.n * state.amp).value().real();
    const double c_exp = (state.amp.adjoint() * sc.c * state.amp).value().real();
    return scaled_mode_from_moments(n_mean, c_exp, state.dim);
}

FockState intelligent_state(double r, double nbar_target, int d) {
    if (!(r > 0.0)) throw std::invalid_argument("intelligent_state: r > 0 required");
    if (!(nbar_target >= 1.0)) throw std::invalid_argument("intelligent_state: nbar >= 1 required");
    if (d < 8.0 * nbar_target)
        throw std::invalid_argument("intelligent_state: d >= 8*nbar required");

    // Real form of E - nbar with E = n + i kappa S: i*S has the real
    // antisymmetric band (+1/2 above, -1/2 below the diagonal).
    MatrixXd is = MatrixXd::Zero(d, d);
    MatrixXd c_op = MatrixXd::Zero(d, d);
    for (int n = 0; n + 1 < d; ++n) {
        is(n, n + 1) = 0.5;
        is(n + 1, n) = -0.5;
        c_op(n, n + 1) = 0.5;
        c_op(n + 1, n) = 0.5;
    }
    VectorXd nvec(d);
    for (int n = 0; n < d; ++n) nvec(n) = n;

    double n_mean = nbar_target;
    double c_exp = 1.0;
    double gamma_p = 2.0 * r * nbar_target;
    VectorXd psi;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
        const double kappa = gamma_p / c_exp;
        MatrixXd e = kappa * is;
        for (int n = 0; n < d; ++n) e(n, n) += n - nbar_target;
        // Smallest right singular vector: the truncated operator is strongly
        // non-normal near the shift, which makes this the stable target of
        // shifted inverse iteration.
        Eigen::BDCSVD<MatrixXd> svd(e, Eigen::ComputeThinV);
        psi = svd.matrixV().col(d - 1);
        if (psi.sum() < 0.0) psi = -psi;
        n_mean = psi.dot(nvec.asDiagonal() * psi);
        c_exp = psi.dot(c_op * psi);
        if (std::abs(c_exp) <= 1e-6) throw DegeneratePhaseError("intelligent_state: <C> degenerate");
        const double gamma_next = 2.0 * r * n_mean;
        const bool done = std::abs(gamma_next - gamma_p) < 1e-10 * std::abs(gamma_next);
        gamma_p = gamma_next;
        if (done) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceError("intelligent_state: fixed point did not converge");
    if (psi(d - 1) * psi(d - 1) > 1e-8)
        throw TruncationError("intelligent_state: tail mass above 1e-8");
    return {psi.cast<complex<double>>(), d};
}

FockState rotated_intelligent_state(double r, double nbar_target, int d, double phi) {
    const FockState base = intelligent_state(r, nbar_target, d);
    if (std::abs(std::sin(phi)) < 1e-12) return base;
    const ScaledMode plane = scaled_annihilation(base);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const MatrixXcd q = inv_sqrt2 * (plane.a_n.adjoint() + plane.a_n);
    const MatrixXcd p = complex<double>(0.0, inv_sqrt2) * (plane.a_n.adjoint() - plane.a_n);

    if (std::abs(std::cos(phi)) < 1e-12) {
        // Quarter turn: the saturating state of P + i r (-Q) is the real
        // pseudo-eigenvector of A - r(Q - <Q>) with A = P/i. Solving in the
        // real form keeps the amplitudes exactly real.
        const Eigen::MatrixXd a_real = (complex<double>(0, -1) * p).real();
        const Eigen::MatrixXd q_real = q.real();
        VectorXd psi = base.amp.real();
        double qbar = psi.dot(q_real * psi);
        for (int it = 0; it < 50; ++it) {
            MatrixXd rmat = a_real - r * q_real;
            rmat.diagonal().array() += r * qbar;
            Eigen::BDCSVD<MatrixXd> svd(rmat, Eigen::ComputeThinV);
            psi = svd.matrixV().col(d - 1);
            if (psi.sum() < 0.0) psi = -psi;
            const double qbar_next = psi.dot(q_real * psi);
            const bool done = std::abs(qbar_next - qbar) < 1e-12 * std::max(1.0, std::abs(qbar_next));
            qbar = qbar_next;
            if (done) break;
        }
        if (psi(d - 1) * psi(d - 1) > 1e-8)
            throw TruncationError("rotated_intelligent_state: tail mass above 1e-8");
        return {psi.cast<complex<double>>(), d};
    }

    const double c = std::cos(phi), s = std::sin(phi);
    const MatrixXcd qphi = c * q + s * p;
    const MatrixXcd pphi = -s * q + c * p;
    const MatrixXcd m0 = qphi + complex<double>(0.0, r) * pphi;

    // Seed with the ellipse-rotated state, then iterate the shift to the
    // state's own expectation value of the non-normal operator.
    VectorXcd psi = rotate_nphi_centered(base, phi, plane).amp;
    complex<double> z = (psi.adjoint() * m0 * psi).value();
    for (int it = 0; it < 50; ++it) {
        MatrixXcd m = m0;
        m.diagonal().array() -= z;
        Eigen::BDCSVD<MatrixXcd> svd(m, Eigen::ComputeThinV);
        psi = svd.matrixV().col(d - 1);
        // Deterministic global phase: largest component positive real.
        Eigen::Index imax = 0;
        psi.cwiseAbs().maxCoeff(&imax);
        psi *= std::polar(1.0, -std::arg(psi(imax)));
        // At phi = 0 or pi/2 the singular vector is real up to a phase; snap
        // to the real representative so the endpoint symmetries are exact.
        const complex<double> self_overlap = psi.transpose() * psi;
        if (std::abs(self_overlap) > 1.0 - 1e-8) {
            psi *= std::polar(1.0, -0.5 * std::arg(self_overlap));
            psi = psi.real().cast<complex<double>>();
            psi /= psi.norm();
        }
        const complex<double> z_next = (psi.adjoint() * m0 * psi).value();
        const bool done = std::abs(z_next - z) < 1e-12 * std::max(1.0, std::abs(z_next));
        z = z_next;
        if (done) break;
    }
    if (std::norm(psi(d - 1)) > 1e-8)
        throw TruncationError("rotated_intelligent_state: tail mass above 1e-8");
    return {psi, d};
}

FockState rotate_nphi(const FockState& state, double phi) {
    return rotate_nphi(state, phi, scaled_annihilation(state));
}

FockState rotate_nphi(const FockState& state, double phi, const ScaledMode& ctx) {
    if (ctx.dim != state.dim) throw std::invalid_argument("rotate_nphi: context dim mismatch");
    const MatrixXcd h = ctx.a_n.adjoint() * ctx.a_n;
    return {normalized(unitary_exp_apply(h, phi, state.amp)), state.dim};
}

FockState rotate_nphi_centered(const FockState& state, double phi) {
    return rotate_nphi_centered(state, phi, scaled_annihilation(state));
}

FockState rotate_nphi_centered(const FockState& state, double phi, const ScaledMode& ctx) {
    if (ctx.dim != state.dim)
        throw std::invalid_argument("rotate_nphi_centered: context dim mismatch");
    const complex<double> mean = (state.amp.adjoint() * ctx.a_n * state.amp).value();
    const MatrixXcd b = ctx.a_n - mean * MatrixXcd::Identity(ctx.dim, ctx.dim);
    const MatrixXcd h = b.adjoint() * b;
    return {normalized(unitary_exp_apply(h, phi, state.amp)), state.dim};
}

FockState displace_nphi(const FockState& state, complex<double> beta) {
    return displace_nphi(state, beta, scaled_annihilation(state));
}

FockState displace_nphi(const FockState& state, complex<double> beta, const ScaledMode& ctx) {
    if (ctx.dim != state.dim) throw std::invalid_argument("displace_nphi: context dim mismatch");
    // beta a_n^dag - beta* a_n = -i H with H Hermitian; apply exp(-i H).
    const MatrixXcd g = beta * ctx.a_n.adjoint() - std::conj(beta) * ctx.a_n;
    const MatrixXcd h = complex<double>(0.0, 1.0) * g;
    return {normalized(unitary_exp_apply(h, -1.0, state.amp)), state.dim};
}

TwoModeFockState bs_apply(const TwoModeFockState& state, double theta_bs) {
    const int d = state.dim;
    VectorXcd out = VectorXcd::Zero(state.amp.size());
    // The generator conserves n1+n2; handle each total-number sector as a
    // tridiagonal Hermitian block H = i G restricted to |k, N-k>.
    for (int total = 0; total <= 2 * (d - 1); ++total) {
        const int kmin = std::max(0, total - (d - 1));
        const int kmax = std::min(total, d - 1);
        const int len = kmax - kmin + 1;
        if (len == 1) {
            const int idx = kmin * d + (total - kmin);
            out(idx) = state.amp(idx);
            continue;
        }
        MatrixXcd h = MatrixXcd::Zero(len, len);
        for (int k = kmin; k < kmax; ++k) {
            // G |k, N-k> gets theta*sqrt((k+1)(N-k)) |k+1, N-k-1> from a1^dag a2.
            const double g = theta_bs * std::sqrt(static_cast<double>(k + 1) *
                                                  static_cast<double>(total - k));
            h(k + 1 - kmin, k - kmin) = complex<double>(0.0, 1.0) * g;
            h(k - kmin, k + 1 - kmin) = complex<double>(0.0, -1.0) * g;
        }
        VectorXcd sec(len);
        for (int k = kmin; k <= kmax; ++k) sec(k - kmin) = state.amp(k * d + (total - k));
        // exp(G) = exp(-i H)
        const VectorXcd rot = unitary_exp_apply(h, -1.0, sec);
        for (int k = kmin; k <= kmax; ++k) out(k * d + (total - k)) = rot(k - kmin);
    }
    return {normalized(out), d};
}

NPhiNoise nphi_noise_matrix(const FockState& state) {
    return nphi_noise_matrix(state, scaled_annihilation(state));
}

NPhiNoise nphi_noise_matrix_relinearized(const FockState& state, const ScaledMode& plane) {
    const SCOperators sc = sc_operators(state.dim);
    const double c_exp = (state.amp.adjoint() * sc.c * state.amp).value().real();
    return nphi_noise_matrix(state, scaled_mode_from_moments(plane.gamma / 2.0, c_exp, state.dim));
}

NPhiNoise nphi_noise_matrix(const FockState& state, const ScaledMode& ctx) {
    if (ctx.dim != state.dim)
        throw std::invalid_argument("nphi_noise_matrix: context dim mismatch");
    const int d = state.dim;
    const LadderOperators lad = ladder_operators(d);
    const SCOperators sc = sc_operators(d);
    const MatrixXcd phi_op = sc.s / ctx.c_exp;

    const VectorXcd npsi = lad.n * state.amp;
    const VectorXcd ppsi = phi_op * state.amp;
    const double n_mean = state.amp.dot(npsi).real();
    const double p_mean = state.amp.dot(ppsi).real();
    const double dn2 = npsi.squaredNorm() - n_mean * n_mean;
    const double dp2 = ppsi.squaredNorm() - p_mean * p_mean;
    const double cross = (npsi.dot(ppsi)).real() - n_mean * p_mean;

    NPhiNoise out;
    out.v << dn2 / ctx.gamma, cross, cross, ctx.gamma * dp2;
    const double mean = 0.5 * (out.v(0, 0) + out.v(1, 1));
    const double dev = std::sqrt(0.25 * (out.v(0, 0) - out.v(1, 1)) * (out.v(0, 0) - out.v(1, 1)) +
                                 cross * cross);
    out.lambda_sm = 2.0 * (mean - dev);
    out.lambda_lg = 2.0 * (mean + dev);
    return out;
}

VectorXcd apply_mode_op(const MatrixXcd& op, const VectorXcd& amp, int dim, int mode) {
    using RowMat = Eigen::Matrix<complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMat> grid(amp.data(), dim, dim); // rows: n1, cols: n2
    VectorXcd out(amp.size());
    Eigen::Map<RowMat> ogrid(out.data(), dim, dim);
    if (mode == 1)
        ogrid = op * grid;
    else if (mode == 2)
        ogrid = grid * op.transpose();
    else
        throw std::invalid_argument("apply_mode_op: mode must be 1 or 2");
    return out;
}

VectorXcd apply_annihilation(const VectorXcd& amp, int dim, int mode) {
    VectorXcd out = VectorXcd::Zero(amp.size());
    for (int n1 = 0; n1 < dim; ++n1)
        for (int n2 = 0; n2 < dim; ++n2) {
            const int idx = n1 * dim + n2;
            if (mode == 1 && n1 + 1 < dim)
                out(idx) = std::sqrt(static_cast<double>(n1 + 1)) * amp((n1 + 1) * dim + n2);
            else if (mode == 2 && n2 + 1 < dim)
                out(idx) = std::sqrt(static_cast<double>(n2 + 1)) * amp(n1 * dim + n2 + 1);
        }
    return out;
}

VectorXcd apply_creation(const VectorXcd& amp, int dim, int mode) {
    VectorXcd out = VectorXcd::Zero(amp.size());
    for (int n1 = 0; n1 < dim; ++n1)
        for (int n2 = 0; n2 < dim; ++n2) {
            const int idx = n1 * dim + n2;
            if (mode == 1 && n1 > 0)
                out(idx) = std::sqrt(static_cast<double>(n1)) * amp((n1 - 1) * dim + n2);
            else if (mode == 2 && n2 > 0)
                out(idx) = std::sqrt(static_cast<double>(n2)) * amp(n1 * dim + n2 - 1);
        }
    return out;
}

VectorXcd apply_number(const VectorXcd& amp, int dim, int mode) {
    VectorXcd out(amp.size());
    for (int n1 = 0; n1 < dim; ++n1)
        for (int n2 = 0; n2 < dim; ++n2)
            out(n1 * dim + n2) = amp(n1 * dim + n2) * static_cast<double>(mode == 1 ? n1 : n2);
    return out;
}

TwoModeCovariance covariance_from_fock(const TwoModeFockState& state) {
    const int d = state.dim;
    const VectorXcd a1 = apply_annihilation(state.amp, d, 1);
    const VectorXcd a2 = apply_annihilation(state.amp, d, 2);
    const complex<double> m1 = state.amp.dot(a1); // <a1>
    const complex<double> m2 = state.amp.dot(a2);
    const complex<double> a1a1 = a1.dot(a1);        // <a1^dag a1>
    const complex<double> a2a2 = a2.dot(a2);
    const complex<double> sq1 = state.amp.dot(apply_annihilation(a1, d, 1));  // <a1^2>
    const complex<double> sq2 = state.amp.dot(apply_annihilation(a2, d, 2));  // <a2^2>
    const complex<double> a1da2 = a1.dot(a2);       // <a1^dag a2>
    const complex<double> a1a2 = state.amp.dot(apply_annihilation(a2, d, 1)); // <a1 a2>

    // Central complex moments.
    const complex<double> b1 = sq1 - m1 * m1;
    const complex<double> b2 = sq2 - m2 * m2;
    const double n1c = (a1a1 - std::conj(m1) * m1).real();
    const double n2c = (a2a2 - std::conj(m2) * m2).real();
    const complex<double> cross_pq = a1a2 - m1 * m2;              // <da1 da2>
    const complex<double> cross_pd = a1da2 - std::conj(m1) * m2;  // <da1^dag da2>

    // x_i = (a_i + a_i^dag)/sqrt2, p_i = i(a_i^dag - a_i)/sqrt2.
    Eigen::Matrix4d v;
    const double vx1 = n1c + 0.5 + b1.real();
    const double vp1 = n1c + 0.5 - b1.real();
    const double cxp1 = b1.imag();
    const double vx2 = n2c + 0.5 + b2.real();
    const double vp2 = n2c + 0.5 - b2.real();
    const double cxp2 = b2.imag();
    // With P = <da1 da2> and D = <da1^dag da2>:
    //   <{x1,x2}>/2 = Re P + Re D     <{p1,p2}>/2 = Re D - Re P
    //   <{x1,p2}>/2 = Im P + Im D     <{p1,x2}>/2 = Im P - Im D
    const double cx1x2 = cross_pq.real() + cross_pd.real();
    const double cp1p2 = cross_pd.real() - cross_pq.real();
    const double cx1p2 = cross_pq.imag() + cross_pd.imag();
    const double cp1x2 = cross_pq.imag() - cross_pd.imag();
    v << vx1, cxp1, cx1x2, cx1p2, cxp1, vp1, cp1x2, cp1p2, cx1x2, cp1x2, vx2, cxp2,
        cx1p2, cp1p2, cxp2, vp2;
    return TwoModeCovariance(v);
}

TwoModeEnsemble TwoModeEnsemble::pure(TwoModeFockState s) {
    TwoModeEnsemble e;
    e.dim = s.dim;
    e.components.push_back({1.0, std::move(s)});
    return e;
}

DensityMatrix density_from_ensemble(const TwoModeEnsemble& ens) {
    if (ens.dim > 40)
        throw std::invalid_argument("density_from_ensemble: dim > 40 guard (oracle only)");
    const Eigen::Index n = static_cast<Eigen::Index>(ens.dim) * ens.dim;
    MatrixXcd rho = MatrixXcd::Zero(n, n);
    for (const auto& c : ens.components) rho += c.weight * (c.state.amp * c.state.amp.adjoint());
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-12)
        throw std::invalid_argument("density_from_ensemble: weights do not sum to one");
    return {rho, ens.dim};
}

namespace {

MatrixXcd partial_transpose_mode2(const MatrixXcd& rho, int d) {
    MatrixXcd out(rho.rows(), rho.cols());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) out(i * d + j, k * d + l) = rho(i * d + l, k * d + j);
    return out;
}

} // namespace

double pt_negativity(const DensityMatrix& rho) {
    const MatrixXcd pt = partial_transpose_mode2(rho.rho, rho.dim);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(pt);
    double neg = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        neg += std::max(0.0, -es.eigenvalues()(i));
    return neg;
}

double log_negativity_fock(const DensityMatrix& rho) {
    const MatrixXcd pt = partial_transpose_mode2(rho.rho, rho.dim);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(pt);
    return std::log2(es.eigenvalues().cwiseAbs().sum());
}

std::pair<double, double> marginal_n_and_c(const TwoModeEnsemble& ens, int mode) {
    const SCOperators sc = sc_operators(ens.dim);
    const double n_mean = ensemble_mean(ens, [&](const TwoModeFockState& s) {
        return s.amp.dot(apply_number(s.amp, s.dim, mode));
    });
    const double c_mean = ensemble_mean(ens, [&](const TwoModeFockState& s) {
        return s.amp.dot(apply_mode_op(sc.c, s.amp, s.dim, mode));
    });
    return {n_mean, c_mean};
}

} // namespace nclab
