// Acceptance suite: drives every headline requirement end to end and prints
// one PASS/FAIL line per criterion. Exit status is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "nclab/ensembles.hpp"
#include "nclab/experiments.hpp"
#include "nclab/gaussian_criteria.hpp"
#include "nclab/io.hpp"
#include "nclab/nphi_criteria.hpp"
#include "nclab/parallel.hpp"

using namespace nclab;

namespace {

constexpr double kPi = 3.141592653589793238462643383280;
int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d. %-34s %s\n", ok ? "PASS" : "FAIL", idx, name, detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

char buf[512];

} // namespace

int main() {
    // 1. Negativity consistency: closed form against the Fock-space oracle.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const double r1 = 0.5, r2 = 0.3;
        const double expected = (r1 + r2) / std::log(2.0);
        const TwoModeCovariance v = bs_mix(SingleModeGaussian::squeezed(r1),
                                           SingleModeGaussian::squeezed(r2, kPi / 2.0), kPi / 4.0);
        const double en = log_negativity(v);
        const int d = 25;
        const TwoModeFockState joint =
            bs_apply(tensor_product(squeezed_vacuum_fock(r1, 0.0, d),
                                    squeezed_vacuum_fock(r2, kPi, d)),
                     kPi / 4.0);
        const double en_fock = log_negativity_fock(density_from_ensemble(TwoModeEnsemble::pure(joint)));
        const double elapsed = seconds_since(t0);
        std::snprintf(buf, sizeof buf,
                      "E_N=%.12f target=%.12f |d|=%.1e; oracle %.6f |d|=%.1e; %.2f s", en,
                      expected, std::abs(en - expected), en_fock, std::abs(en_fock - en),
                      elapsed);
        report(1, "negativity consistency", std::abs(en - expected) <= 1e-9 &&
                                            std::abs(en_fock - en) <= 1e-2 && elapsed < 5.0,
               buf);
    }

    // 2 + 3. Observation (i) and (ii) over the seeded ensemble.
    ObserveReport obs;
    {
        const auto t0 = std::chrono::steady_clock::now();
        ExperimentConfig cfg;
        cfg.samples = 100;
        cfg.seed = 20240801;
        obs = run_observe(cfg);
        const double elapsed = seconds_since(t0);
        std::snprintf(buf, sizeof buf, "max |Omega_min - 2^-2EN| = %.3e over %d states; %.1f s",
                      obs.max_identity_residual, obs.samples, elapsed);
        report(2, "observation (i) identity",
               obs.max_identity_residual <= 1e-3 && elapsed < 60.0 && obs.nonconverged == 0, buf);
        std::snprintf(buf, sizeof buf,
                      "fraction with ||theta*|-pi/4| <= 1e-3: %.4f (signs +%d/-%d)",
                      obs.frac_theta_quarter, obs.positive_theta, obs.negative_theta);
        report(3, "observation (ii) argmin angle", obs.frac_theta_quarter >= 0.99, buf);
    }

    // 4. Observation (iii): TMSV residual depths vanish.
    {
        double worst = 0.0;
        for (double r : {0.1, 0.3, 0.6}) {
            const auto [m1, m2] = strip_correlations(two_mode_squeezed_vacuum(r));
            worst = std::max({worst, nonclassical_depth(m1.lambda_sm),
                              nonclassical_depth(m2.lambda_sm)});
        }
        std::snprintf(buf, sizeof buf, "max residual depth = %.1e", worst);
        report(4, "observation (iii) pure entanglement", worst <= 1e-12, buf);
    }

    // 5. Noise-area conservation identity and the tau_ent zero locus.
    {
        double worst = 0.0;
        bool iff_ok = true;
        SplitMix64 rng(5);
        for (int t = 0; t < 1000; ++t) {
            SplitMix64 sample_rng(97531, t);
            const SingleModeGaussian s1 = random_single_mode(sample_rng);
            const SingleModeGaussian s2 = random_single_mode(sample_rng);
            const double th = sample_rng.uniform(0.05, kPi / 2.0 - 0.05);
            const double l1 = noise_eigenvalues(s1).lambda_sm;
            const double l2 = noise_eigenvalues(s2).lambda_sm;
            const double term = std::pow(std::sin(th) * std::cos(th) * (l1 - l2), 2);
            worst = std::max(worst,
                             std::abs(noise_area_out(s1, s2, th) - noise_area_in(s1, s2) - term));
            const double tau = tau_ent(s1, s2, th);
            // Both sides vanish together: exercised exactly on the probes below.
            if ((tau == 0.0) != (term == 0.0) && term > 1e-28) iff_ok = false;
        }
        // Deterministic probes where both sides vanish exactly.
        const SingleModeGaussian sq = SingleModeGaussian::squeezed(0.4, 0.7);
        iff_ok = iff_ok && tau_ent(sq, sq, 0.9) == 0.0 &&
                 std::abs(noise_area_out(sq, sq, 0.9) - noise_area_in(sq, sq)) < 1e-14;
        iff_ok = iff_ok && tau_ent(sq, SingleModeGaussian::vacuum(), 0.0) == 0.0;
        std::snprintf(buf, sizeof buf, "max identity residual = %.2e; zero-locus consistent: %s",
                      worst, iff_ok ? "yes" : "no");
        report(5, "conservation identity", worst <= 1e-12 && iff_ok, buf);
    }

    // 6. Gaussian extra-term profile.
    {
        ExperimentConfig cfg;
        const Table t = run_fig2(cfg);
        bool ok = t.rows.size() == 102;
        ok = ok && std::abs(t.rows.front()[1]) <= 1e-9 && std::abs(t.rows.back()[1]) <= 1e-9;
        int interior_positive = 0;
        for (std::size_t k = 1; k + 1 < t.rows.size(); ++k)
            if (t.rows[k][2] > 0.0) ++interior_positive;
        ok = ok && interior_positive == 100;
        std::snprintf(buf, sizeof buf, "endpoints %.1e / %.1e; %d/100 interior points positive",
                      std::abs(t.rows.front()[1]), std::abs(t.rows.back()[1]), interior_positive);
        report(6, "fig2 reproduction", ok, buf);
    }

    // 7. Number-phase extra-term profile at d = 80.
    {
        const auto t0 = std::chrono::steady_clock::now();
        ExperimentConfig cfg;
        cfg.dim = 80;
        const Table t = run_fig3(cfg);
        const double elapsed = seconds_since(t0);
        bool ok = std::abs(t.rows.front()[1]) <= 1e-6 && std::abs(t.rows.back()[1]) <= 1e-6 &&
                  t.rows.front()[2] <= 1e-6 && t.rows.back()[2] <= 1e-6;
        std::size_t argmax = 0;
        for (std::size_t k = 0; k < t.rows.size(); ++k) {
            if (k > 0 && k + 1 < t.rows.size() && t.rows[k][2] <= 0.0) ok = false;
            if (t.rows[k][2] > t.rows[argmax][2]) argmax = k;
        }
        const double peak = t.rows[argmax][0];
        ok = ok && peak > kPi / 8.0 && peak < 3.0 * kPi / 8.0 && elapsed < 60.0;
        std::snprintf(buf, sizeof buf, "endpoints %.1e / %.1e; peak at %.4f; %.1f s",
                      std::abs(t.rows.front()[1]), std::abs(t.rows.back()[1]), peak, elapsed);
        report(7, "fig3 reproduction", ok, buf);
    }

    // 8. Simon-like criterion sweep and its rotation invariance.
    {
        ExperimentConfig cfg = default_config("fig4");
        cfg.dim = 80;
        const Table t = run_fig4(cfg); // grid 33: contains k*pi/64
        auto mu_at = [&](int k) { return t.rows[k][1]; };
        bool ok = t.rows.size() == 33;
        ok = ok && mu_at(8) < 0.0 && mu_at(16) < 0.0 && mu_at(24) < 0.0;
        ok = ok && mu_at(0) >= -1e-3 && mu_at(32) >= -1e-3;

        const int d = 80;
        const FockState psi = intelligent_state(cfg.r_intelligent, cfg.nbar, d);
        const ScaledMode ctx = scaled_annihilation(psi);
        const FockState partner = coherent_state(cfg.alpha, d);
        const double mu0 = simon_like_mu_nphi(TwoModeEnsemble::pure(
                               bs_apply(tensor_product(psi, partner), kPi / 4.0)))
                               .lhs;
        double worst_inv = 0.0;
        for (double phi : {0.1, 0.2, 0.3}) {
            const FockState rot = rotate_nphi_centered(psi, phi, ctx);
            const double mu = simon_like_mu_nphi(TwoModeEnsemble::pure(
                                  bs_apply(tensor_product(rot, partner), kPi / 4.0)))
                                  .lhs;
            worst_inv = std::max(worst_inv, std::abs(mu - mu0));
        }
        ok = ok && worst_inv <= 2e-3;
        std::snprintf(buf, sizeof buf,
                      "mu(pi/8,pi/4,3pi/8)=(%.1e, %.1e, %.1e); ends (%.1e, %.1e); "
                      "pre-rotation drift %.1e",
                      mu_at(8), mu_at(16), mu_at(24), mu_at(0), mu_at(32), worst_inv);
        report(8, "fig4 reproduction", ok, buf);
    }

    // 9. Soundness suite across the registry.
    {
        const auto t0 = std::chrono::steady_clock::now();
        ExperimentConfig cfg;
        cfg.samples = 1000;
        cfg.dim = 8;
        cfg.seed = 424242;
        const SoundnessReport rep = run_soundness(cfg);
        const double elapsed = seconds_since(t0);
        double min_gated = 0.0;
        for (const auto& e : rep.entries)
            if (e.gated) min_gated = std::min(min_gated, e.min_margin);
        std::snprintf(buf, sizeof buf, "min gated margin = %+.2e over %zu criteria; %.1f s",
                      min_gated, rep.entries.size(), elapsed);
        report(9, "soundness suite", rep.pass && min_gated >= -1e-9 && elapsed < 120.0, buf);
    }

    // 10. Hierarchy properties.
    {
        bool ok = true;
        double worst_gauss = -1e300;
        for (int t = 0; t < 100; ++t) {
            const ObservationSample s = random_observation_state(20240801, t);
            SplitMix64 rng(777, t);
            for (double th : {kPi / 4.0, rng.uniform(-1.5, 1.5)}) {
                const double gap = sr_criterion(s.state, th).margin -
                                   mancini_product(s.state, th).margin;
                worst_gauss = std::max(worst_gauss, gap);
                if (gap > 1e-12) ok = false;
            }
        }
        for (int t = 0; t < 200; ++t) {
            const TwoModeCovariance v = random_separable_gaussian(31337, t);
            const double gap = sr_criterion(v, kPi / 4.0).margin -
                               mancini_product(v, kPi / 4.0).margin;
            if (gap > 1e-12) ok = false;
        }
        int fock_checked = 0;
        double worst_fock = -1e300;
        for (int t = 0; t < 400 && fock_checked < 200; ++t) {
            const TwoModeEnsemble ens = (t % 2 == 0)
                                            ? random_separable_fock(606060, t, 8)
                                            : TwoModeEnsemble::pure(
                                                  random_entangled_candidate(606060, t, 8));
            try {
                const double gap = sr_nphi(ens, kPi / 4.0).margin -
                                   raymer_product_nphi(ens, kPi / 4.0).margin;
                worst_fock = std::max(worst_fock, gap);
                if (gap > 1e-12) ok = false;
                ++fock_checked;
            } catch (const DegeneratePhaseError&) {
            }
        }
        ok = ok && fock_checked >= 200;
        std::snprintf(buf, sizeof buf,
                      "max SR-minus-product margin gaps: gaussian %.1e, n-Phi %.1e (%d states)",
                      worst_gauss, worst_fock, fock_checked);
        report(10, "hierarchy properties", ok, buf);
    }

    // 11. Rotated noise-area conjecture experiment with report artifact.
    {
        ExperimentConfig cfg;
        cfg.samples = 500;
        cfg.dim = 8;
        cfg.seed = 56565656;
        const AreaConjectureReport rep = run_area_conjecture(cfg);
        const std::string path = "area_conjecture_report.csv";
        write_text_file(path, table_to_csv(rep.table));
        const bool ok = rep.entangled == 500 && !rep.table.rows.empty();
        std::snprintf(buf, sizeof buf,
                      "violation fraction %.4f over %d oracle-certified entangled states "
                      "(universal violation not observed; see README); artifact %s",
                      rep.violation_fraction, rep.entangled, path.c_str());
        report(11, "noise-area conjecture", ok, buf);
    }

    // 12. Covariance bridge between the Fock and Gaussian halves.
    {
        const double r = 0.3;
        const int d = 40;
        const TwoModeCovariance tmsv_f = covariance_from_fock(two_mode_squeezed_fock(r, d));
        const double d_tmsv =
            (tmsv_f.matrix() - two_mode_squeezed_vacuum(r).matrix()).cwiseAbs().maxCoeff();
        const TwoModeFockState single =
            tensor_product(squeezed_vacuum_fock(r, 0.0, d), fock_basis_state(0, d));
        Eigen::Matrix4d expected = Eigen::Matrix4d::Identity() * 0.5;
        expected(0, 0) = std::exp(-2.0 * r) / 2.0;
        expected(1, 1) = std::exp(2.0 * r) / 2.0;
        const double d_single =
            (covariance_from_fock(single).matrix() - expected).cwiseAbs().maxCoeff();
        std::snprintf(buf, sizeof buf, "max entry deviations: TMSV %.1e, single-mode %.1e",
                      d_tmsv, d_single);
        report(12, "covariance bridge", d_tmsv <= 1e-6 && d_single <= 1e-6, buf);
    }

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures);
    return failures;
}
