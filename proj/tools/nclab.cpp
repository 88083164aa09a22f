// nclab command-line front end: figure-data sweeps, the noise-area
// observation experiments, single-state criterion checks, and the
// separability/classicality soundness sweep.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "nclab/experiments.hpp"
#include "nclab/io.hpp"
#include "nclab/registry.hpp"
#include "nclab/verdict.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitTruncation = 3;
constexpr int kExitConvergence = 4;
constexpr int kExitSoundness = 5;

struct CommonOpts {
    std::string config_path;
    nclab::ExperimentConfig cfg;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* dim_opt = nullptr;
    CLI::Option* samples_opt = nullptr;
    CLI::Option* grid_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    std::uint64_t seed = 12345;
    int dim = 80;
    int samples = 100;
    int grid = 0;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON config file mirroring ExperimentConfig");
    o.seed_opt = cmd->add_option("--seed", o.seed, "RNG seed");
    o.dim_opt = cmd->add_option("--dim", o.dim, "Fock truncation per mode");
    o.samples_opt = cmd->add_option("--samples", o.samples, "ensemble size");
    o.grid_opt = cmd->add_option("--grid", o.grid, "sweep grid points (0 = default)");
    o.out_opt = cmd->add_option("--out", o.out, "output file path");
    o.format_opt = cmd->add_option("--format", o.format, "csv | json");
}

// Config file first, explicit flags win.
nclab::ExperimentConfig resolve(const CommonOpts& o, const std::string& name) {
    nclab::ExperimentConfig cfg = nclab::default_config(name);
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw std::invalid_argument("cannot open config: " + o.config_path);
        nlohmann::json j;
        in >> j;
        cfg = nclab::config_from_json(j, cfg);
    }
    cfg.name = name;
    if (o.seed_opt->count()) cfg.seed = o.seed;
    if (o.dim_opt->count()) cfg.dim = o.dim;
    if (o.samples_opt->count()) cfg.samples = o.samples;
    if (o.grid_opt->count()) cfg.grid = o.grid;
    if (o.out_opt->count()) cfg.out = o.out;
    if (o.format_opt->count()) cfg.format = o.format;
    if (cfg.out.empty()) cfg.out = name + (cfg.format == "json" ? ".json" : ".csv");
    return cfg;
}

void emit(const nclab::Table& t, const nclab::ExperimentConfig& cfg) {
    nclab::write_text_file(cfg.out, nclab::render_table(t, cfg.format));
    std::fprintf(stderr, "wrote %s (%zu rows)\n", cfg.out.c_str(), t.rows.size());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nclab: two-mode entanglement criteria and noise-area experiments"};
    app.require_subcommand(1);

    CommonOpts fig2o, fig3o, fig4o, observeo, soundnesso;
    double fig2_r1 = 0.5, fig2_r2 = 0.0, fig2_theta = 0.78539816339744830961;
    double fig_r = 5.0 / 7.0, fig_nbar = 5.0, fig_alpha = std::sqrt(5.0);
    double fig_theta = 0.78539816339744830961;

    CLI::App* fig2 = app.add_subcommand("fig2", "Gaussian SR extra-term profile vs phi1");
    add_common(fig2, fig2o);
    CLI::Option* r1o = fig2->add_option("--r1", fig2_r1, "input-1 squeezing");
    CLI::Option* r2o = fig2->add_option("--r2", fig2_r2, "input-2 squeezing (0 = vacuum)");
    CLI::Option* tbo = fig2->add_option("--theta-bs", fig2_theta, "mixing angle");

    CLI::App* fig3 = app.add_subcommand("fig3", "number-phase SR extra-term profile vs phi");
    add_common(fig3, fig3o);
    CLI::Option* f3r = fig3->add_option("--r", fig_r, "intelligent-state r");
    CLI::Option* f3n = fig3->add_option("--nbar", fig_nbar, "intelligent-state <n>");
    CLI::Option* f3a = fig3->add_option("--alpha", fig_alpha, "coherent partner amplitude");
    CLI::Option* f3t = fig3->add_option("--theta-bs", fig_theta, "mixing angle");

    CLI::App* fig4 = app.add_subcommand("fig4", "Simon-like n-Phi criterion vs theta_bs");
    add_common(fig4, fig4o);
    CLI::Option* f4r = fig4->add_option("--r", fig_r, "intelligent-state r");
    CLI::Option* f4n = fig4->add_option("--nbar", fig_nbar, "intelligent-state <n>");
    CLI::Option* f4a = fig4->add_option("--alpha", fig_alpha, "coherent partner amplitude");

    CLI::App* observe = app.add_subcommand("observe", "noise-area observation experiments");
    add_common(observe, observeo);

    CLI::App* soundness = app.add_subcommand("soundness", "criteria against null ensembles");
    add_common(soundness, soundnesso);

    std::string check_state, check_name;
    CLI::App* check = app.add_subcommand("check", "evaluate one criterion on a state file");
    check->add_option("state", check_state, "state JSON file")->required();
    check->add_option("criterion", check_name, "criterion name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (fig2->parsed()) {
            nclab::ExperimentConfig cfg = resolve(fig2o, "fig2");
            if (r1o->count()) cfg.r1 = fig2_r1;
            if (r2o->count()) cfg.r2 = fig2_r2;
            if (tbo->count()) cfg.theta_bs = fig2_theta;
            nclab::validate_config(cfg, "fig2");
            emit(nclab::run_fig2(cfg), cfg);
        } else if (fig3->parsed() || fig4->parsed()) {
            const bool is3 = fig3->parsed();
            nclab::ExperimentConfig cfg = resolve(is3 ? fig3o : fig4o, is3 ? "fig3" : "fig4");
            if ((is3 ? f3r : f4r)->count()) cfg.r_intelligent = fig_r;
            if ((is3 ? f3n : f4n)->count()) cfg.nbar = fig_nbar;
            if ((is3 ? f3a : f4a)->count()) cfg.alpha = fig_alpha;
            if (is3 && f3t->count()) cfg.theta_bs = fig_theta;
            nclab::validate_config(cfg, is3 ? "fig3" : "fig4");
            emit(is3 ? nclab::run_fig3(cfg) : nclab::run_fig4(cfg), cfg);
        } else if (observe->parsed()) {
            nclab::ExperimentConfig cfg = resolve(observeo, "observe");
            nclab::validate_config(cfg, "observe");
            const nclab::ObserveReport rep = nclab::run_observe(cfg);
            emit(rep.table, cfg);
            std::printf("samples: %d\n", rep.samples);
            std::printf("max |Omega_min - 2^-2EN|: %.3e\n", rep.max_identity_residual);
            std::printf("fraction with |theta*| = pi/4 (1e-3): %.4f\n", rep.frac_theta_quarter);
            std::printf("theta* sign counts: +%d / -%d\n", rep.positive_theta,
                        rep.negative_theta);
            std::printf("max TMSV residual depth: %.3e\n", rep.max_tmsv_residual_tau);
            std::printf("non-converged minimizations: %d\n", rep.nonconverged);
            if (rep.nonconverged * 100 > rep.samples) return kExitConvergence;
        } else if (soundness->parsed()) {
            nclab::ExperimentConfig cfg = resolve(soundnesso, "soundness");
            nclab::validate_config(cfg, "soundness");
            const nclab::SoundnessReport rep = nclab::run_soundness(cfg);
            emit(rep.table, cfg);
            for (const auto& e : rep.entries)
                std::printf("%-18s %-24s ensemble=%-19s evaluated=%-5d skipped=%-4d "
                            "min_margin=%+.3e%s\n",
                            e.criterion.c_str(), e.kind.c_str(), e.ensemble.c_str(), e.evaluated,
                            e.skipped, e.min_margin,
                            e.breached ? "  BREACH" : (e.gated ? "" : "  (not gated)"));
            if (!rep.pass) {
                std::fprintf(stderr, "soundness: gated criterion breached -1e-9\n");
                return kExitSoundness;
            }
        } else if (check->parsed()) {
            const nclab::CriterionInfo* info = nclab::find_criterion(check_name);
            if (info == nullptr) {
                std::fprintf(stderr, "unknown criterion '%s'; valid names:\n", check_name.c_str());
                for (const auto& n : nclab::criterion_names())
                    std::fprintf(stderr, "  %s\n", n.c_str());
                return kExitInput;
            }
            const nclab::StateFile state = nclab::read_state_file(check_state);
            nclab::CriterionVerdict verdict;
            if (info->input == nclab::InputKind::GaussianCovariance) {
                if (!state.is_gaussian)
                    throw std::invalid_argument("criterion '" + check_name +
                                                "' needs a gaussian_covariance state");
                verdict = info->eval_gaussian(state.covariance);
            } else {
                if (state.is_gaussian)
                    throw std::invalid_argument("criterion '" + check_name +
                                                "' needs a fock_two_mode state");
                verdict = info->eval_fock(nclab::TwoModeEnsemble::pure(state.fock));
            }
            std::printf("%s\n", nclab::verdict_to_json(verdict).dump(2).c_str());
        }
    } catch (const nclab::TruncationError& e) {
        std::fprintf(stderr, "truncation error: %s\n", e.what());
        return kExitTruncation;
    } catch (const nclab::ConvergenceError& e) {
        std::fprintf(stderr, "convergence error: %s\n", e.what());
        return kExitConvergence;
    } catch (const nclab::DegeneratePhaseError& e) {
        std::fprintf(stderr, "degenerate phase: %s\n", e.what());
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return kExitInput;
    }
    return kExitOk;
}
