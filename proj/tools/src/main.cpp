#include "wentzell/error.hpp"
#include "wentzell_cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <functional>

using wentzell::cli::RunConfig;

namespace {

void physics_flags(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--S", cfg.S, "strip half-width")->capture_default_str();
    sub->add_option("--c", cfg.c, "boundary coefficient c > 0")->capture_default_str();
    sub->add_option("--mu", cfg.mu, "mass")->capture_default_str();
    sub->add_option("--d", cfg.d, "boundary dimension d (space-time dimension of the boundary field)")
        ->capture_default_str();
    sub->add_option("--geometry", cfg.geometry, "strip or halfspace")->capture_default_str();
    sub->add_option("--max", cfg.max, "highest mode index M_max of the table")->capture_default_str();
    sub->add_option("--residual-tol", cfg.residual_tol, "eigen-equation residual tolerance")->capture_default_str();
    sub->add_option("--out", cfg.out, "output directory")->capture_default_str();
    sub->add_option("--cache-dir", cfg.cache_dir, "mode cache directory (default: $WENTZELL_CACHE_DIR or .wentzell_cache)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Free scalar field with generalized Wentzell boundary conditions"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<int(const RunConfig&)> run;

    auto* modes = app.add_subcommand("modes", "build, cache and verify the strip mode table");
    physics_flags(modes, cfg);
    modes->callback([&] { run = wentzell::cli::cmd_modes; });

    auto* evolve = app.add_subcommand("evolve", "time evolution with energy series");
    physics_flags(evolve, cfg);
    evolve->add_option("--scenario", cfg.scenario, "modes, zero or reflection")->capture_default_str();
    evolve->add_option("--method", cfg.method, "fdtd or spectral")->capture_default_str();
    evolve->add_option("--grid-n", cfg.grid_n, "grid intervals (reflection: per unit length)");
    evolve->add_option("--cfl", cfg.cfl, "CFL factor in (0, 1]")->capture_default_str();
    evolve->add_option("--t-end", cfg.t_end, "final time");
    evolve->add_option("--samples", cfg.samples, "number of output rows")->capture_default_str();
    evolve->add_option("--snapshots", cfg.snapshots, "number of field snapshots")->capture_default_str();
    evolve->callback([&] { run = wentzell::cli::cmd_evolve; });

    auto* twopoint = app.add_subcommand("twopoint", "boundary two-point function samples and tail report");
    physics_flags(twopoint, cfg);
    twopoint->add_option("--cutoff", cfg.cutoff, "mode cutoff M")->capture_default_str();
    twopoint->add_option("--t-end", cfg.t_end, "sample range");
    twopoint->add_option("--samples", cfg.samples, "number of samples")->capture_default_str();
    twopoint->callback([&] { run = wentzell::cli::cmd_twopoint; });

    auto* holo = app.add_subcommand("holo", "holographic boundary image of a bulk test function");
    physics_flags(holo, cfg);
    holo->add_flag("--fig2", cfg.fig2, "reproduce the compact test function burst pattern");
    holo->add_option("--M", cfg.holo_M, "mode cutoff (default: 99.9% coefficient energy)");
    holo->add_option("--grid-n", cfg.grid_n, "space intervals for the smearing integrals");
    holo->add_option("--samples", cfg.samples, "time samples of the image")->capture_default_str();
    holo->callback([&] { run = wentzell::cli::cmd_holo; });

    auto* verify = app.add_subcommand("verify", "run the acceptance suite and write verify.json");
    verify->add_option("--out", cfg.out, "output directory")->capture_default_str();
    verify->add_option("--criteria", cfg.criteria, "criterion ids to run (default: all)");
    verify->callback([&] { run = wentzell::cli::cmd_verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? wentzell::cli::exit_pass : wentzell::cli::exit_validation;
    }

    try {
        return run(cfg);
    } catch (const wentzell::Error& e) {
        std::fprintf(stderr, "error (%s): %s\n", wentzell::to_string(e.kind()), e.what());
        return e.kind() == wentzell::ErrorKind::validation ? wentzell::cli::exit_validation
                                                             : wentzell::cli::exit_runtime;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return wentzell::cli::exit_runtime;
    }
}
