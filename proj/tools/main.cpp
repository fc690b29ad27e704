#include "hsp/cli.hpp"
#include "hsp/parallel.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("THREADS"))
        hsp::set_thread_count(std::atoi(threads));

    CLI::App app{"Sharp value regions for bounded complex-valued harmonic functions "
                 "on the unit ball"};
    app.require_subcommand(1);

    hsp::cli::RegionArgs region;
    CLI::App* region_cmd = app.add_subcommand("region", "Trace the sharp value region");
    region_cmd->add_option("--n", region.n, "ball dimension (>= 2)");
    region_cmd->add_option("--r", region.r, "radius of the mapped ball, in (0,1)");
    region_cmd->add_option("--rho", region.rho, "|F(0)|, in [0,1)");
    region_cmd->add_option("--alpha", region.alpha, "arg F(0): output rotation");
    region_cmd->add_option("--beta-samples", region.beta_samples, "support directions (even)");
    region_cmd->add_option("--quad-order", region.quad_order, "quadrature order");
    region_cmd->add_option("--format", region.format, "json | csv | svg");
    region_cmd->add_option("--out", region.out, "output file (default stdout)");

    hsp::cli::ExtremalArgs extremal;
    CLI::App* extremal_cmd =
        app.add_subcommand("extremal", "Extremal boundary profile for given moments");
    extremal_cmd->add_option("--n", extremal.n, "ball dimension");
    extremal_cmd->add_option("--r", extremal.r, "radius, in (0,1)");
    extremal_cmd->add_option("--a", extremal.a, "mean of the profile");
    extremal_cmd->add_option("--b", extremal.b, "complementary moment");
    extremal_cmd->add_option("--samples", extremal.samples, "rows in the output table");
    extremal_cmd->add_option("--quad-order", extremal.quad_order, "quadrature order");
    extremal_cmd->add_option("--out", extremal.out, "output file (default stdout)");

    hsp::cli::BoundArgs bound;
    CLI::App* bound_cmd = app.add_subcommand("bound", "Classical sharp bound for F(0) = 0");
    bound_cmd->add_option("--n", bound.n, "ball dimension");
    bound_cmd->add_option("--r", bound.r, "radius, in (0,1)");

    hsp::cli::CheckArgs check;
    CLI::App* check_cmd = app.add_subcommand("check", "Classify a value against the region");
    check_cmd->add_option("--n", check.n, "ball dimension");
    check_cmd->add_option("--r", check.r, "radius, in (0,1)");
    check_cmd->add_option("--f0-re", check.f0_re, "Re F(0)");
    check_cmd->add_option("--f0-im", check.f0_im, "Im F(0)");
    check_cmd->add_option("--w-re", check.w_re, "Re of the queried value");
    check_cmd->add_option("--w-im", check.w_im, "Im of the queried value");
    check_cmd->add_option("--tol", check.tol, "boundary band half-width");
    check_cmd->add_option("--beta-samples", check.beta_samples, "support directions");
    check_cmd->add_option("--quad-order", check.quad_order, "quadrature order");

    hsp::cli::VerifyArgs verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the randomized containment and invariant suite");
    verify_cmd->add_option("--n", verify.n, "ball dimension (2 or 3)");
    verify_cmd->add_option("--r", verify.r, "radius, in (0,1)");
    verify_cmd->add_option("--trials", verify.trials, "number of random harmonic samples");
    verify_cmd->add_option("--seed", verify.seed, "base seed");
    verify_cmd->add_option("--report", verify.report, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return hsp::cli::kUsage;
    }

    if (*region_cmd) return hsp::cli::run_region(region, std::cout, std::cerr);
    if (*extremal_cmd) return hsp::cli::run_extremal(extremal, std::cout, std::cerr);
    if (*bound_cmd) return hsp::cli::run_bound(bound, std::cout, std::cerr);
    if (*check_cmd) return hsp::cli::run_check(check, std::cout, std::cerr);
    if (*verify_cmd) return hsp::cli::run_verify(verify, std::cout, std::cerr);
    return hsp::cli::kUsage;
}
