#pragma once

#include "hsp/parallel.hpp"
#include "hsp/poisson.hpp"
#include "hsp/region.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hsp {

/// Equal-measure discretization of the zonal boundary class: M bins of
/// sigma-measure 1/M each, delimited by cap thresholds.
struct MeasureBins {
    int n = 0;
    int M = 0;
    std::vector<double> edges;  // t-levels, descending from 1 to -1, size M+1
    double weight() const { return 1.0 / M; }
};
MeasureBins make_equal_measure_bins(int n, int M);

/// Independent maximization of the Poisson functional over the discretized
/// feasible class (box, mean = a, complementary moment >= b) by a log-barrier
/// interior-point method. Never evaluates the multiplier closed form. The
/// result is a lower bound on the continuous maximum, within O(1/M) of it.
struct DiscretizedMax {
    double value = 0.0;
    std::vector<double> u;        // optimal bin values
    double mean_residual = 0.0;   // |sum w u - a|
    double slack = 0.0;           // sum w sqrt(1-u^2) - b (>= 0 at exit)
    double gap_bound = 0.0;       // barrier duality-gap bound on suboptimality
};
DiscretizedMax discretized_maximum(int n, double r, double a, double b, int M = 400);

/// Randomized boundary data: a finite sum of rotated cap indicators with
/// complex coefficients, scaled so the sup-norm stays strictly below 1
/// (certified by the coefficient-sum bound). Reproducible from the seed.
struct CapTerm {
    std::vector<double> axis; // unit vector in R^n
    double tau = 0.0;         // cap level: indicator of <omega, axis> > tau
    Complex coef{};
};
struct HarmonicSample {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<CapTerm> caps;
    Complex F0{};        // value at the origin (exact from cap measures)
    double sup_bound = 0.0; // certified bound on sup |g|

    Complex boundary_value(std::span<const double> omega) const;
    Complex evaluate(std::span<const double> x, const EvalOptions& opts = {}) const;
};
HarmonicSample random_bounded_harmonic(int n, std::uint64_t seed, int complexity = 4);

/// One containment trial: evaluate the sample on the sphere |x| = r (plus
/// interior spot checks) and classify against the rotated region for F(0).
struct TrialFailure {
    int trial = 0;
    int sample_index = 0;
    Complex point{};
    double margin = 0.0;
};
struct TrialOutcome {
    int trial = 0;
    double worst_margin = 0.0;
    std::vector<TrialFailure> failures;
};
struct TrialOptions {
    int m_points = 64;       // sphere sample count
    double tol = 1e-6;
    int m_beta = 64;         // region grid for the trial
    int quad_order = 48;
    EvalOptions eval{32, 48};
};
TrialOutcome containment_trial(const HarmonicSample& sample, double r, int trial_id,
                               const TrialOptions& opts = {});

/// Structural invariant checks on the moment system and the extremal
/// functions (monotonicity, Jacobian sign, large/small multiplier limits,
/// axis maximum principle, dominance over random harmonics).
struct ClaimResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    double threshold = 0.0;
    std::string detail;
};
std::vector<ClaimResult> run_invariant_checks(int n, double r);

/// Full verification run: invariant checks plus a seeded containment corpus.
struct TrialReport {
    int n = 0;
    double r = 0.0;
    std::uint64_t seed = 0;
    int trials = 0;
    double worst_margin = 0.0;
    std::vector<TrialFailure> failures;
    std::vector<ClaimResult> claims;
    bool pass = false;
};
struct VerifyOptions {
    TrialOptions trial{};
    Exec exec = Exec::Parallel;
    bool run_claims = true;
};
TrialReport run_verification(int n, double r, int trials, std::uint64_t seed,
                             const VerifyOptions& opts = {});

} // namespace hsp
