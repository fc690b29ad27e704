// Acceptance suite: one criterion per line, [PASS]/[FAIL] with wall time.
// Exit code = number of failed criteria.

#include "hsp/extremal.hpp"
#include "hsp/oracle.hpp"
#include "hsp/poisson.hpp"
#include "hsp/region.hpp"
#include "hsp/zonal_quadrature.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace hsp;

namespace {

constexpr double kPi = std::numbers::pi;

double heinz_bound(double r) { return 4.0 / kPi * std::atan(r); }
double ball3_bound(double r) { return (1.0 - (1.0 - r * r) / std::sqrt(1.0 + r * r)) / r; }

struct Criterion {
    std::string name;
    double budget_s;
    std::function<std::string()> run; // empty string = pass
};

std::string c1_planar_disk() {
    for (double r : {0.25, 0.5, 0.75}) {
        RegionOptions opts;
        opts.m_beta = 64;
        const Region region = build_region(2, r, 0.0, opts);
        const double radius = heinz_bound(r);
        for (const Complex& f : region.curve.f)
            if (std::abs(std::abs(f) - radius) > 1e-6) {
                std::ostringstream msg;
                msg << "r=" << r << ": curve radius off by "
                    << std::abs(std::abs(f) - radius);
                return msg.str();
            }
    }
    const double pinned = support_value(2, 0.5, 0.0, 0.0);
    if (std::abs(pinned - 0.59033447) > 1e-6)
        return "pinned value 0.59033447 missed: got " + std::to_string(pinned);
    return {};
}

std::string c2_ball3_bound() {
    for (double r : {0.3, 0.5, 0.7}) {
        const double got = classical_schwarz_bound(3, r);
        const double want = ball3_bound(r);
        if (std::abs(got - want) > 1e-8) {
            std::ostringstream msg;
            msg << "r=" << r << ": |" << got << " - " << want << "| > 1e-8";
            return msg.str();
        }
    }
    return {};
}

std::string c3_jacobian_fd() {
    double worst = 0.0;
    for (int n : {2, 3, 4}) {
        const ZonalRule& rule = shared_rule(n, 64);
        for (double r : {0.3, 0.5, 0.7}) {
            for (double lambda : {-2.0, -0.5, 0.5, 2.0, 5.0}) {
                for (double mu : {0.1, 0.3, 1.0, 3.0, 10.0}) {
                    const MomentJacobian jac = boundary_moment_jacobian(rule, r, lambda, mu);
                    const double hl = 1e-6 * (1.0 + std::abs(lambda));
                    const double hm = 1e-6 * mu;
                    const MomentPair rp = boundary_moments(rule, r, lambda + hl, mu);
                    const MomentPair rm = boundary_moments(rule, r, lambda - hl, mu);
                    const MomentPair mp = boundary_moments(rule, r, lambda, mu + hm);
                    const MomentPair mm = boundary_moments(rule, r, lambda, mu - hm);
                    const double fd[4] = {(rp.R - rm.R) / (2 * hl), (mp.R - mm.R) / (2 * hm),
                                          (rp.I - rm.I) / (2 * hl), (mp.I - mm.I) / (2 * hm)};
                    const double an[4] = {jac.dR_dlambda, jac.dR_dmu, jac.dI_dlambda,
                                          jac.dI_dmu};
                    const double scale = std::max(std::abs(an[0]), std::abs(an[3]));
                    for (int i = 0; i < 4; ++i)
                        worst = std::max(worst, std::abs(fd[i] - an[i]) / scale);
                }
            }
        }
    }
    if (worst > 1e-5) {
        std::ostringstream msg;
        msg << "worst relative error " << worst << " > 1e-5";
        return msg.str();
    }
    return {};
}

const std::vector<std::tuple<int, double, double, double>>& solver_grid() {
    static const std::vector<std::tuple<int, double, double, double>> grid = [] {
        std::vector<std::tuple<int, double, double, double>> g;
        for (int n : {2, 3, 4})
            for (double r : {0.3, 0.7})
                for (auto [a, b] : {std::pair{0.0, 0.3}, {0.3, 0.4}, {-0.45, 0.75}, {0.6, 0.2}})
                    g.emplace_back(n, r, a, b);
        return g;
    }();
    return grid;
}

std::string c4_solver_contract() {
    for (const auto& [n, r, a, b] : solver_grid()) {
        const LagrangeParams p = solve_lagrange(n, r, a, b);
        const LagrangeParams q = solve_lagrange(n, r, a, b);
        std::ostringstream at;
        at << "(n=" << n << ", r=" << r << ", a=" << a << ", b=" << b << ")";
        if (std::max(std::abs(p.residual_R), std::abs(p.residual_I)) >= 1e-11)
            return "residual above 1e-11 at " + at.str();
        if (p.lambda != q.lambda || p.mu != q.mu)
            return "rerun not deterministic at " + at.str();
        if (!(p.mu > 0.0)) return "nonpositive multiplier at " + at.str();
    }
    return {};
}

std::string c5_oracle_equivalence() {
    for (int n : {2, 3}) {
        for (double r : {0.3, 0.5, 0.7}) {
            for (auto [a, b] : {std::pair{0.0, 0.0}, {0.3, 0.4}}) {
                const double direct = functional_L(n, r, build_extremal(n, r, a, b));
                const double indirect = discretized_maximum(n, r, a, b, 400).value;
                const double rel = std::abs(indirect - direct) / std::abs(direct);
                if (rel > 5e-4) {
                    std::ostringstream msg;
                    msg << "(n=" << n << ", r=" << r << ", a=" << a << ", b=" << b
                        << "): relative gap " << rel << " > 5e-4";
                    return msg.str();
                }
            }
        }
    }
    return {};
}

std::string c6_containment() {
    for (int n : {2, 3}) {
        VerifyOptions opts;
        opts.run_claims = false;
        opts.trial.m_points = 64;
        opts.trial.tol = 1e-6;
        opts.trial.m_beta = 32;
        opts.trial.quad_order = 48;
        opts.trial.eval = {24, 32};
        const TrialReport report = run_verification(n, 0.5, 500, 7, opts);
        if (!report.failures.empty()) {
            std::ostringstream msg;
            msg << "n=" << n << ": " << report.failures.size()
                << " containment failures, worst margin " << report.worst_margin;
            return msg.str();
        }
    }
    return {};
}

std::string c7_sharpness_witnesses() {
    for (int n : {2, 3}) {
        for (double rho : {0.2, 0.5, 0.8}) {
            RegionOptions opts;
            opts.m_beta = 256;
            const Region region = build_region(n, 0.5, rho, opts);
            double diameter = 0.0;
            const auto& poly = region.polygon.vertices;
            for (std::size_t i = 0; i < poly.size(); ++i)
                for (std::size_t j = i + 1; j < poly.size(); ++j)
                    diameter = std::max(diameter, std::abs(poly[i] - poly[j]));

            for (const Complex& f : region.curve.f) { // distance to polygon boundary
                double dist = 1e300;
                for (std::size_t i = 0; i < poly.size(); ++i) {
                    const Complex a = poly[i], bb = poly[(i + 1) % poly.size()];
                    const Complex ab = bb - a;
                    double t = ((f - a) * std::conj(ab)).real() / std::norm(ab);
                    t = std::clamp(t, 0.0, 1.0);
                    dist = std::min(dist, std::abs(f - (a + t * ab)));
                }
                if (dist > 1e-4 * diameter) {
                    std::ostringstream msg;
                    msg << "n=" << n << ", rho=" << rho << ": curve point " << dist
                        << " from polygon (diameter " << diameter << ")";
                    return msg.str();
                }
            }

            // twenty targets: the center value, chord midpoints, seeded interior points
            std::vector<Complex> targets{Complex(rho, 0.0)};
            const int m = opts.m_beta;
            for (int k : {0, m / 4, m / 3})
                targets.push_back(0.5 * (region.curve.f[k] + region.curve.f[k + m / 2]));
            std::uint64_t state = 42 + n + static_cast<int>(10 * rho);
            while (targets.size() < 20) {
                state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                const double px = -1.0 + 2.0 * ((state >> 11) * 0x1.0p-53);
                state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                const double py = -1.0 + 2.0 * ((state >> 11) * 0x1.0p-53);
                const Complex w(px, py);
                if (region_contains(region, w, 1e-6).margin < -1e-3) targets.push_back(w);
            }
            for (const Complex& target : targets) {
                const WitnessSpec witness = witness_function(region, target);
                const Complex at_zero = witness.axis_value(n, 0.5, rho, 0.0);
                const Complex at_r = witness.axis_value(n, 0.5, rho, 0.5);
                if (std::abs(at_zero - Complex(rho, 0.0)) > 1e-7) {
                    std::ostringstream msg;
                    msg << "n=" << n << ", rho=" << rho << ": witness center off by "
                        << std::abs(at_zero - Complex(rho, 0.0));
                    return msg.str();
                }
                if (std::abs(at_r - target) > 1e-6) {
                    std::ostringstream msg;
                    msg << "n=" << n << ", rho=" << rho << ": witness target off by "
                        << std::abs(at_r - target);
                    return msg.str();
                }
            }
        }
    }
    return {};
}

std::string c8_axis_maximum() {
    for (const auto& [n, r, a, b] : solver_grid()) {
        const ExtremalProfile profile = build_extremal(n, r, a, b);
        const double peak = axis_value(profile, r).real();
        for (double s : {0.0, 0.5 * r}) {
            const double margin = peak - axis_value(profile, s).real();
            if (!(margin > 0.0)) {
                std::ostringstream msg;
                msg << "(n=" << n << ", r=" << r << ", a=" << a << ", b=" << b
                    << "): margin " << margin << " at s=" << s;
                return msg.str();
            }
        }
    }
    return {};
}

std::string c9_small_b_continuity() {
    for (int n : {2, 3}) {
        for (double a : {-0.5, 0.0, 0.5}) {
            const double r = 0.5, b = 1e-3;
            const LagrangeParams params = solve_lagrange(n, r, a, b);
            const CapThreshold cap = solve_cap_threshold(n, a);
            const double lambda0 = std::pow(cap.J(r), -static_cast<double>(n));
            std::ostringstream at;
            at << "(n=" << n << ", a=" << a << ")";
            if (!(params.mu < 0.05))
                return "mu=" + std::to_string(params.mu) + " not < 0.05 at " + at.str();
            if (!(std::abs(params.lambda - lambda0) < 1e-2))
                return "lambda gap " + std::to_string(std::abs(params.lambda - lambda0)) +
                       " not < 1e-2 at " + at.str();
            const ExtremalProfile smooth = build_extremal(n, r, a, b);
            const ExtremalProfile step = build_extremal(n, r, a, 0.0);
            for (double t = -1.0; t <= 1.0; t += 0.004) {
                if (std::abs(t - cap.t_a) < 0.05) continue;
                const double gap = std::abs(smooth.u(t) - step.u(t));
                if (gap > 0.01) {
                    std::ostringstream msg;
                    msg << at.str() << ": |u_b - u_0| = " << gap << " at t=" << t;
                    return msg.str();
                }
            }
        }
    }
    return {};
}

std::string c10_structural_claims() {
    for (int n : {2, 3}) {
        const ZonalRule& rule = shared_rule(n, 64);
        const double r = 0.5;
        for (double lambda : {-5.0, -1.0, 0.5, 2.0, 5.0})
            for (double mu : {0.1, 0.5, 1.0, 3.0, 10.0})
                if (!(boundary_moment_jacobian(rule, r, lambda, mu).det() < 0.0))
                    return "determinant not negative";
        for (double mu : {0.3, 1.0, 4.0}) {
            double prev = 2.0;
            for (double lambda : {-6.0, -2.0, 0.0, 2.0, 6.0}) {
                const double R = boundary_moments(rule, r, lambda, mu).R;
                if (!(R < prev)) return "mean moment not decreasing in lambda";
                prev = R;
            }
        }
        for (double a : {0.0, 0.3, 0.6}) {
            const auto lambda_at = [&](double mu) {
                double lo = -1.0, hi = 1.0;
                while (boundary_moments(rule, r, lo, mu).R < a) lo *= 2.0;
                while (boundary_moments(rule, r, hi, mu).R > a) hi *= 2.0;
                for (int i = 0; i < 200 && hi - lo > 1e-12 * (1 + std::abs(lo) + std::abs(hi));
                     ++i) {
                    const double mid = 0.5 * (lo + hi);
                    (boundary_moments(rule, r, mid, mu).R > a ? lo : hi) = mid;
                }
                return 0.5 * (lo + hi);
            };
            const double I2 = boundary_moments(rule, r, lambda_at(1e2), 1e2).I;
            const double I4 = boundary_moments(rule, r, lambda_at(1e4), 1e4).I;
            if (!(I4 > I2)) return "complementary moment not increasing in mu";
            if (std::abs(I4 - std::sqrt(1.0 - a * a)) > 1e-3) {
                std::ostringstream msg;
                msg << "n=" << n << ", a=" << a << ": I(1e4) misses sqrt(1-a^2) by "
                    << std::abs(I4 - std::sqrt(1.0 - a * a));
                return msg.str();
            }
        }
    }
    return {};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"C1  planar sharp-constant disk", 5.0, c1_planar_disk},
        {"C2  3-ball classical bound closed form", 1.0, c2_ball3_bound},
        {"C3  analytic Jacobian vs finite differences", 5.0, c3_jacobian_fd},
        {"C4  multiplier solver residual contract", 10.0, c4_solver_contract},
        {"C5  discretized oracle equivalence", 60.0, c5_oracle_equivalence},
        {"C6  randomized containment corpus", 60.0, c6_containment},
        {"C7  boundary sharpness and witnesses", 30.0, c7_sharpness_witnesses},
        {"C8  axis maximum principle", 5.0, c8_axis_maximum},
        {"C9  vanishing-b continuity and limits", 10.0, c9_small_b_continuity},
        {"C10 moment-system structural claims", 10.0, c10_structural_claims},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = criterion.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (detail.empty() && elapsed > criterion.budget_s) {
            std::ostringstream msg;
            msg << "over time budget (" << elapsed << " s > " << criterion.budget_s << " s)";
            detail = msg.str();
        }
        if (detail.empty()) {
            std::printf("[PASS] %s (%.2f s)\n", criterion.name.c_str(), elapsed);
        } else {
            std::printf("[FAIL] %s (%.2f s): %s\n", criterion.name.c_str(), elapsed,
                        detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures;
}
