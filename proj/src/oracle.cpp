#include "hsp/oracle.hpp"

#include "hsp/detail/panel_engine.hpp"
#include "hsp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hsp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;

// Deterministic across platforms (no <random> distributions).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double normal() {
        const double u1 = std::max(uniform(), 1e-300);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }
};

const MeasureBins& shared_bins(int n, int M) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, MeasureBins> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, M);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_equal_measure_bins(n, M)).first;
    return it->second;
}

// sigma-integral of the Poisson kernel over one bin (single Gauss panel in
// colatitude; bins are narrow relative to the kernel scale for r < 1).
std::vector<double> bin_kernel_integrals(const MeasureBins& bins, double r) {
    const auto& gl = detail::gauss_legendre(32);
    const double cn = detail::density_constant(bins.n);
    std::vector<double> coef(bins.M);
    for (int k = 0; k < bins.M; ++k) {
        const double th_lo = std::acos(bins.edges[k]);
        const double th_hi = std::acos(bins.edges[k + 1]);
        const double mid = 0.5 * (th_lo + th_hi), half = 0.5 * (th_hi - th_lo);
        double acc = 0.0;
        for (std::size_t j = 0; j < gl.x.size(); ++j) {
            const double theta = mid + half * gl.x[j];
            const double t = std::cos(theta);
            const double dens = cn * detail::int_power(std::sin(theta), bins.n - 2);
            acc += gl.w[j] * half * dens *
                   (1.0 - r * r) * detail::half_power(1.0 - 2.0 * r * t + r * r, bins.n);
        }
        coef[k] = acc;
    }
    return coef;
}

std::vector<std::vector<double>> sphere_directions(int n, int count) {
    std::vector<std::vector<double>> dirs;
    dirs.reserve(count);
    for (int k = 0; k < count; ++k) {
        const double phi = 2.0 * kPi * std::fmod(k * kGolden, 1.0);
        if (n == 2) {
            dirs.push_back({std::cos(phi), std::sin(phi)});
        } else {
            const double z = 1.0 - (2.0 * k + 1.0) / count;
            const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
            dirs.push_back({s * std::cos(phi), s * std::sin(phi), z});
        }
    }
    return dirs;
}

// 1-D solve of R(lambda, mu) = a in lambda at fixed mu (R strictly decreasing).
double solve_lambda_at_mu(const ZonalRule& rule, double r, double a, double mu) {
    double lo = -1.0, hi = 1.0;
    while (boundary_moments(rule, r, lo, mu).R < a && lo > -1e9) lo *= 2.0;
    while (boundary_moments(rule, r, hi, mu).R > a && hi < 1e9) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (boundary_moments(rule, r, mid, mu).R > a ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

MeasureBins make_equal_measure_bins(int n, int M) {
    if (n < 2) throw std::domain_error("make_equal_measure_bins: dimension must be >= 2");
    if (M < 2) throw std::domain_error("make_equal_measure_bins: need at least two bins");
    MeasureBins bins;
    bins.n = n;
    bins.M = M;
    bins.edges.resize(M + 1);
    bins.edges[0] = 1.0;
    bins.edges[M] = -1.0;
    for (int k = 1; k < M; ++k) { // cap measure k/M, descending in t
        const double a = 2.0 * static_cast<double>(k) / M - 1.0;
        bins.edges[k] = solve_cap_threshold(n, a).t_a;
    }
    return bins;
}

DiscretizedMax discretized_maximum(int n, double r, double a, double b, int M) {
    if (M < 100) throw std::domain_error("discretized_maximum: need M >= 100");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("discretized_maximum: need 0 < r < 1");
    if (!(b >= 0.0)) throw std::domain_error("discretized_maximum: need b >= 0");
    if (a * a + b * b > 0.99)
        throw std::domain_error("discretized_maximum: a^2 + b^2 beyond the oracle guard");
    if (!(std::abs(a) < 1.0)) throw infeasibility_error("discretized_maximum: |a| >= 1");

    const MeasureBins& bins = shared_bins(n, M);
    const std::vector<double> c = bin_kernel_integrals(bins, r);
    const double w = bins.weight();
    const bool use_g = b > 1e-12;

    // Log-barrier interior point over {|u_k| < 1, sum w u = a, g(u) > b},
    // g(u) = sum w sqrt(1 - u^2). Feasible start: the constant profile.
    std::vector<double> u(M, a);
    const int barrier_terms = 2 * M + (use_g ? 1 : 0);
    const double eps_final = 1e-6 / barrier_terms;

    std::vector<double> grad(M), dt(M), q(M), pg(M), pw(M), delta(M);
    const auto g_of = [&](const std::vector<double>& z) {
        double acc = 0.0;
        for (double zk : z) acc += w * std::sqrt(std::max(0.0, 1.0 - zk * zk));
        return acc;
    };
    const auto phi_of = [&](const std::vector<double>& z, double eps) {
        double acc = 0.0;
        for (int k = 0; k < M; ++k) {
            if (!(std::abs(z[k]) < 1.0)) return -1e300;
            acc += c[k] * z[k] + eps * (std::log1p(-z[k]) + std::log1p(z[k]));
        }
        if (use_g) {
            const double slack = g_of(z) - b;
            if (!(slack > 0.0)) return -1e300;
            acc += eps * std::log(slack);
        }
        return acc;
    };

    for (double eps = 0.1;; eps = std::max(eps * 0.15, eps_final)) {
        for (int inner = 0; inner < 60; ++inner) {
            const double slack = use_g ? g_of(u) - b : 1.0;
            const double rho = use_g ? eps / (slack * slack) : 0.0;
            for (int k = 0; k < M; ++k) {
                const double om = 1.0 - u[k], op = 1.0 + u[k];
                const double root = std::sqrt(om * op);
                grad[k] = c[k] + eps * (1.0 / op - 1.0 / om);
                dt[k] = eps * (1.0 / (om * om) + 1.0 / (op * op));
                if (use_g) {
                    q[k] = -w * u[k] / root;
                    grad[k] += (eps / slack) * q[k];
                    dt[k] += (eps / slack) * w / (root * root * root);
                }
            }
            // Newton step with sum w u fixed; H = -(diag(dt) + rho q q^T),
            // inverted by Sherman-Morrison.
            const auto apply_p = [&](const std::vector<double>& z, std::vector<double>& out) {
                double qz = 0.0, qq = 0.0;
                for (int k = 0; k < M; ++k) {
                    out[k] = z[k] / dt[k];
                    if (use_g) {
                        qz += q[k] * out[k];
                        qq += q[k] * q[k] / dt[k];
                    }
                }
                if (use_g) {
                    const double corr = rho * qz / (1.0 + rho * qq);
                    for (int k = 0; k < M; ++k) out[k] -= corr * q[k] / dt[k];
                }
            };
            apply_p(grad, pg);
            std::vector<double> wv(M, w);
            apply_p(wv, pw);
            double wpg = 0.0, wpw = 0.0;
            for (int k = 0; k < M; ++k) {
                wpg += w * pg[k];
                wpw += w * pw[k];
            }
            const double nu = -wpg / wpw;
            double dec = 0.0;
            for (int k = 0; k < M; ++k) {
                delta[k] = pg[k] + nu * pw[k];
                dec += grad[k] * delta[k];
            }
            if (dec < 1e-14 + 1e-9 * eps) break;

            double alpha = 1.0;
            for (int k = 0; k < M; ++k) { // fraction to the box boundary
                if (delta[k] > 0.0) alpha = std::min(alpha, 0.995 * (1.0 - u[k]) / delta[k]);
                if (delta[k] < 0.0) alpha = std::min(alpha, 0.995 * (-1.0 - u[k]) / delta[k]);
            }
            const double phi0 = phi_of(u, eps);
            std::vector<double> trial(M);
            bool moved = false;
            for (; alpha > 1e-14; alpha *= 0.5) {
                for (int k = 0; k < M; ++k) trial[k] = u[k] + alpha * delta[k];
                if (phi_of(trial, eps) >= phi0 + 0.25 * alpha * dec) {
                    u = trial;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        if (eps <= eps_final) break;
    }

    DiscretizedMax result;
    result.u = u;
    double mean = 0.0;
    for (int k = 0; k < M; ++k) {
        result.value += c[k] * u[k];
        mean += w * u[k];
    }
    result.mean_residual = std::abs(mean - a);
    result.slack = g_of(u) - b;
    result.gap_bound = eps_final * barrier_terms;
    if (use_g && result.slack < 0.0)
        throw infeasibility_error("discretized_maximum: constraint violated at exit");
    return result;
}

Complex HarmonicSample::boundary_value(std::span<const double> omega) const {
    Complex acc{};
    for (const CapTerm& cap : caps) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += omega[i] * cap.axis[i];
        if (dot > cap.tau) acc += cap.coef;
    }
    return acc;
}

Complex HarmonicSample::evaluate(std::span<const double> x, const EvalOptions& opts) const {
    double s2 = 0.0;
    for (double xi : x) s2 += xi * xi;
    const double s = std::sqrt(s2);
    if (s < 1e-14) return F0;
    Complex acc{};
    for (const CapTerm& cap : caps) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += x[i] * cap.axis[i];
        const double cosg = dot / s;
        const double tau = cap.tau;
        if (n >= 3) { // the kernel-zonal reduction needs one 1-D integral only
            acc += cap.coef * detail::cap_poisson_offaxis(n, tau, s, cosg, opts.outer_order);
            continue;
        }
        const double breaks[] = {tau};
        const Complex value = detail::zonal_poisson_offaxis(
            n, [tau](double t) { return Complex(t > tau ? 1.0 : 0.0, 0.0); }, breaks, {}, s,
            cosg, opts);
        acc += cap.coef * value;
    }
    return acc;
}

HarmonicSample random_bounded_harmonic(int n, std::uint64_t seed, int complexity) {
    if (n != 2 && n != 3)
        throw capability_error("random_bounded_harmonic: supported dimensions are 2 and 3");
    if (complexity < 1) throw std::domain_error("random_bounded_harmonic: complexity must be >= 1");

    SplitMix64 rng(seed ^ 0x5bf03a39c2717ad1ULL);
    HarmonicSample sample;
    sample.n = n;
    sample.seed = seed;
    sample.caps.resize(complexity);
    double sum_abs = 0.0;
    for (CapTerm& cap : sample.caps) {
        cap.axis.resize(n);
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            cap.axis[i] = rng.normal();
            norm += cap.axis[i] * cap.axis[i];
        }
        norm = std::sqrt(norm);
        if (norm < 1e-12) {
            cap.axis.assign(n, 0.0);
            cap.axis[n - 1] = 1.0;
        } else {
            for (double& c : cap.axis) c /= norm;
        }
        cap.tau = -0.75 + 1.5 * rng.uniform();
        cap.coef = Complex(rng.normal(), rng.normal());
        sum_abs += std::abs(cap.coef);
    }

    // Sup estimate of |g|: exact over the arc arrangement for n = 2, dense
    // low-discrepancy sampling for n = 3. Validity never depends on it: the
    // coefficient-sum cap below already certifies sup |g| < 1.
    double sup_est = 0.0;
    if (n == 2) {
        std::vector<double> events;
        for (const CapTerm& cap : sample.caps) {
            const double psi = std::atan2(cap.axis[1], cap.axis[0]);
            const double half = std::acos(std::clamp(cap.tau, -1.0, 1.0));
            events.push_back(std::remainder(psi - half, 2.0 * kPi));
            events.push_back(std::remainder(psi + half, 2.0 * kPi));
        }
        std::sort(events.begin(), events.end());
        events.push_back(events.front() + 2.0 * kPi);
        for (std::size_t i = 0; i + 1 < events.size(); ++i) {
            const double phi = 0.5 * (events[i] + events[i + 1]);
            const double omega[2] = {std::cos(phi), std::sin(phi)};
            sup_est = std::max(sup_est, std::abs(sample.boundary_value(omega)));
        }
    } else {
        for (const auto& dir : sphere_directions(3, 4096))
            sup_est = std::max(sup_est, std::abs(sample.boundary_value(dir)));
    }

    const double scale = std::min(0.95 / std::max(sup_est, 1e-9),
                                  0.98 / std::max(sum_abs, 1e-9));
    for (CapTerm& cap : sample.caps) {
        cap.coef *= scale;
        sample.F0 += cap.coef * cap_measure(n, cap.tau);
    }
    sample.sup_bound = scale * (n == 2 ? sup_est : sum_abs);
    return sample;
}

TrialOutcome containment_trial(const HarmonicSample& sample, double r, int trial_id,
                               const TrialOptions& opts) {
    const int n = sample.n;
    const double rho = std::abs(sample.F0);
    if (!(rho <= 0.999)) throw std::domain_error("containment_trial: need |F(0)| <= 0.999");

    RegionOptions ropts;
    ropts.m_beta = opts.m_beta;
    ropts.quad_order = opts.quad_order;
    ropts.exec = Exec::Serial; // trials are parallel at the corpus level
    const Region region = build_region(n, r, rho, ropts);
    const Complex rot = rho == 0.0 ? Complex(1.0, 0.0)
                                   : std::exp(Complex(0.0, -std::arg(sample.F0)));

    TrialOutcome outcome;
    outcome.trial = trial_id;
    outcome.worst_margin = -1e300;
    const auto check_point = [&](std::span<const double> x, int index) {
        const Complex value = sample.evaluate(x, opts.eval) * rot;
        const Containment c = region_contains(region, value, opts.tol);
        outcome.worst_margin = std::max(outcome.worst_margin, c.margin);
        if (c.side == Side::Outside)
            outcome.failures.push_back({trial_id, index, value, c.margin});
    };

    const auto dirs = sphere_directions(n, opts.m_points);
    std::vector<double> x(n);
    for (int k = 0; k < opts.m_points; ++k) {
        for (int i = 0; i < n; ++i) x[i] = r * dirs[k][i];
        check_point(x, k);
    }
    // interior spot checks: the center plus a few points at radius r/2
    std::fill(x.begin(), x.end(), 0.0);
    check_point(x, opts.m_points);
    for (int k = 0; k < 4; ++k) {
        const auto& d = dirs[(k * opts.m_points) / 5];
        for (int i = 0; i < n; ++i) x[i] = 0.5 * r * d[i];
        check_point(x, opts.m_points + 1 + k);
    }
    return outcome;
}

namespace {

struct ClaimAccumulator {
    std::vector<ClaimResult> results;
    void add(const std::string& name, bool pass, double observed, double threshold,
             const std::string& detail = {}) {
        results.push_back({name, pass, observed, threshold, detail});
    }
};

} // namespace

std::vector<ClaimResult> run_invariant_checks(int n, double r) {
    if (n < 2) throw std::domain_error("run_invariant_checks: dimension must be >= 2");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("run_invariant_checks: need 0 < r < 1");

    const ZonalRule& rule = shared_rule(n, 64);
    ClaimAccumulator acc;
    const double lambdas[] = {-5.0, -1.0, 0.0, 1.0, 2.0, 5.0};
    const double mus[] = {0.2, 0.5, 1.0, 2.0, 5.0};

    { // moment ranges and monotonicity in lambda
        bool range_ok = true, mono_ok = true;
        double worst_I = 0.5;
        for (double mu : mus) {
            double prev_R = 2.0;
            for (double lambda : lambdas) {
                const MomentPair m = boundary_moments(rule, r, lambda, mu);
                range_ok = range_ok && m.R > -1.0 && m.R < 1.0 && m.I > 0.0 && m.I < 1.0;
                mono_ok = mono_ok && m.R < prev_R;
                prev_R = m.R;
                worst_I = std::min({worst_I, m.I, 1.0 - m.I});
            }
        }
        acc.add("moment-values-inside-open-ranges", range_ok, worst_I, 0.0);
        acc.add("mean-moment-decreasing-in-lambda", mono_ok, 0.0, 0.0);
    }

    { // Jacobian determinant sign and agreement with finite differences
        bool det_ok = true, fd_ok = true;
        double worst_det = -1e300, worst_rel = 0.0;
        for (double mu : mus) {
            for (double lambda : lambdas) {
                const MomentJacobian jac = boundary_moment_jacobian(rule, r, lambda, mu);
                worst_det = std::max(worst_det, jac.det());
                det_ok = det_ok && jac.det() < 0.0;
                const double hl = 1e-6 * (1.0 + std::abs(lambda));
                const double hm = 1e-6 * mu;
                const MomentPair rp = boundary_moments(rule, r, lambda + hl, mu);
                const MomentPair rm = boundary_moments(rule, r, lambda - hl, mu);
                const MomentPair mp = boundary_moments(rule, r, lambda, mu + hm);
                const MomentPair mm = boundary_moments(rule, r, lambda, mu - hm);
                const double fd[4] = {(rp.R - rm.R) / (2 * hl), (mp.R - mm.R) / (2 * hm),
                                      (rp.I - rm.I) / (2 * hl), (mp.I - mm.I) / (2 * hm)};
                const double an[4] = {jac.dR_dlambda, jac.dR_dmu, jac.dI_dlambda, jac.dI_dmu};
                for (int i = 0; i < 4; ++i) {
                    const double scale = std::max({std::abs(an[0]), std::abs(an[3]), 1e-8});
                    worst_rel = std::max(worst_rel, std::abs(fd[i] - an[i]) / scale);
                }
            }
        }
        fd_ok = worst_rel < 1e-5;
        acc.add("jacobian-determinant-negative", det_ok, worst_det, 0.0);
        acc.add("jacobian-matches-finite-differences", fd_ok, worst_rel, 1e-5);
    }

    { // I along the solved curve lambda(mu, a): increasing, limit sqrt(1-a^2)
        bool mono_ok = true, limit_ok = true;
        double worst_gap = 0.0;
        for (double a : {0.0, 0.3, 0.6}) {
            double prev_I = -1.0;
            for (double mu : {0.1, 1.0, 10.0, 1e2, 1e4}) {
                const double lambda = solve_lambda_at_mu(rule, r, a, mu);
                const double I = boundary_moments(rule, r, lambda, mu).I;
                mono_ok = mono_ok && I > prev_I;
                prev_I = I;
            }
            const double gap = std::abs(prev_I - std::sqrt(1.0 - a * a));
            worst_gap = std::max(worst_gap, gap);
        }
        limit_ok = worst_gap < 1e-3;
        acc.add("complementary-moment-increasing-in-mu", mono_ok, 0.0, 0.0);
        acc.add("complementary-moment-large-mu-limit", limit_ok, worst_gap, 1e-3);
    }

    { // small-b multiplier limits: mu -> 0 and lambda -> cap level
        bool ok = true;
        double worst_mu = 0.0, worst_dl = 0.0;
        for (double a : {-0.5, 0.0, 0.5}) {
            const LagrangeParams params = solve_lagrange(n, r, a, 1e-3);
            const CapThreshold cap = solve_cap_threshold(n, a);
            const double lambda0 = std::pow(cap.J(r), -static_cast<double>(n));
            worst_mu = std::max(worst_mu, params.mu);
            worst_dl = std::max(worst_dl, std::abs(params.lambda - lambda0));
        }
        ok = worst_mu < 0.05 && worst_dl < 1e-2;
        acc.add("multiplier-limits-at-small-b", ok, std::max(worst_mu, worst_dl), 5e-2);
    }

    { // profile moments, axis maximum principle, strict disk bound
        bool moments_ok = true, max_ok = true, disk_ok = true;
        double worst_moment = 0.0, worst_axis_margin = 1e300, worst_abs = 0.0;
        const std::pair<double, double> points[] = {
            {0.0, 0.0}, {0.3, 0.4}, {-0.45, 0.2}, {0.6, -0.15}};
        for (const auto& [a, b] : points) {
            const ExtremalProfile profile = build_extremal(n, r, a, b);
            const double mean_u =
                integrate_zonal_split(n, 64, [&](double t) { return profile.u(t); },
                                      profile.breakpoints());
            const double mean_v =
                integrate_zonal_split(n, 64, [&](double t) { return profile.v(t); },
                                      profile.breakpoints());
            worst_moment = std::max({worst_moment, std::abs(mean_u - a),
                                     std::abs(profile.sign_b * mean_v - b)});
            const double peak = axis_value(profile, r).real();
            for (double s : {0.0, 0.25 * r, 0.5 * r, 0.75 * r}) {
                const Complex F = axis_value(profile, s);
                worst_axis_margin = std::min(worst_axis_margin, peak - F.real());
                worst_abs = std::max(worst_abs, std::abs(F));
            }
            for (double s : {r, 0.95}) worst_abs = std::max(worst_abs, std::abs(axis_value(profile, s)));
        }
        moments_ok = worst_moment < 1e-8;
        max_ok = worst_axis_margin > 0.0;
        disk_ok = worst_abs < 1.0;
        acc.add("profile-moments-reproduce-targets", moments_ok, worst_moment, 1e-8);
        acc.add("axis-maximum-at-radius", max_ok, worst_axis_margin, 0.0);
        acc.add("extremal-values-strictly-inside-disk", disk_ok, worst_abs, 1.0);
    }

    if (n == 2 || n == 3) { // dominance over random bounded harmonics
        bool ok = true;
        double worst = -1e300;
        const auto dirs = sphere_directions(n, 16);
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            const HarmonicSample sample = random_bounded_harmonic(n, seed, 3 + (seed % 3));
            const double a = sample.F0.real(), b = sample.F0.imag();
            const ExtremalProfile profile = build_extremal(n, r, a, std::abs(b));
            const double bound = functional_L(n, r, profile);
            std::vector<double> x(n);
            for (const auto& d : dirs) {
                for (int i = 0; i < n; ++i) x[i] = r * d[i];
                const double excess = sample.evaluate(x).real() - bound;
                worst = std::max(worst, excess);
                ok = ok && excess <= 1e-6;
            }
        }
        acc.add("extremal-dominates-random-harmonics", ok, worst, 1e-6);
    }

    return acc.results;
}

TrialReport run_verification(int n, double r, int trials, std::uint64_t seed,
                             const VerifyOptions& opts) {
    if (trials < 1) throw std::domain_error("run_verification: need at least one trial");
    if (n != 2 && n != 3)
        throw capability_error("run_verification: supported dimensions are 2 and 3");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("run_verification: need 0 < r < 1");

    TrialReport report;
    report.n = n;
    report.r = r;
    report.seed = seed;
    report.trials = trials;

    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(static_cast<std::size_t>(trials), opts.exec, [&](std::size_t t) {
        SplitMix64 mix(seed + 0x9e3779b97f4a7c15ULL * (t + 1));
        const std::uint64_t trial_seed = mix.next();
        const int complexity = 3 + static_cast<int>(t % 3);
        const HarmonicSample sample = random_bounded_harmonic(n, trial_seed, complexity);
        outcomes[t] = containment_trial(sample, r, static_cast<int>(t), opts.trial);
    });

    report.worst_margin = -1e300;
    for (const TrialOutcome& outcome : outcomes) {
        report.worst_margin = std::max(report.worst_margin, outcome.worst_margin);
        report.failures.insert(report.failures.end(), outcome.failures.begin(),
                               outcome.failures.end());
    }
    if (opts.run_claims) report.claims = run_invariant_checks(n, r);
    bool claims_ok = true;
    for (const ClaimResult& claim : report.claims) claims_ok = claims_ok && claim.pass;
    report.pass = report.failures.empty() && claims_ok;
    return report;
}

} // namespace hsp
