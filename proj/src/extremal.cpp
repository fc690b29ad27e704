#include "hsp/extremal.hpp"

#include "hsp/detail/panel_engine.hpp"
#include "hsp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsp {

namespace {

constexpr double kPi = std::numbers::pi;

double inverse_distance_power(int n, double r, double t) {
    return detail::half_power(1.0 - 2.0 * r * t + r * r, n);
}

// u0 = A / sqrt(1 + A^2) and B = 1 / sqrt(1 + A^2) without overflow for
// large |A| (the small-mu regime drives A to +/- infinity off the crossing).
inline void stable_terms(double A, double& u0, double& B) {
    if (std::abs(A) <= 1.0) {
        B = 1.0 / std::sqrt(1.0 + A * A);
        u0 = A * B;
    } else {
        const double inv = 1.0 / A;
        const double s = 1.0 / std::sqrt(1.0 + inv * inv);
        u0 = std::copysign(s, A);
        B = std::abs(inv) * s;
    }
}

void check_moment_args(double r, double mu) {
    if (!(mu > 0.0)) throw std::domain_error("moment integrals: mu must be positive");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("moment integrals: need 0 <= r < 1");
}

// Walk the quadrature nodes appropriate for integrands built from the
// shifted kernel at (lambda, mu): the shared base rule when the kernel has
// no zero crossing, crossing-refined Gauss-Legendre panels otherwise.
template <class Fn>
void lagrange_walk(int n, int order, double r, double lambda, double mu, Fn&& fn) {
    double t_star = 0.0, width = 0.0;
    if (!detail::kernel_crossing(n, r, lambda, mu, t_star, width)) {
        const ZonalRule& rule = shared_rule(n, order);
        for (std::size_t i = 0; i < rule.size(); ++i) fn(rule.cosines[i], rule.weights[i]);
        return;
    }
    const double theta_star = std::acos(std::clamp(t_star, -1.0, 1.0));
    const double sin_star = std::max(std::sin(theta_star), 1e-8);
    const double width_theta = std::clamp(width / sin_star, 1e-9, kPi);
    const detail::HotSpot hots[] = {
        {0.0, kPi / 64.0}, {kPi, kPi / 64.0}, {theta_star, width_theta}};
    const auto bounds = detail::panelize(0.0, kPi, {}, hots);
    const int panel_order = std::max(24, order / 2);
    const auto& gl = detail::gauss_legendre(panel_order);
    const double cn = detail::density_constant(n);
    for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
        const double mid = 0.5 * (bounds[p] + bounds[p + 1]);
        const double half = 0.5 * (bounds[p + 1] - bounds[p]);
        for (std::size_t j = 0; j < gl.x.size(); ++j) {
            const double theta = mid + half * gl.x[j];
            fn(std::cos(theta), gl.w[j] * half * cn * detail::int_power(std::sin(theta), n - 2));
        }
    }
}

} // namespace

namespace detail {

bool kernel_crossing(int n, double r, double lambda, double mu, double& t_star, double& width_t) {
    if (r < 1e-12 || lambda <= 0.0) return false;
    const double q = std::pow(lambda, -2.0 / n); // level set 1 - 2 r t + r^2 = q
    t_star = (1.0 + r * r - q) / (2.0 * r);
    if (!(t_star > -1.0 + 1e-12 && t_star < 1.0 - 1e-12)) return false;
    const double kernel_slope = n * r * std::pow(q, -0.5 * (n + 2));
    width_t = mu / kernel_slope;
    return true;
}

} // namespace detail

double shifted_kernel(int n, double r, double lambda, double mu, double t) {
    if (n < 2) throw std::domain_error("shifted_kernel: dimension must be >= 2");
    check_moment_args(r, mu);
    if (!(t >= -1.0 && t <= 1.0)) throw std::domain_error("shifted_kernel: t outside [-1, 1]");
    return (inverse_distance_power(n, r, t) - lambda) / mu;
}

MomentPair boundary_moments(const ZonalRule& rule, double r, double lambda, double mu) {
    check_moment_args(r, mu);
    const int n = rule.dimension;
    MomentPair m;
    lagrange_walk(n, rule.order, r, lambda, mu, [&](double t, double w) {
        const double A = (inverse_distance_power(n, r, t) - lambda) / mu;
        double u0, B;
        stable_terms(A, u0, B);
        m.R += w * u0;
        m.I += w * B;
    });
    return m;
}

MomentJacobian boundary_moment_jacobian(const ZonalRule& rule, double r, double lambda, double mu) {
    check_moment_args(r, mu);
    const int n = rule.dimension;
    double c0 = 0.0, c1 = 0.0, c2 = 0.0; // integrals of B^3, A B^3, A^2 B^3
    lagrange_walk(n, rule.order, r, lambda, mu, [&](double t, double w) {
        const double A = (inverse_distance_power(n, r, t) - lambda) / mu;
        double u0, B;
        stable_terms(A, u0, B);
        c0 += w * B * B * B;
        c1 += w * u0 * B * B;
        c2 += w * u0 * u0 * B;
    });
    MomentJacobian jac;
    jac.dR_dlambda = -c0 / mu;
    jac.dR_dmu = -c1 / mu;
    jac.dI_dlambda = c1 / mu;
    jac.dI_dmu = c2 / mu;
    return jac;
}

namespace {

struct NewtonResult {
    bool converged = false;
    LagrangeParams params;
};

// Damped Newton in (lambda, log mu) from the given start; reports failure
// instead of throwing so the caller can retry from a better start.
NewtonResult newton_refine(const ZonalRule& rule, double r, double a, double b, double lambda,
                           double mu, const SolveOptions& opts) {
    double nu = std::log(mu);
    MomentPair cur = boundary_moments(rule, r, lambda, mu);
    double f = (cur.R - a) * (cur.R - a) + (cur.I - b) * (cur.I - b);

    NewtonResult result;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        const double rR = cur.R - a, rI = cur.I - b;
        result.params = {lambda, mu, rR, rI, iter};
        if (std::max(std::abs(rR), std::abs(rI)) < opts.tol) {
            result.converged = true;
            return result;
        }

        const MomentJacobian jac = boundary_moment_jacobian(rule, r, lambda, mu);
        // chain rule to (lambda, log mu); the determinant stays negative
        const double j11 = jac.dR_dlambda, j12 = mu * jac.dR_dmu;
        const double j21 = jac.dI_dlambda, j22 = mu * jac.dI_dmu;
        const double det = j11 * j22 - j12 * j21;
        if (!(det < 0.0)) return result;
        double dl = -(j22 * rR - j12 * rI) / det;
        double dn = -(-j21 * rR + j11 * rI) / det;
        const double dn_cap = 4.0, dl_cap = 10.0 * (1.0 + std::abs(lambda));
        const double shrink =
            std::min({1.0, dn_cap / std::max(std::abs(dn), 1e-300),
                      dl_cap / std::max(std::abs(dl), 1e-300)});
        dl *= shrink;
        dn *= shrink;

        bool accepted = false;
        for (double step = 1.0; step > 1e-12; step *= 0.5) {
            const double lambda2 = lambda + step * dl;
            const double nu2 = nu + step * dn;
            const double mu2 = std::exp(nu2);
            const MomentPair m2 = boundary_moments(rule, r, lambda2, mu2);
            const double f2 = (m2.R - a) * (m2.R - a) + (m2.I - b) * (m2.I - b);
            if (std::isfinite(f2) && f2 <= f * (1.0 - 1e-4 * step) + 1e-302) {
                lambda = lambda2;
                nu = nu2;
                mu = mu2;
                cur = m2;
                f = f2;
                accepted = true;
                break;
            }
        }
        if (!accepted) return result;
    }
    result.params.residual_R = cur.R - a;
    result.params.residual_I = cur.I - b;
    result.params.iterations = opts.max_iterations;
    return result;
}

// Solve R(lambda, mu) = a in lambda at fixed mu by expanding bisection
// (R is strictly decreasing in lambda, with limits +/- 1).
double lambda_matching_mean(const ZonalRule& rule, double r, double a, double mu) {
    double lo = -1.0, hi = 1.0;
    while (boundary_moments(rule, r, lo, mu).R < a && lo > -1e13) lo *= 2.0;
    while (boundary_moments(rule, r, hi, mu).R > a && hi < 1e13) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-11 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (boundary_moments(rule, r, mid, mu).R > a ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Globally convergent start: along the curve lambda = lambda(mu, a), the
// second moment I is strictly increasing in mu from 0 to sqrt(1 - a^2), so
// bisection in mu always brackets b.
std::pair<double, double> nested_bisection_start(const ZonalRule& rule, double r, double a,
                                                 double b) {
    double lo = 1e-8, hi = 1.0;
    const auto I_at = [&](double mu) {
        return boundary_moments(rule, r, lambda_matching_mean(rule, r, a, mu), mu).I;
    };
    while (I_at(hi) < b && hi < 1e12) hi *= 8.0;
    while (I_at(lo) > b && lo > 1e-14) lo *= 0.125;
    for (int it = 0; it < 80 && hi / lo > 1.0 + 1e-8; ++it) {
        const double mid = std::sqrt(lo * hi);
        (I_at(mid) < b ? lo : hi) = mid;
    }
    const double mu = std::sqrt(lo * hi);
    return {lambda_matching_mean(rule, r, a, mu), mu};
}

} // namespace

LagrangeParams solve_lagrange(int n, double r, double a, double b, const SolveOptions& opts) {
    if (n < 2) throw std::domain_error("solve_lagrange: dimension must be >= 2");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("solve_lagrange: need 0 < r < 1");
    if (!(b > 0.0))
        throw std::domain_error("solve_lagrange: b must be positive (b = 0 is the cap branch)");
    const double rad = a * a + b * b;
    if (!(rad < 1.0) || rad > opts.radius_guard)
        throw std::domain_error("solve_lagrange: a^2 + b^2 must stay below the guard");

    const ZonalRule& rule = shared_rule(n, opts.quad_order);

    // Initial guess from the asymptotic regimes: for b near its ceiling
    // sqrt(1-a^2) the kernel term is negligible and A ~ -lambda/mu is the
    // constant matching (a, b); for small b the profile is nearly the polar
    // cap step, so lambda starts at the cap level and mu is bracketed on I.
    double lambda, mu;
    const double s_max = std::sqrt(1.0 - a * a);
    if (b >= 0.8 * s_max) {
        const double t0 = a / s_max;
        mu = 10.0;
        lambda = -t0 * mu;
    } else {
        const CapThreshold cap = solve_cap_threshold(n, a);
        lambda = std::pow(cap.J(r), -static_cast<double>(n));
        double lo = 1e-9, hi = 1.0;
        while (boundary_moments(rule, r, lambda, hi).I < b && hi < 1e7) hi *= 4.0;
        while (boundary_moments(rule, r, lambda, lo).I > b && lo > 1e-15) lo *= 0.0625;
        for (int it = 0; it < 60 && hi / lo > 1.0 + 1e-4; ++it) {
            const double mid = std::sqrt(lo * hi);
            (boundary_moments(rule, r, lambda, mid).I < b ? lo : hi) = mid;
        }
        mu = std::sqrt(lo * hi);
    }

    NewtonResult result = newton_refine(rule, r, a, b, lambda, mu, opts);
    if (!result.converged) {
        // ill-conditioned corner (a^2 + b^2 near the guard, or nearly
        // constant kernel): restart from the nested-bisection curve point
        const auto [lambda2, mu2] = nested_bisection_start(rule, r, a, b);
        result = newton_refine(rule, r, a, b, lambda2, mu2, opts);
    }
    if (!result.converged)
        throw solver_error("solve_lagrange: no convergence within iteration limit",
                           result.params.residual_R, result.params.residual_I,
                           result.params.iterations);
    return result.params;
}

double ExtremalProfile::u(double t) const {
    if (is_cap()) {
        if (t > cap.t_a) return 1.0;
        if (t < cap.t_a) return -1.0;
        return 0.0;
    }
    const double A = (inverse_distance_power(n, r, t) - params.lambda) / params.mu;
    double u0, B;
    stable_terms(A, u0, B);
    return u0;
}

double ExtremalProfile::v(double t) const {
    if (is_cap()) return 0.0;
    const double A = (inverse_distance_power(n, r, t) - params.lambda) / params.mu;
    double u0, B;
    stable_terms(A, u0, B);
    return B;
}

std::vector<double> ExtremalProfile::breakpoints() const {
    if (is_cap()) return {cap.t_a};
    return {};
}

std::vector<std::pair<double, double>> ExtremalProfile::transitions() const {
    if (is_cap()) return {};
    double t_star = 0.0, width = 0.0;
    if (detail::kernel_crossing(n, r, params.lambda, params.mu, t_star, width))
        return {{t_star, width}};
    return {};
}

ExtremalProfile build_extremal(int n, double r, double a, double b, const SolveOptions& opts) {
    if (n < 2) throw std::domain_error("build_extremal: dimension must be >= 2");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("build_extremal: need 0 < r < 1");
    const double rad = a * a + b * b;
    if (!(rad < 1.0) || rad > opts.radius_guard)
        throw std::domain_error("build_extremal: a^2 + b^2 must stay below the guard");

    ExtremalProfile p;
    p.n = n;
    p.r = r;
    p.a = a;
    p.b = b;
    if (std::abs(b) < 1e-12) { // below solver resolution: the cap profile
        p.sign_b = 0;
        p.kind = ExtremalProfile::Kind::Cap;
        p.cap = solve_cap_threshold(n, a);
    } else {
        p.sign_b = b > 0.0 ? 1 : -1;
        p.kind = ExtremalProfile::Kind::Smooth;
        p.params = solve_lagrange(n, r, a, std::abs(b), opts);
    }
    return p;
}

} // namespace hsp
