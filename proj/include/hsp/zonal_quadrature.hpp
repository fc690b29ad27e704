#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace hsp {

/// Quadrature rule for the normalized surface measure on the unit sphere
/// S^{n-1} restricted to zonal integrands f(omega_n). Nodes are colatitudes
/// theta_i in (0, pi); weights already include the surface density, so
/// integrals are plain weighted sums and the weights add up to 1.
///
/// The rule is a composite of Gauss sub-rules taken with respect to the exact
/// measure on a fixed panel decomposition of [0, pi], geometrically graded
/// toward both poles. Each sub-rule has `order` points, so polynomials in
/// cos(theta) of degree <= 2*order - 1 are integrated exactly, and the pole
/// grading keeps Poisson-kernel integrands accurate up to r ~ 0.95.
struct ZonalRule {
    int dimension = 0;
    int order = 0;
    std::vector<double> nodes;    // colatitudes, strictly increasing
    std::vector<double> weights;  // positive, sum to 1
    std::vector<double> cosines;  // cos(nodes), cached

    std::size_t size() const { return nodes.size(); }
};

/// Level t_a of omega_n whose cap {omega_n > t_a} has measure (1+a)/2,
/// together with the chordal radius d_a of the cap boundary circle.
struct CapThreshold {
    int dimension = 0;
    double a = 0.0;
    double t_a = 0.0;
    double d_a = 0.0;

    /// Distance from rN to any point on the cap boundary circle.
    double J(double r) const { return std::sqrt(1.0 - 2.0 * r * t_a + r * r); }
};

/// Build the composite rule for dimension n with `m` points per panel.
/// Throws std::domain_error for n < 2 or m < 1.
ZonalRule make_rule(int n, int m);

/// Shared, cached rule (rules are immutable; safe to use across threads).
const ZonalRule& shared_rule(int n, int m);

template <class Fn>
double integrate_zonal(const ZonalRule& rule, Fn&& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * f(rule.cosines[i]);
    return acc;
}

/// Rule with additional panel boundaries at the given t-levels, so integrands
/// with jumps there are handled piece by piece. Breakpoints must lie in (-1,1).
ZonalRule make_split_rule(int n, int m, std::span<const double> breakpoints_t);

template <class Fn>
double integrate_zonal_split(int n, int m, Fn&& f, std::span<const double> breakpoints_t) {
    return integrate_zonal(make_split_rule(n, m, breakpoints_t), f);
}

/// sigma({omega : omega_n > t}); exact via the sin-power antiderivative
/// recursion. Strictly decreasing, cap_measure(n,-1) = 1, cap_measure(n,1) = 0.
/// Throws std::domain_error for t outside [-1, 1].
double cap_measure(int n, double t);

/// Invert cap_measure: find t_a with sigma({omega_n > t_a}) = (1+a)/2.
/// Throws std::domain_error for |a| >= 1.
CapThreshold solve_cap_threshold(int n, double a);

} // namespace hsp
