#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hsp::detail {

/// Gauss-Legendre nodes/weights on [-1, 1]; cached per order, thread-safe.
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussLegendre& gauss_legendre(int points);

/// x^k for small nonnegative integer k (the sphere density exponent).
inline double int_power(double x, int k) {
    double acc = 1.0;
    for (double base = x; k > 0; k >>= 1, base *= base)
        if (k & 1) acc *= base;
    return acc;
}

/// x^{-n/2} for x > 0; the hot kernel power, branched off std::pow for the
/// dimensions that dominate the workload.
inline double half_power(double x, int n) {
    switch (n) {
        case 2: return 1.0 / x;
        case 3: return 1.0 / (x * std::sqrt(x));
        case 4: return 1.0 / (x * x);
        case 5: return 1.0 / (x * x * std::sqrt(x));
        default: return std::pow(x, -0.5 * n);
    }
}

/// Normalization constant c_n with d(sigma) = c_n sin^{n-2}(theta) d(theta):
/// c_n = 1 / int_0^pi sin^{n-2}, computed by the exact power recursion.
double density_constant(int n);

/// int_0^x sin^k(t) dt by the stable downward-degree recursion (exact form).
double sin_power_integral(int k, double x);

/// Center of geometric panel refinement: panels shrink toward `theta` down to
/// half-width `width`. Used for integrand features of known location/scale
/// (kernel zero crossings, Poisson poles).
struct HotSpot {
    double theta;
    double width;
};

/// Sorted panel boundaries on [theta_lo, theta_hi] containing the mandatory
/// interior breaks, geometrically refined (ratio 2) around each hot spot.
std::vector<double> panelize(double theta_lo, double theta_hi,
                             std::span<const double> interior_breaks,
                             std::span<const HotSpot> hots);

/// Pole grading used by the base rule: boundaries pi/2^k from both ends.
std::vector<double> pole_graded_panels(int levels);

/// m-point Gauss rule in t = cos(theta) for the measure sin^{n-2}(theta)
/// d(theta) restricted to [theta_lo, theta_hi] (weights unnormalized, i.e.
/// they sum to the measure of the panel). Appends to the output vectors.
void gauss_subrule(int n, int m, double theta_lo, double theta_hi,
                   std::vector<double>& theta_out, std::vector<double>& weight_out);

/// Integrate f(cos theta) against sigma over the given panel boundaries with
/// per-panel Gauss-Legendre in theta (density folded into the weights).
/// Spectrally accurate for integrands analytic on each panel.
template <class Fn>
auto integrate_theta_panels(int n, int order, std::span<const double> bounds, Fn&& f)
    -> decltype(f(0.0)) {
    const GaussLegendre& gl = gauss_legendre(order);
    const double cn = density_constant(n);
    decltype(f(0.0)) acc{};
    for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
        const double mid = 0.5 * (bounds[p] + bounds[p + 1]);
        const double half = 0.5 * (bounds[p + 1] - bounds[p]);
        for (std::size_t j = 0; j < gl.x.size(); ++j) {
            const double theta = mid + half * gl.x[j];
            const double dens = cn * int_power(std::sin(theta), n - 2);
            acc += (gl.w[j] * half * dens) * f(std::cos(theta));
        }
    }
    return acc;
}

} // namespace hsp::detail
