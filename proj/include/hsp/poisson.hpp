#pragma once

#include "hsp/extremal.hpp"
#include "hsp/zonal_quadrature.hpp"

#include <complex>
#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace hsp {

using Complex = std::complex<double>;

/// Poisson kernel (1 - |x|^2) / |x - omega|^n for x strictly inside the ball.
double poisson_kernel(int n, std::span<const double> x, std::span<const double> omega);

/// Axis form: x = s N, integrand depends on t = omega_n only.
double poisson_kernel_axis(int n, double s, double t);

/// Zonal boundary function with the structural hints the quadrature needs.
struct ZonalFunction {
    std::function<double(double)> f;
    std::vector<double> breakpoints;                      // jump locations in t
    std::vector<std::pair<double, double>> transitions;   // (center, width) in t
};

/// L_r(u) = U(rN): the Poisson integral of a zonal boundary function at the
/// axis point rN. Linear in u; |L_r(u)| <= 1 for |u| <= 1.
double functional_L(int n, double r, const ZonalFunction& u, int quad_order = 64);
double functional_L(int n, double r, const ExtremalProfile& profile, int quad_order = 64);

/// U + iV of the extremal pair at the axis point sN (V carries sign_b).
/// Strictly inside the unit disk for s < 1.
Complex axis_value(const ExtremalProfile& profile, double s, int quad_order = 64);

/// Poisson integral at rN of the hemisphere sign profile (+1 north, -1
/// south): the sharp bound for |F| with F(0) = 0. Strictly increasing in r.
double classical_schwarz_bound(int n, double r, int quad_order = 64);

/// Boundary data for general-point evaluation.
struct ZonalData {
    int n = 0;
    std::function<Complex(double)> g;   // profile of t = omega_n
    std::vector<double> breakpoints;
    std::vector<std::pair<double, double>> transitions;
    bool bounded = false; // caller asserts sup |g| <= 1
};
struct CircleGridData { // n = 2: values at angles 2*pi*j/M
    std::vector<Complex> values;
    bool bounded = false; // if set, |values| <= 1 is enforced
};
struct SphereGridData { // n = 3: values at rule.nodes x uniform azimuth
    ZonalRule colatitude;
    int azimuth = 0;
    std::vector<Complex> values; // row-major [colatitude][azimuth]
    bool bounded = false; // if set, |values| <= 1 is enforced
};
using BoundaryData = std::variant<ZonalData, CircleGridData, SphereGridData>;

struct EvalOptions {
    int outer_order = 64;  // colatitude panels (zonal data)
    int inner_order = 64;  // inner sphere rule / azimuth points
};

/// Harmonic extension of the boundary data at x, |x| < 1.
/// Zonal data: any n on the polar axis; off-axis reduced by rotation to a
/// 2-D integral for n >= 3, and to arc-split circle quadrature for n = 2.
/// Grid data: n = 2 periodic trapezoid, n = 3 product rule. Anything else
/// raises capability_error.
Complex evaluate_poisson_general(const BoundaryData& data, std::span<const double> x,
                                 const EvalOptions& opts = {});

namespace detail {
/// Core reduction for zonal data g(omega_n') about an axis c: the value at x
/// depends only on s = |x| and cosg = <x/|x|, c>. Outer integral in the
/// colatitude about c (split at breakpoints, refined at transitions and at
/// the kernel pole), inner integral over the (n-2)-sphere via the cached
/// zonal rule of dimension n-1 (n = 2 degenerates to a two-point average).
Complex zonal_poisson_offaxis(int n, const std::function<Complex(double)>& g,
                              std::span<const double> breakpoints,
                              std::span<const std::pair<double, double>> transitions,
                              double s, double cosg, const EvalOptions& opts);

/// Poisson integral of a cap indicator 1(<omega, c> > tau), n >= 3. Reduced
/// about the direction of x instead of the cap axis: the kernel becomes
/// zonal and the inner factor is the exact slice measure of the cap, so one
/// 1-D integral suffices (panels graded at the two tangency colatitudes).
double cap_poisson_offaxis(int n, double tau, double s, double cosg, int order);
} // namespace detail

} // namespace hsp
