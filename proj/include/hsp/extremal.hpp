#pragma once

#include "hsp/zonal_quadrature.hpp"

#include <vector>

namespace hsp {

/// Multiplier pair solving the two moment equations R = a, I = b, with the
/// final residuals and Newton iteration count.
struct LagrangeParams {
    double lambda = 0.0;
    double mu = 0.0; // > 0
    double residual_R = 0.0;
    double residual_I = 0.0;
    int iterations = 0;
};

struct SolveOptions {
    int quad_order = 64;          // Gauss points per quadrature panel
    double tol = 1e-12;           // residual infinity-norm target
    int max_iterations = 100;
    double radius_guard = 0.9999; // largest admissible a^2 + b^2
};

/// Scaled shifted kernel A(t) = (1/mu) * ((1 - 2 r t + r^2)^{-n/2} - lambda).
/// Strictly increasing in t for r > 0. r = 0 is allowed (constant kernel).
double shifted_kernel(int n, double r, double lambda, double mu, double t);

/// The two boundary moments of the candidate profile u0 = A / sqrt(1 + A^2):
/// R = mean of u0 (in (-1,1)) and I = mean of sqrt(1 - u0^2) (in (0,1)).
struct MomentPair {
    double R = 0.0;
    double I = 0.0;
};
MomentPair boundary_moments(const ZonalRule& rule, double r, double lambda, double mu);

/// Analytic 2x2 derivative of (R, I) with respect to (lambda, mu).
/// Structure: dI/dlambda = -dR/dmu, dR/dlambda < 0, det < 0.
struct MomentJacobian {
    double dR_dlambda = 0.0;
    double dR_dmu = 0.0;
    double dI_dlambda = 0.0;
    double dI_dmu = 0.0;
    double det() const { return dR_dlambda * dI_dmu - dR_dmu * dI_dlambda; }
};
MomentJacobian boundary_moment_jacobian(const ZonalRule& rule, double r, double lambda, double mu);

/// Solve R(lambda, mu) = a, I(lambda, mu) = b for b > 0 by damped Newton in
/// (lambda, log mu). Deterministic for fixed inputs and quadrature order.
/// Throws std::domain_error for b <= 0 or a^2 + b^2 beyond the guard, and
/// solver_error if the residual target is not met within max_iterations.
LagrangeParams solve_lagrange(int n, double r, double a, double b, const SolveOptions& opts = {});

/// Extremal boundary profile for mean a and complementary moment |b|:
/// the smooth multiplier form for b != 0, the polar-cap step profile for
/// b = 0. For b < 0 the u-profile equals the b > 0 one and sign_b = -1
/// (the imaginary part of the extremal function flips sign).
struct ExtremalProfile {
    enum class Kind { Smooth, Cap };

    int n = 0;
    double r = 0.0;
    double a = 0.0;
    double b = 0.0;
    int sign_b = 0; // sign of b
    Kind kind = Kind::Cap;
    LagrangeParams params; // valid when kind == Smooth
    CapThreshold cap;      // valid when kind == Cap

    bool is_cap() const { return kind == Kind::Cap; }

    /// Boundary value u(t) in [-1, 1].
    double u(double t) const;
    /// sqrt(1 - u(t)^2) >= 0 (sign_b is applied by the harmonic extension).
    double v(double t) const;

    /// Jump locations of u (cap profiles only).
    std::vector<double> breakpoints() const;
    /// Location/width of the kernel zero crossing in t, for quadrature
    /// refinement; empty when the profile has no sharp transition.
    std::vector<std::pair<double, double>> transitions() const;
};

ExtremalProfile build_extremal(int n, double r, double a, double b, const SolveOptions& opts = {});

namespace detail {
/// True when the kernel crosses zero inside (-1,1); fills location and width
/// (the t-scale over which u0 swings between -1 and 1).
bool kernel_crossing(int n, double r, double lambda, double mu, double& t_star, double& width_t);
} // namespace detail

} // namespace hsp
