#pragma once

#include "hsp/extremal.hpp"
#include "hsp/parallel.hpp"
#include "hsp/poisson.hpp"

#include <complex>
#include <vector>

namespace hsp {

/// Sampled support data of the sharp value region: for each direction beta,
/// h(beta) is the largest attainable Re(w e^{-i beta}) over harmonic F with
/// |F| < 1, F(0) = rho, and f(beta) is the boundary point realizing it.
struct SupportCurve {
    int n = 0;
    double r = 0.0;
    double rho = 0.0;
    std::vector<double> betas; // uniform grid over [-pi, pi], size m_beta + 1
    std::vector<double> h;
    std::vector<Complex> f;
};

/// Intersection of the sampled supporting half-planes (a superset of the
/// true region, shrinking to it as the grid refines). Convex; vertices in
/// counterclockwise order, not repeated.
struct RegionPolygon {
    std::vector<Complex> vertices;
    std::vector<int> edge_beta_index; // edge i = (v_i, v_{i+1}) lies on that support line
};

struct Region {
    SupportCurve curve;
    RegionPolygon polygon;
};

struct RegionOptions {
    int m_beta = 256; // even, >= 16
    int quad_order = 64;
    Exec exec = Exec::Parallel;
};

/// Support value h(beta) = U at rN of the extremal profile with boundary
/// moments (rho cos beta, -rho sin beta).
double support_value(int n, double r, double rho, double beta, int quad_order = 64);

/// Boundary curve point f(beta) = e^{i beta} (U + iV) at rN.
Complex boundary_point(int n, double r, double rho, double beta, int quad_order = 64);

/// Sample the support curve and intersect the half-planes.
Region build_region(int n, double r, double rho, const RegionOptions& opts = {});

enum class Side { Inside, Boundary, Outside };
struct Containment {
    Side side = Side::Inside;
    double margin = 0.0; // max over sampled beta of Re(w e^{-i beta}) - h(beta)
};

/// Classify w against the sampled half-planes with a +/- tol boundary band.
Containment region_contains(const Region& region, Complex w, double tol = 1e-6);

/// Containment query with rotation: F(0) = F0 = rho e^{i alpha}; w is
/// checked against e^{i alpha} times the region for rho = |F0|.
Containment rotated_contains(int n, double r, Complex F0, Complex w, double tol = 1e-6,
                             const RegionOptions& opts = {});

/// Two boundary points and convex weights reproducing an interior target:
/// k1 f(beta1) + k2 f(beta2) = w'. The induced harmonic function
/// k1 e^{i beta1} F_1 + k2 e^{i beta2} F_2 has F(0) = rho and F(rN) = w'.
struct WitnessSpec {
    double beta1 = 0.0, beta2 = 0.0;
    double k1 = 1.0, k2 = 0.0;
    Complex w1{}, w2{};
    Complex target{};

    /// Evaluate the witness harmonic function on the polar axis.
    Complex axis_value(int n, double r, double rho, double s, int quad_order = 64) const;
};

WitnessSpec witness_function(const Region& region, Complex w_prime, double tol = 1e-6,
                             int quad_order = 64);

} // namespace hsp
