#include "hsp/region.hpp"

#include "hsp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsp {

namespace {

constexpr double kPi = std::numbers::pi;

void check_region_args(int n, double r, double rho) {
    if (n < 2) throw std::domain_error("region: dimension must be >= 2");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("region: need 0 < r < 1");
    if (!(rho >= 0.0 && rho < 1.0)) throw std::domain_error("region: need 0 <= rho < 1");
    if (rho * rho > SolveOptions{}.radius_guard)
        throw std::domain_error("region: rho too close to 1 for the solver guard");
}

struct CurveSample {
    double h;
    Complex f;
};

// One extremal solve: boundary moments (rho cos beta, -rho sin beta).
CurveSample sample_curve(int n, double r, double rho, double beta, int quad_order) {
    SolveOptions opts;
    opts.quad_order = quad_order;
    const ExtremalProfile profile =
        build_extremal(n, r, rho * std::cos(beta), -rho * std::sin(beta), opts);
    const Complex F = axis_value(profile, r, quad_order);
    return {F.real(), std::exp(Complex(0.0, beta)) * F};
}

// Convex polygon clip against Re(w e^{-i beta}) <= h. Edge i starts at
// vertex i; labels track which support line each edge lies on.
void clip_halfplane(std::vector<Complex>& poly, std::vector<int>& label,
                    double beta, double h, int line_index) {
    const std::size_t m = poly.size();
    if (m == 0) return;
    const Complex dir = std::exp(Complex(0.0, -beta));
    std::vector<double> side(m);
    for (std::size_t i = 0; i < m; ++i) side[i] = (poly[i] * dir).real() - h;

    std::vector<Complex> out;
    std::vector<int> out_label;
    out.reserve(m + 2);
    out_label.reserve(m + 2);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (i + 1) % m;
        const bool in_i = side[i] <= 0.0, in_j = side[j] <= 0.0;
        if (in_i) {
            out.push_back(poly[i]);
            out_label.push_back(label[i]);
        }
        if (in_i != in_j) {
            const double t = side[i] / (side[i] - side[j]);
            const Complex cut = poly[i] + t * (poly[j] - poly[i]);
            out.push_back(cut);
            // leaving the half-plane: the new edge runs along the cut line;
            // entering: the edge continues on the original line.
            out_label.push_back(in_i ? line_index : label[i]);
        }
    }
    poly = std::move(out);
    label = std::move(out_label);
}

} // namespace

double support_value(int n, double r, double rho, double beta, int quad_order) {
    check_region_args(n, r, rho);
    return sample_curve(n, r, rho, beta, quad_order).h;
}

Complex boundary_point(int n, double r, double rho, double beta, int quad_order) {
    check_region_args(n, r, rho);
    return sample_curve(n, r, rho, beta, quad_order).f;
}

Region build_region(int n, double r, double rho, const RegionOptions& opts) {
    check_region_args(n, r, rho);
    const int m = opts.m_beta;
    if (m < 16 || m % 2 != 0)
        throw std::domain_error("build_region: beta sample count must be even and >= 16");

    Region region;
    SupportCurve& curve = region.curve;
    curve.n = n;
    curve.r = r;
    curve.rho = rho;
    curve.betas.resize(m + 1);
    curve.h.resize(m + 1);
    curve.f.resize(m + 1);
    for (int k = 0; k <= m; ++k) curve.betas[k] = -kPi + 2.0 * kPi * k / m;

    // Solve the lower half grid (beta <= 0, where the v-moment is >= 0); the
    // upper half follows from the real-axis symmetry f(-beta) = conj(f(beta)).
    parallel_for(static_cast<std::size_t>(m / 2 + 1), opts.exec, [&](std::size_t k) {
        const CurveSample s = sample_curve(n, r, rho, curve.betas[k], opts.quad_order);
        curve.h[k] = s.h;
        curve.f[k] = s.f;
    });
    for (int k = m / 2 + 1; k <= m; ++k) {
        curve.h[k] = curve.h[m - k];
        curve.f[k] = std::conj(curve.f[m - k]);
    }

    // Half-plane intersection, seeded with a box that strictly contains the
    // closed unit disk. Distinct support directions are k = 0 .. m-1
    // (beta = +pi duplicates beta = -pi).
    std::vector<Complex> poly{{-2.0, -2.0}, {2.0, -2.0}, {2.0, 2.0}, {-2.0, 2.0}};
    std::vector<int> label{-1, -1, -1, -1};
    for (int k = 0; k < m; ++k)
        clip_halfplane(poly, label, curve.betas[k], curve.h[k], k);
    if (poly.size() < 3)
        throw solver_error("build_region: half-plane intersection degenerated", rho, r, m);

    // Merge duplicate vertices produced by touching support lines.
    RegionPolygon& polygon = region.polygon;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (!polygon.vertices.empty() && std::abs(poly[i] - polygon.vertices.back()) < 1e-12) {
            polygon.edge_beta_index.back() = label[i];
            continue;
        }
        polygon.vertices.push_back(poly[i]);
        polygon.edge_beta_index.push_back(label[i]);
    }
    while (polygon.vertices.size() > 1 &&
           std::abs(polygon.vertices.front() - polygon.vertices.back()) < 1e-12) {
        polygon.vertices.pop_back();
        polygon.edge_beta_index.pop_back();
    }
    return region;
}

Containment region_contains(const Region& region, Complex w, double tol) {
    const SupportCurve& curve = region.curve;
    const int m = static_cast<int>(curve.betas.size()) - 1;
    double margin = -1e300;
    for (int k = 0; k < m; ++k) {
        const Complex dir = std::exp(Complex(0.0, -curve.betas[k]));
        margin = std::max(margin, (w * dir).real() - curve.h[k]);
    }
    Containment c;
    c.margin = margin;
    c.side = margin > tol ? Side::Outside : (margin < -tol ? Side::Inside : Side::Boundary);
    return c;
}

Containment rotated_contains(int n, double r, Complex F0, Complex w, double tol,
                             const RegionOptions& opts) {
    const double rho = std::abs(F0);
    if (!(rho < 1.0)) throw std::domain_error("rotated_contains: need |F(0)| < 1");
    const double alpha = rho == 0.0 ? 0.0 : std::arg(F0);
    const Region region = build_region(n, r, rho, opts);
    return region_contains(region, w * std::exp(Complex(0.0, -alpha)), tol);
}

Complex WitnessSpec::axis_value(int n, double r, double rho, double s, int quad_order) const {
    SolveOptions opts;
    opts.quad_order = quad_order;
    const ExtremalProfile p1 =
        build_extremal(n, r, rho * std::cos(beta1), -rho * std::sin(beta1), opts);
    Complex value = k1 * std::exp(Complex(0.0, beta1)) * hsp::axis_value(p1, s, quad_order);
    if (k2 > 0.0) {
        const ExtremalProfile p2 =
            build_extremal(n, r, rho * std::cos(beta2), -rho * std::sin(beta2), opts);
        value += k2 * std::exp(Complex(0.0, beta2)) * hsp::axis_value(p2, s, quad_order);
    }
    return value;
}

WitnessSpec witness_function(const Region& region, Complex w_prime, double tol, int quad_order) {
    const SupportCurve& curve = region.curve;
    const int n = curve.n;
    const double r = curve.r, rho = curve.rho;
    const int m = static_cast<int>(curve.betas.size()) - 1;

    const Containment c = region_contains(region, w_prime, tol);
    if (c.side == Side::Outside)
        throw std::domain_error("witness_function: target lies outside the region");

    WitnessSpec witness;
    witness.target = w_prime;

    if (c.side == Side::Boundary) {
        // w' sits on (or within tol of) the curve: locate the closest curve
        // point by golden-section search seeded at the sampled margin maximum.
        int best = 0;
        double best_margin = -1e300;
        for (int k = 0; k < m; ++k) {
            const Complex dir = std::exp(Complex(0.0, -curve.betas[k]));
            const double margin = (w_prime * dir).real() - curve.h[k];
            if (margin > best_margin) {
                best_margin = margin;
                best = k;
            }
        }
        const double d_beta = 2.0 * kPi / m;
        double lo = curve.betas[best] - d_beta, hi = curve.betas[best] + d_beta;
        const auto miss = [&](double beta) {
            return std::abs(boundary_point(n, r, rho, beta, quad_order) - w_prime);
        };
        const double inv_phi = 0.6180339887498949;
        double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
        double f1 = miss(x1), f2 = miss(x2);
        while (hi - lo > 1e-9) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = miss(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = miss(x2);
            }
        }
        witness.beta1 = witness.beta2 = 0.5 * (lo + hi);
        witness.w1 = witness.w2 = boundary_point(n, r, rho, witness.beta1, quad_order);
        witness.k1 = 1.0;
        witness.k2 = 0.0;
        return witness;
    }

    // Interior target: cut the boundary with the line through w' and the
    // vertex centroid (never tangent), then polish the two crossings on the
    // exact curve by bracketed secant in beta.
    Complex centroid{};
    for (const Complex& v : region.polygon.vertices) centroid += v;
    centroid /= static_cast<double>(region.polygon.vertices.size());
    Complex dir = w_prime - centroid;
    if (std::abs(dir) < 1e-12) dir = {1.0, 0.0};
    dir /= std::abs(dir);
    const auto side_of = [&](Complex f) { return ((f - w_prime) * std::conj(dir)).imag(); };

    std::vector<double> crossing_betas;
    for (int k = 0; k < m && crossing_betas.size() < 2; ++k) {
        double lo = curve.betas[k], hi = curve.betas[k + 1];
        double s_lo = side_of(curve.f[k]), s_hi = side_of(curve.f[k + 1]);
        if (std::abs(s_lo) < 1e-13) { // grid point already on the chord
            crossing_betas.push_back(lo);
            continue;
        }
        if (s_lo * s_hi >= 0.0) continue;
        Complex f_mid{};
        for (int it = 0; it < 80 && hi - lo > 1e-11; ++it) { // Illinois method
            double mid = hi - s_hi * (hi - lo) / (s_hi - s_lo);
            const double gap = hi - lo;
            mid = std::clamp(mid, lo + 0.05 * gap, hi - 0.05 * gap);
            f_mid = boundary_point(n, r, rho, mid, quad_order);
            const double s_mid = side_of(f_mid);
            if (std::abs(s_mid) < 1e-12) {
                lo = hi = mid;
                break;
            }
            if (s_mid * s_lo < 0.0) {
                hi = mid;
                s_hi = s_mid;
                s_lo *= 0.5; // Illinois damping keeps the bracket moving
            } else {
                lo = mid;
                s_lo = s_mid;
                s_hi *= 0.5;
            }
        }
        crossing_betas.push_back(0.5 * (lo + hi));
    }
    if (crossing_betas.size() != 2)
        throw solver_error("witness_function: chord crossing search failed", w_prime.real(),
                           w_prime.imag(), static_cast<int>(crossing_betas.size()));

    witness.beta1 = crossing_betas[0];
    witness.beta2 = crossing_betas[1];
    witness.w1 = boundary_point(n, r, rho, witness.beta1, quad_order);
    witness.w2 = boundary_point(n, r, rho, witness.beta2, quad_order);
    const Complex chord = witness.w1 - witness.w2;
    const double len2 = std::norm(chord);
    if (len2 < 1e-24)
        throw solver_error("witness_function: degenerate chord", w_prime.real(), w_prime.imag(), 0);
    witness.k1 = std::clamp((((w_prime - witness.w2) * std::conj(chord)).real()) / len2, 0.0, 1.0);
    witness.k2 = 1.0 - witness.k1;
    return witness;
}

} // namespace hsp
