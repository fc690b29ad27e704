#include "hsp/detail/panel_engine.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hsp::detail {

namespace {

constexpr double kPi = std::numbers::pi;

// Nodes/weights from the symmetric tridiagonal Jacobi matrix (Golub-Welsch).
// diag/offdiag are the recurrence coefficients; mass is the measure total.
void golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                  double mass, std::vector<double>& nodes, std::vector<double>& weights) {
    const int m = static_cast<int>(diag.size());
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), m);
    Eigen::VectorXd e(m > 1 ? m - 1 : 1);
    for (int i = 0; i + 1 < m; ++i) e[i] = offdiag[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e.head(std::max(m - 1, 0)), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("quadrature eigensolve failed");
    nodes.resize(m);
    weights.resize(m);
    for (int i = 0; i < m; ++i) {
        nodes[i] = solver.eigenvalues()[i];
        const double q0 = solver.eigenvectors()(0, i);
        weights[i] = mass * q0 * q0;
    }
}

GaussLegendre build_gauss_legendre(int m) {
    std::vector<double> diag(m, 0.0), off(std::max(m - 1, 0));
    for (int k = 1; k < m; ++k) {
        const double kk = static_cast<double>(k);
        off[k - 1] = std::sqrt(kk * kk / (4.0 * kk * kk - 1.0));
    }
    GaussLegendre gl;
    golub_welsch(diag, off, 2.0, gl.x, gl.w);
    return gl;
}

} // namespace

const GaussLegendre& gauss_legendre(int points) {
    if (points < 1) throw std::domain_error("gauss_legendre: need at least one point");
    static std::mutex mtx;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(points);
    if (it == cache.end()) it = cache.emplace(points, build_gauss_legendre(points)).first;
    return it->second;
}

double sin_power_integral(int k, double x) {
    if (k < 0) throw std::domain_error("sin_power_integral: negative power");
    if (k == 0) return x;
    if (k == 1) return 1.0 - std::cos(x);
    const double c = std::cos(x);
    const double s = std::sin(x);
    double acc = (k % 2 == 0) ? x : 1.0 - c;
    for (int j = 2 + (k % 2); j <= k; j += 2)
        acc = ((j - 1) * acc - c * std::pow(s, j - 1)) / j;
    return acc;
}

double density_constant(int n) {
    if (n < 2) throw std::domain_error("density_constant: dimension must be >= 2");
    return 1.0 / sin_power_integral(n - 2, kPi);
}

std::vector<double> panelize(double theta_lo, double theta_hi,
                             std::span<const double> interior_breaks,
                             std::span<const HotSpot> hots) {
    std::vector<double> pts{theta_lo, theta_hi};
    for (double b : interior_breaks)
        if (b > theta_lo && b < theta_hi) pts.push_back(b);
    for (const HotSpot& h : hots)
        if (h.theta > theta_lo && h.theta < theta_hi) pts.push_back(h.theta);
    std::sort(pts.begin(), pts.end());

    std::vector<double> refined;
    for (const HotSpot& h : hots) {
        const double w = std::max(h.width, 1e-9);
        for (int side = -1; side <= 1; side += 2) {
            // neighbor boundary on this side limits the geometric expansion
            double limit = (side < 0) ? theta_lo : theta_hi;
            for (double p : pts) {
                if (side < 0 && p < h.theta - 1e-15) limit = std::max(limit, p);
                if (side > 0 && p > h.theta + 1e-15) { limit = p; break; }
            }
            const double gap = std::abs(limit - h.theta);
            for (double off = w; off < gap; off *= 2.0) {
                const double p = h.theta + side * off;
                if (gap - off > 0.25 * off) refined.push_back(p);
            }
        }
    }
    pts.insert(pts.end(), refined.begin(), refined.end());
    std::sort(pts.begin(), pts.end());
    // drop near-duplicate boundaries
    std::vector<double> out;
    out.reserve(pts.size());
    for (double p : pts)
        if (out.empty() || p - out.back() > 1e-12) out.push_back(p);
    if (out.size() < 2 || std::abs(out.back() - theta_hi) > 1e-12) out.push_back(theta_hi);
    out.front() = theta_lo;
    out.back() = theta_hi;
    return out;
}

std::vector<double> pole_graded_panels(int levels) {
    const HotSpot ends[] = {{0.0, kPi / std::ldexp(1.0, levels)},
                            {kPi, kPi / std::ldexp(1.0, levels)}};
    return panelize(0.0, kPi, {}, ends);
}

void gauss_subrule(int n, int m, double theta_lo, double theta_hi,
                   std::vector<double>& theta_out, std::vector<double>& weight_out) {
    if (m < 1) throw std::domain_error("gauss_subrule: order must be >= 1");
    if (!(theta_lo < theta_hi)) throw std::domain_error("gauss_subrule: empty panel");

    // Discretize the measure sin^{n-2}(theta) d(theta) on the panel with a
    // fine Gauss-Legendre set, then run the Stieltjes recurrence in the
    // affinely normalized variable u ~ cos(theta) to get the Jacobi matrix.
    const int fine = std::max(3 * m + 8, 32);
    const GaussLegendre& gl = gauss_legendre(fine);
    const double mid = 0.5 * (theta_lo + theta_hi);
    const double half = 0.5 * (theta_hi - theta_lo);

    std::vector<double> t(fine), mass(fine);
    double total = 0.0;
    for (int j = 0; j < fine; ++j) {
        const double theta = mid + half * gl.x[j];
        t[j] = std::cos(theta);
        mass[j] = gl.w[j] * half * std::pow(std::sin(theta), n - 2);
        total += mass[j];
    }
    const double t_min = std::cos(theta_hi), t_max = std::cos(theta_lo);
    const double c = 0.5 * (t_min + t_max), hw = 0.5 * (t_max - t_min);
    std::vector<double> u(fine);
    for (int j = 0; j < fine; ++j) u[j] = (t[j] - c) / hw;

    std::vector<double> diag(m), beta(m, 0.0);
    std::vector<double> p_prev(fine, 0.0), p_cur(fine, 1.0), p_next(fine);
    double nrm_cur = total;
    for (int k = 0; k < m; ++k) {
        double num = 0.0;
        for (int j = 0; j < fine; ++j) num += mass[j] * u[j] * p_cur[j] * p_cur[j];
        diag[k] = num / nrm_cur;
        if (k + 1 == m) break;
        double nrm_next = 0.0;
        for (int j = 0; j < fine; ++j) {
            p_next[j] = (u[j] - diag[k]) * p_cur[j] - beta[k] * p_prev[j];
            nrm_next += mass[j] * p_next[j] * p_next[j];
        }
        beta[k + 1] = nrm_next / nrm_cur;
        std::swap(p_prev, p_cur);
        std::swap(p_cur, p_next);
        nrm_cur = nrm_next;
    }
    std::vector<double> off(std::max(m - 1, 0));
    for (int k = 0; k + 1 < m; ++k) off[k] = std::sqrt(beta[k + 1]);

    std::vector<double> nodes_u, weights;
    golub_welsch(diag, off, total, nodes_u, weights);
    for (int i = m - 1; i >= 0; --i) { // t descending = colatitude ascending
        const double ti = std::clamp(c + hw * nodes_u[i], -1.0, 1.0);
        theta_out.push_back(std::acos(ti));
        weight_out.push_back(weights[i]);
    }
}

} // namespace hsp::detail
