#include "hsp/poisson.hpp"

#include "hsp/detail/panel_engine.hpp"
#include "hsp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsp {

namespace {

constexpr double kPi = std::numbers::pi;

double norm2(std::span<const double> x) {
    double s = 0.0;
    for (double xi : x) s += xi * xi;
    return s;
}

// Panel boundaries in colatitude for integrating `profile features x Poisson
// kernel`: jumps become panel edges, sharp transitions and the kernel pole
// near theta = 0 get geometric refinement.
std::vector<double> profile_panels(double s,
                                   std::span<const double> breakpoints_t,
                                   std::span<const std::pair<double, double>> transitions_t,
                                   double pole_theta = 0.0) {
    std::vector<double> breaks;
    for (double t : breakpoints_t) breaks.push_back(std::acos(std::clamp(t, -1.0, 1.0)));
    std::vector<detail::HotSpot> hots{{0.0, kPi / 64.0}, {kPi, kPi / 64.0}};
    const double pole_width = std::clamp(0.7 * (1.0 - s), 1e-7, kPi / 64.0);
    hots.push_back({pole_theta, pole_width});
    for (const auto& [t, width] : transitions_t) {
        const double theta = std::acos(std::clamp(t, -1.0, 1.0));
        const double sin_theta = std::max(std::sin(theta), 1e-8);
        hots.push_back({theta, std::clamp(width / sin_theta, 1e-9, kPi)});
    }
    return detail::panelize(0.0, kPi, breaks, hots);
}

template <class Fn>
auto integrate_profile(int n, int order, double s,
                       std::span<const double> breaks,
                       std::span<const std::pair<double, double>> transitions,
                       Fn&& f) -> decltype(f(0.0)) {
    const auto bounds = profile_panels(s, breaks, transitions);
    return detail::integrate_theta_panels(n, order, bounds, f);
}

} // namespace

double poisson_kernel_axis(int n, double s, double t) {
    if (n < 2) throw std::domain_error("poisson_kernel_axis: dimension must be >= 2");
    if (!(s >= 0.0 && s < 1.0)) throw std::domain_error("poisson_kernel_axis: need 0 <= s < 1");
    if (!(t >= -1.0 && t <= 1.0)) throw std::domain_error("poisson_kernel_axis: t outside [-1, 1]");
    return (1.0 - s * s) * detail::half_power(1.0 - 2.0 * s * t + s * s, n);
}

double poisson_kernel(int n, std::span<const double> x, std::span<const double> omega) {
    if (n < 2) throw std::domain_error("poisson_kernel: dimension must be >= 2");
    if (static_cast<int>(x.size()) != n || static_cast<int>(omega.size()) != n)
        throw std::domain_error("poisson_kernel: point dimension mismatch");
    const double x2 = norm2(x);
    if (!(x2 < 1.0)) throw std::domain_error("poisson_kernel: point must lie inside the ball");
    double d2 = 0.0;
    for (int i = 0; i < n; ++i) d2 += (x[i] - omega[i]) * (x[i] - omega[i]);
    return (1.0 - x2) * detail::half_power(d2, n);
}

double functional_L(int n, double r, const ZonalFunction& u, int quad_order) {
    if (n < 2) throw std::domain_error("functional_L: dimension must be >= 2");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("functional_L: need 0 <= r < 1");
    return integrate_profile(n, quad_order, r, u.breakpoints, u.transitions, [&](double t) {
        return poisson_kernel_axis(n, r, t) * u.f(t);
    });
}

double functional_L(int n, double r, const ExtremalProfile& profile, int quad_order) {
    ZonalFunction u{[&profile](double t) { return profile.u(t); },
                    profile.breakpoints(), profile.transitions()};
    return functional_L(n, r, u, quad_order);
}

Complex axis_value(const ExtremalProfile& profile, double s, int quad_order) {
    if (!(s >= 0.0 && s < 1.0)) throw std::domain_error("axis_value: need 0 <= s < 1");
    const int n = profile.n;
    const auto breaks = profile.breakpoints();
    const auto transitions = profile.transitions();
    const double U = integrate_profile(n, quad_order, s, breaks, transitions, [&](double t) {
        return poisson_kernel_axis(n, s, t) * profile.u(t);
    });
    double V = 0.0;
    if (profile.sign_b != 0) {
        V = integrate_profile(n, quad_order, s, breaks, transitions, [&](double t) {
            return poisson_kernel_axis(n, s, t) * profile.v(t);
        });
        V *= profile.sign_b;
    }
    return {U, V};
}

double classical_schwarz_bound(int n, double r, int quad_order) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("classical_schwarz_bound: need 0 < r < 1");
    ZonalFunction hemisphere{[](double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); },
                             {0.0}, {}};
    return functional_L(n, r, hemisphere, quad_order);
}

namespace detail {

Complex zonal_poisson_offaxis(int n, const std::function<Complex(double)>& g,
                              std::span<const double> breakpoints,
                              std::span<const std::pair<double, double>> transitions,
                              double s, double cosg, const EvalOptions& opts) {
    if (n < 2) throw std::domain_error("zonal evaluation: dimension must be >= 2");
    if (!(s >= 0.0 && s < 1.0)) throw std::domain_error("zonal evaluation: |x| must be < 1");
    cosg = std::clamp(cosg, -1.0, 1.0);
    if (s < 1e-14) { // mean of the data
        const auto bounds = profile_panels(0.0, breakpoints, transitions);
        return integrate_theta_panels(n, opts.outer_order, bounds, g);
    }

    // Inner integral runs over the (n-2)-sphere orthogonal to the data axis;
    // it is zonal there, so the cached rule of dimension n-1 applies. n = 2
    // degenerates to the two-point measure on {-1, +1}.
    std::vector<double> inner_t{-1.0, 1.0}, inner_w{0.5, 0.5};
    if (n >= 3) {
        const ZonalRule& inner = shared_rule(n - 1, opts.inner_order);
        inner_t.assign(inner.cosines.begin(), inner.cosines.end());
        inner_w.assign(inner.weights.begin(), inner.weights.end());
    }

    const double sing = std::sqrt(std::max(0.0, 1.0 - cosg * cosg));
    const double one_plus_s2 = 1.0 + s * s;
    const double scale = 1.0 - s * s;

    // kernel peak sits at the colatitude of x about the data axis
    const double pole_theta = std::acos(cosg);
    std::vector<double> breaks;
    for (double t : breakpoints) breaks.push_back(std::acos(std::clamp(t, -1.0, 1.0)));
    std::vector<HotSpot> hots{{0.0, kPi / 64.0},
                              {kPi, kPi / 64.0},
                              {pole_theta, std::clamp(0.7 * (1.0 - s), 1e-7, kPi / 64.0)}};
    for (const auto& [t, width] : transitions) {
        const double theta = std::acos(std::clamp(t, -1.0, 1.0));
        hots.push_back({theta, std::clamp(width / std::max(std::sin(theta), 1e-8), 1e-9, kPi)});
    }
    const auto bounds = panelize(0.0, kPi, breaks, hots);

    return integrate_theta_panels(n, opts.outer_order, bounds, [&](double t) -> Complex {
        const double axial = cosg * t;
        const double radial = sing * std::sqrt(std::max(0.0, 1.0 - t * t));
        double inner_sum = 0.0;
        for (std::size_t j = 0; j < inner_t.size(); ++j) {
            const double dot = axial + radial * inner_t[j];
            inner_sum += inner_w[j] * half_power(one_plus_s2 - 2.0 * s * dot, n);
        }
        return (scale * inner_sum) * g(t);
    });
}

double cap_poisson_offaxis(int n, double tau, double s, double cosg, int order) {
    if (n < 3) throw std::domain_error("cap_poisson_offaxis: needs dimension >= 3");
    if (!(s >= 0.0 && s < 1.0)) throw std::domain_error("cap_poisson_offaxis: |x| must be < 1");
    tau = std::clamp(tau, -1.0, 1.0);
    cosg = std::clamp(cosg, -1.0, 1.0);
    if (s < 1e-14) return cap_measure(n, tau);

    // In the colatitude theta about x/|x|, the slice {<omega, c> > tau} of
    // the latitude sphere has exact measure cap_measure(n-1, g(theta)); it
    // saturates to 0/1 outside the tangency band |theta_g - theta_tau| ..
    // theta_g + theta_tau, with square-root behavior at the band edges.
    const double theta_g = std::acos(cosg);
    const double theta_tau = std::acos(tau);
    const double sing = std::sin(theta_g);
    const double band_lo = std::abs(theta_g - theta_tau);
    const double band_hi = std::min(theta_g + theta_tau, 2.0 * kPi - theta_g - theta_tau);
    const double breaks[] = {band_lo, band_hi};
    const detail::HotSpot hots[] = {{0.0, std::clamp(0.7 * (1.0 - s), 1e-7, kPi / 64.0)},
                                    {band_lo, 1e-7},
                                    {band_hi, 1e-7}};
    const auto bounds = panelize(0.0, kPi, breaks, hots);
    const double one_plus_s2 = 1.0 + s * s;

    const double value = integrate_theta_panels(n, order, bounds, [&](double t) {
        const double sint = std::sqrt(std::max(0.0, 1.0 - t * t));
        const double denom = sing * sint;
        double level; // slice threshold on the inner sphere
        if (denom < 1e-300) {
            level = (tau - cosg * t) > 0.0 ? 1.0 : -1.0;
        } else {
            level = std::clamp((tau - cosg * t) / denom, -1.0, 1.0);
        }
        return half_power(one_plus_s2 - 2.0 * s * t, n) * cap_measure(n - 1, level);
    });
    return (1.0 - s * s) * value;
}

} // namespace detail

Complex evaluate_poisson_general(const BoundaryData& data, std::span<const double> x,
                                 const EvalOptions& opts) {
    const double x2 = norm2(x);
    if (!(x2 < 1.0))
        throw std::domain_error("evaluate_poisson_general: point must lie inside the ball");

    if (const auto* zonal = std::get_if<ZonalData>(&data)) {
        const int n = zonal->n;
        if (static_cast<int>(x.size()) != n)
            throw std::domain_error("evaluate_poisson_general: point dimension mismatch");
        const double s = std::sqrt(x2);
        const double cosg = s < 1e-14 ? 1.0 : x[n - 1] / s;
        return detail::zonal_poisson_offaxis(n, zonal->g, zonal->breakpoints,
                                             zonal->transitions, s, cosg, opts);
    }
    if (const auto* grid = std::get_if<CircleGridData>(&data)) {
        if (x.size() != 2)
            throw std::domain_error("evaluate_poisson_general: circle data needs a planar point");
        const std::size_t M = grid->values.size();
        if (M == 0) throw std::domain_error("evaluate_poisson_general: empty grid");
        if (grid->bounded)
            for (const Complex& v : grid->values)
                if (!(std::abs(v) <= 1.0 + 1e-12))
                    throw std::domain_error(
                        "evaluate_poisson_general: data exceeds the declared unit bound");
        Complex acc{};
        for (std::size_t j = 0; j < M; ++j) {
            const double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(M);
            const double omega[2] = {std::cos(phi), std::sin(phi)};
            acc += poisson_kernel(2, x, omega) * grid->values[j];
        }
        return acc / static_cast<double>(M);
    }
    if (const auto* grid = std::get_if<SphereGridData>(&data)) {
        if (grid->colatitude.dimension != 3)
            throw capability_error("evaluate_poisson_general: product grids support n = 3 only");
        if (x.size() != 3)
            throw std::domain_error("evaluate_poisson_general: sphere data needs a 3-D point");
        const std::size_t rows = grid->colatitude.size();
        const std::size_t M = static_cast<std::size_t>(grid->azimuth);
        if (M == 0 || grid->values.size() != rows * M)
            throw std::domain_error("evaluate_poisson_general: grid shape mismatch");
        if (grid->bounded)
            for (const Complex& v : grid->values)
                if (!(std::abs(v) <= 1.0 + 1e-12))
                    throw std::domain_error(
                        "evaluate_poisson_general: data exceeds the declared unit bound");
        Complex acc{};
        for (std::size_t i = 0; i < rows; ++i) {
            const double ct = grid->colatitude.cosines[i];
            const double st = std::sin(grid->colatitude.nodes[i]);
            Complex row{};
            for (std::size_t j = 0; j < M; ++j) {
                const double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(M);
                const double omega[3] = {st * std::cos(phi), st * std::sin(phi), ct};
                row += poisson_kernel(3, x, omega) * grid->values[i * M + j];
            }
            acc += grid->colatitude.weights[i] * row / static_cast<double>(M);
        }
        return acc;
    }
    throw capability_error("evaluate_poisson_general: unsupported data representation");
}

} // namespace hsp
