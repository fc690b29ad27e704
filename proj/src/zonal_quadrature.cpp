#include "hsp/zonal_quadrature.hpp"

#include "hsp/detail/panel_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace hsp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPoleLevels = 6; // smallest pole panel: pi / 2^6

ZonalRule assemble_rule(int n, int m, const std::vector<double>& bounds) {
    std::vector<double> theta, weight;
    theta.reserve(bounds.size() * m);
    weight.reserve(bounds.size() * m);
    for (std::size_t p = 0; p + 1 < bounds.size(); ++p)
        detail::gauss_subrule(n, m, bounds[p], bounds[p + 1], theta, weight);

    // nodes ascend panel by panel already; normalize so the weights sum to 1
    const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
    ZonalRule rule;
    rule.dimension = n;
    rule.order = m;
    rule.nodes = std::move(theta);
    rule.weights = std::move(weight);
    for (double& w : rule.weights) w /= total;
    rule.cosines.resize(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) rule.cosines[i] = std::cos(rule.nodes[i]);
    return rule;
}

std::vector<detail::HotSpot> pole_hots() {
    const double w = kPi / std::ldexp(1.0, kPoleLevels);
    return {{0.0, w}, {kPi, w}};
}

} // namespace

ZonalRule make_rule(int n, int m) {
    if (n < 2) throw std::domain_error("make_rule: dimension must be >= 2");
    if (m < 1) throw std::domain_error("make_rule: order must be >= 1");
    const auto hots = pole_hots();
    return assemble_rule(n, m, detail::panelize(0.0, kPi, {}, hots));
}

const ZonalRule& shared_rule(int n, int m) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, ZonalRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_rule(n, m)).first;
    return it->second;
}

ZonalRule make_split_rule(int n, int m, std::span<const double> breakpoints_t) {
    if (n < 2) throw std::domain_error("make_split_rule: dimension must be >= 2");
    if (m < 1) throw std::domain_error("make_split_rule: order must be >= 1");
    std::vector<double> theta_breaks;
    for (double t : breakpoints_t) {
        if (!(t > -1.0 && t < 1.0))
            throw std::domain_error("make_split_rule: breakpoints must lie in (-1, 1)");
        theta_breaks.push_back(std::acos(t));
    }
    const auto hots = pole_hots();
    return assemble_rule(n, m, detail::panelize(0.0, kPi, theta_breaks, hots));
}

double cap_measure(int n, double t) {
    if (n < 2) throw std::domain_error("cap_measure: dimension must be >= 2");
    if (!(t >= -1.0 && t <= 1.0)) throw std::domain_error("cap_measure: level outside [-1, 1]");
    return detail::sin_power_integral(n - 2, std::acos(t)) * detail::density_constant(n);
}

CapThreshold solve_cap_threshold(int n, double a) {
    if (n < 2) throw std::domain_error("solve_cap_threshold: dimension must be >= 2");
    if (!(a > -1.0 && a < 1.0)) throw std::domain_error("solve_cap_threshold: need |a| < 1");

    double t_a = 0.0;
    if (a != 0.0) { // cap_measure(n, t) is strictly decreasing in t
        const double target = 0.5 * (1.0 + a);
        double lo = -1.0, hi = 1.0;
        while (hi - lo > 1e-13) {
            const double mid = 0.5 * (lo + hi);
            (cap_measure(n, mid) > target ? lo : hi) = mid;
        }
        t_a = 0.5 * (lo + hi);
    }
    CapThreshold cap;
    cap.dimension = n;
    cap.a = a;
    cap.t_a = t_a;
    cap.d_a = std::sqrt(std::max(2.0 - 2.0 * t_a, 0.0));
    return cap;
}

} // namespace hsp
