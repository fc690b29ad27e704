#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsp/errors.hpp"
#include "hsp/poisson.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace hsp;
namespace num = std::numbers;

TEST_CASE("kernel point values and guards") {
    const double x0[3] = {0.0, 0.0, 0.0};
    const double omega[3] = {0.0, 0.6, 0.8};
    CHECK(poisson_kernel(3, x0, omega) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(poisson_kernel_axis(3, 0.5, 1.0) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(poisson_kernel_axis(2, 0.0, 0.3) == doctest::Approx(1.0).epsilon(1e-15));

    const double outside[3] = {0.0, 0.0, 1.0};
    CHECK_THROWS_AS(poisson_kernel(3, outside, omega), std::domain_error);
    CHECK_THROWS_AS(poisson_kernel_axis(3, 1.0, 0.5), std::domain_error);
}

TEST_CASE("functional: unit data, hemisphere values, linearity") {
    const ZonalFunction one{[](double) { return 1.0; }, {}, {}};
    for (int n : {2, 3, 5})
        CHECK(functional_L(n, 0.5, one) == doctest::Approx(1.0).epsilon(1e-12));

    const ZonalFunction sign{[](double t) { return t > 0.0 ? 1.0 : -1.0; }, {0.0}, {}};
    CHECK(functional_L(2, 0.5, sign) == doctest::Approx(oracles::heinz_bound(0.5)).epsilon(1e-10));
    CHECK(functional_L(2, 0.5, sign) == doctest::Approx(0.59033447).epsilon(1e-8));
    CHECK(functional_L(3, 0.5, sign) == doctest::Approx(oracles::ball3_bound(0.5)).epsilon(1e-10));
    CHECK(functional_L(3, 0.5, sign) == doctest::Approx(0.65835921).epsilon(1e-8));

    const ZonalFunction f1{[](double t) { return std::cos(3.0 * t); }, {}, {}};
    const ZonalFunction f2{[](double t) { return t * t - 0.25; }, {}, {}};
    const ZonalFunction mix{
        [](double t) { return 0.3 * std::cos(3.0 * t) + 0.7 * (t * t - 0.25); }, {}, {}};
    const double lhs = functional_L(3, 0.6, mix);
    const double rhs = 0.3 * functional_L(3, 0.6, f1) + 0.7 * functional_L(3, 0.6, f2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("classical bound: values, monotonicity, limits, guards") {
    for (double r : {0.3, 0.5, 0.7, 0.9}) {
        CHECK(classical_schwarz_bound(2, r) ==
              doctest::Approx(oracles::heinz_bound(r)).epsilon(1e-9));
        CHECK(classical_schwarz_bound(3, r) ==
              doctest::Approx(oracles::ball3_bound(r)).epsilon(1e-9));
    }
    for (int n : {2, 3, 4}) {
        double prev = 0.0;
        for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const double bound = classical_schwarz_bound(n, r);
            CHECK(bound > prev);
            prev = bound;
        }
        CHECK(classical_schwarz_bound(n, 1e-6) < 1e-3);
    }
    CHECK_THROWS_AS(classical_schwarz_bound(3, 0.0), std::domain_error);
    CHECK_THROWS_AS(classical_schwarz_bound(3, 1.0), std::domain_error);
}

TEST_CASE("axis values of extremal profiles") {
    for (auto [n, r, a, b] : {std::tuple{2, 0.5, 0.0, 0.0}, {3, 0.5, 0.3, 0.4},
                              {2, 0.7, -0.2, -0.5}, {4, 0.4, 0.5, 0.2}}) {
        const ExtremalProfile p = build_extremal(n, r, a, b);
        const Complex at_zero = axis_value(p, 0.0);
        CHECK(at_zero.real() == doctest::Approx(a).epsilon(1e-8));
        CHECK(at_zero.imag() == doctest::Approx(b).epsilon(1e-8));
        for (double s : {0.0, 0.2, r, 0.9, 0.99})
            CHECK(std::abs(axis_value(p, s)) < 1.0);
    }
    const ExtremalProfile heinz = build_extremal(2, 0.5, 0.0, 0.0);
    const Complex F = axis_value(heinz, 0.5);
    CHECK(F.real() == doctest::Approx(0.59033447).epsilon(1e-8));
    CHECK(F.imag() == 0.0);
    CHECK_THROWS_AS(axis_value(heinz, 1.0), std::domain_error);
}

TEST_CASE("axis maximum principle for extremal profiles") {
    for (auto [n, r, a, b] :
         {std::tuple{2, 0.5, 0.3, 0.4}, {3, 0.5, 0.0, 0.0}, {3, 0.6, -0.4, 0.3}}) {
        const ExtremalProfile p = build_extremal(n, r, a, b);
        const double peak = axis_value(p, r).real();
        for (double s : {0.0, 0.25 * r, 0.5 * r, 0.75 * r})
            CHECK(axis_value(p, s).real() < peak);
    }
}

TEST_CASE("general evaluation: constants, mean value, kernel normalization") {
    const ZonalData constant{3, [](double) { return Complex(0.4, -0.2); }, {}, {}};
    const double x[3] = {0.1, -0.3, 0.2};
    const Complex c = evaluate_poisson_general(constant, x);
    CHECK(c.real() == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(c.imag() == doctest::Approx(-0.2).epsilon(1e-12));

    // normalization of the kernel: unit data stays 1 at every radius
    for (double s : {0.0, 0.3, 0.6, 0.9}) {
        const ZonalData one{3, [](double) { return Complex(1.0, 0.0); }, {}, {}};
        const double xs[3] = {s * 0.48, s * 0.6, s * 0.64};
        CHECK(evaluate_poisson_general(one, xs).real() == doctest::Approx(1.0).epsilon(1e-9));
    }

    // mean value at the origin for oscillatory data
    const ZonalData wavy{3, [](double t) { return Complex(std::sin(4.0 * t), t * t); }, {}, {}};
    const double origin[3] = {0.0, 0.0, 0.0};
    const Complex mean = evaluate_poisson_general(wavy, origin);
    const double re_ref = oracles::trapezoid_zonal(3, [](double t) { return std::sin(4.0 * t); });
    const double im_ref = oracles::trapezoid_zonal(3, [](double t) { return t * t; });
    CHECK(mean.real() == doctest::Approx(re_ref).epsilon(1e-8));
    CHECK(mean.imag() == doctest::Approx(im_ref).epsilon(1e-8));
}

TEST_CASE("general evaluation reproduces harmonic polynomials off the axis") {
    // boundary data omega_n extends to x_n; omega_n^2 extends to
    // x_n^2 - |x|^2/n + 1/n (solid harmonic plus the mean)
    for (int n : {2, 3, 4}) {
        const ZonalData linear{n, [](double t) { return Complex(t, 0.0); }, {}, {}};
        const ZonalData square{n, [](double t) { return Complex(t * t, 0.0); }, {}, {}};
        std::vector<double> x(n, 0.0);
        x[0] = 0.31;
        x[n - 1] = -0.42;
        if (n > 2) x[1] = 0.17;
        double x2 = 0.0;
        for (double xi : x) x2 += xi * xi;
        CHECK(evaluate_poisson_general(linear, x).real() ==
              doctest::Approx(x[n - 1]).epsilon(1e-11));
        CHECK(evaluate_poisson_general(square, x).real() ==
              doctest::Approx(x[n - 1] * x[n - 1] - x2 / n + 1.0 / n).epsilon(1e-11));
    }
}

TEST_CASE("zonal data on the axis matches the profile evaluator") {
    const ExtremalProfile p = build_extremal(3, 0.5, 0.3, 0.4);
    const ZonalData data{
        3, [&](double t) { return Complex(p.u(t), p.sign_b * p.v(t)); }, p.breakpoints(),
        p.transitions()};
    for (double s : {0.0, 0.25, 0.5, 0.8}) {
        const double x[3] = {0.0, 0.0, s};
        const Complex via_general = evaluate_poisson_general(data, x);
        const Complex via_axis = axis_value(p, s);
        CHECK(std::abs(via_general - via_axis) < 1e-9);
    }
    // south direction equals the antipodally reflected profile
    const double x_south[3] = {0.0, 0.0, -0.5};
    const ZonalData reflected{
        3, [&](double t) { return Complex(p.u(-t), p.sign_b * p.v(-t)); }, {}, {}};
    const double x_north[3] = {0.0, 0.0, 0.5};
    CHECK(std::abs(evaluate_poisson_general(data, x_south) -
                   evaluate_poisson_general(reflected, x_north)) < 1e-9);
}

TEST_CASE("planar arc data matches the harmonic-measure formula") {
    // indicator of {omega_2 > tau} is the arc (asin tau, pi - asin tau)
    for (double tau : {-0.4, 0.0, 0.55}) {
        const ZonalData arc{2, [tau](double t) { return Complex(t > tau ? 1.0 : 0.0, 0.0); },
                            {tau}, {}};
        const double phi1 = std::asin(tau), phi2 = num::pi - std::asin(tau);
        for (double chi : {0.0, 0.9, 2.4, -1.8}) {
            for (double s : {0.25, 0.6, 0.85}) {
                const double x[2] = {s * std::cos(chi), s * std::sin(chi)};
                const double got = evaluate_poisson_general(arc, x).real();
                const double want =
                    oracles::arc_harmonic_measure(Complex(x[0], x[1]), phi1, phi2);
                CHECK(got == doctest::Approx(want).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("grid data: circle trapezoid and sphere product rule") {
    { // holomorphic boundary data exp(e^{i phi}) extends to exp(z)
        const int M = 256;
        CircleGridData grid;
        grid.values.resize(M);
        for (int j = 0; j < M; ++j) {
            const double phi = 2.0 * num::pi * j / M;
            grid.values[j] = std::exp(Complex(std::cos(phi), std::sin(phi)));
        }
        const double x[2] = {0.35, -0.55};
        const Complex got = evaluate_poisson_general(BoundaryData{grid}, x);
        const Complex want = std::exp(Complex(x[0], x[1]));
        CHECK(std::abs(got - want) < 1e-11);
    }
    { // harmonic polynomial x1 x2 on the 3-ball
        SphereGridData grid;
        grid.colatitude = make_rule(3, 48);
        grid.azimuth = 96;
        grid.values.resize(grid.colatitude.size() * grid.azimuth);
        for (std::size_t i = 0; i < grid.colatitude.size(); ++i) {
            const double st = std::sin(grid.colatitude.nodes[i]);
            for (int j = 0; j < grid.azimuth; ++j) {
                const double phi = 2.0 * num::pi * j / grid.azimuth;
                grid.values[i * grid.azimuth + j] =
                    Complex(st * std::cos(phi) * st * std::sin(phi), 0.0);
            }
        }
        const double x[3] = {0.3, 0.4, -0.5};
        const Complex got = evaluate_poisson_general(BoundaryData{grid}, x);
        CHECK(got.real() == doctest::Approx(x[0] * x[1]).epsilon(1e-10));
    }
}

TEST_CASE("capability and domain guards in general evaluation") {
    const ZonalData data{3, [](double) { return Complex(1.0, 0.0); }, {}, {}};
    const double outside[3] = {0.0, 0.0, 1.0};
    CHECK_THROWS_AS(evaluate_poisson_general(data, outside), std::domain_error);
    const double wrong_dim[2] = {0.1, 0.1};
    CHECK_THROWS_AS(evaluate_poisson_general(data, wrong_dim), std::domain_error);

    SphereGridData bad;
    bad.colatitude = make_rule(4, 8); // product grids only exist for n = 3
    bad.azimuth = 8;
    bad.values.resize(bad.colatitude.size() * 8);
    const double x4[3] = {0.1, 0.1, 0.1};
    CHECK_THROWS_AS(evaluate_poisson_general(BoundaryData{bad}, x4), capability_error);
}

TEST_CASE("cap-indicator fast path agrees with the generic reduction") {
    EvalOptions opts{48, 48};
    for (double tau : {-0.6, -0.05, 0.4, 0.75}) {
        for (double cosg : {-0.95, -0.3, 0.0, 0.52, 0.93}) {
            for (double s : {0.15, 0.5, 0.85}) {
                const double fast = detail::cap_poisson_offaxis(3, tau, s, cosg, 32);
                const double breaks[] = {tau};
                const double generic =
                    detail::zonal_poisson_offaxis(
                        3, [tau](double t) { return Complex(t > tau ? 1.0 : 0.0, 0.0); },
                        breaks, {}, s, cosg, opts)
                        .real();
                CHECK(fast == doctest::Approx(generic).epsilon(5e-9));
            }
        }
    }
    // degenerate geometries: evaluation point on the cap axis
    CHECK(detail::cap_poisson_offaxis(3, 0.2, 0.5, 1.0, 32) ==
          doctest::Approx(detail::zonal_poisson_offaxis(
                              3, [](double t) { return Complex(t > 0.2 ? 1.0 : 0.0, 0.0); },
                              std::vector<double>{0.2}, {}, 0.5, 1.0, opts)
                              .real())
              .epsilon(1e-8));
    CHECK(detail::cap_poisson_offaxis(4, -0.3, 0.0, 0.4, 32) ==
          doctest::Approx(cap_measure(4, -0.3)).epsilon(1e-12));
}

TEST_CASE("declared unit bound on grid data is enforced") {
    CircleGridData grid;
    grid.values.assign(16, Complex(1.2, 0.0));
    grid.bounded = true;
    const double x[2] = {0.1, 0.0};
    CHECK_THROWS_AS(evaluate_poisson_general(BoundaryData{grid}, x), std::domain_error);
    grid.bounded = false;
    CHECK(evaluate_poisson_general(BoundaryData{grid}, x).real() ==
          doctest::Approx(1.2).epsilon(1e-12));
}
