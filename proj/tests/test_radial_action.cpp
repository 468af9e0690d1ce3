#include <doctest.h>

#include <cmath>
#include <random>

#include "anyon/errors.hpp"
#include "anyon/quadrature.hpp"
#include "anyon/radial_action.hpp"

using namespace anyon;

namespace {

// Test-side root refiner, independent of turning_points: plain bisection on
// a sign change of the quartic.
double refine_root(const RadicandCoeffs& c, double lo, double hi)
{
    REQUIRE(radicand_quartic(c, lo) * radicand_quartic(c, hi) < 0.0);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (radicand_quartic(c, mid) * radicand_quartic(c, lo) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Brute-force cycle action via double-exponential quadrature on the factored
// radicand; used as the independent route against the sine-mapped rule.
double brute_action_coulomb(double f, double g, double m)
{
    const double sq = std::sqrt(g * g - f * m);
    const double r1 = m / (g + sq);
    const double r2 = (g + sq) / f;
    return tanh_sinh(
               [&](double r, double d_lo, double d_hi) {
                   return std::sqrt(f * d_lo * d_hi) / r;
               },
               r1, r2) /
           M_PI;
}

}  // namespace

TEST_CASE("turning points: Coulomb quadratic")
{
    const TurningPoints tp = turning_points({1.0, 1.0, 0.25, 0.0});
    CHECK(tp.r1 == doctest::Approx(1.0 - std::sqrt(0.75)).epsilon(1e-13));
    CHECK(tp.r2 == doctest::Approx(1.0 + std::sqrt(0.75)).epsilon(1e-13));
}

TEST_CASE("turning points: pure-magnetic biquadratic")
{
    const TurningPoints tp = turning_points({-4.0, 0.0, 1.0, 1.0});
    CHECK(tp.r1 == doctest::Approx(std::sqrt(2.0 - std::sqrt(3.0))).epsilon(1e-12));
    CHECK(tp.r2 == doctest::Approx(std::sqrt(2.0 + std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("turning points: full quartic against independent bisection")
{
    const RadicandCoeffs c{1.0, 1.0, 0.25, 0.01};
    const TurningPoints tp = turning_points(c);
    // refined independently from brackets well clear of the roots
    CHECK(tp.r1 == doctest::Approx(refine_root(c, 0.01, 0.5)).epsilon(1e-12));
    CHECK(tp.r2 == doctest::Approx(refine_root(c, 0.5, 10.0)).epsilon(1e-12));
    CHECK(tp.r1 == doctest::Approx(0.13397645639048716).epsilon(1e-11));
    CHECK(tp.r2 == doctest::Approx(1.8027355670925167).epsilon(1e-11));

    // the radicand vanishes at both ends and is positive inside
    CHECK(std::abs(radicand_quartic(c, tp.r1)) < 1e-12);
    CHECK(std::abs(radicand_quartic(c, tp.r2)) < 1e-12);
    for (double t = 0.05; t < 1.0; t += 0.05)
        CHECK(radicand(c, tp.r1 + t * (tp.r2 - tp.r1)) > 0.0);
}

TEST_CASE("turning points: inner point is zero when M = 0")
{
    const TurningPoints coulomb = turning_points({1.0, 1.0, 0.0, 0.0});
    CHECK(coulomb.r1 == 0.0);
    CHECK(coulomb.r2 == doctest::Approx(2.0).epsilon(1e-13));

    const TurningPoints quartic = turning_points({1.0, 1.0, 0.0, 0.01});
    CHECK(quartic.r1 == 0.0);
    CHECK(radicand_quartic({1.0, 1.0, 0.0, 0.01}, quartic.r2) ==
          doctest::Approx(0.0).epsilon(1e-11));
}

TEST_CASE("turning points: failure modes carry the failing side")
{
    try {
        turning_points({1.0, 1.0, 2.0, 0.0});  // F M > G^2
        FAIL("expected NoBoundState");
    } catch (const NoBoundState& e) {
        CHECK(e.reason() == NoBoundState::Reason::below_minimum);
    }
    try {
        turning_points({-1.0, 1.0, 0.25, 0.0});  // E > 0 with B = 0
        FAIL("expected NoBoundState");
    } catch (const NoBoundState& e) {
        CHECK(e.reason() == NoBoundState::Reason::unbound);
    }
    try {
        turning_points({1.0, 0.0, 0.25, 0.0});  // no attractive term at all
        FAIL("expected NoBoundState");
    } catch (const NoBoundState& e) {
        CHECK(e.reason() == NoBoundState::Reason::unbound);
    }
    CHECK_THROWS_AS(turning_points({1.0, 1.0, -0.25, 0.0}), std::domain_error);
}

TEST_CASE("numeric action: Coulomb closed-form values")
{
    CHECK(action_integral_numeric({1.0, 1.0, 0.25, 0.0}) ==
          doctest::Approx(0.5).epsilon(1e-11));
    CHECK(action_integral_numeric({1.0, 1.0, 0.0, 0.0}) ==
          doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("numeric action: pure-magnetic cycle matches the oscillator identity")
{
    // I_r = Ebar/(2 Omega) - sqrt(M)/2 with Ebar = -F/2, Omega = sqrt(N)
    const RadicandCoeffs c{-4.0, 0.0, 1.0, 1.0};
    CHECK(action_integral_numeric(c) == doctest::Approx(0.5).epsilon(1e-11));

    const RadicandCoeffs d{-3.0, 0.0, 0.25, 0.25};
    const double expected = (1.5 / (2.0 * 0.5)) - 0.25;  // 1.25
    CHECK(action_integral_numeric(d) == doctest::Approx(expected).epsilon(1e-11));

    // and the independent double-exponential route agrees
    const double z1 = (4.0 - std::sqrt(16.0 - 4.0)) / 2.0;
    const double z2 = (4.0 + std::sqrt(16.0 - 4.0)) / 2.0;
    const double r1 = std::sqrt(z1), r2 = std::sqrt(z2);
    const double brute = tanh_sinh(
                             [&](double r, double d_lo, double d_hi) {
                                 return std::sqrt(d_lo * (r + r1) * d_hi * (r2 + r)) / r;
                             },
                             r1, r2) /
                         M_PI;
    CHECK(action_integral_numeric(c) == doctest::Approx(brute).epsilon(1e-10));
}

TEST_CASE("numeric action: strictly increasing in the energy")
{
    const double g = 1.0, m = 0.25, n = 0.01;
    double prev = -1.0;
    for (double e = -1.8; e < -0.2; e += 0.2) {
        const double act = action_integral_numeric({-2.0 * e, g, m, n});
        CHECK(act > prev);
        prev = act;
    }
}

TEST_CASE("numeric action: vanishes toward the potential floor")
{
    const RadicandCoeffs base{0.0, 1.0, 0.25, 0.01};
    const PotentialFloor floor = potential_floor(base);
    double prev = 1e9;
    for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
        const double e = floor.w_min + eps;
        const double act = action_integral_numeric({-2.0 * e, 1.0, 0.25, 0.01});
        CHECK(act >= 0.0);
        CHECK(act < prev);
        prev = act;
    }
    CHECK(prev < 1e-5);
}

TEST_CASE("numeric action: degenerate annulus gives zero")
{
    // disc = G^2 - F M = 0 exactly: circular orbit at the minimum
    CHECK(action_integral_numeric({4.0, 1.0, 0.25, 0.0}) == 0.0);
}

TEST_CASE("coulomb contour closed form")
{
    CHECK(contour_coulomb({1.0, 1.0, 0.25, 0.0}) == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(contour_coulomb({4.0, 1.0, 0.0, 0.0}) == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK_THROWS_AS(contour_coulomb({1.0, 1.0, 0.25, 0.01}), std::domain_error);
    CHECK_THROWS_AS(contour_coulomb({-1.0, 1.0, 0.25, 0.0}), std::domain_error);
    CHECK_THROWS_AS(contour_coulomb({1.0, 1.0, 1.5, 0.0}), std::domain_error);
}

TEST_CASE("coulomb contour equals the cycle quadrature")
{
    // grid of valid coefficient sets, F in [0.1, 10], M in [0, G^2/F)
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double f = 0.1 * std::pow(100.0, i / 9.0);
        for (int j = 0; j < 10; ++j) {
            const double m = (0.095 * j) / f;
            const RadicandCoeffs c{f, 1.0, m, 0.0};
            worst = std::max(worst, std::abs(2.0 * M_PI * action_integral_numeric(c) -
                                             contour_coulomb(c)));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("magnetic residue value and its documented factor two")
{
    CHECK(contour_magnetic_residue({-4.0, 0.0, 1.0, 1.0}) ==
          doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(contour_magnetic_residue({-2.0, 0.0, 0.0, 1.0}) ==
          doctest::Approx(2.0 * M_PI).epsilon(1e-14));

    const RadicandCoeffs c{-4.0, 0.0, 1.0, 1.0};
    const double ratio =
        contour_magnetic_residue(c) / (2.0 * M_PI * action_integral_numeric(c));
    CHECK(ratio == doctest::Approx(2.0).epsilon(1e-10));

    CHECK_THROWS_AS(contour_magnetic_residue({-4.0, 1.0, 1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(contour_magnetic_residue({4.0, 0.0, 1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(contour_magnetic_residue({-1.0, 0.0, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("correction integral closed form")
{
    CHECK(correction_integral({1.0, 1.0, 0.0, 0.0}) ==
          doctest::Approx(5.0 * M_PI).epsilon(1e-14));
    CHECK(correction_integral({1.0, 1.0, 0.25, 0.0}) ==
          doctest::Approx(4.25 * M_PI).epsilon(1e-14));
    CHECK(correction_integral({1.0, 1.0, 0.25, 0.0}) ==
          doctest::Approx(13.351768777756622).epsilon(1e-14));
    CHECK_THROWS_AS(correction_integral({-1.0, 1.0, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(correction_integral({1.0, 0.0, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("correction integral equals the brute-force cycle quadrature")
{
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> f_dist(0.15, 6.0);
    std::uniform_real_distribution<double> frac_dist(0.02, 0.97);
    double worst = 0.0;
    for (int k = 0; k < 25; ++k) {
        const double f = f_dist(rng);
        const double m = frac_dist(rng) / f;
        const double sq = std::sqrt(1.0 - f * m);
        const double r1 = m / (1.0 + sq);
        const double r2 = (1.0 + sq) / f;
        const double brute = 2.0 * tanh_sinh(
                                       [&](double r, double d_lo, double d_hi) {
                                           return r * r * r / std::sqrt(f * d_lo * d_hi);
                                       },
                                       r1, r2);
        worst = std::max(worst,
                         std::abs(brute - correction_integral({f, 1.0, m, 0.0})));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("second-order action")
{
    // N = 0 collapses to the contour value
    CHECK(action_second_order({1.0, 1.0, 0.25, 0.0}) ==
          contour_coulomb({1.0, 1.0, 0.25, 0.0}) / (2.0 * M_PI));

    CHECK(action_second_order({1.0, 1.0, 0.25, 0.0025}) ==
          doctest::Approx(0.49734375).epsilon(1e-14));

    // matches the numeric action to O(N^2)
    const double n = 0.0025;
    const double diff = std::abs(action_integral_numeric({1.0, 1.0, 0.25, n}) -
                                 action_second_order({1.0, 1.0, 0.25, n}));
    CHECK(diff <= 10.0 * n * n);
}

TEST_CASE("numeric action agrees with the coulomb brute-force route")
{
    for (double f : {0.5, 1.0, 3.0}) {
        for (double m : {0.1 / f, 0.7 / f}) {
            const RadicandCoeffs c{f, 1.0, m, 0.0};
            CHECK(action_integral_numeric(c) ==
                  doctest::Approx(brute_action_coulomb(f, 1.0, m)).epsilon(1e-10));
        }
    }
}
