#include <doctest.h>

#include <cmath>

#include "anyon/errors.hpp"
#include "anyon/radial_action.hpp"
#include "anyon/spectra.hpp"

using namespace anyon;

namespace {

// In-test evaluation of the second-order spectral polynomial, written
// independently of the solver.
double septic_poly(double e, const SepticCoefficients& sc)
{
    const double t = e * e * e + sc.c1 * e + sc.c0;
    return std::pow(e, 7) - sc.a * t * t;
}

double bisect_septic(const SepticCoefficients& sc, double lo, double hi)
{
    REQUIRE(septic_poly(lo, sc) * septic_poly(hi, sc) < 0.0);
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (septic_poly(mid, sc) * septic_poly(lo, sc) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("ebk solve: zero-field levels reproduce the weak-field closed form")
{
    const SpectrumRecord a = solve_ebk({0.0, 0.0, true}, {0, 0});
    CHECK(a.e_bar == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(a.e_total == a.e_bar);

    const SpectrumRecord b = solve_ebk({0.5, 0.0, true}, {0, 1});
    CHECK(b.e_bar == doctest::Approx(-0.5).epsilon(1e-9));
}

TEST_CASE("ebk solve: zero-field grid against -1/(2 nu^2)")
{
    for (double alpha : {0.0, 0.25, 0.75}) {
        for (int m : {-2, 0, 3}) {
            for (int n_r : {0, 2}) {
                const SpectrumRecord rec = solve_ebk({alpha, 0.0, true}, {n_r, m});
                const double nu = n_r + 0.5 + std::abs(m - alpha);
                CHECK(rec.e_bar ==
                      doctest::Approx(-1.0 / (2.0 * nu * nu)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("ebk solve: finite-field level and quantization residual")
{
    const SystemParams p{0.5, 0.1, true};
    const QuantumNumbers qn{0, 1};
    const SpectrumRecord rec = solve_ebk(p, qn);
    CHECK(rec.e_bar == doctest::Approx(-0.4973552451110097).epsilon(1e-9));

    const double residual =
        action_integral_numeric(radicand_coeffs(p, qn.m, rec.e_bar)) - 0.5;
    CHECK(std::abs(residual) < 1e-9);

    CHECK(rec.e_total == rec.e_bar + zeeman_shift(p, qn.m));
}

TEST_CASE("ebk solve: oscillator levels with the Coulomb term off")
{
    // exact reduced spectrum (B/2)(2 n_r + 1 + |m - alpha|)
    const SystemParams p{0.5, 2.0, false};
    for (int n_r : {0, 1}) {
        const SpectrumRecord rec = solve_ebk(p, {n_r, 0});
        CHECK(rec.e_bar ==
              doctest::Approx(1.0 * (2.0 * n_r + 1.0 + 0.5)).epsilon(1e-9));
    }
}

TEST_CASE("ebk solve: error paths")
{
    CHECK_THROWS_AS(solve_ebk({0.5, 0.0, false}, {0, 1}), NoBoundState);
    CHECK_THROWS_AS(solve_ebk({0.0, 0.0, true}, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_ebk({0.0, -1.0, true}, {0, 0}), std::invalid_argument);
}

TEST_CASE("landau closed form")
{
    CHECK(landau_energy_residue({0.0, 2.0, true}, {0, 0}).e_total == 0.5);
    CHECK(landau_energy_residue({0.5, 2.0, true}, {0, -1}).e_total ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(landau_energy_residue({0.25, 4.0, true}, {1, 1}).e_total ==
          doctest::Approx(6.0).epsilon(1e-15));
    CHECK_THROWS_AS(landau_energy_residue({0.0, 0.0, true}, {0, 0}),
                    std::domain_error);
}

TEST_CASE("landau closed form: bit-exact re-derivation")
{
    const SpectrumRecord rec = landau_energy_residue({0.25, 4.0, true}, {1, 1});
    const double la = 1.0 - 0.25;
    const double e_bar = 0.5 * 4.0 * (1.0 + 0.5 + std::abs(la));
    CHECK(rec.e_bar == e_bar);
    CHECK(rec.e_total == e_bar + 0.5 * 4.0 * la);
}

TEST_CASE("zeeman closed form")
{
    CHECK(zeeman_energy({0.0, 0.0, true}, {0, 0}).e_total == -2.0);
    CHECK(zeeman_energy({0.0, 0.0, true}, {1, 0}).e_total ==
          doctest::Approx(-2.0 / 9.0).epsilon(1e-15));
    CHECK(zeeman_energy({0.5, 0.2, true}, {0, 1}).e_total ==
          doctest::Approx(-0.45).epsilon(1e-15));
}

TEST_CASE("zeeman closed form: bit-exact re-derivation")
{
    const SpectrumRecord rec = zeeman_energy({0.0, 0.0, true}, {1, 0});
    CHECK(rec.e_bar == -1.0 / 4.5);  // nu = 1.5
    const SpectrumRecord shifted = zeeman_energy({0.5, 0.2, true}, {0, 1});
    CHECK(shifted.e_total == -0.5 + 0.1 * 0.5);
}

TEST_CASE("septic coefficients")
{
    const SepticCoefficients a = septic_coefficients({0.5, 0.1, true}, {0, 1});
    CHECK(a.a == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(a.c1 == doctest::Approx(1.171875e-4).epsilon(1e-12));
    CHECK(a.c0 == doctest::Approx(3.90625e-4).epsilon(1e-12));

    const SepticCoefficients b = septic_coefficients({0.3, 0.0, true}, {2, -1});
    CHECK(b.c1 == 0.0);
    CHECK(b.c0 == 0.0);

    const SepticCoefficients c = septic_coefficients({0.0, 0.2, true}, {1, 0});
    CHECK(c.a == doctest::Approx(-2.0 / 9.0).epsilon(1e-15));
    CHECK(c.c1 == 0.0);
    CHECK(c.c0 == doctest::Approx(1.5625e-3).epsilon(1e-15));
}

TEST_CASE("septic root: collapses to the weak-field value at B = 0")
{
    for (double alpha : {0.0, 0.5}) {
        for (int m : {0, 2}) {
            const SpectrumRecord rec = solve_septic({alpha, 0.0, true}, {1, m});
            const double nu = 1.5 + std::abs(m - alpha);
            CHECK(rec.e_bar == -1.0 / (2.0 * nu * nu));  // exact collapse
        }
    }
}

TEST_CASE("septic root: finite field against independent bisection")
{
    const SystemParams p{0.5, 0.1, true};
    const QuantumNumbers qn{0, 1};
    const SpectrumRecord rec = solve_septic(p, qn);
    CHECK(rec.e_bar == doctest::Approx(-0.4973013516260494).epsilon(1e-10));

    const double oracle = bisect_septic(septic_coefficients(p, qn), -0.6, -0.4);
    CHECK(rec.e_bar == doctest::Approx(oracle).epsilon(1e-11));
}

TEST_CASE("septic root: fourth-order agreement with the numeric torus solve")
{
    const QuantumNumbers qn{0, 1};
    auto gap = [&](double b) {
        const SystemParams p{0.5, b, true};
        return std::abs(solve_septic(p, qn).e_bar - solve_ebk(p, qn).e_bar);
    };
    const double ratio = gap(0.1) / gap(0.05);
    CHECK(ratio > 14.0);
    CHECK(ratio < 19.0);
}

TEST_CASE("septic root: refuses fields outside the expansion window")
{
    CHECK_THROWS_AS(solve_septic({0.0, 6.0, true}, {2, 2}), NoPhysicalRoot);
}

TEST_CASE("total energy assembly")
{
    CHECK(total_energy(-0.5, {0.7, 0.0, true}, 3) == -0.5);
    CHECK(total_energy(-0.5, {0.5, 0.2, true}, 1) == doctest::Approx(-0.45));
    CHECK(total_energy(1.0, {0.5, 2.0, true}, -1) == doctest::Approx(-0.5));
}

TEST_CASE("statistical transmutation across every closed-form method")
{
    const SystemParams p{0.25, 0.3, true};
    const SystemParams shifted{1.25, 0.3, true};
    for (int m : {-1, 0, 2}) {
        const QuantumNumbers qa{1, m};
        const QuantumNumbers qb{1, m + 1};
        CHECK(landau_energy_residue(p, qa).e_total ==
              landau_energy_residue(shifted, qb).e_total);
        CHECK(zeeman_energy(p, qa).e_total == zeeman_energy(shifted, qb).e_total);
        CHECK(solve_septic(p, qa).e_total == solve_septic(shifted, qb).e_total);
    }
}

TEST_CASE("statistical transmutation for the numeric torus solve")
{
    const SpectrumRecord a = solve_ebk({0.5, 0.1, true}, {0, 1});
    const SpectrumRecord b = solve_ebk({1.5, 0.1, true}, {0, 2});
    CHECK(a.e_bar == b.e_bar);
    CHECK(a.e_total == b.e_total);
}
