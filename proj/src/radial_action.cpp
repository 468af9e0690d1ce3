#include "anyon/radial_action.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "anyon/errors.hpp"
#include "anyon/quadrature.hpp"

namespace anyon {

namespace {

constexpr double kRootTol = 1e-13;       // turning-point bisection
constexpr double kQuadRelTol = 1e-11;    // action quadrature, relative
constexpr double kQuadAbsTol = 1e-13;    // floor for near-degenerate annuli
constexpr int kMaxQuadOrder = 1 << 16;

void check_coeffs(const RadicandCoeffs& c)
{
    if (c.M < 0.0 || c.N < 0.0)
        throw std::domain_error("radicand coefficients require M >= 0, N >= 0");
}

// Bisect g on [lo, hi] with g(lo) > 0 > g(hi); returns the sign-change point.
template <class Fn>
double bisect_down(Fn&& g, double lo, double hi)
{
    for (int it = 0; it < 200 && hi - lo > kRootTol * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Adaptive Gauss-Legendre in theta after r = c + s sin(theta); the cos(theta)
// Jacobian cancels the square-root zeros of the integrand at both ends.
template <class Fn>
double integrate_sine_map(Fn&& f, double a, double b)
{
    const double mid = 0.5 * (a + b);
    const double span = 0.5 * (b - a);
    double prev = 0.0;
    bool have_prev = false;
    for (int order = 32; order <= kMaxQuadOrder; order *= 2) {
        const GaussLegendreRule& rule = gauss_legendre(order);
        double sum = 0.0;
        for (int i = 0; i < order; ++i) {
            const double theta = 0.5 * M_PI * rule.x[i];
            const double r = mid + span * std::sin(theta);
            sum += rule.w[i] * std::cos(theta) * f(r);
        }
        const double cur = 0.5 * M_PI * span * sum;
        if (have_prev &&
            std::abs(cur - prev) <= std::max(kQuadRelTol * std::abs(cur), kQuadAbsTol))
            return cur;
        prev = cur;
        have_prev = true;
    }
    throw NumericalError("action quadrature: order limit reached", prev);
}

}  // namespace

double radicand(const RadicandCoeffs& c, double r)
{
    return -c.F + 2.0 * c.G / r - c.M / (r * r) - c.N * r * r;
}

double radicand_quartic(const RadicandCoeffs& c, double r)
{
    return ((-c.N * r * r - c.F) * r + 2.0 * c.G) * r - c.M;
}

PotentialFloor potential_floor(const RadicandCoeffs& c)
{
    check_coeffs(c);
    if (c.M == 0.0) {
        if (c.G > 0.0)
            return {0.0, -std::numeric_limits<double>::infinity()};
        return {0.0, 0.0};  // pure oscillator or free motion
    }
    // W'(r) has the sign of psi(r) = N r^4 + G r - M, strictly increasing,
    // so the minimum radius is its unique positive root.
    if (c.G <= 0.0 && c.N == 0.0) {
        // W = M/(2 r^2): no interior minimum, infimum 0 at r -> inf.
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    double r_min;
    if (c.N == 0.0) {
        r_min = c.M / c.G;
    } else {
        auto psi = [&](double r) { return c.N * r * r * r * r + c.G * r - c.M; };
        double hi = 1.0;
        while (psi(hi) < 0.0)
            hi *= 2.0;
        double lo = 0.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
            const double m = 0.5 * (lo + hi);
            if (psi(m) < 0.0)
                lo = m;
            else
                hi = m;
        }
        r_min = 0.5 * (lo + hi);
    }
    const double w_min =
        0.5 * (c.M / (r_min * r_min) - 2.0 * c.G / r_min + c.N * r_min * r_min);
    return {r_min, w_min};
}

TurningPoints turning_points(const RadicandCoeffs& c)
{
    check_coeffs(c);

    if (c.N == 0.0) {
        if (c.G <= 0.0)
            throw NoBoundState(NoBoundState::Reason::unbound,
                               "no confining term (G = 0, N = 0)");
        if (c.F <= 0.0)
            throw NoBoundState(NoBoundState::Reason::unbound,
                               "energy not below the dissociation threshold (B = 0)");
        if (c.M == 0.0)
            return {0.0, 2.0 * c.G / c.F};
        const double disc = c.G * c.G - c.F * c.M;
        const double scale = std::max({c.G * c.G, c.F * c.M, 1e-300});
        if (disc < -1e-14 * scale)
            throw NoBoundState(NoBoundState::Reason::below_minimum,
                               "energy below the potential minimum");
        if (disc <= 0.0) {
            const double r = c.G / c.F;
            return {r, r};  // degenerate circular orbit
        }
        const double sq = std::sqrt(disc);
        return {c.M / (c.G + sq), (c.G + sq) / c.F};
    }

    // N > 0: confinement from above is automatic.
    if (c.M == 0.0) {
        if (c.G > 0.0) {
            // r2 is the unique positive root of q(r) = -N r^3 - F r + 2G.
            auto q = [&](double r) { return (-c.N * r * r - c.F) * r + 2.0 * c.G; };
            double hi = 1.0;
            while (q(hi) > 0.0)
                hi *= 2.0;
            return {0.0, bisect_down(q, 0.0, hi)};
        }
        // pure oscillator: radicand = -F - N r^2
        if (c.F > 0.0)
            throw NoBoundState(NoBoundState::Reason::below_minimum,
                               "energy below the oscillator minimum");
        if (c.F == 0.0)
            return {0.0, 0.0};
        return {0.0, std::sqrt(-c.F / c.N)};
    }

    const PotentialFloor floor = potential_floor(c);
    const double at_min = radicand_quartic(c, floor.r_min);
    const double scale =
        std::max({std::abs(c.F) * floor.r_min * floor.r_min, c.M, 1e-300});
    if (at_min <= 0.0) {
        if (at_min < -1e-13 * scale)
            throw NoBoundState(NoBoundState::Reason::below_minimum,
                               "energy below the potential minimum");
        return {floor.r_min, floor.r_min};
    }

    auto p4 = [&](double r) { return radicand_quartic(c, r); };

    // Inner root: p4(0) = -M < 0, p4(r_min) > 0.
    double lo = floor.r_min;
    while (p4(0.5 * lo) > 0.0)
        lo *= 0.5;
    lo *= 0.5;
    double r1 = lo, r1_hi = floor.r_min;
    for (int it = 0; it < 200 && r1_hi - r1 > kRootTol * std::max(1.0, r1_hi); ++it) {
        const double m = 0.5 * (r1 + r1_hi);
        if (p4(m) > 0.0)
            r1_hi = m;
        else
            r1 = m;
    }

    // Outer root: the -N r^4 term guarantees a sign change.
    double hi = 2.0 * floor.r_min;
    while (p4(hi) > 0.0)
        hi *= 2.0;

    return {0.5 * (r1 + r1_hi), bisect_down(p4, floor.r_min, hi)};
}

double action_integral_numeric(const RadicandCoeffs& c)
{
    const TurningPoints tp = turning_points(c);
    if (tp.r2 - tp.r1 <= 1e-13 * std::max(1.0, tp.r2))
        return 0.0;

    double value;
    if (c.M == 0.0 && c.G > 0.0) {
        // Inner endpoint r1 = 0 carries a 1/sqrt(r) integrand; substituting
        // r = u^2 gives integrand 2 sqrt(-N u^6 - F u^2 + 2G), bounded at 0
        // and square-root vanishing at u = sqrt(r2).
        const double u2 = std::sqrt(tp.r2);
        value = integrate_sine_map(
            [&](double u) {
                const double q = (-c.N * u * u * u * u - c.F) * u * u + 2.0 * c.G;
                return 2.0 * std::sqrt(std::max(q, 0.0));
            },
            0.0, u2);
    } else {
        value = integrate_sine_map(
            [&](double r) {
                return std::sqrt(std::max(radicand_quartic(c, r), 0.0)) / r;
            },
            tp.r1, tp.r2);
    }
    return value / M_PI;
}

double contour_coulomb(const RadicandCoeffs& c)
{
    check_coeffs(c);
    if (c.N != 0.0)
        throw std::domain_error("contour_coulomb: requires N = 0");
    if (!(c.F > 0.0) || c.G < 0.0)
        throw std::domain_error("contour_coulomb: requires F > 0 and G >= 0");
    if (c.F * c.M > c.G * c.G)
        throw std::domain_error("contour_coulomb: no real turning points (F M > G^2)");
    return -2.0 * M_PI * (std::sqrt(c.M) - c.G / std::sqrt(c.F));
}

double contour_magnetic_residue(const RadicandCoeffs& c)
{
    check_coeffs(c);
    if (c.G != 0.0)
        throw std::domain_error("contour_magnetic_residue: requires G = 0");
    if (!(c.N > 0.0) || !(c.F < 0.0))
        throw std::domain_error("contour_magnetic_residue: requires N > 0 and F < 0");
    if (c.F * c.F < 4.0 * c.N * c.M)
        throw std::domain_error("contour_magnetic_residue: no real turning points");
    return -2.0 * M_PI * (std::sqrt(c.M) + c.F / (2.0 * std::sqrt(c.N)));
}

double correction_integral(const RadicandCoeffs& c)
{
    check_coeffs(c);
    if (!(c.F > 0.0) || !(c.G > 0.0))
        throw std::domain_error("correction_integral: requires F > 0 and G > 0");
    if (c.F * c.M > c.G * c.G)
        throw std::domain_error("correction_integral: no real turning points");
    return -2.0 * M_PI * (3.0 * c.M - 5.0 * c.G * c.G / c.F) * c.G /
           (2.0 * c.F * c.F * std::sqrt(c.F));
}

double action_second_order(const RadicandCoeffs& c)
{
    const RadicandCoeffs coulomb_part{c.F, c.G, c.M, 0.0};
    return (contour_coulomb(coulomb_part) -
            0.5 * c.N * correction_integral(coulomb_part)) /
           (2.0 * M_PI);
}

}  // namespace anyon
