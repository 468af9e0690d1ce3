#include "anyon/spectra.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "anyon/errors.hpp"
#include "anyon/radial_action.hpp"

namespace anyon {

namespace {

constexpr double kEnergyTol = 1e-12;     // bisection width in Ebar
constexpr double kResidualTol = 1e-9;    // action units
constexpr double kSepticTol = 1e-12;

double effective_principal(const SystemParams& p, const QuantumNumbers& qn)
{
    return qn.n_r + 0.5 + std::abs(angular_index(p, qn.m));
}

SpectrumRecord make_record(Method method, const SystemParams& p,
                           const QuantumNumbers& qn, double e_bar)
{
    return {method, qn, e_bar, total_energy(e_bar, p, qn.m), p};
}

}  // namespace

const char* method_token(Method m)
{
    switch (m) {
        case Method::ebk:    return "ebk";
        case Method::landau: return "landau";
        case Method::zeeman: return "zeeman";
        case Method::septic: return "septic";
        case Method::oracle: return "oracle";
    }
    return "?";
}

double total_energy(double e_bar, const SystemParams& p, int m)
{
    return e_bar + zeeman_shift(p, m);
}

SpectrumRecord solve_ebk(const SystemParams& p, const QuantumNumbers& qn)
{
    validate(p);
    validate(qn);

    const double target = qn.n_r + 0.5;
    auto action = [&](double e_bar) {
        return action_integral_numeric(radicand_coeffs(p, qn.m, e_bar));
    };

    const RadicandCoeffs probe = radicand_coeffs(p, qn.m, 0.0);
    if (probe.G == 0.0 && probe.N == 0.0)
        throw NoBoundState(NoBoundState::Reason::unbound,
                           "no bound states without Coulomb term or field");

    // Lower bracket: just above the potential floor, where I_r ~ 0.
    const PotentialFloor floor = potential_floor(probe);
    double e_lo;
    if (std::isfinite(floor.w_min)) {
        e_lo = floor.w_min + std::max(1e-9, 1e-9 * std::abs(floor.w_min));
        for (int k = 0; k < 8 && action(e_lo) >= target; ++k)
            e_lo = floor.w_min + (e_lo - floor.w_min) * 1e-3;
    } else {
        // Coulomb-dominated floor at -inf: deepen until the action drops
        // below the target.
        e_lo = -1.0;
        while (action(e_lo) >= target) {
            e_lo *= 4.0;
            if (e_lo < -1e300)
                throw NumericalError("ebk: lower bracket search diverged");
        }
    }

    // Upper bracket.
    double e_hi;
    if (p.b_field == 0.0) {
        // Levels must stay below the threshold at 0; approach it by halving.
        e_hi = e_lo;
        while (action(e_hi) <= target) {
            e_hi *= 0.5;
            if (e_hi > -1e-300)
                throw NoBoundState(NoBoundState::Reason::unbound,
                                   "no level below the dissociation threshold");
        }
    } else {
        e_hi = std::max(1.0, e_lo + 1.0);
        while (action(e_hi) <= target) {
            e_hi *= 2.0;
            if (e_hi > 1e300)
                throw NumericalError("ebk: upper bracket search diverged");
        }
    }

    // The action is strictly increasing in Ebar, so plain bisection is safe.
    double lo = e_lo, hi = e_hi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= kEnergyTol * std::max(1.0, std::abs(mid)))
            break;
        if (action(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    const double e_bar = 0.5 * (lo + hi);

    const double residual = action(e_bar) - target;
    if (std::abs(residual) > kResidualTol)
        throw NumericalError("ebk: quantization residual above tolerance",
                             e_bar);
    return make_record(Method::ebk, p, qn, e_bar);
}

SpectrumRecord landau_energy_residue(const SystemParams& p, const QuantumNumbers& qn)
{
    validate(p);
    validate(qn);
    if (!(p.b_field > 0.0))
        throw std::domain_error("landau_energy_residue: requires B > 0");
    const double e_bar = 0.5 * p.b_field * effective_principal(p, qn);
    return make_record(Method::landau, p, qn, e_bar);
}

SpectrumRecord zeeman_energy(const SystemParams& p, const QuantumNumbers& qn)
{
    validate(p);
    validate(qn);
    const double nu = effective_principal(p, qn);
    const double e_bar = -1.0 / (2.0 * nu * nu);
    return make_record(Method::zeeman, p, qn, e_bar);
}

SepticCoefficients septic_coefficients(const SystemParams& p, const QuantumNumbers& qn)
{
    validate(p);
    validate(qn);
    const double nu = effective_principal(p, qn);
    const double la = angular_index(p, qn.m);
    const double b2 = p.b_field * p.b_field;
    return {-1.0 / (2.0 * nu * nu), 3.0 * b2 * la * la / 64.0, 5.0 * b2 / 128.0};
}

SpectrumRecord solve_septic(const SystemParams& p, const QuantumNumbers& qn)
{
    const SepticCoefficients sc = septic_coefficients(p, qn);

    // At B = 0 the equation collapses to Ebar^7 = a Ebar^6, root Ebar = a.
    if (p.b_field == 0.0)
        return make_record(Method::septic, p, qn, sc.a);

    auto g = [&](double e) {
        const double t = (e * e + sc.c1) * e + sc.c0;
        return std::pow(e, 7) - sc.a * t * t;
    };
    auto dg = [&](double e) {
        const double t = (e * e + sc.c1) * e + sc.c0;
        return 7.0 * std::pow(e, 6) - 2.0 * sc.a * t * (3.0 * e * e + sc.c1);
    };

    // The physical branch stays near a for any field where the second-order
    // expansion is meaningful; accept only roots inside [3a, a/3].
    const double window_lo = 3.0 * sc.a;
    const double window_hi = sc.a / 3.0;

    double e = sc.a;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
        const double gv = g(e);
        if (gv == 0.0) {
            converged = true;
            break;
        }
        const double dv = dg(e);
        if (dv == 0.0)
            break;
        const double step = gv / dv;
        e -= step;
        if (std::abs(step) < kSepticTol) {
            converged = true;
            break;
        }
    }

    if (!converged || !(e < 0.0) || e < window_lo || e > window_hi) {
        // Bisection fallback on a sign change inside the branch window.
        double lo = window_lo, hi = window_hi;
        double glo = g(lo), ghi = g(hi);
        if (glo == 0.0) {
            e = lo;
        } else if (ghi == 0.0) {
            e = hi;
        } else if (glo * ghi < 0.0) {
            for (int it = 0; it < 200 && hi - lo > kSepticTol * std::max(1.0, -lo); ++it) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g(mid);
                if (gm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (gm * glo < 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    glo = gm;
                }
            }
            e = 0.5 * (lo + hi);
        } else {
            throw NoPhysicalRoot(
                "septic: no real negative root near the zero-field branch "
                "(field too strong for the second-order expansion)");
        }
    }

    if (!(e < 0.0) || e < window_lo || e > window_hi)
        throw NoPhysicalRoot("septic: root left the zero-field branch window");

    return make_record(Method::septic, p, qn, e);
}

}  // namespace anyon
