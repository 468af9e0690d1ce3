#ifndef ANYON_SPECTRA_HPP
#define ANYON_SPECTRA_HPP

#include <string>

#include "anyon/model.hpp"

namespace anyon {

/// How a spectral record was produced.
enum class Method {
    ebk,      ///< numeric torus quantization (quadrature + root solve)
    landau,   ///< strong-field residue closed form
    zeeman,   ///< weak-field closed form (Coulomb term + linear shift)
    septic,   ///< second-order-in-B algebraic equation
    oracle    ///< finite-difference eigensolver
};

const char* method_token(Method m);

/// One computed level. e_total = e_bar + zeeman_shift(params, m) always
/// holds by construction.
struct SpectrumRecord {
    Method method = Method::ebk;
    QuantumNumbers qn;
    double e_bar = 0.0;
    double e_total = 0.0;
    SystemParams params;
};

/// Total energy assembled from a reduced energy.
double total_energy(double e_bar, const SystemParams& p, int m);

/// Reduced energy from the torus quantization condition
/// I_r(Ebar) = n_r + 1/2, solved by bracketed bisection on the monotone
/// numeric action. Throws NoBoundState when no such level exists (B = 0 and
/// the condition has no solution below the threshold).
SpectrumRecord solve_ebk(const SystemParams& p, const QuantumNumbers& qn);

/// Strong-field closed form derived from the residue-sum contour value:
///   E = (B/2) (n_r + 1/2 + |m - alpha| + (m - alpha)).
/// Kept exactly as derived even though the residue value is twice the
/// numeric cycle integral (see contour_magnetic_residue); the level spacing
/// therefore differs from the numeric EBK strong-field spectrum.
/// Requires B > 0.
SpectrumRecord landau_energy_residue(const SystemParams& p, const QuantumNumbers& qn);

/// Weak-field closed form:
///   E = -1 / (2 (n_r + 1/2 + |m - alpha|)^2) + (B/2)(m - alpha).
SpectrumRecord zeeman_energy(const SystemParams& p, const QuantumNumbers& qn);

/// Coefficients of the second-order spectral equation
///   Ebar^7 = a (Ebar^3 + c1 Ebar + c0)^2,
/// with a = -1/(2 nu^2), nu = n_r + 1/2 + |m - alpha|,
/// c1 = 3 B^2 (m - alpha)^2 / 64, c0 = 5 B^2 / 128.
struct SepticCoefficients {
    double a;
    double c1;
    double c0;
};
SepticCoefficients septic_coefficients(const SystemParams& p, const QuantumNumbers& qn);

/// Root of the second-order spectral equation on the physical branch, i.e.
/// the real negative root continuously connected to Ebar = a as B -> 0.
/// Newton-Raphson from Ebar = a with a bracketed bisection fallback; throws
/// NoPhysicalRoot when the root leaves the branch window (field too strong
/// for the second-order expansion).
SpectrumRecord solve_septic(const SystemParams& p, const QuantumNumbers& qn);

}  // namespace anyon

#endif
