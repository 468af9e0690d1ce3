#ifndef ANYON_MODEL_HPP
#define ANYON_MODEL_HPP

#include <cmath>
#include <stdexcept>

namespace anyon {

// Reduced units throughout: hbar = mu = e = c = 1, with mu the reduced mass
// of the pair. Energies are in units of mu e^4 / hbar^2 and lengths in units
// of hbar^2 / (mu e^2); the magnetic field B is the single field parameter.

/// Statistics parameter and field strength of the two-anyon system.
/// alpha = 0 is the Bose case, alpha = 1 the Fermi case; any finite real
/// value is accepted. coulomb_on = false drops the attractive 1/r term and
/// is meant for cross-checks against the pure-magnetic closed forms.
struct SystemParams {
    double alpha = 0.0;
    double b_field = 0.0;
    bool coulomb_on = true;
};

/// Radial quantum number n_r >= 0 and angular quantum number m (any sign).
struct QuantumNumbers {
    int n_r = 0;
    int m = 0;
};

/// Coefficients of the radial momentum radicand
///   p_r^2 = -F + 2G/r - M/r^2 - N r^2.
struct RadicandCoeffs {
    double F = 0.0;  ///< -2 Ebar
    double G = 0.0;  ///< 1 with Coulomb on, 0 with it off
    double M = 0.0;  ///< (m - alpha)^2
    double N = 0.0;  ///< B^2 / 4
};

inline void validate(const SystemParams& p) {
    if (!(p.b_field >= 0.0))
        throw std::invalid_argument("b_field must be >= 0");
    if (!std::isfinite(p.alpha))
        throw std::invalid_argument("alpha must be finite");
}

inline void validate(const QuantumNumbers& qn) {
    if (qn.n_r < 0)
        throw std::invalid_argument("n_r must be >= 0");
}

/// Effective angular momentum m - alpha of the relative motion.
inline double angular_index(const SystemParams& p, int m) {
    return static_cast<double>(m) - p.alpha;
}

/// Effective radial potential
///   W(r) = (m-alpha)^2/(2r^2) - G/r + B^2 r^2/8.
inline double effective_potential(double r, const SystemParams& p, int m) {
    if (!(r > 0.0))
        throw std::domain_error("effective_potential: r must be > 0");
    const double la = angular_index(p, m);
    const double g = p.coulomb_on ? 1.0 : 0.0;
    return la * la / (2.0 * r * r) - g / r + p.b_field * p.b_field * r * r / 8.0;
}

/// Radicand coefficients at reduced energy e_bar.
inline RadicandCoeffs radicand_coeffs(const SystemParams& p, int m, double e_bar) {
    const double la = angular_index(p, m);
    return {-2.0 * e_bar,
            p.coulomb_on ? 1.0 : 0.0,
            la * la,
            p.b_field * p.b_field / 4.0};
}

/// Constant shift (B/2)(m - alpha) separating the total energy from the
/// reduced energy. Independent of n_r.
inline double zeeman_shift(const SystemParams& p, int m) {
    return 0.5 * p.b_field * angular_index(p, m);
}

}  // namespace anyon

#endif
