#ifndef ANYON_RADIAL_ACTION_HPP
#define ANYON_RADIAL_ACTION_HPP

#include "anyon/model.hpp"

namespace anyon {

/// Inner and outer radii bounding the classically allowed annulus.
/// r1 may be exactly 0 (M = 0 with the Coulomb term on); the pair collapses
/// to r1 == r2 when the energy sits exactly at the potential minimum.
struct TurningPoints {
    double r1 = 0.0;
    double r2 = 0.0;
};

/// Radicand of the radial momentum, -F + 2G/r - M/r^2 - N r^2.
double radicand(const RadicandCoeffs& c, double r);

/// Same zeros as the radicand for r > 0: -N r^4 - F r^2 + 2G r - M.
double radicand_quartic(const RadicandCoeffs& c, double r);

/// Location and value of the minimum of the coefficient-form potential
/// W(r) = (M/r^2 - 2G/r + N r^2)/2. w_min is -inf when M = 0 and G > 0
/// (Coulomb-dominated collapse toward r = 0).
struct PotentialFloor {
    double r_min;
    double w_min;
};
PotentialFloor potential_floor(const RadicandCoeffs& c);

/// The positive roots of the radicand bracketing the potential minimum.
/// Throws NoBoundState when the energy lies below the minimum or the motion
/// is not confined from above.
TurningPoints turning_points(const RadicandCoeffs& c);

/// Radial action I_r = (1/pi) * integral_{r1}^{r2} sqrt(radicand) dr,
/// i.e. (1/2pi) times the closed-cycle integral. Gauss-Legendre after a
/// sine substitution that absorbs the square-root turning-point zeros;
/// order is doubled until the result is stable to 1e-11 relative.
/// Returns 0 for a degenerate annulus.
double action_integral_numeric(const RadicandCoeffs& c);

/// Residue-theorem value of the Coulomb cycle integral (N = 0):
///   -2 pi (sqrt(M) - G/sqrt(F)).
/// Requires N = 0, F > 0, F*M <= G^2. Equals 2 pi times the numeric action.
double contour_coulomb(const RadicandCoeffs& c);

/// Residue-sum value of the pure-magnetic cycle integral (G = 0):
///   -2 pi (sqrt(M) + F/(2 sqrt(N))).
/// Requires G = 0, N > 0, F < 0, F^2 >= 4 N M. NOTE: this residue evaluation
/// counts both branch cuts of the even radicand and comes out exactly twice
/// the real-axis cycle integral 2 pi * action_integral_numeric; the validate
/// report documents the factor instead of absorbing it.
double contour_magnetic_residue(const RadicandCoeffs& c);

/// Closed form of the first-order field-correction cycle integral
///   integral r^3 / sqrt(-F r^2 + 2 G r - M) dr over the closed cycle,
///   = -2 pi (3M - 5G^2/F) G / (2 F^2 sqrt(F)).
/// Requires F > 0, G > 0, F*M <= G^2.
double correction_integral(const RadicandCoeffs& c);

/// Radial action to first order in N (second order in B):
///   [contour_coulomb(F,G,M) - (N/2) * correction_integral(F,G,M)] / 2 pi.
double action_second_order(const RadicandCoeffs& c);

}  // namespace anyon

#endif
