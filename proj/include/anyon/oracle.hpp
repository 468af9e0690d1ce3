#ifndef ANYON_ORACLE_HPP
#define ANYON_ORACLE_HPP

#include <vector>

#include "anyon/model.hpp"
#include "anyon/spectra.hpp"

namespace anyon {

/// Uniform radial grid with nodes at cell centers r_i = (i - 1/2) h,
/// i = 1..n_points, h = r_max / (n_points + 1/2). The outer boundary is a
/// hard wall; the inner boundary needs no condition because the flux through
/// r = 0 vanishes identically in the discretization.
struct RadialGrid {
    double r_max = 0.0;
    int n_points = 0;

    double spacing() const { return r_max / (n_points + 0.5); }
    double node(int i) const { return (i - 0.5) * spacing(); }  // i = 1..n
};

void validate(const RadialGrid& grid);

/// Symmetric tridiagonal matrix: diag has the dimension, off_diag one less.
struct TridiagonalOperator {
    std::vector<double> diag;
    std::vector<double> off_diag;

    int dimension() const { return static_cast<int>(diag.size()); }
};

/// Discretized reduced radial Hamiltonian at angular index m - alpha.
///
/// The radial wave is factored as R(r) = r^kappa phi(r), kappa = |m - alpha|,
/// and the operator for phi is discretized in flux form with the cell metric
/// r^(2 kappa + 1) dr. The centrifugal term is absorbed exactly into the
/// metric, so the singular r^-2 coefficient never appears and the scheme
/// stays second-order accurate for every kappa, including the critical
/// kappa = 0 case where a direct stencil fails to converge. The lumped cell
/// mass is chosen so the scheme is exact on linear phi.
TridiagonalOperator build_radial_operator(const SystemParams& p, int m,
                                          const RadialGrid& grid);

/// Number of eigenvalues strictly below x, from the Sturm sign-count of the
/// shifted LDL^T factorization.
int eigenvalue_count_below(const TridiagonalOperator& op, double x);

/// The k smallest eigenvalues in ascending order, each located by Sturm
/// bisection to 1e-10 absolute, independently of any starting guess.
std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int k);

/// Grid used when the caller does not override it: r_max covers the Coulomb
/// state extent (20 nu^2) or the magnetic confinement length (10 / sqrt(B/2))
/// when that is smaller, never below 30; n_points = 4000.
RadialGrid default_grid(const SystemParams& p, const QuantumNumbers& qn);

/// Eigenvalue of build_radial_operator at index n_r (node count), on the
/// given grid and on one with doubled n_points, plus the second-order
/// Richardson extrapolation of the pair.
struct OracleLevel {
    double raw = 0.0;          ///< eigenvalue at n_points
    double raw_refined = 0.0;  ///< eigenvalue at 2 * n_points
    double extrapolated = 0.0;
};
OracleLevel oracle_level(const SystemParams& p, const QuantumNumbers& qn,
                         const RadialGrid& grid);

/// Finite-difference value of the level (n_r, m): Richardson-extrapolated
/// eigenvalue with the total energy assembled from the constant shift.
/// Throws UnconvergedLevel when refinement moves the eigenvalue by more than
/// the tolerance and TruncationError when the state is not confined inside
/// r_max.
SpectrumRecord oracle_energy(const SystemParams& p, const QuantumNumbers& qn,
                             const RadialGrid& grid, double tol = 1e-6);
SpectrumRecord oracle_energy(const SystemParams& p, const QuantumNumbers& qn);

}  // namespace anyon

#endif
