#include "anyon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "anyon/errors.hpp"

namespace anyon {

namespace {

constexpr double kEigAbsTol = 1e-10;

}  // namespace

void validate(const RadialGrid& grid)
{
    if (!(grid.r_max > 0.0))
        throw std::invalid_argument("grid: r_max must be > 0");
    if (grid.n_points < 100)
        throw std::invalid_argument("grid: n_points must be >= 100");
}

TridiagonalOperator build_radial_operator(const SystemParams& p, int m,
                                          const RadialGrid& grid)
{
    validate(p);
    validate(grid);

    const int n = grid.n_points;
    const double h = grid.spacing();
    const double kappa = std::abs(angular_index(p, m));
    const double pw = 2.0 * kappa + 1.0;  // metric exponent
    const double g = p.coulomb_on ? 1.0 : 0.0;
    const double b2 = p.b_field * p.b_field;

    TridiagonalOperator op;
    op.diag.resize(n);
    op.off_diag.resize(n - 1);

    // All metric factors (i h)^pw enter through the ratios
    //   q_i = ((i-1)/i)^pw  and  g_i = ((i+1)/i)^pw,
    // evaluated via expm1/log1p so the scheme is stable for any exponent.
    for (int i = 1; i <= n; ++i) {
        const double r = grid.node(i);
        // kinetic diagonal: (m_{i-1/2} + m_{i+1/2}) / (2 h^2 w_i)
        // with w_i = (m_{i+1/2} - m_{i-1/2}) r_i / (pw h)
        const double one_minus_q = -std::expm1(pw * std::log1p(-1.0 / i));
        const double one_plus_q = 2.0 - one_minus_q;
        const double kin = pw / (2.0 * h * r) * (one_plus_q / one_minus_q);
        const double u = -g / r + b2 * r * r / 8.0;
        op.diag[i - 1] = kin + u;

        if (i < n) {
            const double r_next = grid.node(i + 1);
            const double g_minus_one = std::expm1(pw * std::log1p(1.0 / i));
            op.off_diag[i - 1] =
                -pw / (2.0 * h * std::sqrt(r * r_next)) /
                std::sqrt(one_minus_q * g_minus_one);
        }
    }
    return op;
}

int eigenvalue_count_below(const TridiagonalOperator& op, double x)
{
    const int n = op.dimension();
    double pivmin = std::numeric_limits<double>::min();
    for (double e : op.off_diag)
        pivmin = std::max(pivmin, e * e * std::numeric_limits<double>::min());

    int count = 0;
    double d = op.diag[0] - x;
    if (std::abs(d) < pivmin)
        d = -pivmin;
    if (d < 0.0)
        ++count;
    for (int i = 1; i < n; ++i) {
        const double e = op.off_diag[i - 1];
        d = op.diag[i] - x - e * e / d;
        if (std::abs(d) < pivmin)
            d = -pivmin;
        if (d < 0.0)
            ++count;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int k)
{
    const int n = op.dimension();
    if (k < 1 || k > n)
        throw std::domain_error("lowest_eigenvalues: k out of range");

    // Gershgorin bounds.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0)
            radius += std::abs(op.off_diag[i - 1]);
        if (i < n - 1)
            radius += std::abs(op.off_diag[i]);
        lo = std::min(lo, op.diag[i] - radius);
        hi = std::max(hi, op.diag[i] + radius);
    }

    std::vector<double> eigs(k);
    for (int idx = 0; idx < k; ++idx) {
        double a = lo, b = hi;
        while (b - a > kEigAbsTol + 4.0 * std::numeric_limits<double>::epsilon() *
                                        std::max(std::abs(a), std::abs(b))) {
            const double mid = 0.5 * (a + b);
            if (eigenvalue_count_below(op, mid) <= idx)
                a = mid;
            else
                b = mid;
        }
        eigs[idx] = 0.5 * (a + b);
        lo = a;  // eigenvalues are requested in ascending order
    }
    return eigs;
}

RadialGrid default_grid(const SystemParams& p, const QuantumNumbers& qn)
{
    const double nu = qn.n_r + 0.5 + std::abs(angular_index(p, qn.m));
    double r_max = 20.0 * nu * nu;
    if (p.b_field > 0.0)
        r_max = std::min(r_max, 10.0 / std::sqrt(0.5 * p.b_field));
    return {std::max(30.0, r_max), 4000};
}

OracleLevel oracle_level(const SystemParams& p, const QuantumNumbers& qn,
                         const RadialGrid& grid)
{
    validate(qn);
    const int k = qn.n_r + 1;

    const TridiagonalOperator coarse = build_radial_operator(p, qn.m, grid);
    const RadialGrid fine_grid{grid.r_max, 2 * grid.n_points};
    const TridiagonalOperator fine = build_radial_operator(p, qn.m, fine_grid);

    OracleLevel level;
    level.raw = lowest_eigenvalues(coarse, k)[k - 1];
    level.raw_refined = lowest_eigenvalues(fine, k)[k - 1];
    const double rho = grid.spacing() / fine_grid.spacing();
    level.extrapolated =
        level.raw_refined + (level.raw_refined - level.raw) / (rho * rho - 1.0);
    return level;
}

SpectrumRecord oracle_energy(const SystemParams& p, const QuantumNumbers& qn,
                             const RadialGrid& grid, double tol)
{
    const OracleLevel level = oracle_level(p, qn, grid);
    const double e_bar = level.extrapolated;

    // Confinement check: the wall at r_max must sit far beyond the
    // classical extent of the state.
    if (p.b_field == 0.0) {
        if (e_bar >= 0.0)
            throw TruncationError("oracle: level above the dissociation threshold");
        if (std::sqrt(-2.0 * e_bar) * grid.r_max < 15.0)
            throw TruncationError("oracle: state not confined inside r_max "
                                  "(increase r_max)");
    }

    // The extrapolated residual scales like the square of the refinement
    // step; the step itself must be small enough for that regime to hold.
    const double refinement_shift = std::abs(level.raw_refined - level.raw) / 3.0;
    if (refinement_shift > 0.1 * std::sqrt(tol) * std::max(1.0, std::abs(e_bar)))
        throw UnconvergedLevel("oracle: eigenvalue still moving under grid "
                               "refinement (increase n_points)");

    return {Method::oracle, qn, e_bar, total_energy(e_bar, p, qn.m), p};
}

SpectrumRecord oracle_energy(const SystemParams& p, const QuantumNumbers& qn)
{
    return oracle_energy(p, qn, default_grid(p, qn));
}

}  // namespace anyon
