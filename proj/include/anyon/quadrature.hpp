#ifndef ANYON_QUADRATURE_HPP
#define ANYON_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace anyon {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> x;
    std::vector<double> w;
};

/// Returns the n-point Gauss-Legendre rule. Rules are computed once and
/// cached; the returned reference stays valid for the process lifetime and
/// the cache is safe to use from multiple threads.
const GaussLegendreRule& gauss_legendre(int n);

/// Double-exponential (tanh-sinh) quadrature of f over [a, b].
///
/// The integrand is called as f(x, d_lo, d_hi) with d_lo = x - a and
/// d_hi = b - x computed free of cancellation, so endpoint-singular factors
/// such as 1/sqrt(x - a) can be evaluated stably. Handles integrable
/// endpoint singularities up to and including the inverse-square-root kind.
double tanh_sinh(const std::function<double(double, double, double)>& f,
                 double a, double b,
                 double rel_tol = 1e-12, int max_level = 12);

}  // namespace anyon

#endif
