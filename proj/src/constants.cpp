#include "bvmax/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bvmax {

int side_of(double x, double pivot, double rel_tol) {
  const double scale = std::max({std::fabs(x), std::fabs(pivot), 1.0});
  if (std::fabs(x - pivot) <= rel_tol * scale) return 0;
  return x < pivot ? -1 : 1;
}

double sobolev_conjugate(int dim) {
  if (dim < 2) throw std::invalid_argument("dimension must be an integer >= 2");
  return static_cast<double>(dim) / static_cast<double>(dim - 1);
}

double unit_sphere_area(int dim) {
  if (dim < 2) throw std::invalid_argument("dimension must be an integer >= 2");
  constexpr double pi = std::numbers::pi;
  // omega_{N-1} = 2 pi^{N/2} / Gamma(N/2)
  if (dim % 2 == 0) {
    const int k = dim / 2;  // Gamma(k) = (k-1)!
    double gamma = 1.0;
    for (int i = 2; i < k; ++i) gamma *= static_cast<double>(i);
    const double w = 2.0 * std::pow(pi, k) / gamma;
    if (std::isfinite(w)) return w;
  } else {
    const int k = (dim - 1) / 2;  // Gamma(N/2) = sqrt(pi) (N-2)!! / 2^k
    double dfac = 1.0;
    for (int i = dim - 2; i >= 2; i -= 2) dfac *= static_cast<double>(i);
    const double w = 2.0 * std::pow(pi, k) * std::pow(2.0, k) / dfac;
    if (std::isfinite(w)) return w;
  }
  // Very large dimension: same recurrence accumulated in logs to dodge overflow.
  double log_gamma = 0.0;
  if (dim % 2 == 0) {
    for (int i = 2; i < dim / 2; ++i) log_gamma += std::log(static_cast<double>(i));
  } else {
    log_gamma = 0.5 * std::log(pi) - ((dim - 1) / 2) * std::log(2.0);
    for (int i = dim - 2; i >= 2; i -= 2) log_gamma += std::log(static_cast<double>(i));
  }
  return std::exp(std::log(2.0) + 0.5 * dim * std::log(pi) - log_gamma);
}

double gn_best_constant(int dim, double q) {
  const double one_star = sobolev_conjugate(dim);
  if (!std::isfinite(q) || !(q > 1.0) || side_of(q, one_star) > 0)
    throw std::invalid_argument("q must lie in (1, N/(N-1)]");
  const double q_eff = side_of(q, one_star) == 0 ? one_star : q;
  const double log_base =
      (dim - 1) * std::log(static_cast<double>(dim)) + std::log(unit_sphere_area(dim));
  return std::exp(-(q_eff - 1.0) * log_base);
}

double mazya_constant(int dim) { return gn_best_constant(dim, sobolev_conjugate(dim)); }

double critical_b0(int dim, double q) {
  const double one_star = sobolev_conjugate(dim);
  if (!std::isfinite(q) || !(q > 1.0) || side_of(q, one_star) >= 0)
    throw std::invalid_argument("q must lie in (1, N/(N-1)) strictly below the critical exponent");
  return (q - 1.0) * (dim - 1) - (dim - (dim - 1) * q);
}

double b0_zero_q(int dim) {
  if (dim < 2) throw std::invalid_argument("dimension must be an integer >= 2");
  return (2.0 * dim - 1.0) / (2.0 * (dim - 1.0));
}

void ProblemParams::validate() const {
  if (dim < 2) throw std::invalid_argument("dimension must be an integer >= 2");
  if (!std::isfinite(a) || !(a > 0.0)) throw std::invalid_argument("a must be a positive real");
  if (!std::isfinite(b) || !(b > 0.0)) throw std::invalid_argument("b must be a positive real");
  if (!std::isfinite(alpha) || !(alpha > 0.0))
    throw std::invalid_argument("alpha must be a positive real");
  if (!std::isfinite(q) || !(q > 1.0) || side_of(q, bvmax::sobolev_conjugate(dim)) > 0)
    throw std::invalid_argument("q must lie in (1, N/(N-1)]");
}

double ProblemParams::sobolev_conjugate() const { return bvmax::sobolev_conjugate(dim); }

bool ProblemParams::critical() const { return side_of(q, bvmax::sobolev_conjugate(dim)) == 0; }

double ProblemParams::vanishing_pivot() const {
  return critical() ? bvmax::sobolev_conjugate(dim) : dim * (q - 1.0);
}

}  // namespace bvmax
