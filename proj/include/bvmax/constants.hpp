#pragma once

#include <stdexcept>

namespace bvmax {

// Default relative tolerance for boundary detection (q vs 1*, a vs N(q-1), ...).
inline constexpr double kBoundaryRelTol = 1e-12;

// Three-way comparison of x against pivot: -1 below, +1 above, 0 when
// |x - pivot| <= rel_tol * max(|x|, |pivot|, 1).
int side_of(double x, double pivot, double rel_tol = kBoundaryRelTol);

// 1* = N/(N-1), the critical Lebesgue exponent of the BV embedding.
double sobolev_conjugate(int dim);

// omega_{N-1}: surface area of the unit sphere in R^N.  Gamma(N/2) is expanded
// through the half-integer recurrence (factorial / double factorial), so the
// result is exact up to rounding; no general Gamma routine is involved.
double unit_sphere_area(int dim);

// E_q = (N^{N-1} omega_{N-1})^{-(q-1)}: the best constant in
//   |u|_q^q <= E_q |u|_1^{q-(q-1)N} |u|_TV^{(q-1)N},  1 < q <= 1*,
// attained exactly by indicator functions of balls.
double gn_best_constant(int dim, double q);

// E = E_{1*} = (N^{N-1} omega_{N-1})^{-1/(N-1)}: best constant of the critical
// embedding |u|_{1*} <= E^{1/1*} |u|_TV (equivalently the isoperimetric constant).
double mazya_constant(int dim);

// b0 = (q-1)(N-1) - (N - (N-1)q): the b that separates the two behaviors of the
// vanishing threshold on the boundary line a = N(q-1).  Requires 1 < q < 1*.
double critical_b0(int dim, double q);

// The q at which b0 crosses zero: (2N-1) / (2(N-1)).  b0 > 0 iff q is above it.
double b0_zero_q(int dim);

// Parameters of the constrained maximization: among u in BV with
// |u|_TV^a + |u|_1^b = 1, maximize |u|_1 + alpha |u|_q^q.
struct ProblemParams {
  int dim = 2;
  double a = 1.0;
  double b = 1.0;
  double q = 2.0;
  double alpha = 1.0;

  // Throws std::invalid_argument naming the violated precondition.
  void validate() const;

  double sobolev_conjugate() const;
  // True when q equals 1* within kBoundaryRelTol; such q is treated as exactly 1*.
  bool critical() const;
  // N(q-1): the a at which the t->0 behavior of the vanishing profile switches.
  double vanishing_pivot() const;
};

}  // namespace bvmax
