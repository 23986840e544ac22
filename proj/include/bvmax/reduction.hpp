#pragma once

#include "bvmax/constants.hpp"

namespace bvmax {

// Limits of a reduced profile at t -> 0+ and t -> infinity.  Entries are
// extended reals (+infinity allowed), never NaN.
struct EndpointLimits {
  double at_zero = 0.0;
  double at_infinity = 0.0;
};

enum class ReducedFn { F, G, H };

// phi and its first two derivatives, plus the factor varphi with
// phi''(t) = (1+t)^{-1-(q-1)(N-1)/b} varphi(t).  Defined on the boundary
// line a = N(q-1) for subcritical q.
struct PhiFamily {
  double phi = 0.0;
  double dphi = 0.0;
  double d2phi = 0.0;
  double varphi = 0.0;
};

// The one-dimensional reduction of the constrained maximization.  With
// t = |u|_TV^a / |u|_1^b, the value of the functional over constrained
// functions with ratio t is exactly
//
//   f_alpha(t) = [ (1+t)^{(q-1)(N/a-(N-1)/b)} + alpha E_q t^{(q-1)N/a} ]
//                / (1+t)^{(q-1)N/a + (N-q(N-1))/b},
//
// and the supremum of the problem equals sup_{t>0} f_alpha(t).  The companion
// profiles g (vanishing threshold: alpha_v = inf g / E_q) and, at q = 1*,
// h (concentration threshold: alpha_c = sup h / E) are
//
//   g(t) = ((1+t)^{1/b} - 1) (1+t)^{(q-1)(N/a-(N-1)/b)} / t^{(q-1)N/a},
//   h(t) = (1+t)^{1*/a - 1/b} / ((1+t)^{1*/a} - t^{1*/a}).
//
// Exponents are cached at construction; q within tolerance of 1* is snapped to
// exactly 1* so the critical identities hold without drift.  Evaluation happens
// in log space: the log_* members take s = log t and stay finite and stable for
// any s a double can hold, which is what the optimizer consumes.
class ReducedFunctions {
 public:
  explicit ReducedFunctions(ProblemParams params);

  const ProblemParams& params() const { return params_; }
  bool critical() const { return critical_; }
  double one_star() const { return one_star_; }
  double eq() const { return eq_; }  // E_q (equals the critical constant E at q = 1*)

  // Value-domain evaluation at t > 0.
  double f(double t) const;
  double g(double t) const;
  double h(double t) const;  // critical q only

  // Log-domain evaluation at s = log t; returns log of the profile value.
  double log_f(double s) const;
  double log_g(double s) const;
  double log_h(double s) const;  // critical q only

  // Derivative surrogates: sign(g') = sign(g_tilde), sign(h') = sign(h_tilde),
  //   g_tilde(t) = t/b + (1*/a)(1 - (1+t)^{1/b}),
  //   h_tilde(t) = 1 + b 1*/(a t) - ((1+t)/t)^{1*/a}.
  // Critical q only.
  double g_tilde(double t) const;
  double h_tilde(double t) const;

  // Signs of g_tilde / h_tilde / phi computed purely in log space; valid for
  // any s = log t, including magnitudes where t itself would overflow.
  int sign_g_tilde_log(double s) const;
  int sign_h_tilde_log(double s) const;
  int sign_phi_log(double s) const;

  // phi(t) = (1+t)^{1+(N-q(N-1))/b} - (1+t)^{1-(q-1)(N-1)/b} - t/b and
  // derivatives; requires subcritical q with a = N(q-1).
  PhiFamily phi_family(double t) const;

  EndpointLimits limits(ReducedFn which) const;

 private:
  void require_critical(const char* what) const;
  void require_phi_regime() const;

  ProblemParams params_;
  bool critical_ = false;
  double one_star_ = 0.0;
  double eq_ = 0.0;
  // Cached exponents of the reduced profiles:
  double p_t_ = 0.0;     // (q-1)N/a: power of t in f's numerator and g's denominator
  double p_mix_ = 0.0;   // (q-1)(N/a - (N-1)/b): power of (1+t) in the numerators
  double p_tail_ = 0.0;  // (N - q(N-1))/b: extra power of (1+t) in f's denominator
  double c_ = 0.0;       // 1*/a
  double inv_b_ = 0.0;   // 1/b
  double phi_a_ = 0.0;   // A = (N - q(N-1))/b
  double phi_b_ = 0.0;   // B = (q-1)(N-1)/b   (A + B = 1/b)
  bool phi_regime_ = false;
};

}  // namespace bvmax
