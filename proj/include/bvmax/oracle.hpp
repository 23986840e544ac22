#pragma once

#include "bvmax/constants.hpp"

#include <cstdint>
#include <vector>

namespace bvmax {

// A radial step function on R^N: value shell_values[i] on the annulus
// radii[i+1] < |x| < radii[i] (the last value fills the innermost ball),
// zero outside radii[0].  Radii are strictly decreasing and positive.
struct RadialStepFunction {
  int dim = 2;
  std::vector<double> radii;
  std::vector<double> shell_values;

  static constexpr std::size_t kMaxShells = 64;

  void validate() const;  // throws std::invalid_argument
};

struct BVNorms {
  double l1 = 0.0;
  double lq_q = 0.0;            // |u|_q^q
  double tv = 0.0;              // total variation
  double l1star_1star = 0.0;    // |u|_{1*}^{1*}
};

/// Closed-form norms: Lebesgue norms are shell-volume sums, the total variation
// is the sum over spheres of area times |jump| (outermost jump against 0).
BVNorms norms(const RadialStepFunction& u, double q);

RadialStepFunction scaled(const RadialStepFunction& u, double amplitude);

// The unique m > 0 with (m |u|_TV)^a + (m |u|_1)^b = 1, found by bisection on
// the strictly increasing left-hand side; the returned function satisfies the
// constraint to within 1e-14.
RadialStepFunction normalize_to_constraint(const RadialStepFunction& u, double a, double b);

// |u|_1 + alpha |u|_q^q.
double functional_value(const RadialStepFunction& u, double alpha, double q);

// u_n(x) = n^{-N} u(x/n): spreads mass out; |u_n|_1 is invariant and
// |u_n|_TV = |u|_TV / n.
RadialStepFunction vanishing_element(const RadialStepFunction& u, std::int64_t n);

// u_n(x) = n^{N-1} u(n x): concentrates mass; |u_n|_TV and |u_n|_{1*} are
// invariant and |u_n|_1 = |u|_1 / n.
RadialStepFunction concentrating_element(const RadialStepFunction& u, std::int64_t n);

struct VerifyReport {
  ProblemParams params;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double max_value = 0.0;          // best functional value over all samples
  double d_alpha = 0.0;            // reduction-computed supremum
  std::uint64_t violations = 0;    // samples with value > d_alpha (1 + 1e-9)
  double gap = 0.0;                // d_alpha - max_value
  std::uint64_t gn_violations = 0;         // interpolation-inequality failures
  std::uint64_t reduction_violations = 0;  // value > f_alpha(ratio) failures
  double best_single_shell = 0.0;  // best value among single-shell samples
};

// Draws `samples` random constrained step functions (1-8 shells, log-uniform
// radii and signed log-uniform values in [1e-3, 1e3]) from a SplitMix64 stream
// keyed by (seed, sample index), evaluates the functional, and reports any
// value exceeding the reduction-computed supremum.  extra_single_shell_radii
// appends deterministic single-shell probes (e.g. near a known maximizer).
// Honors the BVMAX_THREADS environment variable; results do not depend on the
// thread count.
VerifyReport monte_carlo_bound_check(const ProblemParams& params, std::uint64_t samples,
                                     std::uint64_t seed,
                                     const std::vector<double>& extra_single_shell_radii = {});

}  // namespace bvmax
