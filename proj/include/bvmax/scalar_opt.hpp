#pragma once

#include "bvmax/reduction.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace bvmax {

// Log-time search window and grid resolution of the global stage.
inline constexpr double kGridLogLo = -60.0;
inline constexpr double kGridLogHi = 60.0;
inline constexpr int kGridPoints = 1201;
// An interior extremum counts as attained only when it clears the best endpoint
// limit by this slack (scaled by max(1, |value|)); ties are left to the
// analytic classifier.
inline constexpr double kAttainSlack = 1e-11;
// Grid spread below which the objective is treated as constant in t.
inline constexpr double kPlateauTol = 1e-12;

struct OptCandidate {
  double t = 0.0;
  double value = 0.0;
};

struct ScalarOptResult {
  // Supremum / infimum over (0, infinity), endpoint limits included; may be
  // +infinity when an endpoint diverges.
  double value = 0.0;
  // Interior extremizer when one matches value (always set when attained).
  std::optional<double> arg;
  // True only when an interior extremum beats both endpoint limits by the
  // attainment slack, or the objective is a plateau.
  bool attained = false;
  bool plateau = false;
  EndpointLimits limits;
  // All refined interior local extrema, deduplicated, best first.
  std::vector<OptCandidate> candidates;
};

// Objective given in log-log form: receives s = log t, returns log(value).
using LogObjective = std::function<double(double)>;

// Deterministic global optimization over t in (0, infinity): log-uniform scan
// of [e^-60, e^60] followed by golden-section refinement of every interior
// local extremum, then comparison against the analytic endpoint limits.
// tol is the absolute tolerance on s = log t (relative tolerance on t).
// Throws std::runtime_error if the objective is non-finite on the grid.
ScalarOptResult global_sup(const LogObjective& log_objective, const EndpointLimits& limits,
                           double tol = 1e-12);
ScalarOptResult global_inf(const LogObjective& log_objective, const EndpointLimits& limits,
                           double tol = 1e-12);

// Bisection in log t for a root of fn (read through its sign) on [lo, hi];
// requires opposite signs at the ends, returns the midpoint of the final
// bracket once its log-width drops below log_tol.
double bracket_root(const std::function<double(double)>& fn, double lo, double hi,
                    double log_tol = 1e-13);

// Same bisection driven by an integer sign function of s = log t; usable when
// t itself would overflow a double.
double bracket_root_log(const std::function<int(double)>& sign_at, double s_lo, double s_hi,
                        double s_tol = 1e-13);

// Stationary point of the h_tilde surrogate: t0 = beta/(1-beta) with
// beta = b^{a/(a-1*)}.  Requires q = 1*, a > 1*, b < 1; the maximizer of h
// lies in (0, t0).
double critical_t0_concentration(const ProblemParams& params);

// Stationary point of the g_tilde surrogate: t0 = (1*/a)^{b/(b-1)} - 1.
// Requires q = 1*, a < 1*, b > 1; the minimizer of g lies beyond t0.
double critical_t0_vanishing(const ProblemParams& params);

}  // namespace bvmax
