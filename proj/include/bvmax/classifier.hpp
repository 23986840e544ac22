#pragma once

#include "bvmax/thresholds.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bvmax {

enum class Verdict { Attained, NotAttained };

enum class ThresholdRelation {
  BelowAlphaV,   // alpha < alpha_v
  AtAlphaV,      // alpha = alpha_v (within eq_tol)
  Between,       // alpha_v < alpha < alpha_c (alpha_c read as +infinity when absent)
  AtAlphaC,      // alpha = alpha_c (within eq_tol)
  AboveAlphaC,   // alpha > alpha_c
  NoThreshold,   // alpha_v = 0 and no finite alpha_c: every alpha behaves the same
};

std::string to_string(Verdict v);
std::string to_string(ThresholdRelation r);

// Full diagnosis of a parameter point: thresholds, supremum, the attainability
// verdict from the case analysis, and which clause produced it.  Clause labels
// Thm1(i)-(iv) cover subcritical q, Thm3(i)-(vii) the critical case; the
// numbering matches the case taxonomy documented in the README.
struct RegimeReport {
  ProblemParams params;
  ExtendedThreshold alpha_v;
  std::optional<ExtendedThreshold> alpha_c;  // critical q only
  ScalarOptResult d_alpha;
  Verdict verdict = Verdict::NotAttained;
  ThresholdRelation relation = ThresholdRelation::NoThreshold;
  std::string case_label;
};

// eq_tol is the relative tolerance for deciding alpha = alpha_v / alpha_c.
RegimeReport classify(const ProblemParams& params, double eq_tol = 1e-9);

// Radius and height of the ball realizing ratio t on the constraint set:
//   r(t) = N / (t^{1/a} (t+1)^{(a-b)/(ab)}),
//   mu(t) = t^{N/a} (t+1)^{(a-b)N/(ab) - 1/b} / (omega_{N-1} N^{N-1}).
// The function mu(t) X_{B_{r(t)}} satisfies the constraint exactly and has
// |.|_TV^a / |.|_1^b = t.
double radius_of_t(double t, const ProblemParams& params);
double height_of_t(double t, const ProblemParams& params);

// One extremal ball: +/- height on a ball of the given radius; the center is a
// free parameter (reported canonically as the origin).
struct BallMaximizer {
  double t0 = 0.0;
  double radius = 0.0;
  double height = 0.0;
  int sign = 1;
  std::vector<double> center;  // dim zeros
};

struct MaximizerSet {
  std::vector<BallMaximizer> maximizers;
  // True when every t > 0 maximizes (constant profile); maximizers then hold
  // canonical samples t0 in {0.1, 1, 10}.
  bool continuum = false;
  std::string note;
};

// Maximizers of an attained regime; empty with a diagnostic note otherwise.
MaximizerSet maximizer_set(const RegimeReport& report);
MaximizerSet maximizer_set(const ProblemParams& params);

}  // namespace bvmax
