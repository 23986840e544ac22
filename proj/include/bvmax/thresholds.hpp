#pragma once

#include "bvmax/scalar_opt.hpp"

#include <string>
#include <vector>

namespace bvmax {

enum class ThresholdSource { ClosedForm, Numeric };

// A threshold value together with how it was obtained.  Finite and
// nonnegative, except that the concentration threshold may be +infinity.
struct ExtendedThreshold {
  double value = 0.0;
  ThresholdSource source = ThresholdSource::Numeric;
  // Identifier of the case-analysis clause behind a closed form (or of the
  // numeric regime); matches the classifier's case taxonomy.
  std::string formula;
};

// Vanishing threshold alpha_v = inf_{t>0} g(t) / E_q: below it the supremum
// sticks at the vanishing value 1, above it the problem beats 1.
ExtendedThreshold alpha_v(const ProblemParams& params);

// Concentration threshold alpha_c = sup_{t>0} h(t) / E (critical q only;
// throws std::invalid_argument for subcritical q).  +infinity when b > 1.
ExtendedThreshold alpha_c(const ProblemParams& params);

// Always-numeric recomputations used to cross-check the closed forms.
double alpha_v_numeric(const ProblemParams& params);
double alpha_c_numeric(const ProblemParams& params);

// D_alpha = sup_{t>0} f_alpha(t), with interior candidates and attainment
// evidence from the global optimizer.  value >= 1 always, and >= alpha E at
// the critical q.
ScalarOptResult d_alpha(const ProblemParams& params);

// Parameter limits with proven threshold asymptotics.
enum class ParamLimit {
  ADownZero,         // a -> 0+
  AUpVanishingPivot, // a -> N(q-1)- (critical: a -> 1*-)
  BDownZero,         // b -> 0+
  BUpB0,             // b -> b0- (subcritical boundary line a = N(q-1))
  BDownOne,          // b -> 1+
  BUpOne,            // b -> 1-
  BToInfinity,       // b -> infinity
  ADownOneStar,      // a -> 1*+ (critical)
  AToInfinity,       // a -> infinity (critical)
};

struct AsymptoticRow {
  double param = 0.0;      // the swept parameter value
  double threshold = 0.0;  // alpha_v or alpha_c there
  double target = 0.0;     // proven limit value (may be +infinity)
  double error = 0.0;      // |threshold - target| (+infinity for divergent targets)
};

struct AsymptoticReport {
  ParamLimit limit;
  std::string quantity;  // "alpha_v" or "alpha_c"
  double target = 0.0;
  std::vector<AsymptoticRow> rows;
};

// Evaluates the relevant threshold along a geometric sequence approaching the
// requested limit, starting from `base` (whose other parameters are held
// fixed).  Throws std::invalid_argument when the limit has no proven target in
// the regime of `base`.
AsymptoticReport asymptotic_report(const ProblemParams& base, ParamLimit which, int steps = 6);

}  // namespace bvmax
