#include "bvmax/thresholds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bvmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_expm1(double x) {
  return x > 0.693 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x));
}

// Expands upward from s_start until sign_at flips to +1, then bisects.
double root_above(const ReducedFunctions& rf, int (ReducedFunctions::*sign_at)(double) const,
                  double s_start) {
  double offset = 1.0;
  double s_hi = s_start + offset;
  for (int it = 0; it < 200 && (rf.*sign_at)(s_hi) <= 0; ++it) {
    offset *= 2.0;
    s_hi = s_start + offset;
  }
  auto sgn = [&rf, sign_at](double s) { return (rf.*sign_at)(s); };
  return bracket_root_log(sgn, s_start, s_hi, 1e-13);
}

// Expands downward from s_start until sign_at flips to +1, then bisects.
double root_below(const ReducedFunctions& rf, int (ReducedFunctions::*sign_at)(double) const,
                  double s_start) {
  double offset = 1.0;
  double s_lo = s_start - offset;
  for (int it = 0; it < 200 && (rf.*sign_at)(s_lo) <= 0; ++it) {
    offset *= 2.0;
    s_lo = s_start - offset;
  }
  auto sgn = [&rf, sign_at](double s) { return (rf.*sign_at)(s); };
  return bracket_root_log(sgn, s_lo, s_start, 1e-13);
}

// Interior minimum of g beyond the g_tilde stationary point (q = 1*, a < 1*,
// b > 1).  Works entirely in s = log t, so it survives b arbitrarily close
// to 1 where the minimizer location overflows t itself.
double critical_vanishing_min(const ReducedFunctions& rf) {
  const ProblemParams& p = rf.params();
  const double log1p_t0 = p.b / (p.b - 1.0) * std::log(rf.one_star() / p.a);
  const double s0 = log_expm1(log1p_t0);
  const double s1 = root_above(rf, &ReducedFunctions::sign_g_tilde_log, s0);
  return std::exp(rf.log_g(s1));
}

// Interior maximum of h below the h_tilde stationary point (q = 1*, a > 1*,
// b < 1).
double critical_concentration_max(const ReducedFunctions& rf) {
  const ProblemParams& p = rf.params();
  const double w = p.a / (p.a - rf.one_star()) * std::log(p.b);  // log beta < 0
  const double s0 = w - std::log1p(-std::exp(w));                // log(beta/(1-beta))
  const double s1 = root_below(rf, &ReducedFunctions::sign_h_tilde_log, s0);
  return std::exp(rf.log_h(s1));
}

// Interior minimum of g on the boundary line a = N(q-1) when b < b0: locate
// the zero t2 of phi, then scan-and-refine g over (0, t2], where the minimum
// is proven to sit strictly below the t -> 0 limit 1/b.
double boundary_line_min(const ReducedFunctions& rf) {
  double s_probe = 0.0;
  double offset = 1.0;
  for (int it = 0; it < 200 && rf.sign_phi_log(s_probe) > 0; ++it) {
    s_probe -= offset;
    offset *= 2.0;
  }
  const double s2 = root_above(rf, &ReducedFunctions::sign_phi_log, s_probe);

  const double lo = std::min(s2, 0.0) - 240.0;
  const int n = 4801;
  const double step = (s2 - lo) / (n - 1);
  int best = 0;
  double best_v = kInf;
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) {
    vals[i] = rf.log_g(lo + step * i);
    if (vals[i] < best_v) {
      best_v = vals[i];
      best = i;
    }
  }
  double refined = best_v;
  if (best > 0 && best + 1 < n) {
    // Golden-section polish inside the bracketing cell pair.
    double xl = lo + step * (best - 1);
    double xr = lo + step * (best + 1);
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = xr - inv_phi * (xr - xl);
    double x2 = xl + inv_phi * (xr - xl);
    double f1 = rf.log_g(x1);
    double f2 = rf.log_g(x2);
    for (int it = 0; it < 200 && (xr - xl) > 1e-13; ++it) {
      if (f1 > f2) {
        xl = x1;
        x1 = x2;
        f1 = f2;
        x2 = xl + inv_phi * (xr - xl);
        f2 = rf.log_g(x2);
      } else {
        xr = x2;
        x2 = x1;
        f2 = f1;
        x1 = xr - inv_phi * (xr - xl);
        f1 = rf.log_g(x1);
      }
      refined = std::min(refined, std::min(f1, f2));
    }
  }
  return std::min(std::exp(refined), 1.0 / rf.params().b);
}

}  // namespace

double alpha_v_numeric(const ProblemParams& params) {
  params.validate();
  ReducedFunctions rf(params);
  if (rf.critical()) {
    if (side_of(params.a, rf.one_star()) < 0 && side_of(params.b, 1.0) > 0)
      return critical_vanishing_min(rf) / rf.eq();
  } else if (side_of(params.a, params.vanishing_pivot()) == 0 &&
             side_of(params.q, b0_zero_q(params.dim)) > 0 &&
             side_of(params.b, critical_b0(params.dim, params.q)) < 0) {
    return boundary_line_min(rf) / rf.eq();
  }
  const auto r = global_inf([&rf](double s) { return rf.log_g(s); }, rf.limits(ReducedFn::G), 1e-13);
  return r.value / rf.eq();
}

double alpha_c_numeric(const ProblemParams& params) {
  params.validate();
  ReducedFunctions rf(params);
  if (!rf.critical())
    throw std::invalid_argument("the concentration threshold exists only at the critical q");
  if (side_of(params.a, rf.one_star()) > 0 && side_of(params.b, 1.0) < 0)
    return critical_concentration_max(rf) / rf.eq();
  const auto r = global_sup([&rf](double s) { return rf.log_h(s); }, rf.limits(ReducedFn::H), 1e-13);
  return r.value / rf.eq();
}

ExtendedThreshold alpha_v(const ProblemParams& params) {
  params.validate();
  const double one_star = sobolev_conjugate(params.dim);
  if (params.critical()) {
    const double e = mazya_constant(params.dim);
    const int side_a = side_of(params.a, one_star);
    const int side_b = side_of(params.b, 1.0);
    if (side_a > 0) return {0.0, ThresholdSource::ClosedForm, "Thm4(i): alpha_v = 0"};
    if (side_a == 0)
      return side_b > 0 ? ExtendedThreshold{1.0 / (params.b * e), ThresholdSource::ClosedForm,
                                            "Thm4(ii): alpha_v = 1/(b E)"}
                        : ExtendedThreshold{1.0 / e, ThresholdSource::ClosedForm,
                                            "Thm4(ii): alpha_v = 1/E"};
    if (side_b <= 0) return {1.0 / e, ThresholdSource::ClosedForm, "Thm4(ii): alpha_v = 1/E"};
    return {alpha_v_numeric(params), ThresholdSource::Numeric, "interior minimum of g"};
  }
  const double pivot = params.vanishing_pivot();
  const int side_a = side_of(params.a, pivot);
  if (side_a > 0) return {0.0, ThresholdSource::ClosedForm, "Thm2(i): alpha_v = 0"};
  if (side_a == 0) {
    const bool small_q = side_of(params.q, b0_zero_q(params.dim)) <= 0;
    if (small_q || side_of(params.b, critical_b0(params.dim, params.q)) >= 0) {
      const double eq = gn_best_constant(params.dim, params.q);
      return {1.0 / (params.b * eq), ThresholdSource::ClosedForm, "Thm2(ii): alpha_v = 1/(b E_q)"};
    }
    return {alpha_v_numeric(params), ThresholdSource::Numeric,
            "interior minimum of g below 1/(b E_q)"};
  }
  return {alpha_v_numeric(params), ThresholdSource::Numeric, "interior minimum of g"};
}

ExtendedThreshold alpha_c(const ProblemParams& params) {
  params.validate();
  if (!params.critical())
    throw std::invalid_argument("the concentration threshold exists only at the critical q");
  const double one_star = sobolev_conjugate(params.dim);
  const double e = mazya_constant(params.dim);
  const int side_a = side_of(params.a, one_star);
  const int side_b = side_of(params.b, 1.0);
  if (side_b > 0)
    return {kInf, ThresholdSource::ClosedForm,
            side_a > 0 ? "Thm4(i): alpha_c = inf" : "Thm4(ii): alpha_c = inf"};
  if (side_b == 0)
    return side_a > 0 ? ExtendedThreshold{params.a / (one_star * e), ThresholdSource::ClosedForm,
                                          "Thm4(i): alpha_c = a/(1* E)"}
                      : ExtendedThreshold{1.0 / e, ThresholdSource::ClosedForm,
                                          "Thm4(ii): alpha_c = 1/E"};
  if (side_a <= 0) return {1.0 / e, ThresholdSource::ClosedForm, "Thm4(ii): alpha_c = 1/E"};
  return {alpha_c_numeric(params), ThresholdSource::Numeric, "interior maximum of h"};
}

ScalarOptResult d_alpha(const ProblemParams& params) {
  params.validate();
  ReducedFunctions rf(params);
  return global_sup([&rf](double s) { return rf.log_f(s); }, rf.limits(ReducedFn::F), 1e-13);
}

AsymptoticReport asymptotic_report(const ProblemParams& base, ParamLimit which, int steps) {
  base.validate();
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  const bool crit = base.critical();
  const double one_star = sobolev_conjugate(base.dim);
  const double e = mazya_constant(base.dim);

  AsymptoticReport rep;
  rep.limit = which;

  std::vector<double> seq;
  bool use_alpha_v = true;
  switch (which) {
    case ParamLimit::ADownZero:
      if (crit) {
        if (side_of(base.b, 1.0) <= 0)
          throw std::invalid_argument("a -> 0 at critical q has a proven limit only for b > 1");
        rep.target = 1.0 / e;
      } else {
        rep.target = kInf;
      }
      for (int k = 1; k <= steps; ++k) seq.push_back(base.a * std::pow(10.0, -k));
      break;
    case ParamLimit::AUpVanishingPivot: {
      if (crit) {
        if (side_of(base.b, 1.0) <= 0)
          throw std::invalid_argument("a -> 1*- has a proven limit only for b > 1");
        rep.target = 1.0 / (base.b * e);
      } else {
        const bool small_q = side_of(base.q, b0_zero_q(base.dim)) <= 0;
        if (!small_q && side_of(base.b, critical_b0(base.dim, base.q)) < 0)
          throw std::invalid_argument(
              "a -> N(q-1)- has a proven limit only for b >= b0 or q <= (2N-1)/(2(N-1))");
        rep.target = 1.0 / (base.b * gn_best_constant(base.dim, base.q));
      }
      const double pivot = crit ? one_star : base.dim * (base.q - 1.0);
      for (int k = 1; k <= steps; ++k) seq.push_back(pivot * (1.0 - std::pow(10.0, -k)));
      break;
    }
    case ParamLimit::BDownZero:
      if (crit) {
        if (side_of(base.a, one_star) <= 0)
          throw std::invalid_argument("b -> 0+ at critical q has a proven limit only for a > 1*");
        use_alpha_v = false;
        rep.target = 1.0 / e;
      } else {
        if (side_of(base.a, base.vanishing_pivot()) > 0)
          throw std::invalid_argument("b -> 0+ has a proven limit only for a <= N(q-1)");
        rep.target = kInf;
      }
      for (int k = 1; k <= steps; ++k) seq.push_back(std::min(base.b, 0.5) * std::pow(10.0, -k));
      break;
    case ParamLimit::BUpB0: {
      if (crit || side_of(base.a, base.vanishing_pivot()) != 0 ||
          side_of(base.q, b0_zero_q(base.dim)) <= 0)
        throw std::invalid_argument(
            "b -> b0- requires subcritical q above (2N-1)/(2(N-1)) with a = N(q-1)");
      const double b0 = critical_b0(base.dim, base.q);
      rep.target = 1.0 / (b0 * gn_best_constant(base.dim, base.q));
      for (int k = 1; k <= steps; ++k) seq.push_back(b0 * (1.0 - std::pow(10.0, -k)));
      break;
    }
    case ParamLimit::BDownOne:
      if (!crit || side_of(base.a, one_star) > 0)
        throw std::invalid_argument("b -> 1+ has a proven limit only at critical q with a <= 1*");
      rep.target = 1.0 / e;
      for (int k = 1; k <= steps; ++k) seq.push_back(1.0 + std::pow(10.0, -k));
      break;
    case ParamLimit::BUpOne:
      if (!crit || side_of(base.a, one_star) <= 0)
        throw std::invalid_argument("b -> 1- has a proven limit only at critical q with a > 1*");
      use_alpha_v = false;
      rep.target = base.a / (one_star * e);
      for (int k = 1; k <= steps; ++k) seq.push_back(1.0 - std::pow(10.0, -k));
      break;
    case ParamLimit::BToInfinity:
      if (crit ? side_of(base.a, one_star) > 0 : side_of(base.a, base.vanishing_pivot()) > 0)
        throw std::invalid_argument("b -> infinity has a proven limit only for a <= N(q-1)");
      rep.target = 0.0;
      for (int k = 1; k <= steps; ++k) seq.push_back(std::max(base.b, 1.0) * std::pow(10.0, k));
      break;
    case ParamLimit::ADownOneStar:
      if (!crit || side_of(base.b, 1.0) > 0)
        throw std::invalid_argument("a -> 1*+ has a proven limit only at critical q with b <= 1");
      use_alpha_v = false;
      rep.target = 1.0 / e;
      for (int k = 1; k <= steps; ++k) seq.push_back(one_star * (1.0 + std::pow(10.0, -k)));
      break;
    case ParamLimit::AToInfinity:
      if (!crit || side_of(base.b, 1.0) > 0)
        throw std::invalid_argument(
            "a -> infinity has a proven limit only at critical q with b <= 1");
      use_alpha_v = false;
      rep.target = kInf;
      for (int k = 1; k <= steps; ++k)
        seq.push_back(std::max(base.a, 2.0 * one_star) * std::pow(10.0, k - 1));
      break;
  }

  rep.quantity = use_alpha_v ? "alpha_v" : "alpha_c";
  for (double x : seq) {
    ProblemParams p = base;
    if (which == ParamLimit::ADownZero || which == ParamLimit::AUpVanishingPivot ||
        which == ParamLimit::ADownOneStar || which == ParamLimit::AToInfinity)
      p.a = x;
    else
      p.b = x;
    const double th = use_alpha_v ? alpha_v(p).value : alpha_c(p).value;
    const double err = std::isinf(rep.target) ? kInf : std::fabs(th - rep.target);
    rep.rows.push_back({x, th, rep.target, err});
  }
  return rep;
}

}  // namespace bvmax
