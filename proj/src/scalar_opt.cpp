#include "bvmax/scalar_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bvmax {

namespace {

constexpr double kInvPhi = 0.6180339887498949;

struct LogPoint {
  double s = 0.0;
  double v = 0.0;  // signed log-value (sign = +1 for sup, -1 for inf)
};

// Golden-section ascent of sign*f over [lo, hi], never returning less than the
// seeded grid point.  Iteration count is fixed by the tolerance, so results
// are bit-identical across runs.
LogPoint golden_refine(const LogObjective& f, double sign, double lo, double hi, LogPoint seed,
                       double tol) {
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = sign * f(x1);
  double f2 = sign * f(x2);
  LogPoint best = seed;
  auto consider = [&best](double s, double v) {
    if (v > best.v) best = {s, v};
  };
  consider(x1, f1);
  consider(x2, f2);
  for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = sign * f(x2);
      consider(x2, f2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = sign * f(x1);
      consider(x1, f1);
    }
  }
  return best;
}

ScalarOptResult run_global(const LogObjective& f, const EndpointLimits& limits, double tol,
                           bool maximize) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (std::isnan(limits.at_zero) || std::isnan(limits.at_infinity))
    throw std::invalid_argument("endpoint limits must not be NaN");
  const double sign = maximize ? 1.0 : -1.0;

  std::vector<double> s(kGridPoints);
  std::vector<double> v(kGridPoints);
  const double step = (kGridLogHi - kGridLogLo) / (kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) {
    s[i] = kGridLogLo + step * i;
    v[i] = f(s[i]);
    if (!std::isfinite(v[i]))
      throw std::runtime_error("objective returned a non-finite value on the search grid");
  }

  ScalarOptResult out;
  out.limits = limits;

  const auto [mn_it, mx_it] = std::minmax_element(v.begin(), v.end());
  if (*mx_it - *mn_it <= kPlateauTol) {
    // Constant profile: every t is extremal; report the canonical point t = 1.
    const double val = std::exp(f(0.0));
    out.value = val;
    out.arg = 1.0;
    out.attained = true;
    out.plateau = true;
    out.candidates = {{1.0, val}};
    return out;
  }

  std::vector<LogPoint> refined;
  for (int i = 1; i + 1 < kGridPoints; ++i) {
    const double vm = sign * v[i - 1];
    const double vi = sign * v[i];
    const double vp = sign * v[i + 1];
    if (vi >= vm && vi >= vp && (vi > vm || vi > vp))
      refined.push_back(golden_refine(f, sign, s[i - 1], s[i + 1], {s[i], vi}, tol));
  }
  std::sort(refined.begin(), refined.end(), [](const LogPoint& x, const LogPoint& y) {
    return x.v > y.v || (x.v == y.v && x.s < y.s);
  });
  std::vector<LogPoint> kept;
  for (const auto& c : refined) {
    const bool dup = std::any_of(kept.begin(), kept.end(),
                                 [&c](const LogPoint& k) { return std::fabs(k.s - c.s) < 1e-6; });
    if (!dup) kept.push_back(c);
  }
  for (const auto& c : kept) out.candidates.push_back({std::exp(c.s), std::exp(sign * c.v)});

  const double lim_best = maximize ? std::max(limits.at_zero, limits.at_infinity)
                                   : std::min(limits.at_zero, limits.at_infinity);
  const double best_interior =
      kept.empty() ? (maximize ? -std::numeric_limits<double>::infinity()
                               : std::numeric_limits<double>::infinity())
                   : out.candidates.front().value;
  out.value = kept.empty() ? lim_best
                           : (maximize ? std::max(best_interior, lim_best)
                                       : std::min(best_interior, lim_best));
  const double slack = kAttainSlack * std::max(1.0, std::fabs(out.value));
  if (!kept.empty() && std::isfinite(best_interior)) {
    out.attained = maximize ? best_interior >= lim_best + slack : best_interior <= lim_best - slack;
    if (out.attained || std::fabs(best_interior - out.value) <= slack)
      out.arg = out.candidates.front().t;
  }
  return out;
}

}  // namespace

ScalarOptResult global_sup(const LogObjective& log_objective, const EndpointLimits& limits,
                           double tol) {
  return run_global(log_objective, limits, tol, true);
}

ScalarOptResult global_inf(const LogObjective& log_objective, const EndpointLimits& limits,
                           double tol) {
  return run_global(log_objective, limits, tol, false);
}

double bracket_root_log(const std::function<int(double)>& sign_at, double s_lo, double s_hi,
                        double s_tol) {
  if (!(s_lo < s_hi) || !std::isfinite(s_lo) || !std::isfinite(s_hi))
    throw std::invalid_argument("bracket endpoints must be finite with lo < hi");
  if (!(s_tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const int sign_lo = sign_at(s_lo);
  const int sign_hi = sign_at(s_hi);
  if (sign_lo == 0) return s_lo;
  if (sign_hi == 0) return s_hi;
  if (sign_lo == sign_hi)
    throw std::invalid_argument("bracket_root requires opposite signs at the endpoints");
  for (int it = 0; it < 4000 && s_hi - s_lo > s_tol; ++it) {
    const double mid = 0.5 * (s_lo + s_hi);
    const int sm = sign_at(mid);
    if (sm == 0) return mid;
    (sm == sign_lo ? s_lo : s_hi) = mid;
  }
  return 0.5 * (s_lo + s_hi);
}

double bracket_root(const std::function<double(double)>& fn, double lo, double hi,
                    double log_tol) {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi))
    throw std::invalid_argument("bracket endpoints must satisfy 0 < lo < hi");
  auto sign_at = [&fn](double s) {
    const double y = fn(std::exp(s));
    if (std::isnan(y)) throw std::invalid_argument("bracketed function returned NaN");
    return y > 0.0 ? 1 : (y < 0.0 ? -1 : 0);
  };
  return std::exp(bracket_root_log(sign_at, std::log(lo), std::log(hi), log_tol));
}

double critical_t0_concentration(const ProblemParams& params) {
  params.validate();
  const double one_star = params.sobolev_conjugate();
  if (!params.critical() || side_of(params.a, one_star) <= 0 || side_of(params.b, 1.0) >= 0)
    throw std::invalid_argument(
        "the concentration stationary point requires q = 1*, a > 1*, b < 1");
  const double beta = std::exp(params.a / (params.a - one_star) * std::log(params.b));
  return beta / (1.0 - beta);
}

double critical_t0_vanishing(const ProblemParams& params) {
  params.validate();
  const double one_star = params.sobolev_conjugate();
  if (!params.critical() || side_of(params.a, one_star) >= 0 || side_of(params.b, 1.0) <= 0)
    throw std::invalid_argument("the vanishing stationary point requires q = 1*, a < 1*, b > 1");
  return std::expm1(params.b / (params.b - 1.0) * std::log(one_star / params.a));
}

}  // namespace bvmax
