#include "bvmax/classifier.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bvmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool near(double x, double y, double rel_tol) {
  return std::isfinite(y) && std::fabs(x - y) <= rel_tol * std::max({std::fabs(x), std::fabs(y), 1e-300});
}

ThresholdRelation relation_of(const ProblemParams& p, double av, double ac, bool has_ac,
                              double eq_tol) {
  const double alpha = p.alpha;
  if (av > 0.0 && near(alpha, av, eq_tol)) return ThresholdRelation::AtAlphaV;
  if (has_ac && near(alpha, ac, eq_tol)) return ThresholdRelation::AtAlphaC;
  if (av > 0.0 && alpha < av) return ThresholdRelation::BelowAlphaV;
  if (has_ac && std::isfinite(ac) && alpha > ac) return ThresholdRelation::AboveAlphaC;
  if (av == 0.0 && (!has_ac || std::isinf(ac))) return ThresholdRelation::NoThreshold;
  return ThresholdRelation::Between;
}

}  // namespace

std::string to_string(Verdict v) {
  return v == Verdict::Attained ? "attained" : "not-attained";
}

std::string to_string(ThresholdRelation r) {
  switch (r) {
    case ThresholdRelation::BelowAlphaV: return "alpha<alpha_v";
    case ThresholdRelation::AtAlphaV: return "alpha=alpha_v";
    case ThresholdRelation::Between: return "alpha_v<alpha<alpha_c";
    case ThresholdRelation::AtAlphaC: return "alpha=alpha_c";
    case ThresholdRelation::AboveAlphaC: return "alpha>alpha_c";
    case ThresholdRelation::NoThreshold: return "no-threshold";
  }
  return "unknown";
}

RegimeReport classify(const ProblemParams& params, double eq_tol) {
  params.validate();
  if (!(eq_tol > 0.0)) throw std::invalid_argument("eq_tol must be positive");

  RegimeReport rep;
  rep.params = params;
  rep.alpha_v = alpha_v(params);
  const bool crit = params.critical();
  if (crit) rep.alpha_c = alpha_c(params);
  rep.d_alpha = d_alpha(params);

  const double av = rep.alpha_v.value;
  const double ac = crit ? rep.alpha_c->value : kInf;
  rep.relation = relation_of(params, av, ac, crit, eq_tol);

  const double one_star = params.sobolev_conjugate();
  if (crit) {
    const int side_a = side_of(params.a, one_star);
    const int side_b = side_of(params.b, 1.0);
    switch (rep.relation) {
      case ThresholdRelation::NoThreshold:  // a > 1*, b > 1
        rep.verdict = Verdict::Attained;
        rep.case_label = "Thm3(i)";
        break;
      case ThresholdRelation::Between:
        rep.verdict = Verdict::Attained;
        rep.case_label = side_a > 0 ? "Thm3(ii)" : "Thm3(iii)";
        break;
      case ThresholdRelation::BelowAlphaV:
        rep.verdict = Verdict::NotAttained;
        rep.case_label = side_b > 0 ? "Thm3(iii)" : "Thm3(iv)";
        break;
      case ThresholdRelation::AboveAlphaC:
        rep.verdict = Verdict::NotAttained;
        rep.case_label = side_a > 0 ? "Thm3(ii)" : "Thm3(iv)";
        break;
      case ThresholdRelation::AtAlphaC:
        if (side_a > 0) {
          // D_{alpha_c} is attained for b < 1, lost exactly at b = 1.
          rep.verdict = side_b < 0 ? Verdict::Attained : Verdict::NotAttained;
          rep.case_label = "Thm3(v)";
          break;
        }
        [[fallthrough]];  // a <= 1*, b <= 1 has alpha_v = alpha_c
      case ThresholdRelation::AtAlphaV:
        if (side_a == 0) {
          rep.verdict = side_b == 0 ? Verdict::Attained : Verdict::NotAttained;
          rep.case_label = "Thm3(vi)";
        } else {
          rep.verdict = side_b > 0 ? Verdict::Attained : Verdict::NotAttained;
          rep.case_label = "Thm3(vii)";
        }
        break;
    }
  } else {
    const double pivot = params.vanishing_pivot();
    const int side_a = side_of(params.a, pivot);
    switch (rep.relation) {
      case ThresholdRelation::NoThreshold:  // a > N(q-1): alpha_v = 0
        rep.verdict = Verdict::Attained;
        rep.case_label = "Thm1(i)";
        break;
      case ThresholdRelation::Between:
        rep.verdict = Verdict::Attained;
        rep.case_label = "Thm1(ii)";
        break;
      case ThresholdRelation::BelowAlphaV:
        rep.verdict = Verdict::NotAttained;
        rep.case_label = "Thm1(ii)";
        break;
      case ThresholdRelation::AtAlphaV: {
        if (side_a < 0) {
          rep.verdict = Verdict::Attained;
          rep.case_label = "Thm1(iii)";
        } else {
          const bool large_q = side_of(params.q, b0_zero_q(params.dim)) > 0;
          const bool below_b0 =
              large_q && side_of(params.b, critical_b0(params.dim, params.q)) < 0;
          rep.verdict = below_b0 ? Verdict::Attained : Verdict::NotAttained;
          rep.case_label = below_b0 ? "Thm1(iii)" : "Thm1(iv)";
        }
        break;
      }
      default:
        throw std::logic_error("unreachable subcritical relation");
    }
  }
  return rep;
}

double radius_of_t(double t, const ProblemParams& params) {
  params.validate();
  if (!std::isfinite(t) || !(t > 0.0)) throw std::invalid_argument("t must be a positive real");
  const double n = params.dim;
  const double s = std::log(t);
  return std::exp(std::log(n) - s / params.a -
                  (params.a - params.b) / (params.a * params.b) * std::log1p(t));
}

double height_of_t(double t, const ProblemParams& params) {
  params.validate();
  if (!std::isfinite(t) || !(t > 0.0)) throw std::invalid_argument("t must be a positive real");
  const double n = params.dim;
  const double s = std::log(t);
  const double log_mu = n / params.a * s +
                        ((params.a - params.b) * n / (params.a * params.b) - 1.0 / params.b) *
                            std::log1p(t) -
                        std::log(unit_sphere_area(params.dim)) - (n - 1.0) * std::log(n);
  return std::exp(log_mu);
}

MaximizerSet maximizer_set(const RegimeReport& report) {
  MaximizerSet out;
  const ProblemParams& p = report.params;
  if (report.verdict != Verdict::Attained) {
    out.note =
        "no maximizer: the supremum is approached only along vanishing or concentrating "
        "sequences in this regime";
    return out;
  }

  // a = 1*, b = 1, alpha = 1/E: the profile is constant, every ratio maximizes.
  const bool continuum_regime = p.critical() && side_of(p.a, p.sobolev_conjugate()) == 0 &&
                                side_of(p.b, 1.0) == 0 &&
                                report.relation == ThresholdRelation::AtAlphaV;
  std::vector<double> ratios;
  if (continuum_regime || report.d_alpha.plateau) {
    out.continuum = true;
    ratios = {0.1, 1.0, 10.0};
    out.note =
        "every t > 0 maximizes; three canonical ratios are reported; the center is a free "
        "parameter (origin shown)";
  } else {
    const double slack = kAttainSlack * std::max(1.0, std::fabs(report.d_alpha.value));
    for (const auto& c : report.d_alpha.candidates)
      if (c.value >= report.d_alpha.value - slack) ratios.push_back(c.t);
    if (ratios.empty()) {
      out.note =
          "diagnostic: the regime is attained but no interior candidate matched the supremum "
          "numerically";
      return out;
    }
    out.note = "the center is a free parameter (origin shown)";
  }

  for (double t0 : ratios) {
    for (int sign : {+1, -1}) {
      BallMaximizer m;
      m.t0 = t0;
      m.radius = radius_of_t(t0, p);
      m.height = height_of_t(t0, p);
      m.sign = sign;
      m.center.assign(static_cast<std::size_t>(p.dim), 0.0);
      out.maximizers.push_back(std::move(m));
    }
  }
  return out;
}

MaximizerSet maximizer_set(const ProblemParams& params) { return maximizer_set(classify(params)); }

}  // namespace bvmax
