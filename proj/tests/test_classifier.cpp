#include "bvmax/classifier.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "quadrature.hpp"

using namespace bvmax;
using testref::kPi;

namespace {

ProblemParams make(int n, double a, double b, double q, double alpha = 1.0) {
  ProblemParams p;
  p.dim = n;
  p.a = a;
  p.b = b;
  p.q = q;
  p.alpha = alpha;
  return p;
}

// Norms of the ball indicator mu X_{B_r} in closed form.
struct BallNorms {
  double tv, l1, lq_q;
};

BallNorms ball_norms(const ProblemParams& p, double r, double mu) {
  const double omega = unit_sphere_area(p.dim);
  BallNorms out;
  out.tv = mu * omega * std::pow(r, p.dim - 1.0);
  out.l1 = mu * omega / p.dim * std::pow(r, double(p.dim));
  out.lq_q = std::pow(mu, p.q) * omega / p.dim * std::pow(r, double(p.dim));
  return out;
}

void check_maximizer_consistency(const RegimeReport& rep, const MaximizerSet& set) {
  for (const auto& m : set.maximizers) {
    CHECK(m.radius > 0.0);
    CHECK(m.height > 0.0);
    CHECK((m.sign == 1 || m.sign == -1));
    REQUIRE(m.center.size() == static_cast<std::size_t>(rep.params.dim));
    for (double c : m.center) CHECK(c == 0.0);
    const auto n = ball_norms(rep.params, m.radius, m.height);
    const double constraint = std::pow(n.tv, rep.params.a) + std::pow(n.l1, rep.params.b);
    CHECK(constraint == doctest::Approx(1.0).epsilon(1e-12));
    const double ratio = std::pow(n.tv, rep.params.a) / std::pow(n.l1, rep.params.b);
    CHECK(ratio == doctest::Approx(m.t0).epsilon(1e-10));
    const double value = n.l1 + rep.params.alpha * n.lq_q;
    CHECK(value == doctest::Approx(rep.d_alpha.value).epsilon(1e-10));
  }
}

}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("no-threshold regime is always attained") {
    const auto rep = classify(make(2, 3.0, 2.0, 2.0, 1.0));
    CHECK(rep.relation == ThresholdRelation::NoThreshold);
    CHECK(rep.verdict == Verdict::Attained);
    CHECK(rep.case_label == "Thm3(i)");
    CHECK(rep.alpha_v.value == 0.0);
    REQUIRE(rep.alpha_c.has_value());
    CHECK(std::isinf(rep.alpha_c->value));
    CHECK(rep.d_alpha.value == doctest::Approx(1.0002984471773748).epsilon(1e-13));

    const auto set = maximizer_set(rep);
    CHECK_FALSE(set.continuum);
    REQUIRE(set.maximizers.size() == 2);  // one ratio, both signs
    CHECK(set.maximizers[0].sign != set.maximizers[1].sign);
    check_maximizer_consistency(rep, set);
  }

  TEST_CASE("large a with small b crosses the concentration threshold") {
    const double ac = alpha_c(make(2, 3.0, 0.5, 2.0)).value;
    REQUIRE(std::isfinite(ac));

    const auto mid = classify(make(2, 3.0, 0.5, 2.0, 1.0));
    CHECK(mid.relation == ThresholdRelation::Between);
    CHECK(mid.verdict == Verdict::Attained);
    CHECK(mid.case_label == "Thm3(ii)");

    const auto above = classify(make(2, 3.0, 0.5, 2.0, 2.0 * ac));
    CHECK(above.relation == ThresholdRelation::AboveAlphaC);
    CHECK(above.verdict == Verdict::NotAttained);
    CHECK(above.case_label == "Thm3(ii)");
    CHECK(maximizer_set(above).maximizers.empty());
    CHECK_FALSE(maximizer_set(above).note.empty());

    // exactly at alpha_c with b < 1 the supremum is still attained
    const auto at = classify(make(2, 3.0, 0.5, 2.0, ac));
    CHECK(at.relation == ThresholdRelation::AtAlphaC);
    CHECK(at.verdict == Verdict::Attained);
    CHECK(at.case_label == "Thm3(v)");
    check_maximizer_consistency(at, maximizer_set(at));
  }

  TEST_CASE("at alpha_c with b = 1 attainment is lost") {
    const auto rep = classify(make(2, 3.0, 1.0, 2.0, 6.0 * kPi));
    CHECK(rep.relation == ThresholdRelation::AtAlphaC);
    CHECK(rep.verdict == Verdict::NotAttained);
    CHECK(rep.case_label == "Thm3(v)");
    CHECK(maximizer_set(rep).maximizers.empty());
  }

  TEST_CASE("small a with large b crosses the vanishing threshold") {
    const double av = 27.0 * kPi / 8.0;

    const auto below = classify(make(2, 1.0, 2.0, 2.0, 5.0));
    CHECK(below.relation == ThresholdRelation::BelowAlphaV);
    CHECK(below.verdict == Verdict::NotAttained);
    CHECK(below.case_label == "Thm3(iii)");
    CHECK(below.d_alpha.value == doctest::Approx(1.0).epsilon(1e-12));

    const auto above = classify(make(2, 1.0, 2.0, 2.0, 12.0));
    CHECK(above.relation == ThresholdRelation::Between);
    CHECK(above.verdict == Verdict::Attained);
    CHECK(above.case_label == "Thm3(iii)");
    check_maximizer_consistency(above, maximizer_set(above));

    // at alpha_v with a < 1*, b > 1: attained
    const auto at = classify(make(2, 1.0, 2.0, 2.0, av));
    CHECK(at.relation == ThresholdRelation::AtAlphaV);
    CHECK(at.verdict == Verdict::Attained);
    CHECK(at.case_label == "Thm3(vii)");
  }

  TEST_CASE("at alpha_v with a = 1* attainment depends on b") {
    const auto lost = classify(make(2, 2.0, 2.0, 2.0, 2.0 * kPi));
    CHECK(lost.relation == ThresholdRelation::AtAlphaV);
    CHECK(lost.verdict == Verdict::NotAttained);
    CHECK(lost.case_label == "Thm3(vi)");

    const auto between = classify(make(2, 2.0, 2.0, 2.0, 2.0 * kPi + 1.0));
    CHECK(between.relation == ThresholdRelation::Between);
    CHECK(between.verdict == Verdict::Attained);
    CHECK(between.case_label == "Thm3(iii)");

    const auto lost_small_b = classify(make(2, 2.0, 0.5, 2.0, 4.0 * kPi));
    CHECK(lost_small_b.relation == ThresholdRelation::AtAlphaV);
    CHECK(lost_small_b.verdict == Verdict::NotAttained);
    CHECK(lost_small_b.case_label == "Thm3(vi)");
  }

  TEST_CASE("the continuum point a = 1*, b = 1, alpha = 1/E") {
    const auto rep = classify(make(2, 2.0, 1.0, 2.0, 4.0 * kPi));
    CHECK(rep.relation == ThresholdRelation::AtAlphaV);
    CHECK(rep.verdict == Verdict::Attained);
    CHECK(rep.case_label == "Thm3(vi)");
    CHECK(rep.d_alpha.plateau);

    const auto set = maximizer_set(rep);
    CHECK(set.continuum);
    REQUIRE(set.maximizers.size() == 6);  // ratios {0.1, 1, 10} x both signs
    CHECK(set.maximizers[0].t0 == doctest::Approx(0.1));
    CHECK(set.maximizers[0].radius == doctest::Approx(6.0302268915552713).epsilon(1e-13));
    CHECK(set.maximizers[0].height == doctest::Approx(1.0 / (40.0 * kPi)).epsilon(1e-13));
    check_maximizer_consistency(rep, set);
  }

  TEST_CASE("coincident thresholds for a < 1* with b <= 1") {
    const auto below = classify(make(2, 1.0, 1.0, 2.0, 5.0));
    CHECK(below.relation == ThresholdRelation::BelowAlphaV);
    CHECK(below.verdict == Verdict::NotAttained);
    CHECK(below.case_label == "Thm3(iv)");

    const auto above = classify(make(2, 1.0, 1.0, 2.0, 20.0));
    CHECK(above.relation == ThresholdRelation::AboveAlphaC);
    CHECK(above.verdict == Verdict::NotAttained);
    CHECK(above.case_label == "Thm3(iv)");

    const auto at = classify(make(2, 1.0, 1.0, 2.0, 4.0 * kPi));
    CHECK(at.relation == ThresholdRelation::AtAlphaV);
    CHECK(at.verdict == Verdict::NotAttained);
    CHECK(at.case_label == "Thm3(vii)");

    const auto at_small_b = classify(make(2, 1.0, 0.5, 2.0, 4.0 * kPi));
    CHECK(at_small_b.relation == ThresholdRelation::AtAlphaV);
    CHECK(at_small_b.verdict == Verdict::NotAttained);
    CHECK(at_small_b.case_label == "Thm3(vii)");
  }

  TEST_CASE("equality tolerance is respected and adjustable") {
    // alpha differs from 4 pi by ~3e-10 relative: inside the default tolerance
    const auto near_at = classify(make(2, 2.0, 1.0, 2.0, 12.566370614));
    CHECK(near_at.relation == ThresholdRelation::AtAlphaV);
    CHECK(near_at.case_label == "Thm3(vi)");

    // with a much tighter tolerance the same point classifies as strictly below
    const auto strict = classify(make(2, 2.0, 1.0, 2.0, 12.566370614), 1e-13);
    CHECK(strict.relation == ThresholdRelation::BelowAlphaV);
    CHECK(strict.case_label == "Thm3(iv)");

    CHECK_THROWS_AS(classify(make(2, 1.0, 1.0, 2.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(classify(make(2, 1.0, 1.0, 2.0), -1.0), std::invalid_argument);
  }

  TEST_CASE("subcritical taxonomy") {
    // a above the pivot: no threshold, always attained
    const auto i1 = classify(make(2, 1.5, 1.0, 1.5, 0.3));
    CHECK(i1.relation == ThresholdRelation::NoThreshold);
    CHECK(i1.verdict == Verdict::Attained);
    CHECK(i1.case_label == "Thm1(i)");
    CHECK_FALSE(i1.alpha_c.has_value());
    check_maximizer_consistency(i1, maximizer_set(i1));

    // a at the pivot: threshold 1/(b E_q), attained strictly above it only
    const double av = 2.0 * std::sqrt(kPi);
    const auto below = classify(make(2, 1.0, 1.0, 1.5, 1.0));
    CHECK(below.relation == ThresholdRelation::BelowAlphaV);
    CHECK(below.verdict == Verdict::NotAttained);
    CHECK(below.case_label == "Thm1(ii)");

    const auto above = classify(make(2, 1.0, 1.0, 1.5, 5.0));
    CHECK(above.relation == ThresholdRelation::Between);
    CHECK(above.verdict == Verdict::Attained);
    CHECK(above.case_label == "Thm1(ii)");
    check_maximizer_consistency(above, maximizer_set(above));

    const auto at_pivot = classify(make(2, 1.0, 1.0, 1.5, av));
    CHECK(at_pivot.relation == ThresholdRelation::AtAlphaV);
    CHECK(at_pivot.verdict == Verdict::NotAttained);
    CHECK(at_pivot.case_label == "Thm1(iv)");

    // a below the pivot: at alpha_v the supremum is attained
    const double av3 = alpha_v(make(2, 0.8, 1.0, 1.5)).value;
    const auto at_below = classify(make(2, 0.8, 1.0, 1.5, av3));
    CHECK(at_below.relation == ThresholdRelation::AtAlphaV);
    CHECK(at_below.verdict == Verdict::Attained);
    CHECK(at_below.case_label == "Thm1(iii)");
    check_maximizer_consistency(at_below, maximizer_set(at_below));

    // pivot line with q above (2N-1)/(2(N-1)): attainment at alpha_v flips at b0
    const double av4 = alpha_v(make(2, 1.5, 0.25, 1.75)).value;
    const auto sharp = classify(make(2, 1.5, 0.25, 1.75, av4));
    CHECK(sharp.relation == ThresholdRelation::AtAlphaV);
    CHECK(sharp.verdict == Verdict::Attained);
    CHECK(sharp.case_label == "Thm1(iii)");

    const double av5 = alpha_v(make(2, 1.5, 0.75, 1.75)).value;
    const auto blunt = classify(make(2, 1.5, 0.75, 1.75, av5));
    CHECK(blunt.relation == ThresholdRelation::AtAlphaV);
    CHECK(blunt.verdict == Verdict::NotAttained);
    CHECK(blunt.case_label == "Thm1(iv)");
  }

  TEST_CASE("relation and verdict names") {
    CHECK(to_string(Verdict::Attained) == "attained");
    CHECK(to_string(Verdict::NotAttained) == "not-attained");
    CHECK(to_string(ThresholdRelation::BelowAlphaV) == "alpha<alpha_v");
    CHECK(to_string(ThresholdRelation::AtAlphaV) == "alpha=alpha_v");
    CHECK(to_string(ThresholdRelation::Between) == "alpha_v<alpha<alpha_c");
    CHECK(to_string(ThresholdRelation::AtAlphaC) == "alpha=alpha_c");
    CHECK(to_string(ThresholdRelation::AboveAlphaC) == "alpha>alpha_c");
    CHECK(to_string(ThresholdRelation::NoThreshold) == "no-threshold");
  }

  TEST_CASE("ball geometry of a given ratio") {
    // a = b = 1: r(1) = N, mu(1) = 2^{-1/b}... frozen closed forms at N = 2
    const auto p11 = make(2, 1.0, 1.0, 2.0);
    CHECK(radius_of_t(1.0, p11) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(height_of_t(1.0, p11) == doctest::Approx(1.0 / (8.0 * kPi)).epsilon(1e-14));

    const auto p21 = make(2, 2.0, 1.0, 2.0);
    CHECK(radius_of_t(1.0, p21) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(height_of_t(1.0, p21) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-14));

    // the advertised exact properties, across parameters and ratios
    for (const auto& p : {make(2, 1.0, 2.0, 2.0), make(3, 1.5, 0.7, 1.4),
                          make(2, 4.0, 0.5, 2.0), make(4, 2.5, 1.5, 1.25)}) {
      for (double t : {1e-4, 0.1, 1.0, 10.0, 1e4}) {
        const double r = radius_of_t(t, p);
        const double mu = height_of_t(t, p);
        const auto n = ball_norms(p, r, mu);
        CHECK(std::pow(n.tv, p.a) + std::pow(n.l1, p.b) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::pow(n.tv, p.a) / std::pow(n.l1, p.b) == doctest::Approx(t).epsilon(1e-10));
      }
    }

    CHECK_THROWS_AS(radius_of_t(0.0, p11), std::invalid_argument);
    CHECK_THROWS_AS(height_of_t(-1.0, p11), std::invalid_argument);
  }

  TEST_CASE("maximizer set from parameters matches the report overload") {
    const auto p = make(2, 3.0, 2.0, 2.0, 1.0);
    const auto via_params = maximizer_set(p);
    const auto via_report = maximizer_set(classify(p));
    REQUIRE(via_params.maximizers.size() == via_report.maximizers.size());
    for (std::size_t i = 0; i < via_params.maximizers.size(); ++i) {
      CHECK(via_params.maximizers[i].t0 == via_report.maximizers[i].t0);
      CHECK(via_params.maximizers[i].radius == via_report.maximizers[i].radius);
      CHECK(via_params.maximizers[i].sign == via_report.maximizers[i].sign);
    }
  }
}
