#include "bvmax/scalar_opt.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace bvmax;

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

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_SUITE("scalar_opt") {
  TEST_CASE("interior gaussian bump is found and attained") {
    auto bump = [](double s) { return -(s - 2.0) * (s - 2.0) / 4.0; };
    const auto r = global_sup(bump, {0.0, 0.0});
    CHECK(r.attained);
    CHECK_FALSE(r.plateau);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-13));
    REQUIRE(r.arg.has_value());
    CHECK(*r.arg == doctest::Approx(std::exp(2.0)).epsilon(1e-10));
    REQUIRE(!r.candidates.empty());
    CHECK(r.candidates.front().value == doctest::Approx(1.0).epsilon(1e-13));
  }

  TEST_CASE("two separated bumps both become candidates, best first") {
    auto two = [](double s) {
      const double a = -(s + 3.0) * (s + 3.0);
      const double b = std::log(0.5) - (s - 4.0) * (s - 4.0);
      const double m = std::max(a, b);
      return m + std::log(std::exp(a - m) + std::exp(b - m));
    };
    const auto r = global_sup(two, {0.0, 0.0});
    CHECK(r.attained);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(r.arg.has_value());
    CHECK(*r.arg == doctest::Approx(std::exp(-3.0)).epsilon(1e-10));
    REQUIRE(r.candidates.size() == 2);
    CHECK(r.candidates[0].value > r.candidates[1].value);
    CHECK(r.candidates[1].t == doctest::Approx(std::exp(4.0)).epsilon(1e-10));
    CHECK(r.candidates[1].value == doctest::Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("strictly monotone profile resolves to its endpoint limit") {
    auto rising = [](double s) { return 0.1 * s; };  // t^{0.1}
    const auto sup = global_sup(rising, {0.0, kInf});
    CHECK(std::isinf(sup.value));
    CHECK_FALSE(sup.attained);
    CHECK_FALSE(sup.arg.has_value());
    CHECK(sup.candidates.empty());

    const auto inf = global_inf(rising, {0.0, kInf});
    CHECK(inf.value == 0.0);
    CHECK_FALSE(inf.attained);
    CHECK_FALSE(inf.arg.has_value());
  }

  TEST_CASE("constant profile is reported as an attained plateau at t = 1") {
    auto flat = [](double) { return std::log(3.0); };
    const auto r = global_sup(flat, {3.0, 3.0});
    CHECK(r.plateau);
    CHECK(r.attained);
    CHECK(r.value == doctest::Approx(3.0).epsilon(1e-14));
    REQUIRE(r.arg.has_value());
    CHECK(*r.arg == 1.0);
    REQUIRE(r.candidates.size() == 1);
    CHECK(r.candidates.front().t == 1.0);
  }

  TEST_CASE("a divergent endpoint beats any interior extremum") {
    auto bump = [](double s) { return -s * s; };
    const auto r = global_sup(bump, {kInf, 0.0});
    CHECK(std::isinf(r.value));
    CHECK_FALSE(r.attained);
    CHECK_FALSE(r.arg.has_value());
  }

  TEST_CASE("invalid inputs are rejected") {
    auto flat = [](double) { return 0.0; };
    CHECK_THROWS_AS(global_sup(flat, {0.0, 0.0}, 0.0), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(global_sup(flat, {nan, 0.0}), std::invalid_argument);
    auto poisoned = [nan](double s) { return s > 0.0 ? nan : 0.0; };
    CHECK_THROWS_AS(global_sup(poisoned, {0.0, 0.0}), std::runtime_error);
    auto bottomless = [](double) { return -kInf; };
    CHECK_THROWS_AS(global_inf(bottomless, {0.0, 0.0}), std::runtime_error);
  }

  TEST_CASE("results are deterministic across repeated runs") {
    ReducedFunctions rf(make(2, 1.0, 2.0, 2.0));
    auto obj = [&rf](double s) { return rf.log_g(s); };
    const auto r1 = global_inf(obj, rf.limits(ReducedFn::G));
    const auto r2 = global_inf(obj, rf.limits(ReducedFn::G));
    CHECK(r1.value == r2.value);
    REQUIRE(r1.arg.has_value());
    REQUIRE(r2.arg.has_value());
    CHECK(*r1.arg == *r2.arg);
  }

  TEST_CASE("infimum of the vanishing profile at a known closed form") {
    // g(t) = (sqrt(1+t)-1)(1+t)^{3/2}/t^2 has its minimum 27/32 at t = 8
    ReducedFunctions rf(make(2, 1.0, 2.0, 2.0));
    const auto r = global_inf([&rf](double s) { return rf.log_g(s); }, rf.limits(ReducedFn::G));
    CHECK(r.attained);
    CHECK(r.value == doctest::Approx(27.0 / 32.0).epsilon(1e-13));
    REQUIRE(r.arg.has_value());
    CHECK(*r.arg == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(std::isinf(r.limits.at_zero));
    CHECK(r.limits.at_infinity == doctest::Approx(1.0));
  }

  TEST_CASE("supremum of the concentration profile at a known closed form") {
    // h(t) at a = 4, b = 1/2 peaks at t = 1/8 with value 32/27
    ReducedFunctions rf(make(2, 4.0, 0.5, 2.0));
    const auto r = global_sup([&rf](double s) { return rf.log_h(s); }, rf.limits(ReducedFn::H));
    CHECK(r.attained);
    CHECK(r.value == doctest::Approx(32.0 / 27.0).epsilon(1e-13));
    REQUIRE(r.arg.has_value());
    CHECK(*r.arg == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(r.limits.at_zero == doctest::Approx(1.0));
    CHECK(r.limits.at_infinity == doctest::Approx(0.0));
  }

  TEST_CASE("root bracketing in t and in log t") {
    auto f = [](double t) { return t * t - 5.0; };
    CHECK(bracket_root(f, 1.0, 4.0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK_THROWS_AS(bracket_root(f, 1.0, 2.0), std::invalid_argument);  // same sign
    CHECK_THROWS_AS(bracket_root(f, 0.0, 2.0), std::invalid_argument);  // lo must be > 0

    auto sign_at = [](double s) { return s < 10000.0 ? -1 : 1; };
    CHECK(bracket_root_log(sign_at, 0.0, 20000.0) == doctest::Approx(10000.0).epsilon(1e-12));
    auto zero_at_lo = [](double s) { return s <= 0.0 ? 0 : 1; };
    CHECK(bracket_root_log(zero_at_lo, 0.0, 5.0) == 0.0);
    CHECK_THROWS_AS(bracket_root_log(sign_at, 3.0, 2.0), std::invalid_argument);
  }

  TEST_CASE("stationary anchors of the derivative surrogates") {
    // beta = b^{a/(a-1*)} = 1/4 at a = 4, b = 1/2, N = 2, so t0 = 1/3
    CHECK(critical_t0_concentration(make(2, 4.0, 0.5, 2.0)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    // t0 = (1*/a)^{b/(b-1)} - 1 = 3 at a = 1, b = 2, N = 2
    CHECK(critical_t0_vanishing(make(2, 1.0, 2.0, 2.0)) == doctest::Approx(3.0).epsilon(1e-14));

    // the true extremizers sit on the advertised side of the anchors
    {
      ReducedFunctions rf(make(2, 4.0, 0.5, 2.0));
      const auto r =
          global_sup([&rf](double s) { return rf.log_h(s); }, rf.limits(ReducedFn::H));
      REQUIRE(r.arg.has_value());
      CHECK(*r.arg < critical_t0_concentration(make(2, 4.0, 0.5, 2.0)));
    }
    {
      ReducedFunctions rf(make(2, 1.0, 2.0, 2.0));
      const auto r =
          global_inf([&rf](double s) { return rf.log_g(s); }, rf.limits(ReducedFn::G));
      REQUIRE(r.arg.has_value());
      CHECK(*r.arg > critical_t0_vanishing(make(2, 1.0, 2.0, 2.0)));
    }

    CHECK_THROWS_AS(critical_t0_concentration(make(2, 1.0, 0.5, 2.0)), std::invalid_argument);
    CHECK_THROWS_AS(critical_t0_concentration(make(2, 4.0, 2.0, 2.0)), std::invalid_argument);
    CHECK_THROWS_AS(critical_t0_concentration(make(2, 4.0, 0.5, 1.75)), std::invalid_argument);
    CHECK_THROWS_AS(critical_t0_vanishing(make(2, 3.0, 2.0, 2.0)), std::invalid_argument);
    CHECK_THROWS_AS(critical_t0_vanishing(make(2, 1.0, 0.5, 2.0)), std::invalid_argument);
    CHECK_THROWS_AS(critical_t0_vanishing(make(2, 1.0, 2.0, 1.75)), std::invalid_argument);
  }
}
