#include "bvmax/constants.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "quadrature.hpp"

using namespace bvmax;
using testref::kPi;

TEST_SUITE("constants") {
  TEST_CASE("unit sphere area matches the recurrence") {
    for (int n = 2; n <= 12; ++n)
      CHECK(unit_sphere_area(n) == doctest::Approx(testref::sphere_area(n)).epsilon(1e-13));
    CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
    CHECK_THROWS_AS(unit_sphere_area(1), std::invalid_argument);
  }

  TEST_CASE("sobolev conjugate") {
    CHECK(sobolev_conjugate(2) == 2.0);
    CHECK(sobolev_conjugate(3) == 1.5);
    CHECK(sobolev_conjugate(5) == 1.25);
    CHECK_THROWS_AS(sobolev_conjugate(1), std::invalid_argument);
  }

  TEST_CASE("interpolation best constant") {
    CHECK(gn_best_constant(2, 2.0) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-14));
    CHECK(gn_best_constant(2, 1.5) ==
          doctest::Approx(std::sqrt(1.0 / (4.0 * kPi))).epsilon(1e-14));
    for (int n = 2; n <= 6; ++n) {
      const double w = testref::sphere_area(n);
      const double expected = std::pow(1.0 / (std::pow(n, n - 1) * w), 1.0 / (n - 1));
      CHECK(mazya_constant(n) == doctest::Approx(expected).epsilon(1e-13));
      CHECK(gn_best_constant(n, sobolev_conjugate(n)) ==
            doctest::Approx(mazya_constant(n)).epsilon(1e-15));
    }
    // q within rounding of the conjugate exponent snaps onto it
    CHECK(gn_best_constant(2, 2.0 * (1.0 + 1e-13)) == gn_best_constant(2, 2.0));
    CHECK_THROWS_AS(gn_best_constant(2, 2.5), std::invalid_argument);
    CHECK_THROWS_AS(gn_best_constant(2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gn_best_constant(2, 0.5), std::invalid_argument);
  }

  TEST_CASE("b0 boundary and its vanishing exponent") {
    CHECK(critical_b0(2, 1.75) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(critical_b0(3, 1.4) == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(b0_zero_q(2) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(b0_zero_q(3) == doctest::Approx(1.25).epsilon(1e-15));
    // b0 crosses zero exactly at q = (2N-1)/(2(N-1))
    CHECK(critical_b0(2, b0_zero_q(2)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(critical_b0(2, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(critical_b0(2, 1.0), std::invalid_argument);
  }

  TEST_CASE("three-way comparison with relative tolerance") {
    CHECK(side_of(1.0, 1.0) == 0);
    CHECK(side_of(1.0 + 1e-13, 1.0) == 0);
    CHECK(side_of(1.0 - 1e-13, 1.0) == 0);
    CHECK(side_of(1.0 + 1e-9, 1.0) == 1);
    CHECK(side_of(1.0 - 1e-9, 1.0) == -1);
    CHECK(side_of(0.0, 0.0) == 0);
    CHECK(side_of(2e12, 1e12) == 1);
    // tolerance scales with magnitude
    CHECK(side_of(1e12 + 1.0, 1e12) == 0);
  }

  TEST_CASE("parameter validation names each violation") {
    ProblemParams p;
    p.dim = 2;
    p.a = 1.0;
    p.b = 1.0;
    p.q = 2.0;
    p.alpha = 1.0;
    CHECK_NOTHROW(p.validate());

    auto bad = p;
    bad.dim = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.a = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.b = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.q = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.q = 2.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.alpha = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.a = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }

  TEST_CASE("criticality and the vanishing pivot") {
    ProblemParams p;
    p.dim = 2;
    p.q = 2.0;
    CHECK(p.critical());
    CHECK(p.vanishing_pivot() == doctest::Approx(2.0));
    p.q = 1.75;
    CHECK_FALSE(p.critical());
    CHECK(p.vanishing_pivot() == doctest::Approx(1.5));
    p.dim = 3;
    p.q = 1.5;
    CHECK(p.critical());
    CHECK(p.vanishing_pivot() == doctest::Approx(1.5));
  }
}
