#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "check.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "warpcurv/cone_geometry.hpp"
#include "warpcurv/errors.hpp"

using namespace warpcurv;

TEST_CASE("constants") {
  CHECK_NEAR(critical_radius(2), std::sqrt(2.0 / 3.0), 1e-15);
  CHECK_NEAR(alpha_max(2), 4.0 / 27.0, 1e-15);
  CHECK_NEAR(alpha_max(3), 27.0 / 256.0, 1e-15);
  for (int n = 2; n <= 6; ++n) {
    const double v = critical_radius(n);
    CHECK_NEAR(root_function(v, n), alpha_max(n), 1e-15);
    const double h = 1e-6;
    CHECK_NEAR((root_function(v + h, n) - root_function(v - h, n)) / (2 * h), 0.0, 1e-9);
  }
  CHECK_THROWS_AS(alpha_max(1), ParameterError);
}

TEST_CASE("cone data") {
  const ConeData flat = cone_data(0.0, 3);
  CHECK(flat.u_alpha == 1.0);
  CHECK_NEAR(flat.c_alpha, 1.0, 1e-15);
  CHECK_NEAR(flat.cone_angle, 2.0 * M_PI, 1e-14);

  const ConeData top = cone_data(alpha_max(2), 2);
  CHECK_NEAR(top.u_alpha, 0.816497, 1e-6);
  CHECK_NEAR(top.c_alpha, 0.0, 1e-14);

  const ConeData two = cone_data(343.0 / 4096.0, 3);
  CHECK_NEAR(two.u_alpha, std::sqrt(7.0 / 8.0), 1e-15);
  CHECK_NEAR(two.u_alpha, 0.935414, 1e-6);
  CHECK_NEAR(two.c_alpha, 0.5, 1e-14);

  CHECK_THROWS_AS(cone_data(0.2, 3), ParameterError);
}

TEST_CASE("alpha from a cone angle") {
  CHECK_NEAR(alpha_for_degree(2, 3), 343.0 / 4096.0, 1e-16);
  CHECK_NEAR(alpha_for_degree(2, 3), 0.0837402, 1e-7);
  CHECK_NEAR(alpha_for_degree(3, 2), 98.0 / 729.0, 1e-16);
  CHECK(alpha_for_degree(1, 4) == 0.0);
  CHECK_NEAR(alpha_for_cone_angle(1.0, 5), 0.0, 1e-16);
  CHECK_THROWS_AS(alpha_for_cone_angle(0.0, 3), ParameterError);
  CHECK_THROWS_AS(alpha_for_cone_angle(1.5, 3), ParameterError);
  CHECK_THROWS_AS(alpha_for_degree(0, 3), ParameterError);

  for (int n = 2; n <= 5; ++n)
    for (int d = 2; d <= 12; ++d) CHECK_NEAR(cone_data(alpha_for_degree(d, n), n).c_alpha, 1.0 / d, 1e-12);
}

TEST_CASE("largest root") {
  for (int n = 2; n <= 5; ++n) {
    for (double alpha : {-2.0, -0.3, 0.0, 0.2 * alpha_max(n), 0.99 * alpha_max(n)}) {
      const double u = largest_root(alpha, n);
      CHECK_NEAR(u * u - 1.0 + alpha / std::pow(u, 2 * n), 0.0, 1e-14);
      // nothing larger vanishes: V > 0 just beyond
      const double beyond = u * 1.001;
      CHECK(beyond * beyond - 1.0 + alpha / std::pow(beyond, 2 * n) > 0.0);
    }
  }
}

TEST_CASE("monotone in alpha") {
  std::mt19937_64 rng(42);
  for (int n : {2, 3}) {
    std::uniform_real_distribution<double> dist(-0.5, alpha_max(n));
    for (int i = 0; i < 100; ++i) {
      double a1 = dist(rng), a2 = dist(rng);
      if (a1 > a2) std::swap(a1, a2);
      if (a1 == a2) continue;
      const ConeData c1 = cone_data(a1, n), c2 = cone_data(a2, n);
      CHECK(c1.u_alpha > c2.u_alpha);
      CHECK(c1.c_alpha > c2.c_alpha);
    }
  }
}

TEST_CASE("numeric cone angle") {
  CHECK_NEAR(cone_angle_numeric(343.0 / 4096.0, 3, 1e-6), 0.5, 1e-4);
  CHECK_NEAR(cone_angle_numeric(25.0 / 216.0, 2, 1e-6), 0.5, 1e-4);
  CHECK_NEAR(cone_data(25.0 / 216.0, 2).c_alpha, 0.5, 1e-14);
  CHECK_NEAR(cone_angle_numeric(1e-10, 3, 1e-6), 1.0, 1e-4);
  CHECK_THROWS_AS(cone_angle_numeric(alpha_max(3), 3, 1e-6), ParameterError);
  CHECK_THROWS_AS(cone_angle_numeric(0.05, 3, 0.0), ParameterError);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 5}, {3, 3}, {4, 2}, {5, 7}}) {
    const double alpha = alpha_for_degree(d, n);
    CHECK_NEAR(cone_angle_numeric(alpha, n, 1e-6), 1.0 / d, 1e-4);
  }
}

TEST_CASE("metric deviation") {
  const MetricDeviation m = metric_deviation(0.1, 2, 2.0);
  CHECK_NEAR(m.measured, 0.1 / 16.0 / 3.0, 1e-15);
  CHECK_NEAR(m.measured, 0.002083, 1e-6);
  CHECK_NEAR(m.bound, 0.0125, 1e-15);

  const MetricDeviation zero = metric_deviation(0.0, 3, 4.0);
  CHECK(zero.measured == 0.0);
  CHECK(zero.bound == 0.0);
  CHECK_THROWS_AS(metric_deviation(0.1, 2, 1.2), DomainError);

  for (int n = 2; n <= 4; ++n) {
    const double alpha = 0.5 * alpha_max(n);
    for (double u = 1.5; u <= 20.0; u += 0.25) {
      const MetricDeviation d = metric_deviation(alpha, n, u);
      CHECK(d.measured <= 2.0 * alpha / std::pow(u, 2 * n));
    }
    // least-squares slope of log(measured) against r = arccosh u on [3, 20]
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (double u = 3.0; u <= 20.0; u += 0.5) {
      const double x = std::acosh(u), y = std::log(metric_deviation(alpha, n, u).measured);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++count;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    CAPTURE(n);
    CAPTURE(slope);
    CHECK(slope <= -2.0 * n * 0.95);
  }
}
