#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "check.hpp"

#include <cmath>
#include <vector>

#include "warpcurv/cone_geometry.hpp"
#include "warpcurv/errors.hpp"
#include "warpcurv/warp_profiles.hpp"

using namespace warpcurv;

TEST_CASE("Einstein profile values") {
  const EinsteinWarp plain = einstein_profile(2, 0.0);
  const WarpValue p = plain.evaluate(2.0);
  CHECK(p.v == 3.0);
  CHECK(p.dv == 4.0);
  CHECK(p.d2v == 2.0);

  // 0.44 + 0.1 / 1.2^4
  const WarpValue w = einstein_profile(2, 0.1).evaluate(1.2);
  CHECK_NEAR(w.v, 0.44 + 0.1 / 2.0736, 1e-15);
  CHECK_NEAR(w.v, 0.4882253, 1e-7);
  CHECK_NEAR(w.dv, 2.4 - 0.4 / std::pow(1.2, 5), 1e-14);
  CHECK_NEAR(w.d2v, 2.0 + 2.0 / std::pow(1.2, 6), 1e-14);

  const EinsteinWarp e = einstein_profile(3, 343.0 / 4096.0);
  CHECK_NEAR(e.u_alpha(), 0.935414, 1e-6);
  CHECK_NEAR(e.u_alpha(), std::sqrt(7.0 / 8.0), 1e-15);
  CHECK_NEAR(e.evaluate(e.u_alpha()).v, 0.0, 1e-15);
  CHECK(e.domain_lower() == e.u_alpha());
}

TEST_CASE("profiles beyond alpha_max are rejected") {
  CHECK_THROWS_AS(einstein_profile(3, 0.2), ParameterError);
  CHECK_THROWS_AS(einstein_profile(1, 0.0), ParameterError);
  CHECK_NOTHROW(einstein_profile(3, alpha_max(3)));
}

TEST_CASE("2 W W' = V' along the Einstein family") {
  for (int n = 2; n <= 5; ++n) {
    const EinsteinWarp e = einstein_profile(n, 0.6 * alpha_max(n));
    for (double u = e.u_alpha() + 0.05; u < 6.0; u += 0.37) {
      const WarpValue v = e.evaluate(u);
      const double h = 1e-6 * u;
      const double w = std::sqrt(v.v);
      const double dw = (std::sqrt(e.evaluate(u + h).v) - std::sqrt(e.evaluate(u - h).v)) / (2 * h);
      CHECK(rel_close(2.0 * w * dw, v.dv, 1e-8));
    }
  }
}

TEST_CASE("ode residual") {
  CHECK(ode_residual(PlainHyperbolic{}, 2, 1.7) == 0.0);
  CHECK(ode_residual(PlainHyperbolic{}, 5, 1.7) == 0.0);
  CHECK(std::abs(ode_residual(einstein_profile(2, 0.1), 2, 1.3)) <= 1e-12);

  const FunctionWarp square([](double u) { return WarpValue{u * u, 2 * u, 2.0}; }, 0.0, "u^2");
  CHECK_NEAR(ode_residual(square, 2, 2.0), 2.0, 1e-14);

  const std::vector<double> fractions{-0.5, -0.01, 0.0, 0.05, 0.9};
  for (int n = 2; n <= 5; ++n) {
    for (double f : fractions) {
      // negative entries are absolute alphas, positive ones fractions of alpha_max
      const double alpha = f < 0 ? f : f * alpha_max(n);
      const EinsteinWarp e = einstein_profile(n, alpha);
      const double lo = std::log(e.u_alpha()), hi = std::log(10.0);
      for (int i = 1; i <= 50; ++i) {
        const double u = std::exp(lo + (hi - lo) * i / 50.0);
        CHECK(std::abs(ode_residual(e, n, u)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("solving from an initial condition") {
  CHECK(solve_einstein_from_condition(2, 1.0, 0.0).alpha() == 0.0);
  CHECK_THROWS_AS(solve_einstein_from_condition(2, 2.0, 3.1), ParameterError);
  CHECK_NEAR(solve_einstein_from_condition(3, 0.935414, 0.0).alpha(), 343.0 / 4096.0, 1e-6);
  CHECK_THROWS_AS(solve_einstein_from_condition(2, 0.0, 1.0), ParameterError);

  for (int n = 2; n <= 4; ++n) {
    const EinsteinWarp e = einstein_profile(n, 0.3 * alpha_max(n));
    for (double u0 : {1.1, 1.7, 3.0}) {
      const double v0 = e.evaluate(u0).v;
      const EinsteinWarp back = solve_einstein_from_condition(n, u0, v0);
      CHECK_NEAR(back.evaluate(u0).v, v0, 1e-13 * std::max(1.0, v0));
    }
  }
}

TEST_CASE("radial profile") {
  const auto plain = radial_profile(einstein_profile(4, 0.0), 5.0, 1e-3);
  REQUIRE(plain.size() == 5001);
  CHECK_NEAR(plain[1000].r, 1.0, 1e-12);
  CHECK_NEAR(plain[1000].f, std::cosh(1.0), 1e-8);
  CHECK_NEAR(plain[1000].f, 1.543081, 1e-6);
  double cosh_err = 0.0;
  for (const auto& s : plain) cosh_err = std::max(cosh_err, std::abs(s.f - std::cosh(s.r)));
  CHECK(cosh_err <= 1e-8);

  const EinsteinWarp e = einstein_profile(3, 343.0 / 4096.0);
  const auto path = radial_profile(e, 5.0, 1e-3);
  CHECK_NEAR(path.front().f, 0.935414, 1e-6);
  CHECK(path.front().f1 == 0.0);
  double energy = 0.0, gh = 0.0;
  for (const auto& s : path) {
    energy = std::max(energy, std::abs(s.f1 * s.f1 - e.evaluate(s.f).v));
    gh = std::max(gh, std::abs(gh_ode_residual(s.f, s.f1, s.f2, 3)));
    CHECK(s.f2 == doctest::Approx(0.5 * e.evaluate(s.f).dv).epsilon(1e-12));
  }
  CHECK(energy <= 1e-8);
  CHECK(gh <= 1e-6);

  CHECK_THROWS_AS(radial_profile(einstein_profile(3, alpha_max(3))), DegenerateError);
  CHECK_THROWS_AS(radial_profile(e, 5.0, 0.0), ParameterError);
}

TEST_CASE("GH residual") {
  CHECK(std::abs(gh_ode_residual(std::cosh(1.0), std::sinh(1.0), std::cosh(1.0), 5)) <= 1e-14);
  CHECK(gh_ode_residual(1.0, 0.0, 0.0, 2) == -1.0);
}
