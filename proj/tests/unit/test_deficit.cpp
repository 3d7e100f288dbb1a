#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "check.hpp"

#include <cmath>

#include "warpcurv/closed_forms.hpp"
#include "warpcurv/cone_geometry.hpp"
#include "warpcurv/deficit.hpp"
#include "warpcurv/errors.hpp"
#include "warpcurv/warp_profiles.hpp"

using namespace warpcurv;

namespace {
const double kAlpha2 = 343.0 / 4096.0;  // n = 3, d = 2
}

TEST_CASE("cutoff") {
  CHECK(chi(0.3) == 1.0);
  CHECK(chi(0.5) == 1.0);
  CHECK(chi(1.2) == 0.0);
  CHECK(chi(1.0) == 0.0);
  CHECK_NEAR(chi(0.75), 0.5, 1e-15);
  for (double t = 0.51; t < 1.0; t += 0.02) {
    CHECK_NEAR(chi(t) + chi(1.5 - t), 1.0, 1e-14);
    CHECK(chi(t + 0.01) < chi(t));
  }
  // flat at the ends: only rounding survives near t = 1/2
  const Jet2 near_end = chi(lift(0.5 + 1e-3, Coordinate::u));
  CHECK(std::abs(near_end.d_u) < 1e-14);
  CHECK(std::abs(near_end.d_u_u) < 1e-13);
}

TEST_CASE("interpolated profile pieces") {
  const InterpolatedWarp w(3, kAlpha2, 6.0);
  const EinsteinWarp e = einstein_profile(3, kAlpha2);
  CHECK_NEAR(w.inner_u(), std::cosh(3.0), 1e-12);
  CHECK_NEAR(w.outer_u(), std::cosh(6.0), 1e-12);
  const WarpValue in = w.evaluate(std::cosh(2.0));
  const WarpValue ein = e.evaluate(std::cosh(2.0));
  CHECK(in.v == ein.v);
  CHECK_NEAR(in.dv, ein.dv, 1e-13);
  const WarpValue out = w.evaluate(std::cosh(6.5));
  const double u = std::cosh(6.5);
  CHECK(out.v == u * u - 1.0);
  CHECK(w.excess(u).v == 0.0);
  CHECK(w.domain_lower() == e.u_alpha());

  const InterpolatedWarp literal(3, kAlpha2, 6.0, CutoffArgument::u_coordinate);
  CHECK(literal.inner_u() == 3.0);
  CHECK(literal.outer_u() == 6.0);
}

TEST_CASE("deficit vanishes for Einstein profiles and outside the annulus") {
  for (int n = 2; n <= 5; ++n) {
    const EinsteinWarp e = einstein_profile(n, 0.5 * alpha_max(n));
    for (double u = e.u_alpha() + 0.05; u < 30.0; u *= 1.3) {
      const DeficitDiagonal d = deficit_diagonal(e, n, u);
      CHECK(std::abs(d.horizontal) <= 1e-12);
      CHECK(std::abs(d.fiber) <= 1e-12);
    }
  }

  const InterpolatedWarp w(3, kAlpha2, 6.0);
  const DeficitDiagonal inside = deficit_diagonal(w, 3, std::cosh(2.0));
  CHECK(std::abs(inside.horizontal) <= 1e-13);
  CHECK(std::abs(inside.fiber) <= 1e-13);

  const DeficitDiagonal mid = deficit_diagonal(w, 3, std::cosh(4.5));
  CHECK(std::abs(mid.horizontal) + std::abs(mid.fiber) > 0.0);
  const DeficitReport rep = deficit_report(kAlpha2, 3, 6.0, 0, 400);
  CHECK(std::abs(mid.horizontal) <= 1.01 * rep.fitted_constant / std::pow(std::cosh(3.0), 8));

  for (double rho = 0.1; rho < 12.0; rho += 0.05) {
    if (rho > 3.0 && rho < 6.0) continue;
    const DeficitDiagonal d = deficit_diagonal(w, 3, std::cosh(rho));
    CHECK(std::abs(d.horizontal) <= 1e-13);
    CHECK(std::abs(d.fiber) <= 1e-13);
  }
}

TEST_CASE("deficit equals Ricci plus (2n+2)") {
  const InterpolatedWarp w(3, kAlpha2, 4.0);
  for (double rho = 2.05; rho < 4.0; rho += 0.1) {
    const double u = std::cosh(rho);
    const DeficitDiagonal d = deficit_diagonal(w, 3, u);
    const RicciDiagonal r = ricci_diagonal(u, w, 3);
    CHECK_NEAR(d.horizontal, r.horizontal + 8.0, 1e-12);
    CHECK_NEAR(d.fiber, r.fiber + 8.0, 1e-12);
  }
}

TEST_CASE("the interpolated Ricci tensor stays diagonal") {
  const InterpolatedWarp w(3, kAlpha2, 4.0);
  for (double rho = 2.1; rho < 4.0; rho += 0.3) {
    const double u = std::cosh(rho);
    const std::vector<double> ric = riemann_closed_form(u, w, 3).ricci();
    const RicciDiagonal r = ricci_diagonal(u, w, 3);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        const double want = i != j ? 0.0 : (i < 4 ? r.horizontal : r.fiber);
        CHECK_NEAR(ric[i * 6 + j], want, 1e-12);
      }
  }
}

TEST_CASE("deficit report") {
  const DeficitReport rep = deficit_report(kAlpha2, 3, 6.0, 2, 400);
  REQUIRE(rep.sup_by_order.size() == 3);
  CHECK(rep.sup_by_order[0] > 0.0);
  CHECK(rep.sup == std::max({rep.sup_by_order[0], rep.sup_by_order[1], rep.sup_by_order[2]}));
  CHECK_NEAR(rep.fitted_constant, rep.sup * std::pow(std::cosh(3.0), 8), 1e-12 * rep.fitted_constant);
  CHECK(rep.l2_per_volume > 0.0);
  CHECK_THROWS_AS(deficit_report(kAlpha2, 3, 1.0), ParameterError);
  CHECK_THROWS_AS(deficit_report(kAlpha2, 3, 6.0, 3), ParameterError);
  CHECK_THROWS_AS(deficit_decay(kAlpha2, 3, {6.0}), ParameterError);
}

TEST_CASE("decay: sup bounded by its value at the inner edge and L2 decreasing") {
  const DeficitDecay decay = deficit_decay(kAlpha2, 3, {4.0, 6.0, 8.0, 10.0}, 2, 400);
  CHECK(decay.l2_strictly_decreasing);
  // the fitted constant never grows, so the cosh^{-(2n+2)}(eta/2) bound holds with A(4)
  for (std::size_t i = 1; i < decay.reports.size(); ++i)
    CHECK(decay.reports[i].fitted_constant < decay.reports[i - 1].fitted_constant);
  CHECK(decay.log_sup_slope < 0.0);
}

// registered as its own ctest entry
TEST_CASE("decay slope within 5% of -(n+1) [decay-rate]") {
  const DeficitDecay decay = deficit_decay(kAlpha2, 3, {4.0, 6.0, 8.0, 10.0}, 2, 400);
  CAPTURE(decay.log_sup_slope);
  CAPTURE(decay.constant_ratio);
  CHECK(std::abs(decay.log_sup_slope + 4.0) <= 0.05 * 4.0);
  CHECK(decay.constant_ratio <= 2.0);
}

TEST_CASE("curvature of the interpolated metric") {
  const CurvatureScan scan = interpolated_curvature_scan(kAlpha2, 3, 8.0, 50, 10000, 42);
  CHECK(scan.pass);
  CHECK(scan.max_curvature < 0.0);

  const InterpolatedWarp w(3, kAlpha2, 8.0);
  const CurvatureScan inner = interpolated_curvature_scan(w, 0.0, 4.0, 20, 5000, 1);
  CHECK(inner.min_curvature >= -40.0 / 7.0 - 1e-9);
  CHECK(inner.max_curvature <= -4.0 / 7.0 + 1e-9);

  const CurvatureScan outer = interpolated_curvature_scan(w, 8.0, 10.0, 20, 5000, 2);
  CHECK(outer.min_curvature >= -4.0 - 1e-9);
  CHECK(outer.max_curvature <= -1.0 + 1e-9);
}
