#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "check.hpp"

#include <cmath>

#include "warpcurv/cone_geometry.hpp"
#include "warpcurv/errors.hpp"
#include "warpcurv/frame_model.hpp"
#include "warpcurv/warp_profiles.hpp"

using namespace warpcurv;

TEST_CASE("hyperbolic helpers") {
  const HyperbolicHelpers h = hyperbolic_helpers(1.0);
  CHECK_NEAR(h.a.value, 1.543081, 1e-6);
  CHECK_NEAR(h.b.value, 1.175201, 1e-6);
  CHECK_NEAR(h.c.value, 3.762196, 1e-6);
  CHECK_NEAR(h.a.value * h.a.value + h.b.value * h.b.value, h.c.value, 1e-12);
  for (double s = 0.1; s < 3.0; s += 0.29) {
    const HyperbolicHelpers g = hyperbolic_helpers(s);
    CHECK_NEAR(g.b.value * g.b.value - g.a.value * g.a.value, -1.0, 1e-12 * g.a.value * g.a.value);
    CHECK_NEAR(g.a.d_sigma, g.b.value, 1e-14 * g.a.value);
    CHECK_NEAR(g.c.d_sigma, 2.0 * std::sinh(2.0 * s), 1e-13 * g.c.value);
  }
}

TEST_CASE("bracket coefficients") {
  const PlainHyperbolic plain;
  const FramePoint p{1.0, 2.0};
  const BracketTable t = bracket_table(p, plain);
  // [Y1, Y2] has Y3-component c / (u a b)
  CHECK_NEAR(t.coefficient(2, 0, 1).value, 3.762196 / (2 * 1.543081 * 1.175201), 1e-6);
  CHECK_NEAR(t.coefficient(2, 0, 1).value, 1.037315, 1e-6);
  // [Y5, Y6] has Y5-component (W + u W') / u = 7 / (2 sqrt 3)
  CHECK_NEAR(t.coefficient(4, 4, 5).value, 7.0 / (2.0 * std::sqrt(3.0)), 1e-14);
  CHECK_NEAR(t.coefficient(4, 4, 5).value, 2.020726, 1e-6);
  for (std::size_t k = 0; k < kFrameDim; ++k) CHECK(t.coefficient(k, 0, 4).value == 0.0);

  // [Y1, Y2] has Y5-component 2 W / u, i.e. u W c = 2 W^2
  const double w = std::sqrt(3.0);
  CHECK_NEAR(2.0 * w * t.coefficient(4, 0, 1).value, 2.0 * w * w, 1e-14);
}

TEST_CASE("bracket table is antisymmetric with a fixed sparsity") {
  const EinsteinWarp e = einstein_profile(3, 0.05);
  const BracketTable t = bracket_table({0.7, 1.6}, e);
  int nonzero = 0;
  for (std::size_t k = 0; k < kFrameDim; ++k)
    for (std::size_t i = 0; i < kFrameDim; ++i) {
      CHECK(t.coefficient(k, i, i).value == 0.0);
      for (std::size_t j = 0; j < kFrameDim; ++j) {
        CHECK(t.coefficient(k, i, j).value == -t.coefficient(k, j, i).value);
        if (i < j && t.coefficient(k, i, j).value != 0.0) ++nonzero;
      }
    }
  CHECK(nonzero == 13);
}

TEST_CASE("frame derivatives") {
  const PlainHyperbolic plain;
  const FramePoint p{1.0, 2.0};
  const Jet2 u = lift(2.0, Coordinate::u);
  const Jet2 s = lift(1.0, Coordinate::sigma);
  CHECK_NEAR(frame_derivative(u * u, 5, p, plain), std::sqrt(3.0) * 4.0, 1e-14);
  CHECK_NEAR(frame_derivative(u * u, 5, p, plain), 6.928203, 1e-6);
  CHECK_NEAR(frame_derivative(cosh(s), 3, p, plain), std::sinh(1.0) / 2.0, 1e-15);
  CHECK_NEAR(frame_derivative(cosh(s), 3, p, plain), 0.587601, 1e-6);
  const Jet2 f = cosh(s) * u * u + sqrt(u);
  for (std::size_t dir : {0, 1, 2, 4}) CHECK(frame_derivative(f, dir, p, plain) == 0.0);
}

TEST_CASE("Jacobi identity") {
  const PlainHyperbolic plain;
  CHECK(jacobi_residual({1.0, 2.0}, plain) <= 1e-10);
  const EinsteinWarp e = einstein_profile(3, 0.05);
  CHECK(jacobi_residual({0.5, 1.3}, e) <= 1e-10);

  for (const double alpha : {-0.5, 0.0, 0.5 * alpha_max(3), 0.9 * alpha_max(3)}) {
    const EinsteinWarp prof = einstein_profile(3, alpha);
    const double lo = prof.u_alpha() + 0.1;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const FramePoint p{0.3 + 2.2 * i / 4.0, lo + (4.0 - lo) * j / 4.0};
        CHECK(jacobi_residual(p, prof) <= 1e-10);
      }
  }
}

TEST_CASE("breaking the central bracket breaks Jacobi") {
  const PlainHyperbolic plain;
  const FramePoint p{1.0, 2.0};
  BracketTable t = bracket_table(p, plain);
  t.set(4, 0, 1, Jet2{0.0});
  CHECK(jacobi_residual(t, p, std::sqrt(3.0)) > 0.1);
}
