#include "warpcurv/closed_forms.hpp"

#include <cmath>

#include "warpcurv/errors.hpp"

namespace warpcurv {

ConnectionTable connection_closed_form(const FramePoint& point, const WarpProfile& profile) {
  const FrameScalars s = frame_scalars(point, profile);
  const Jet2& a = s.a;
  const Jet2& b = s.b;
  const Jet2& c = s.c;
  const Jet2& u = s.u;
  const Jet2 wu = s.w / u;
  const Jet2 p = a / (b * c);
  const Jet2 q = b / (a * c);
  const Jet2 r = c / (a * b);
  const Jet2 half = -1.0 / (2.0 * u);
  const Jet2 fiber = (s.w + u * s.dw) / u;

  ConnectionTable g;
  // 1-based labels: nabla_{Y_k} Y_i has Y_j-component `value`
  auto put = [&g](int k, int i, int j, const Jet2& value) { g.gamma(k - 1, i - 1, j - 1) = value; };

  put(1, 1, 4, -b / (u * a));
  put(1, 1, 6, -wu);
  put(1, 2, 3, half * (p + q - r));
  put(1, 2, 5, wu);
  put(1, 3, 2, half * (-p - q + r));
  put(1, 4, 1, b / (u * a));

  put(2, 1, 3, half * (p + q + r));
  put(2, 1, 5, -wu);
  put(2, 2, 4, -a / (u * b));
  put(2, 2, 6, -wu);
  put(2, 3, 1, half * (-p - q - r));
  put(2, 4, 2, a / (u * b));

  put(3, 1, 2, half * (-p + q + r));
  put(3, 2, 1, half * (p - q - r));
  put(3, 3, 4, -4.0 * a * b / (u * c));
  put(3, 3, 6, -wu);
  put(3, 4, 3, 4.0 * a * b / (u * c));
  put(3, 4, 5, wu);

  // nabla_{Y4} Y1 = nabla_{Y4} Y2 = 0
  put(4, 3, 5, -wu);
  put(4, 4, 6, -wu);

  put(1, 5, 2, -wu);
  put(2, 5, 1, wu);
  put(3, 5, 4, -wu);
  put(4, 5, 3, wu);

  put(1, 6, 1, wu);
  put(2, 6, 2, wu);
  put(3, 6, 3, wu);
  put(4, 6, 4, wu);

  put(5, 1, 2, -wu);
  put(5, 2, 1, wu);
  put(5, 3, 4, -wu);
  put(5, 4, 3, wu);
  put(5, 5, 6, -fiber);
  put(5, 6, 5, fiber);
  // nabla_{Y6} vanishes identically
  return g;
}

CurvatureScalars curvature_scalars(double u, const WarpProfile& profile) {
  const WarpValue w = profile.evaluate(u);
  // W W' = V'/2 and W W'' + W'^2 = V''/2
  const double mixed = 0.5 * w.dv / u;
  return {(1.0 + w.v) / (u * u), mixed, -3.0 * mixed - 0.5 * w.d2v};
}

namespace {

struct BlockValues {
  double holomorphic;       // R_{i,i+1,i,i+1}
  double generic;           // R_{i,j,i,j}, (i,j) not a pair
  double horizontal_fiber;  // R_{i,f,i,f}
  double fiber;             // R_{2n-1,2n,2n-1,2n}
  double pair_pair;         // R_{i,i+1,j,j+1}
  double pair_fiber;        // R_{i,i+1,2n-1,2n}
};

CurvatureTensor assemble(int n, const BlockValues& v) {
  if (n < 2) throw ParameterError("complex dimension n must be >= 2");
  const auto dim = static_cast<std::size_t>(2 * n);
  const std::size_t horizontal = dim - 2;
  const std::size_t theta = dim - 2;
  const std::size_t radial = dim - 1;
  CurvatureTensor t(dim);

  for (std::size_t i = 0; i < horizontal; ++i) {
    for (std::size_t j = i + 1; j < horizontal; ++j) {
      const bool pair = (i % 2 == 0) && (j == i + 1);
      t.set(i, j, i, j, pair ? v.holomorphic : v.generic);
    }
    t.set(i, theta, i, theta, v.horizontal_fiber);
    t.set(i, radial, i, radial, v.horizontal_fiber);
  }
  t.set(theta, radial, theta, radial, v.fiber);

  // mixed terms: R_{i,i+1,j,j+1} = 2 R_{i,j,i+1,j+1} = -2 R_{i,j+1,i+1,j}, i and j even (0-based)
  auto mixed = [&t](std::size_t i, std::size_t j, double value) {
    t.set(i, i + 1, j, j + 1, value);
    t.set(i, j, i + 1, j + 1, 0.5 * value);
    t.set(i, j + 1, i + 1, j, -0.5 * value);
  };
  for (std::size_t i = 0; i < horizontal; i += 2) {
    for (std::size_t j = i + 2; j < horizontal; j += 2) mixed(i, j, v.pair_pair);
    mixed(i, theta, v.pair_fiber);
  }
  return t;
}

}  // namespace

CurvatureTensor riemann_closed_form(double u, const WarpProfile& profile, int n) {
  const CurvatureScalars s = curvature_scalars(u, profile);
  return assemble(n, {-4.0 * s.horizontal, -s.horizontal, -s.mixed, s.fiber, -2.0 * s.horizontal,
                      -2.0 * s.mixed});
}

CurvatureTensor riemann_alpha(double u, double alpha, int n) {
  const double q = alpha / std::pow(u, 2 * n + 2);
  return assemble(n, {-4.0 - 4.0 * q, -1.0 - q, -1.0 + n * q, -4.0 - 2.0 * n * (n - 1) * q,
                      -2.0 - 2.0 * q, -2.0 + 2.0 * n * q});
}

RicciDiagonal ricci_diagonal(double u, const WarpProfile& profile, int n) {
  const WarpValue w = profile.evaluate(u);
  const double ww1 = 0.5 * w.dv / u;  // W W' / u
  return {-2.0 * n * (1.0 + w.v) / (u * u) - 2.0 * ww1, -(2.0 * n + 1.0) * ww1 - 0.5 * w.d2v};
}

}  // namespace warpcurv
