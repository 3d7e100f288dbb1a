#include "warpcurv/frame_model.hpp"

#include <algorithm>
#include <cmath>

namespace warpcurv {

HyperbolicHelpers hyperbolic_helpers(double sigma) {
  const Jet2 s = lift(sigma, Coordinate::sigma);
  return {cosh(s), sinh(s), cosh(2.0 * s)};
}

Jet2 warp_root(const WarpProfile& profile, double u) {
  const WarpValue w = profile.evaluate(u);
  return sqrt(Jet2{w.v, 0.0, w.dv, 0.0, 0.0, w.d2v});
}

FrameScalars frame_scalars(const FramePoint& point, const WarpProfile& profile) {
  const HyperbolicHelpers h = hyperbolic_helpers(point.sigma);
  const Jet2 w = warp_root(profile, point.u);
  return {h.a, h.b, h.c, lift(point.u, Coordinate::u), w, w.partial_u()};
}

void BracketTable::set(std::size_t k, std::size_t i, std::size_t j, const Jet2& value) {
  table_.at(k, i, j) = value;
  table_.at(k, j, i) = -value;
}

BracketTable bracket_table(const FramePoint& point, const WarpProfile& profile) {
  const FrameScalars s = frame_scalars(point, profile);
  const Jet2& a = s.a;
  const Jet2& b = s.b;
  const Jet2& c = s.c;
  const Jet2& u = s.u;
  const Jet2 w_over_u = s.w / u;

  BracketTable t;
  // [Y1,Y2] = c/(uab) Y3 + 2W/u Y5
  t.set(2, 0, 1, c / (u * a * b));
  t.set(4, 0, 1, 2.0 * w_over_u);
  t.set(1, 0, 2, b / (u * a * c));
  t.set(0, 0, 3, b / (u * a));
  t.set(0, 0, 5, w_over_u);
  t.set(0, 1, 2, a / (u * b * c));
  t.set(1, 1, 3, a / (u * b));
  t.set(1, 1, 5, w_over_u);
  // [Y3,Y4] = 4ab/(uc) Y3 + 2W/u Y5
  t.set(2, 2, 3, 4.0 * a * b / (u * c));
  t.set(4, 2, 3, 2.0 * w_over_u);
  t.set(2, 2, 5, w_over_u);
  t.set(3, 3, 5, w_over_u);
  // [Y5,Y6] = (W + uW')/u Y5
  t.set(4, 4, 5, (s.w + u * s.dw) / u);
  return t;
}

double frame_derivative(const Jet2& f, std::size_t direction, const FramePoint& point, double w) {
  switch (direction) {
    case 3: return f.d_sigma / point.u;
    case 5: return w * f.d_u;
    default: return 0.0;
  }
}

double frame_derivative(const Jet2& f, std::size_t direction, const FramePoint& point,
                        const WarpProfile& profile) {
  return frame_derivative(f, direction, point, warp_root(profile, point.u).value);
}

double jacobi_residual(const BracketTable& brackets, const FramePoint& point, double w) {
  // Y_l-component of [[Y_i, Y_j], Y_k]
  auto nested = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    double sum = -frame_derivative(brackets.coefficient(l, i, j), k, point, w);
    for (std::size_t m = 0; m < kFrameDim; ++m) {
      sum += brackets.coefficient(m, i, j).value * brackets.coefficient(l, m, k).value;
    }
    return sum;
  };

  double worst = 0.0;
  for (std::size_t i = 0; i < kFrameDim; ++i) {
    for (std::size_t j = i + 1; j < kFrameDim; ++j) {
      for (std::size_t k = j + 1; k < kFrameDim; ++k) {
        double norm2 = 0.0;
        for (std::size_t l = 0; l < kFrameDim; ++l) {
          const double comp = nested(i, j, k, l) + nested(j, k, i, l) + nested(k, i, j, l);
          norm2 += comp * comp;
        }
        worst = std::max(worst, std::sqrt(norm2));
      }
    }
  }
  return worst;
}

double jacobi_residual(const FramePoint& point, const WarpProfile& profile) {
  return jacobi_residual(bracket_table(point, profile), point, warp_root(profile, point.u).value);
}

}  // namespace warpcurv
