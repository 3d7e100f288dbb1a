#pragma once

#include <array>
#include <cstddef>

#include "warpcurv/jets.hpp"
#include "warpcurv/warp_profiles.hpp"

namespace warpcurv {

// Frame indices are 0-based throughout the code: Y1..Y4 horizontal
// (holomorphic pairs (Y1,Y2) and (Y3,Y4)), Y5 along d/dtheta, Y6 along d/du.
inline constexpr std::size_t kFrameDim = 6;

/// Base point (sigma, u): sigma is the polar radius in the horizontal CH^2,
/// u the warped radial coordinate.
struct FramePoint {
  double sigma = 1.0;
  double u = 2.0;
};

/// Jets of the scalar functions the n = 3 frame is built from.
struct FrameScalars {
  Jet2 a;   // cosh(sigma)
  Jet2 b;   // sinh(sigma)
  Jet2 c;   // cosh(2 sigma)
  Jet2 u;
  Jet2 w;   // sqrt(V)
  Jet2 dw;  // W', first-order slots only
};

struct HyperbolicHelpers {
  Jet2 a;
  Jet2 b;
  Jet2 c;
};

HyperbolicHelpers hyperbolic_helpers(double sigma);

/// W = sqrt(V) as a jet in u. Throws DomainError where V <= 0.
Jet2 warp_root(const WarpProfile& profile, double u);

FrameScalars frame_scalars(const FramePoint& point, const WarpProfile& profile);

/// Dense 6x6x6 table of jets indexed [first][second][third].
class FrameTable {
 public:
  Jet2& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * kFrameDim + j) * kFrameDim + k]; }
  const Jet2& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * kFrameDim + j) * kFrameDim + k];
  }

 private:
  std::array<Jet2, kFrameDim * kFrameDim * kFrameDim> data_{};
};

/// Structure functions: [Y_i, Y_j] = sum_k coefficient(k, i, j) Y_k.
class BracketTable {
 public:
  const Jet2& coefficient(std::size_t k, std::size_t i, std::size_t j) const { return table_.at(k, i, j); }

  /// Sets the Y_k-coefficient of [Y_i, Y_j] and its antisymmetric partner.
  void set(std::size_t k, std::size_t i, std::size_t j, const Jet2& value);

 private:
  FrameTable table_;
};

BracketTable bracket_table(const FramePoint& point, const WarpProfile& profile);

/// Y_direction applied to a function of (sigma, u). Only Y4 = (1/u) d/dsigma
/// and Y6 = W d/du act nontrivially on such functions.
double frame_derivative(const Jet2& f, std::size_t direction, const FramePoint& point, double w);
double frame_derivative(const Jet2& f, std::size_t direction, const FramePoint& point,
                        const WarpProfile& profile);

/// Max over i < j < k of the Euclidean norm of the cyclic Jacobi sum.
double jacobi_residual(const BracketTable& brackets, const FramePoint& point, double w);
double jacobi_residual(const FramePoint& point, const WarpProfile& profile);

}  // namespace warpcurv
