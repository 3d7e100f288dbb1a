#pragma once

#include <cstddef>
#include <vector>

#include "warpcurv/frame_model.hpp"

namespace warpcurv {

/// Riemann tensor components R_ijkl in an orthonormal frame of dimension dim,
/// with the sign convention R_ijij = sectional curvature of span(Y_i, Y_j).
/// Writes go through set(), which fills all eight images under
/// R_ijkl = -R_jikl = -R_ijlk = R_klij, so those symmetries always hold.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(std::size_t dim);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[index(i, j, k, l)];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, double value);

  /// max |R_ijkl + R_jkil + R_kijl| over all index choices.
  double bianchi_residual() const;

  /// Ric_ij = sum_k R_ikjk, row-major dim x dim.
  std::vector<double> ricci() const;

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * dim_ + j) * dim_ + k) * dim_ + l;
  }

  std::size_t dim_;
  std::vector<double> data_;
};

/// gamma(k, i, j) = <nabla_{Y_k} Y_i, Y_j>.
class ConnectionTable {
 public:
  const Jet2& gamma(std::size_t k, std::size_t i, std::size_t j) const { return table_.at(k, i, j); }
  Jet2& gamma(std::size_t k, std::size_t i, std::size_t j) { return table_.at(k, i, j); }

 private:
  FrameTable table_;
};

/// Orthonormal-frame Koszul formula:
/// gamma(k,i,j) = (c^j_{ki} - c^k_{ij} + c^i_{jk}) / 2.
ConnectionTable koszul_connection(const BracketTable& brackets);
ConnectionTable koszul_connection(const FramePoint& point, const WarpProfile& profile);

/// All 6^4 components straight from the curvature operator, without any
/// symmetrization; index ((i*6+j)*6+k)*6+l.
std::vector<double> riemann_raw(const BracketTable& brackets, const FramePoint& point, double w);

CurvatureTensor riemann_numeric(const BracketTable& brackets, const FramePoint& point, double w);
CurvatureTensor riemann_numeric(const FramePoint& point, const WarpProfile& profile);

}  // namespace warpcurv
