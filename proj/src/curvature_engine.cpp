#include "warpcurv/curvature_engine.hpp"

#include <algorithm>
#include <cmath>

namespace warpcurv {

CurvatureTensor::CurvatureTensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim * dim, 0.0) {}

void CurvatureTensor::set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, double value) {
  data_[index(i, j, k, l)] = value;
  data_[index(j, i, k, l)] = -value;
  data_[index(i, j, l, k)] = -value;
  data_[index(j, i, l, k)] = value;
  data_[index(k, l, i, j)] = value;
  data_[index(l, k, i, j)] = -value;
  data_[index(k, l, j, i)] = -value;
  data_[index(l, k, j, i)] = value;
}

double CurvatureTensor::bianchi_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l)
          worst = std::max(worst, std::abs((*this)(i, j, k, l) + (*this)(j, k, i, l) + (*this)(k, i, j, l)));
  return worst;
}

std::vector<double> CurvatureTensor::ricci() const {
  std::vector<double> ric(dim_ * dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) ric[i * dim_ + j] += (*this)(i, k, j, k);
  return ric;
}

ConnectionTable koszul_connection(const BracketTable& brackets) {
  ConnectionTable g;
  for (std::size_t k = 0; k < kFrameDim; ++k)
    for (std::size_t i = 0; i < kFrameDim; ++i)
      for (std::size_t j = 0; j < kFrameDim; ++j)
        g.gamma(k, i, j) = 0.5 * (brackets.coefficient(j, k, i) - brackets.coefficient(k, i, j) +
                                  brackets.coefficient(i, j, k));
  return g;
}

ConnectionTable koszul_connection(const FramePoint& point, const WarpProfile& profile) {
  return koszul_connection(bracket_table(point, profile));
}

std::vector<double> riemann_raw(const BracketTable& brackets, const FramePoint& point, double w) {
  const ConnectionTable g = koszul_connection(brackets);
  constexpr std::size_t d = kFrameDim;
  std::vector<double> out(d * d * d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
          // <nabla_i nabla_j Y_k - nabla_j nabla_i Y_k - nabla_[Y_i,Y_j] Y_k, Y_l>
          double op = frame_derivative(g.gamma(j, k, l), i, point, w) -
                      frame_derivative(g.gamma(i, k, l), j, point, w);
          for (std::size_t m = 0; m < d; ++m) {
            op += g.gamma(j, k, m).value * g.gamma(i, m, l).value -
                  g.gamma(i, k, m).value * g.gamma(j, m, l).value -
                  brackets.coefficient(m, i, j).value * g.gamma(m, k, l).value;
          }
          // R_ijkl = <R(Y_i,Y_j)Y_l, Y_k> = -<R(Y_i,Y_j)Y_k, Y_l>
          out[((i * d + j) * d + k) * d + l] = -op;
        }
      }
    }
  }
  return out;
}

CurvatureTensor riemann_numeric(const BracketTable& brackets, const FramePoint& point, double w) {
  const std::vector<double> raw = riemann_raw(brackets, point, w);
  constexpr std::size_t d = kFrameDim;
  CurvatureTensor t(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = i; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l) {
          if (k == i && l < j) continue;
          t.set(i, j, k, l, raw[((i * d + j) * d + k) * d + l]);
        }
  return t;
}

CurvatureTensor riemann_numeric(const FramePoint& point, const WarpProfile& profile) {
  return riemann_numeric(bracket_table(point, profile), point, warp_root(profile, point.u).value);
}

}  // namespace warpcurv
