#pragma once

#include <cstdint>
#include <vector>

#include "warpcurv/curvature_engine.hpp"

namespace warpcurv {

/// Orthonormal pair (a, b) of frame-coefficient vectors spanning a 2-plane.
struct TwoPlane {
  std::vector<double> a;
  std::vector<double> b;
};

/// Coordinate plane span(Y_i, Y_j) in dimension dim (0-based indices).
TwoPlane coordinate_plane(std::size_t dim, std::size_t i, std::size_t j);

/// sum a_i b_j a_k b_l R_ijkl. Throws InputError unless |a| = |b| = 1 and
/// a.b = 0 to 1e-12 and the dimensions match.
double sectional_curvature(const CurvatureTensor& tensor, const TwoPlane& plane);

struct CurvatureBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// -4 - 2n(n-1) q <= K <= -1 + n q with q = alpha / u^{2n+2}, no range checks.
CurvatureBounds pinching_formula(double alpha, int n, double u);

/// Pinching bounds for alpha in (0, alpha_max) and u >= u_alpha; throws
/// ParameterError elsewhere.
CurvatureBounds curvature_bounds(double alpha, int n, double u);

struct SampleExtrema {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

/// Sectional curvatures of `count` uniformly random 2-planes (Gram-Schmidt on
/// Gaussian vectors). Samples are drawn in fixed blocks with per-block
/// seeds, so the result does not depend on the thread count.
SampleExtrema sample_sectional_curvatures(const CurvatureTensor& tensor, std::size_t count, std::uint64_t seed);

struct BoundsReport {
  double alpha = 0.0;
  int n = 0;
  double u = 0.0;
  CurvatureBounds bounds;
  SampleExtrema samples;
  double upper_extremal = 0.0;  // K(span(Y_{2n-1}, Y_1))
  double lower_extremal = 0.0;  // K(span(Y_{2n-1}, Y_{2n}))
  bool asserted = false;        // bounds claimed only for alpha in [0, alpha_max)
  bool pass = false;
};

/// Samples random planes of the Einstein tensor at u and checks them against
/// the pinching bounds (slack `tolerance`). For alpha < 0 the bounds are
/// reported with asserted = false.
BoundsReport verify_bounds_by_sampling(double alpha, int n, double u, std::size_t count, std::uint64_t seed,
                                       double tolerance = 1e-9);

/// As above, but samples a caller-supplied tensor against the Einstein bounds at (alpha, n, u).
BoundsReport verify_bounds_with_tensor(const CurvatureTensor& tensor, double alpha, int n, double u,
                                       std::size_t count, std::uint64_t seed, double tolerance = 1e-9);

struct DegreeRow {
  int d = 0;
  double alpha = 0.0;
  double u_alpha = 0.0;
  CurvatureBounds bounds;  // at u = u_alpha
};

struct DegreeTable {
  int n = 0;
  std::vector<DegreeRow> rows;
  bool lower_decreasing = false;
  bool upper_increasing = false;
};

/// Bounds at the branching locus for each degree; degrees must be >= 2 and
/// are reported in the order given (monotonicity is checked in that order).
DegreeTable extreme_curvatures_vs_degree(int n, const std::vector<int>& degrees);

}  // namespace warpcurv
