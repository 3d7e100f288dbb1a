#include "warpcurv/plane_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "warpcurv/closed_forms.hpp"
#include "warpcurv/cone_geometry.hpp"
#include "warpcurv/errors.hpp"
#include "warpcurv/parallel.hpp"

namespace warpcurv {

namespace {

constexpr std::size_t kBlockSize = 2048;

// R restricted to bivectors: entry (p, q) for p = (i<j), q = (k<l).
struct BivectorForm {
  std::size_t dim = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<double> matrix;

  explicit BivectorForm(const CurvatureTensor& t) : dim(t.dim()) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) pairs.emplace_back(i, j);
    const std::size_t m = pairs.size();
    matrix.resize(m * m);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q)
        matrix[p * m + q] = t(pairs[p].first, pairs[p].second, pairs[q].first, pairs[q].second);
  }

  double evaluate(const std::vector<double>& a, const std::vector<double>& b, std::vector<double>& wedge) const {
    const std::size_t m = pairs.size();
    wedge.resize(m);
    for (std::size_t p = 0; p < m; ++p) {
      const auto [i, j] = pairs[p];
      wedge[p] = a[i] * b[j] - a[j] * b[i];
    }
    double k = 0.0;
    for (std::size_t p = 0; p < m; ++p) {
      if (wedge[p] == 0.0) continue;
      double row = 0.0;
      for (std::size_t q = 0; q < m; ++q) row += matrix[p * m + q] * wedge[q];
      k += wedge[p] * row;
    }
    return k;
  }
};

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void normalize(std::vector<double>& x) {
  const double norm = std::sqrt(dot(x, x));
  for (double& v : x) v /= norm;
}

}  // namespace

TwoPlane coordinate_plane(std::size_t dim, std::size_t i, std::size_t j) {
  TwoPlane plane{std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
  plane.a.at(i) = 1.0;
  plane.b.at(j) = 1.0;
  return plane;
}

double sectional_curvature(const CurvatureTensor& tensor, const TwoPlane& plane) {
  const std::size_t dim = tensor.dim();
  if (plane.a.size() != dim || plane.b.size() != dim) {
    throw InputError("plane dimension " + std::to_string(plane.a.size()) + "/" + std::to_string(plane.b.size()) +
                     " does not match tensor dimension " + std::to_string(dim));
  }
  constexpr double tol = 1e-12;
  if (std::abs(dot(plane.a, plane.a) - 1.0) > tol || std::abs(dot(plane.b, plane.b) - 1.0) > tol ||
      std::abs(dot(plane.a, plane.b)) > tol) {
    throw InputError("plane basis is not orthonormal");
  }
  std::vector<double> wedge;
  return BivectorForm(tensor).evaluate(plane.a, plane.b, wedge);
}

CurvatureBounds pinching_formula(double alpha, int n, double u) {
  const double q = alpha / std::pow(u, 2 * n + 2);
  return {-4.0 - 2.0 * n * (n - 1) * q, -1.0 + n * q};
}

CurvatureBounds curvature_bounds(double alpha, int n, double u) {
  const double amax = alpha_max(n);
  if (!(alpha > 0.0 && alpha < amax)) {
    throw ParameterError("pinching bounds hold for alpha in (0, " + std::to_string(amax) + "), got " +
                         std::to_string(alpha));
  }
  const double root = largest_root(alpha, n);
  if (u < root * (1.0 - 1e-12)) {
    throw ParameterError("u = " + std::to_string(u) + " is below u_alpha = " + std::to_string(root));
  }
  return pinching_formula(alpha, n, u);
}

SampleExtrema sample_sectional_curvatures(const CurvatureTensor& tensor, std::size_t count, std::uint64_t seed) {
  SampleExtrema out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), count};
  if (count == 0) return out;
  const BivectorForm form(tensor);
  const std::size_t dim = tensor.dim();
  const std::size_t blocks = (count + kBlockSize - 1) / kBlockSize;
  std::vector<SampleExtrema> partial(blocks);

  parallel_blocks(blocks, [&](std::size_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss;
    std::vector<double> a(dim), b(dim), wedge;
    SampleExtrema local{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), 0};
    const std::size_t end = std::min(count, (block + 1) * kBlockSize);
    for (std::size_t s = block * kBlockSize; s < end; ++s) {
      for (double& x : a) x = gauss(rng);
      for (double& x : b) x = gauss(rng);
      normalize(a);
      const double proj = dot(a, b);
      for (std::size_t i = 0; i < dim; ++i) b[i] -= proj * a[i];
      normalize(b);
      const double k = form.evaluate(a, b, wedge);
      local.min = std::min(local.min, k);
      local.max = std::max(local.max, k);
      ++local.count;
    }
    partial[block] = local;
  });

  for (const SampleExtrema& p : partial) {
    out.min = std::min(out.min, p.min);
    out.max = std::max(out.max, p.max);
  }
  return out;
}

BoundsReport verify_bounds_by_sampling(double alpha, int n, double u, std::size_t count, std::uint64_t seed,
                                       double tolerance) {
  return verify_bounds_with_tensor(riemann_alpha(u, alpha, n), alpha, n, u, count, seed, tolerance);
}

BoundsReport verify_bounds_with_tensor(const CurvatureTensor& tensor, double alpha, int n, double u,
                                       std::size_t count, std::uint64_t seed, double tolerance) {
  const double root = largest_root(alpha, n);
  if (u < root * (1.0 - 1e-12)) {
    throw ParameterError("u = " + std::to_string(u) + " is below u_alpha = " + std::to_string(root));
  }
  BoundsReport report;
  report.alpha = alpha;
  report.n = n;
  report.u = u;
  report.bounds = pinching_formula(alpha, n, u);
  report.asserted = alpha >= 0.0 && alpha < alpha_max(n);

  const auto dim = static_cast<std::size_t>(2 * n);
  if (tensor.dim() != dim) throw InputError("tensor dimension does not match 2n");
  const std::size_t theta = dim - 2;
  report.upper_extremal = sectional_curvature(tensor, coordinate_plane(dim, theta, 0));
  report.lower_extremal = sectional_curvature(tensor, coordinate_plane(dim, theta, dim - 1));
  report.samples = sample_sectional_curvatures(tensor, count, seed);

  const double lo = report.bounds.lower - tolerance;
  const double hi = report.bounds.upper + tolerance;
  const bool extremal_ok = report.upper_extremal >= lo && report.upper_extremal <= hi &&
                           report.lower_extremal >= lo && report.lower_extremal <= hi;
  const bool samples_ok = count == 0 || (report.samples.min >= lo && report.samples.max <= hi);
  report.pass = !report.asserted || (extremal_ok && samples_ok);
  return report;
}

DegreeTable extreme_curvatures_vs_degree(int n, const std::vector<int>& degrees) {
  DegreeTable table;
  table.n = n;
  for (int d : degrees) {
    if (d < 2) throw ParameterError("branching degree must be >= 2, got " + std::to_string(d));
    DegreeRow row;
    row.d = d;
    row.alpha = alpha_for_degree(d, n);
    row.u_alpha = largest_root(row.alpha, n);
    row.bounds = curvature_bounds(row.alpha, n, row.u_alpha);
    table.rows.push_back(row);
  }
  table.lower_decreasing = true;
  table.upper_increasing = true;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    table.lower_decreasing = table.lower_decreasing && table.rows[i].bounds.lower < table.rows[i - 1].bounds.lower;
    table.upper_increasing = table.upper_increasing && table.rows[i].bounds.upper > table.rows[i - 1].bounds.upper;
  }
  return table;
}

}  // namespace warpcurv
