#include "warpcurv/cone_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

#include "warpcurv/errors.hpp"

namespace warpcurv {

namespace {

void require_dimension(int n) {
  if (n < 2) throw ParameterError("complex dimension n must be >= 2, got " + std::to_string(n));
}

void require_admissible(double alpha, int n) {
  if (alpha > alpha_max(n)) {
    throw ParameterError("alpha = " + std::to_string(alpha) +
                         " has no largest root; admissible range is (-inf, alpha_max = " +
                         std::to_string(alpha_max(n)) + "]");
  }
}

// Bisection to (essentially) full double precision; both brackets are
// guaranteed by the shape of root_function.
template <class F>
double bisect(F f, double lo, double hi) {
  auto tol = [](double a, double b) {
    return std::abs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));
  };
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::bisect(f, lo, hi, tol, max_iter);
  return 0.5 * (a + b);
}

// V(root + h) - V(root), free of cancellation for small h.
double increment_of_v(double root, double alpha, int n, double h) {
  const double quad = h * (2.0 * root + h);
  const double tail = alpha * std::pow(root, -2.0 * n) * std::expm1(-2.0 * n * std::log1p(h / root));
  return quad + tail;
}

}  // namespace

double critical_radius(int n) {
  require_dimension(n);
  return std::sqrt(static_cast<double>(n) / (n + 1));
}

double alpha_max(int n) {
  require_dimension(n);
  return std::pow(static_cast<double>(n) / (n + 1), n) / (n + 1);
}

double root_function(double u, int n) { return (1.0 - u * u) * std::pow(u, 2 * n); }

double largest_root(double alpha, int n) {
  require_dimension(n);
  require_admissible(alpha, n);
  if (alpha == 0.0) return 1.0;
  if (alpha == alpha_max(n)) return critical_radius(n);
  auto g = [&](double u) { return root_function(u, n) - alpha; };
  if (alpha > 0.0) return bisect(g, critical_radius(n), 1.0);
  double hi = 2.0;
  while (g(hi) >= 0.0) hi *= 2.0;
  return bisect(g, 1.0, hi);
}

ConeData cone_data(double alpha, int n) {
  ConeData d;
  d.n = n;
  d.alpha = alpha;
  d.v = critical_radius(n);
  d.alpha_max = alpha_max(n);
  d.u_alpha = largest_root(alpha, n);
  d.c_alpha = d.u_alpha * d.u_alpha - n * alpha / std::pow(d.u_alpha, 2 * n);
  d.cone_angle = 2.0 * std::numbers::pi * d.c_alpha;
  return d;
}

double alpha_for_cone_angle(double c, int n) {
  require_dimension(n);
  if (!(c > 0.0 && c <= 1.0)) {
    throw ParameterError("cone fraction c must lie in (0, 1], got " + std::to_string(c));
  }
  const double u2 = (n + c) / (n + 1);
  return (1.0 - u2) * std::pow(u2, n);
}

double alpha_for_degree(int d, int n) {
  if (d < 1) throw ParameterError("branching degree must be >= 1, got " + std::to_string(d));
  return alpha_for_cone_angle(1.0 / d, n);
}

double cone_angle_numeric(double alpha, int n, double offset) {
  require_dimension(n);
  if (alpha >= alpha_max(n)) {
    throw ParameterError("cone_angle_numeric needs alpha < alpha_max; V'(u_alpha) vanishes at alpha_max");
  }
  if (!(offset > 0.0)) throw ParameterError("offset must be positive");
  const double root = largest_root(alpha, n);

  // t = root + tau^2 removes the 1/sqrt endpoint singularity of the radial integrand.
  auto integrand = [&](double tau) {
    const double h = tau * tau;
    const double slope = increment_of_v(root, alpha, n, h) / h;
    return 2.0 / std::sqrt(slope);
  };
  const double radius = boost::math::quadrature::gauss<double, 30>::integrate(integrand, 0.0, std::sqrt(offset));
  const double u = root + offset;
  const double v_at_u = increment_of_v(root, alpha, n, offset);
  const double estimate = u * std::sqrt(v_at_u) / radius;
  if (!std::isfinite(estimate) || !(radius > 0.0)) {
    throw NumericsError("cone-angle quadrature failed at alpha = " + std::to_string(alpha));
  }
  return estimate;
}

MetricDeviation metric_deviation(double alpha, int n, double u) {
  require_dimension(n);
  if (u < 1.5) throw DomainError("metric_deviation requires u >= 1.5", "metric_deviation", u);
  const double base = u * u - 1.0;
  const double excess = alpha * std::pow(u, -2 * n);
  const double v = base + excess;
  if (!(v > 0.0)) throw ParameterError("V_alpha is not positive at the requested u");
  const double angular = std::abs(excess) / base;
  const double radial = std::abs(base / v - 1.0);
  return {std::max(angular, radial), 2.0 * std::abs(excess)};
}

}  // namespace warpcurv
