#include "warpcurv/deficit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "warpcurv/closed_forms.hpp"
#include "warpcurv/cone_geometry.hpp"
#include "warpcurv/errors.hpp"
#include "warpcurv/plane_bounds.hpp"

namespace warpcurv {

namespace {

Jet2 psi(const Jet2& s) {
  if (!(s.value > 0.0)) return Jet2{0.0};
  return exp(-(1.0 / s));
}

void require_eta(double eta) {
  if (!(eta >= 2.0)) throw ParameterError("eta must be >= 2");
}

}  // namespace

double chi(double t) { return chi(Jet2{t}).value; }

Jet2 chi(const Jet2& t) {
  if (t.value <= 0.5) return Jet2{1.0};
  if (t.value >= 1.0) return Jet2{0.0};
  const Jet2 left = psi(2.0 - 2.0 * t);
  const Jet2 right = psi(2.0 * t - 1.0);
  return left / (left + right);
}

InterpolatedWarp::InterpolatedWarp(int n, double alpha, double eta, CutoffArgument argument)
    : n_(n), alpha_(alpha), eta_(eta), argument_(argument), u_alpha_(largest_root(alpha, n)) {
  if (!(eta > 0.0)) throw ParameterError("eta must be positive");
}

double InterpolatedWarp::inner_u() const {
  return argument_ == CutoffArgument::geodesic_radius ? std::cosh(0.5 * eta_) : 0.5 * eta_;
}

double InterpolatedWarp::outer_u() const {
  return argument_ == CutoffArgument::geodesic_radius ? std::cosh(eta_) : eta_;
}

WarpValue InterpolatedWarp::excess(double u) const {
  if (u >= outer_u()) return {};
  const Jet2 x = lift(u, Coordinate::u);
  const Jet2 einstein = alpha_ * pow(x, -2.0 * n_);
  if (u <= inner_u()) return {einstein.value, einstein.d_u, einstein.d_u_u};
  const Jet2 arg = argument_ == CutoffArgument::geodesic_radius ? arccosh(x) / eta_ : x / eta_;
  const Jet2 e = einstein * chi(arg);
  return {e.value, e.d_u, e.d_u_u};
}

WarpValue InterpolatedWarp::evaluate(double u) const {
  const WarpValue e = excess(u);
  return {u * u - 1.0 + e.v, 2.0 * u + e.dv, 2.0 + e.d2v};
}

std::string InterpolatedWarp::label() const {
  std::ostringstream os;
  os.precision(17);
  os << "interpolated(n=" << n_ << ", alpha=" << alpha_ << ", eta=" << eta_
     << (argument_ == CutoffArgument::geodesic_radius ? ", cutoff=rho" : ", cutoff=u") << ")";
  return os.str();
}

DeficitDiagonal deficit_diagonal(const WarpProfile& profile, int n, double u) {
  // Ric + (2n+2) g written through E = V - (u^2 - 1); the (2n+2) terms cancel exactly.
  const WarpValue e = profile.excess(u);
  return {-2.0 * n * e.v / (u * u) - e.dv / u, -(2.0 * n + 1.0) * e.dv / (2.0 * u) - 0.5 * e.d2v};
}

DeficitReport deficit_report(double alpha, int n, double eta, int order, int grid) {
  require_eta(eta);
  if (order < 0 || order > 2) throw ParameterError("derivative order must be 0, 1 or 2");
  if (grid < 2) throw ParameterError("grid must have at least 2 points");
  const InterpolatedWarp profile(n, alpha, eta);

  DeficitReport report;
  report.alpha = alpha;
  report.n = n;
  report.eta = eta;
  report.order = order;
  report.grid = grid;
  report.sup_by_order.assign(order + 1, 0.0);

  auto components = [&](double u) {
    const DeficitDiagonal d = deficit_diagonal(profile, n, u);
    return std::pair{d.horizontal, d.fiber};
  };

  for (int i = 0; i < grid; ++i) {
    const double rho = 0.5 * eta + 0.5 * eta * i / (grid - 1);
    const double u = std::cosh(rho);
    const auto [h0, f0] = components(u);
    report.sup_by_order[0] = std::max({report.sup_by_order[0], std::abs(h0), std::abs(f0)});
    if (order == 0) continue;

    const double step = 1e-4 * u;
    const auto [hp, fp] = components(u + step);
    const auto [hm, fm] = components(u - step);
    const WarpValue v = profile.evaluate(u);
    const double w = std::sqrt(v.v);
    // Y6 = W d/du, Y6^2 = (V'/2) d/du + V d^2/du^2
    auto first = [&](double plus, double minus) { return (plus - minus) / (2.0 * step); };
    auto second = [&](double plus, double mid, double minus) { return (plus - 2.0 * mid + minus) / (step * step); };
    const double h1 = w * first(hp, hm);
    const double f1 = w * first(fp, fm);
    report.sup_by_order[1] = std::max({report.sup_by_order[1], std::abs(h1), std::abs(f1)});
    if (order == 1) continue;
    const double h2 = 0.5 * v.dv * first(hp, hm) + v.v * second(hp, h0, hm);
    const double f2 = 0.5 * v.dv * first(fp, fm) + v.v * second(fp, f0, fm);
    report.sup_by_order[2] = std::max({report.sup_by_order[2], std::abs(h2), std::abs(f2)});
  }
  report.sup = *std::max_element(report.sup_by_order.begin(), report.sup_by_order.end());
  report.fitted_constant = report.sup * std::pow(std::cosh(0.5 * eta), 2 * n + 2);

  auto density = [&](double u) {
    const auto [h, f] = components(u);
    return ((2.0 * n - 2.0) * h * h + 2.0 * f * f) * std::pow(u, 2 * n - 1);
  };
  report.l2_per_volume = 2.0 * std::numbers::pi *
                         boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                             density, profile.inner_u(), profile.outer_u(), 15, 1e-10);
  return report;
}

DeficitDecay deficit_decay(double alpha, int n, const std::vector<double>& etas, int order, int grid) {
  if (etas.size() < 2) throw ParameterError("decay fit needs at least two eta values");
  DeficitDecay decay;
  for (double eta : etas) decay.reports.push_back(deficit_report(alpha, n, eta, order, grid));

  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& r : decay.reports) {
    mean_x += r.eta;
    mean_y += std::log(r.sup);
  }
  mean_x /= etas.size();
  mean_y /= etas.size();
  double sxy = 0.0, sxx = 0.0;
  for (const auto& r : decay.reports) {
    sxy += (r.eta - mean_x) * (std::log(r.sup) - mean_y);
    sxx += (r.eta - mean_x) * (r.eta - mean_x);
  }
  decay.log_sup_slope = sxy / sxx;

  const auto [lo, hi] = std::minmax_element(decay.reports.begin(), decay.reports.end(),
                                            [](const auto& a, const auto& b) { return a.fitted_constant < b.fitted_constant; });
  decay.constant_ratio = hi->fitted_constant / lo->fitted_constant;

  decay.l2_strictly_decreasing = true;
  for (std::size_t i = 1; i < decay.reports.size(); ++i) {
    const bool later_eta = decay.reports[i].eta > decay.reports[i - 1].eta;
    const bool smaller = decay.reports[i].l2_per_volume < decay.reports[i - 1].l2_per_volume;
    decay.l2_strictly_decreasing = decay.l2_strictly_decreasing && later_eta && smaller;
  }
  return decay;
}

CurvatureScan interpolated_curvature_scan(const InterpolatedWarp& profile, double rho_lo, double rho_hi, int points,
                                          std::size_t planes_per_point, std::uint64_t seed) {
  if (points < 1) throw ParameterError("scan needs at least one point");
  CurvatureScan scan;
  scan.u_lo = std::cosh(rho_lo);
  scan.u_hi = std::cosh(rho_hi);
  scan.points = points;
  scan.planes_per_point = planes_per_point;
  scan.max_curvature = -std::numeric_limits<double>::infinity();
  scan.min_curvature = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double rho = points == 1 ? rho_lo : rho_lo + (rho_hi - rho_lo) * i / (points - 1);
    const CurvatureTensor tensor = riemann_closed_form(std::cosh(rho), profile, profile.n());
    const SampleExtrema s = sample_sectional_curvatures(tensor, planes_per_point, seed + static_cast<std::uint64_t>(i));
    // coordinate planes carry the block values exactly; include them alongside the samples
    const auto dim = tensor.dim();
    double lo = s.min, hi = s.max;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = a + 1; b < dim; ++b) {
        lo = std::min(lo, tensor(a, b, a, b));
        hi = std::max(hi, tensor(a, b, a, b));
      }
    scan.max_curvature = std::max(scan.max_curvature, hi);
    scan.min_curvature = std::min(scan.min_curvature, lo);
  }
  scan.pass = scan.max_curvature < 0.0;
  return scan;
}

CurvatureScan interpolated_curvature_scan(double alpha, int n, double eta, int points, std::size_t planes_per_point,
                                          std::uint64_t seed) {
  require_eta(eta);
  const InterpolatedWarp profile(n, alpha, eta);
  return interpolated_curvature_scan(profile, 0.5 * eta, eta, points, planes_per_point, seed);
}

}  // namespace warpcurv
