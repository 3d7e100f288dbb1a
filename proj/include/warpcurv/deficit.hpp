#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "warpcurv/jets.hpp"
#include "warpcurv/warp_profiles.hpp"

namespace warpcurv {

/// Smooth cutoff: 1 on t <= 1/2, 0 on t >= 1, built from psi(s) = exp(-1/s):
/// chi(t) = psi(2 - 2t) / (psi(2 - 2t) + psi(2t - 1)).
double chi(double t);
Jet2 chi(const Jet2& t);

/// What the cutoff is applied to.
enum class CutoffArgument {
  geodesic_radius,  // chi(arccosh(u) / eta)
  u_coordinate,     // chi(u / eta), the literal form of the displayed definition
};

/// V_k(u) = u^2 - 1 + (alpha / u^{2n}) chi(rho(u) / eta): equals the Einstein
/// profile for rho <= eta/2 and the plain hyperbolic one for rho >= eta.
class InterpolatedWarp final : public WarpProfile {
 public:
  InterpolatedWarp(int n, double alpha, double eta, CutoffArgument argument = CutoffArgument::geodesic_radius);

  WarpValue evaluate(double u) const override;
  WarpValue excess(double u) const override;
  double domain_lower() const override { return u_alpha_; }
  std::string label() const override;

  int n() const { return n_; }
  double alpha() const { return alpha_; }
  double eta() const { return eta_; }

  /// u-range of the interpolation annulus.
  double inner_u() const;
  double outer_u() const;

 private:
  int n_;
  double alpha_;
  double eta_;
  CutoffArgument argument_;
  double u_alpha_;
};

/// Diagonal of Ric + (2n+2) g: D_H on the 2n-2 horizontal directions, D_F on
/// the two fiber directions. Evaluated from the profile's excess over
/// u^2 - 1 so that tiny deficits are not lost to cancellation.
struct DeficitDiagonal {
  double horizontal = 0.0;
  double fiber = 0.0;
};

DeficitDiagonal deficit_diagonal(const WarpProfile& profile, int n, double u);

struct DeficitReport {
  double alpha = 0.0;
  int n = 0;
  double eta = 0.0;
  int order = 0;
  int grid = 0;
  std::vector<double> sup_by_order;  // sup of |Y6^k D| over the annulus, k = 0..order
  double sup = 0.0;                  // max over orders
  double fitted_constant = 0.0;      // sup * cosh^{2n+2}(eta / 2)
  double l2_per_volume = 0.0;        // annulus L^2 integral per unit branching-locus volume
};

/// Sup norms (with Y6-derivatives up to `order` <= 2, by central differences
/// with relative step 1e-4) over `grid` radii spanning [eta/2, eta], plus the
/// per-unit-volume L^2 integral. Requires eta >= 2.
DeficitReport deficit_report(double alpha, int n, double eta, int order = 2, int grid = 400);

struct DeficitDecay {
  std::vector<DeficitReport> reports;
  double log_sup_slope = 0.0;       // least-squares slope of log(sup) against eta
  double constant_ratio = 0.0;      // max A(eta) / min A(eta)
  bool l2_strictly_decreasing = false;
};

DeficitDecay deficit_decay(double alpha, int n, const std::vector<double>& etas, int order = 2, int grid = 400);

struct CurvatureScan {
  double u_lo = 0.0;
  double u_hi = 0.0;
  int points = 0;
  std::size_t planes_per_point = 0;
  double max_curvature = 0.0;
  double min_curvature = 0.0;
  bool pass = false;  // max_curvature < 0
};

/// Random-plane sectional curvatures of the interpolated metric at `points`
/// radii rho in [rho_lo, rho_hi] (u = cosh rho).
CurvatureScan interpolated_curvature_scan(const InterpolatedWarp& profile, double rho_lo, double rho_hi, int points,
                                          std::size_t planes_per_point, std::uint64_t seed);

/// Same over the annulus [eta/2, eta]. Requires eta >= 2.
CurvatureScan interpolated_curvature_scan(double alpha, int n, double eta, int points = 50,
                                          std::size_t planes_per_point = 10000, std::uint64_t seed = 42);

}  // namespace warpcurv
