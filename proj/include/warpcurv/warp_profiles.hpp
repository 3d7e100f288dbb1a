#pragma once

#include <functional>
#include <string>
#include <vector>

namespace warpcurv {

/// V and its first two u-derivatives at one point.
struct WarpValue {
  double v = 0.0;
  double dv = 0.0;
  double d2v = 0.0;
};

/// Warping function V(u) replacing u^2 - 1 in the polar form of the
/// complex hyperbolic metric. Implementations are immutable.
class WarpProfile {
 public:
  virtual ~WarpProfile() = default;

  virtual WarpValue evaluate(double u) const = 0;

  /// V - (u^2 - 1) and its derivatives. Profiles that know their excess in
  /// closed form override this to avoid cancellation far from the locus.
  virtual WarpValue excess(double u) const;

  /// Infimum of the interval on which V > 0.
  virtual double domain_lower() const = 0;
  virtual std::string label() const = 0;
};

/// V = u^2 - 1, the complex hyperbolic metric itself.
class PlainHyperbolic final : public WarpProfile {
 public:
  WarpValue evaluate(double u) const override;
  WarpValue excess(double u) const override;
  double domain_lower() const override { return 1.0; }
  std::string label() const override { return "plain-hyperbolic"; }
};

/// V = u^2 - 1 + alpha u^{-2n}: the Einstein family with constant -2(n+1).
class EinsteinWarp final : public WarpProfile {
 public:
  /// Throws ParameterError for n < 2 or alpha > alpha_max(n).
  EinsteinWarp(int n, double alpha);

  WarpValue evaluate(double u) const override;
  WarpValue excess(double u) const override;
  double domain_lower() const override { return u_alpha_; }
  std::string label() const override;

  int n() const { return n_; }
  double alpha() const { return alpha_; }
  double u_alpha() const { return u_alpha_; }

 private:
  int n_;
  double alpha_;
  double u_alpha_;
};

/// Arbitrary user-supplied V, mainly for tests with non-Einstein profiles.
class FunctionWarp final : public WarpProfile {
 public:
  FunctionWarp(std::function<WarpValue(double)> fn, double lower, std::string label);

  WarpValue evaluate(double u) const override { return fn_(u); }
  double domain_lower() const override { return lower_; }
  std::string label() const override { return label_; }

 private:
  std::function<WarpValue(double)> fn_;
  double lower_;
  std::string label_;
};

EinsteinWarp einstein_profile(int n, double alpha);

/// V' + (2n/u) V - (2n+2) u + 2n/u; zero exactly for the Einstein family.
double ode_residual(const WarpProfile& profile, int n, double u);

/// The unique Einstein profile with V(u0) = V0.
EinsteinWarp solve_einstein_from_condition(int n, double u0, double v0);

struct RadialSample {
  double r = 0.0;
  double f = 0.0;   // u = f(r)
  double f1 = 0.0;  // f'(r)
  double f2 = 0.0;  // f''(r) = V'(f) / 2
};

/// Integrates f'' = V'(f)/2, f(0) = u_alpha, f'(0) = 0 with classical RK4 at a
/// fixed step. Throws DegenerateError at alpha = alpha_max.
std::vector<RadialSample> radial_profile(const EinsteinWarp& profile, double r_max = 5.0,
                                         double step = 1e-3);

/// f''/f + n f'^2/f^2 + n/f^2 - (n+1).
double gh_ode_residual(double f, double f1, double f2, int n);

}  // namespace warpcurv
