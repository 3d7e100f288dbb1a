#pragma once

#include <string_view>

namespace warpcurv {

enum class Coordinate { sigma, u, constant };

/// Second-order forward-mode jet over the two base coordinates (sigma, u).
///
/// Carries the value together with the gradient and the (symmetric) Hessian
/// of a scalar function of (sigma, u). The mixed partial has a single slot,
/// so d2/dsigma du == d2/du dsigma holds by construction.
struct Jet2 {
  double value = 0.0;
  double d_sigma = 0.0;
  double d_u = 0.0;
  double d_sigma_sigma = 0.0;
  double d_sigma_u = 0.0;
  double d_u_u = 0.0;

  constexpr Jet2() = default;
  constexpr Jet2(double v) : value(v) {}  // NOLINT: constants promote implicitly
  constexpr Jet2(double v, double ds, double du, double dss, double dsu, double duu)
      : value(v), d_sigma(ds), d_u(du), d_sigma_sigma(dss), d_sigma_u(dsu), d_u_u(duu) {}

  /// Partial derivative in u as a jet. Only first-order information survives:
  /// the second-order slots of the result are NaN because they would need
  /// third derivatives of the input.
  Jet2 partial_u() const;
  Jet2 partial_sigma() const;

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(const Jet2& o);
  Jet2& operator/=(const Jet2& o);
};

Jet2 lift(double value, Coordinate which);

Jet2 operator-(const Jet2& x);
Jet2 operator+(const Jet2& x, const Jet2& y);
Jet2 operator-(const Jet2& x, const Jet2& y);
Jet2 operator*(const Jet2& x, const Jet2& y);
Jet2 operator/(const Jet2& x, const Jet2& y);

/// Applies a scalar function with known first and second derivative at x.value.
Jet2 chain(const Jet2& x, double f, double df, double d2f);

Jet2 cosh(const Jet2& x);
Jet2 sinh(const Jet2& x);
Jet2 sqrt(const Jet2& x);
Jet2 exp(const Jet2& x);
Jet2 arccosh(const Jet2& x);
Jet2 pow(const Jet2& x, double k);

enum class Elementary { cosh, sinh, sqrt, exp, arccosh, pow };

std::string_view name(Elementary fn);

/// Dispatches to the matching elementary function; `exponent` is used by pow only.
Jet2 elementary(Elementary fn, const Jet2& x, double exponent = 1.0);

}  // namespace warpcurv
