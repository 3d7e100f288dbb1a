#include "warpcurv/jets.hpp"

#include <cmath>
#include <limits>

#include "warpcurv/errors.hpp"

namespace warpcurv {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

Jet2 Jet2::partial_u() const { return {d_u, d_sigma_u, d_u_u, kNaN, kNaN, kNaN}; }

Jet2 Jet2::partial_sigma() const { return {d_sigma, d_sigma_sigma, d_sigma_u, kNaN, kNaN, kNaN}; }

Jet2& Jet2::operator+=(const Jet2& o) { return *this = *this + o; }
Jet2& Jet2::operator-=(const Jet2& o) { return *this = *this - o; }
Jet2& Jet2::operator*=(const Jet2& o) { return *this = *this * o; }
Jet2& Jet2::operator/=(const Jet2& o) { return *this = *this / o; }

Jet2 lift(double value, Coordinate which) {
  switch (which) {
    case Coordinate::sigma:
      return {value, 1.0, 0.0, 0.0, 0.0, 0.0};
    case Coordinate::u:
      return {value, 0.0, 1.0, 0.0, 0.0, 0.0};
    case Coordinate::constant:
      break;
  }
  return Jet2{value};
}

Jet2 operator-(const Jet2& x) {
  return {-x.value, -x.d_sigma, -x.d_u, -x.d_sigma_sigma, -x.d_sigma_u, -x.d_u_u};
}

Jet2 operator+(const Jet2& x, const Jet2& y) {
  return {x.value + y.value,         x.d_sigma + y.d_sigma,     x.d_u + y.d_u,
          x.d_sigma_sigma + y.d_sigma_sigma, x.d_sigma_u + y.d_sigma_u, x.d_u_u + y.d_u_u};
}

Jet2 operator-(const Jet2& x, const Jet2& y) { return x + (-y); }

Jet2 operator*(const Jet2& x, const Jet2& y) {
  return {x.value * y.value,
          x.d_sigma * y.value + x.value * y.d_sigma,
          x.d_u * y.value + x.value * y.d_u,
          x.d_sigma_sigma * y.value + 2.0 * x.d_sigma * y.d_sigma + x.value * y.d_sigma_sigma,
          x.d_sigma_u * y.value + x.d_sigma * y.d_u + x.d_u * y.d_sigma + x.value * y.d_sigma_u,
          x.d_u_u * y.value + 2.0 * x.d_u * y.d_u + x.value * y.d_u_u};
}

Jet2 operator/(const Jet2& x, const Jet2& y) {
  const double inv = 1.0 / y.value;
  return x * chain(y, inv, -inv * inv, 2.0 * inv * inv * inv);
}

Jet2 chain(const Jet2& x, double f, double df, double d2f) {
  return {f,
          df * x.d_sigma,
          df * x.d_u,
          d2f * x.d_sigma * x.d_sigma + df * x.d_sigma_sigma,
          d2f * x.d_sigma * x.d_u + df * x.d_sigma_u,
          d2f * x.d_u * x.d_u + df * x.d_u_u};
}

Jet2 cosh(const Jet2& x) {
  const double c = std::cosh(x.value);
  return chain(x, c, std::sinh(x.value), c);
}

Jet2 sinh(const Jet2& x) {
  const double s = std::sinh(x.value);
  return chain(x, s, std::cosh(x.value), s);
}

Jet2 sqrt(const Jet2& x) {
  if (!(x.value > 0.0)) throw DomainError("sqrt", x.value);
  const double r = std::sqrt(x.value);
  return chain(x, r, 0.5 / r, -0.25 / (r * x.value));
}

Jet2 exp(const Jet2& x) {
  const double e = std::exp(x.value);
  return chain(x, e, e, e);
}

Jet2 arccosh(const Jet2& x) {
  if (!(x.value >= 1.0)) throw DomainError("arccosh", x.value);
  const double q = x.value * x.value - 1.0;
  if (q == 0.0) {
    // derivative blows up at 1; only the value is meaningful there
    const double inf = std::numeric_limits<double>::infinity();
    return chain(x, 0.0, inf, -inf);
  }
  const double sq = std::sqrt(q);
  return chain(x, std::acosh(x.value), 1.0 / sq, -x.value / (q * sq));
}

Jet2 pow(const Jet2& x, double k) {
  const bool integral = std::floor(k) == k;
  if (integral ? (k < 0.0 && x.value == 0.0) : !(x.value > 0.0)) {
    throw DomainError("pow", x.value);
  }
  const double p = std::pow(x.value, k);
  if (x.value == 0.0) {
    // nonnegative integer k here
    const double df = k == 0.0 ? 0.0 : k * std::pow(0.0, k - 1.0);
    const double d2f = k < 2.0 ? 0.0 : k * (k - 1.0) * std::pow(0.0, k - 2.0);
    return chain(x, p, df, d2f);
  }
  return chain(x, p, k * p / x.value, k * (k - 1.0) * p / (x.value * x.value));
}

std::string_view name(Elementary fn) {
  switch (fn) {
    case Elementary::cosh: return "cosh";
    case Elementary::sinh: return "sinh";
    case Elementary::sqrt: return "sqrt";
    case Elementary::exp: return "exp";
    case Elementary::arccosh: return "arccosh";
    case Elementary::pow: return "pow";
  }
  return "?";
}

Jet2 elementary(Elementary fn, const Jet2& x, double exponent) {
  switch (fn) {
    case Elementary::cosh: return cosh(x);
    case Elementary::sinh: return sinh(x);
    case Elementary::sqrt: return sqrt(x);
    case Elementary::exp: return exp(x);
    case Elementary::arccosh: return arccosh(x);
    case Elementary::pow: return pow(x, exponent);
  }
  return x;
}

}  // namespace warpcurv
