#include "warpcurv/warp_profiles.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

#include "warpcurv/cone_geometry.hpp"
#include "warpcurv/errors.hpp"
#include "warpcurv/jets.hpp"

namespace warpcurv {

WarpValue WarpProfile::excess(double u) const {
  const WarpValue full = evaluate(u);
  return {full.v - (u * u - 1.0), full.dv - 2.0 * u, full.d2v - 2.0};
}

WarpValue PlainHyperbolic::evaluate(double u) const { return {u * u - 1.0, 2.0 * u, 2.0}; }

WarpValue PlainHyperbolic::excess(double) const { return {}; }

EinsteinWarp::EinsteinWarp(int n, double alpha) : n_(n), alpha_(alpha), u_alpha_(largest_root(alpha, n)) {}

WarpValue EinsteinWarp::evaluate(double u) const {
  const Jet2 x = lift(u, Coordinate::u);
  const Jet2 v = x * x - 1.0 + alpha_ * pow(x, -2.0 * n_);
  return {v.value, v.d_u, v.d_u_u};
}

WarpValue EinsteinWarp::excess(double u) const {
  const Jet2 e = alpha_ * pow(lift(u, Coordinate::u), -2.0 * n_);
  return {e.value, e.d_u, e.d_u_u};
}

std::string EinsteinWarp::label() const {
  std::ostringstream os;
  os.precision(17);
  os << "einstein(n=" << n_ << ", alpha=" << alpha_ << ")";
  return os.str();
}

FunctionWarp::FunctionWarp(std::function<WarpValue(double)> fn, double lower, std::string label)
    : fn_(std::move(fn)), lower_(lower), label_(std::move(label)) {}

EinsteinWarp einstein_profile(int n, double alpha) { return EinsteinWarp(n, alpha); }

double ode_residual(const WarpProfile& profile, int n, double u) {
  // with V = u^2 - 1 + E the u^2 - 1 part drops out exactly
  const WarpValue e = profile.excess(u);
  return e.dv + (2.0 * n / u) * e.v;
}

EinsteinWarp solve_einstein_from_condition(int n, double u0, double v0) {
  if (!(u0 > 0.0)) throw ParameterError("u0 must be positive");
  // u^{2n} is an integrating factor: (u^{2n} V)' = u^{2n}((2n+2)u - 2n/u)
  const double alpha = (v0 - u0 * u0 + 1.0) * std::pow(u0, 2 * n);
  return EinsteinWarp(n, alpha);
}

std::vector<RadialSample> radial_profile(const EinsteinWarp& profile, double r_max, double step) {
  if (!(step > 0.0)) throw ParameterError("radial step must be positive");
  if (!(r_max >= 0.0)) throw ParameterError("r_max must be nonnegative");
  if (profile.alpha() == alpha_max(profile.n())) {
    throw DegenerateError("alpha = alpha_max: V'(u_alpha) = 0, the solution is the constant f = v");
  }

  using State = std::array<double, 2>;
  auto rhs = [&profile](const State& x, State& dxdr, double) {
    dxdr[0] = x[1];
    dxdr[1] = 0.5 * profile.evaluate(x[0]).dv;
  };

  boost::numeric::odeint::runge_kutta4<State> stepper;
  const auto steps = static_cast<std::size_t>(std::llround(r_max / step));
  std::vector<RadialSample> out;
  out.reserve(steps + 1);
  State x{profile.u_alpha(), 0.0};
  for (std::size_t i = 0;; ++i) {
    const double r = static_cast<double>(i) * step;
    out.push_back({r, x[0], x[1], 0.5 * profile.evaluate(x[0]).dv});
    if (i == steps) break;
    stepper.do_step(rhs, x, r, step);
  }
  return out;
}

double gh_ode_residual(double f, double f1, double f2, int n) {
  return f2 / f + n * f1 * f1 / (f * f) + n / (f * f) - (n + 1.0);
}

}  // namespace warpcurv
