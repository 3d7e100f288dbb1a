#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "warpcurv/closed_forms.hpp"
#include "warpcurv/cone_geometry.hpp"
#include "warpcurv/curvature_engine.hpp"
#include "warpcurv/deficit.hpp"
#include "warpcurv/errors.hpp"
#include "warpcurv/frame_model.hpp"
#include "warpcurv/plane_bounds.hpp"
#include "warpcurv/warp_profiles.hpp"

namespace warpcurv::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  int n = 3;
  std::optional<double> alpha;
  std::optional<int> d;
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string output;
  bool timing = false;
  bool mutate = false;
};

struct Report {
  Json config = Json::object();
  Json results = Json::array();
  Json checks = Json::array();
  double max_error = 0.0;

  void check(const std::string& name, double value, double threshold, bool ok) {
    checks.push_back(Json{{"name", name}, {"value", value}, {"threshold", threshold}, {"pass", ok}});
  }
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c["pass"].get<bool>(); });
  }
};

double max_abs(double a, double b) { return std::max(a, std::abs(b)); }

// alpha from --alpha, else from --d, else from the default degree
double resolve_alpha(Common& c, std::optional<int> default_d) {
  if (c.alpha) return *c.alpha;
  if (!c.d && default_d) c.d = default_d;
  if (c.d) return alpha_for_degree(*c.d, c.n);
  return 0.0;
}

void fill_common_config(Json& config, const std::string& command, const Common& c, double alpha) {
  config["command"] = command;
  config["n"] = c.n;
  config["alpha"] = alpha;
  config["d"] = c.d ? Json(*c.d) : Json(nullptr);
  config["seed"] = c.seed;
  config["format"] = c.format;
  if (c.mutate) config["mutate"] = true;
}

std::string csv_cell(const Json& v) {
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render(const Report& r, const Common& c, std::optional<double> runtime_ms) {
  if (c.format == "csv") {
    std::ostringstream os;
    if (r.results.empty()) return "";
    std::vector<std::string> columns;
    for (const auto& item : r.results.front().items()) columns.push_back(item.key());
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const Json& row : r.results) {
      for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_cell(row.value(columns[i], Json()));
      os << '\n';
    }
    return os.str();
  }
  Json doc;
  doc["config"] = r.config;
  doc["results"] = r.results;
  doc["checks"] = r.checks;
  doc["pass"] = r.pass();
  doc["max_error"] = r.max_error;
  doc["runtime_ms"] = runtime_ms ? Json(*runtime_ms) : Json(nullptr);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- commands

struct CurvatureOptions {
  int grid = 10;
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  double connection_tol = 1e-12;
  double structure_tol = 1e-10;
};

Report verify_curvature(Common& c, const CurvatureOptions& o) {
  if (c.n != 3) throw ParameterError("verify-curvature evaluates the six-dimensional frame; --n must be 3");
  if (o.grid < 2) throw ParameterError("--grid must be at least 2");
  const double alpha = resolve_alpha(c, std::nullopt);
  const EinsteinWarp profile(c.n, alpha);

  Report r;
  fill_common_config(r.config, "verify-curvature", c, alpha);
  r.config["grid"] = o.grid;
  r.config["rel_tol"] = o.rel_tol;
  r.config["abs_tol"] = o.abs_tol;
  r.config["connection_tol"] = o.connection_tol;

  constexpr std::size_t dim = kFrameDim;
  constexpr std::size_t count = dim * dim * dim * dim;
  std::vector<double> worst_abs(count, 0.0), worst_rel(count, 0.0);
  std::vector<bool> ok(count, true);
  double connection_error = 0.0, bianchi = 0.0, jacobi = 0.0;

  const double u_lo = profile.u_alpha() + 0.05;
  for (int i = 0; i < o.grid; ++i) {
    for (int j = 0; j < o.grid; ++j) {
      const FramePoint p{0.3 + 2.2 * i / (o.grid - 1), u_lo + (5.0 - u_lo) * j / (o.grid - 1)};
      const CurvatureTensor numeric = riemann_numeric(p, profile);
      CurvatureTensor closed = riemann_closed_form(p.u, profile, c.n);
      if (c.mutate) closed.set(0, 1, 4, 5, closed(0, 1, 4, 5) + 1e-3);
      for (std::size_t idx = 0; idx < count; ++idx) {
        const double want = closed.data()[idx];
        const double diff = std::abs(numeric.data()[idx] - want);
        worst_abs[idx] = std::max(worst_abs[idx], diff);
        if (std::abs(want) > o.abs_tol) {
          const double rel = diff / std::abs(want);
          worst_rel[idx] = std::max(worst_rel[idx], rel);
          if (rel > o.rel_tol) ok[idx] = false;
        } else if (diff > o.abs_tol) {
          ok[idx] = false;
        }
      }
      const ConnectionTable koszul = koszul_connection(p, profile);
      const ConnectionTable formula = connection_closed_form(p, profile);
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t a = 0; a < dim; ++a)
          for (std::size_t b = 0; b < dim; ++b)
            connection_error = max_abs(connection_error, koszul.gamma(k, a, b).value - formula.gamma(k, a, b).value);
      bianchi = std::max(bianchi, numeric.bianchi_residual());
      jacobi = std::max(jacobi, jacobi_residual(p, profile));
    }
  }

  std::size_t failing = 0;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const std::size_t l = idx % dim, k = idx / dim % dim, j = idx / (dim * dim) % dim, i = idx / (dim * dim * dim);
    r.results.push_back(Json{{"i", i + 1},
                             {"j", j + 1},
                             {"k", k + 1},
                             {"l", l + 1},
                             {"max_abs_error", worst_abs[idx]},
                             {"max_rel_error", worst_rel[idx]},
                             {"pass", static_cast<bool>(ok[idx])}});
    r.max_error = std::max(r.max_error, worst_abs[idx]);
    if (!ok[idx]) ++failing;
  }
  r.check("failing_components", static_cast<double>(failing), 0.0, failing == 0);
  r.check("connection_max_error", connection_error, o.connection_tol, connection_error <= o.connection_tol);
  r.check("bianchi_residual", bianchi, o.structure_tol, bianchi <= o.structure_tol);
  r.check("jacobi_residual", jacobi, o.structure_tol, jacobi <= o.structure_tol);
  return r;
}

struct ConeOptions {
  int d_min = 1;
  int d_max = 12;
  double offset = 1e-6;
  double cone_tol = 1e-4;
  double roundtrip_tol = 1e-12;
};

Report cone_table(Common& c, const ConeOptions& o) {
  if (o.d_min < 1 || o.d_max < o.d_min) throw ParameterError("need 1 <= --d-min <= --d-max");
  Report r;
  fill_common_config(r.config, "cone-table", c, std::numeric_limits<double>::quiet_NaN());
  r.config.erase("alpha");
  r.config.erase("d");
  r.config["d_min"] = o.d_min;
  r.config["d_max"] = o.d_max;
  r.config["offset"] = o.offset;
  r.config["cone_tol"] = o.cone_tol;
  r.config["roundtrip_tol"] = o.roundtrip_tol;

  double numeric_error = 0.0, roundtrip = 0.0;
  for (int d = o.d_min; d <= o.d_max; ++d) {
    double alpha = alpha_for_degree(d, c.n);
    if (c.mutate) {
      const double u2 = (c.n + 1.0 / d) / (c.n + 1.0);
      alpha = (1.0 - u2) * std::pow(u2, c.n + 1);
    }
    const ConeData data = cone_data(alpha, c.n);
    const double numeric = cone_angle_numeric(alpha, c.n, o.offset);
    const CurvatureBounds bounds = pinching_formula(alpha, c.n, data.u_alpha);
    const double err = std::abs(numeric - data.c_alpha);
    numeric_error = std::max(numeric_error, err);
    roundtrip = max_abs(roundtrip, data.c_alpha - 1.0 / d);
    r.results.push_back(Json{{"d", d},
                             {"alpha", alpha},
                             {"u_alpha", data.u_alpha},
                             {"c_alpha", data.c_alpha},
                             {"cone_numeric", numeric},
                             {"numeric_error", err},
                             {"lower_bound", bounds.lower},
                             {"upper_bound", bounds.upper}});
  }
  r.max_error = numeric_error;
  r.check("cone_numeric_error", numeric_error, o.cone_tol, numeric_error <= o.cone_tol);
  r.check("cone_fraction_roundtrip", roundtrip, o.roundtrip_tol, roundtrip <= o.roundtrip_tol);
  return r;
}

struct DeficitOptions {
  double eta = 8.0;
  int grid = 400;
  int order = 2;
  int points = 50;
  std::size_t samples = 10000;
  std::string cutoff = "rho";
  double support_tol = 1e-13;
  double slope_tol = 0.05;
  double ratio_tol = 2.0;
};

Report deficit(Common& c, const DeficitOptions& o) {
  const double alpha = resolve_alpha(c, 2);
  if (!(o.eta >= 4.0)) throw ParameterError("--eta must be >= 4 (the decay fit uses eta/2 .. 5 eta/4)");
  const CutoffArgument argument =
      o.cutoff == "u" || c.mutate ? CutoffArgument::u_coordinate : CutoffArgument::geodesic_radius;

  Report r;
  fill_common_config(r.config, "deficit", c, alpha);
  r.config["eta"] = o.eta;
  r.config["grid"] = o.grid;
  r.config["order"] = o.order;
  r.config["points"] = o.points;
  r.config["samples"] = o.samples;
  r.config["cutoff"] = o.cutoff;
  r.config["support_tol"] = o.support_tol;
  r.config["slope_tol"] = o.slope_tol;
  r.config["ratio_tol"] = o.ratio_tol;

  // support: radii below eta/2 and beyond eta
  const InterpolatedWarp profile(c.n, alpha, o.eta, argument);
  const double rho0 = std::acosh(std::max(1.0, profile.domain_lower())) + 1e-3;
  double leak = 0.0;
  for (int i = 0; i < o.grid; ++i) {
    const double t = static_cast<double>(i) / (o.grid - 1);
    for (double rho : {rho0 + (0.5 * o.eta - rho0) * t * (1.0 - 1e-9), o.eta * (1.0 + 1e-9 + t)}) {
      const DeficitDiagonal dd = deficit_diagonal(profile, c.n, std::cosh(rho));
      leak = std::max({leak, std::abs(dd.horizontal), std::abs(dd.fiber)});
    }
  }

  const std::vector<double> etas{0.5 * o.eta, 0.75 * o.eta, o.eta, 1.25 * o.eta};
  const DeficitDecay decay = deficit_decay(alpha, c.n, etas, o.order, o.grid);
  for (const DeficitReport& rep : decay.reports) {
    Json row{{"eta", rep.eta}};
    for (int k = 0; k <= 2; ++k) {
      row["sup_order" + std::to_string(k)] =
          k < static_cast<int>(rep.sup_by_order.size()) ? rep.sup_by_order[k] : std::numeric_limits<double>::quiet_NaN();
    }
    row["sup"] = rep.sup;
    row["fitted_constant"] = rep.fitted_constant;
    row["l2_per_volume"] = rep.l2_per_volume;
    r.results.push_back(row);
  }

  const double target = -(c.n + 1.0);
  const double slope_error = std::abs(decay.log_sup_slope - target) / std::abs(target);
  const CurvatureScan scan = interpolated_curvature_scan(InterpolatedWarp(c.n, alpha, o.eta), 0.5 * o.eta, o.eta,
                                                          o.points, o.samples, c.seed);
  r.max_error = leak;
  r.check("support_leak", leak, o.support_tol, leak <= o.support_tol);
  r.check("log_sup_slope", decay.log_sup_slope, target, slope_error <= o.slope_tol);
  r.check("fitted_constant_ratio", decay.constant_ratio, o.ratio_tol, decay.constant_ratio <= o.ratio_tol);
  r.check("l2_strictly_decreasing", decay.l2_strictly_decreasing ? 1.0 : 0.0, 1.0, decay.l2_strictly_decreasing);
  r.check("scan_max_curvature", scan.max_curvature, 0.0, scan.pass);
  r.check("scan_min_curvature", scan.min_curvature, -2.0 * (c.n + 1), true);
  return r;
}

struct BoundsOptions {
  std::optional<double> u;
  std::size_t samples = 100000;
  double tol = 1e-9;
  double extremal_tol = 1e-10;
};

Report bounds(Common& c, const BoundsOptions& o) {
  const double alpha = resolve_alpha(c, 2);
  const double u = o.u ? *o.u : largest_root(alpha, c.n);

  Report r;
  fill_common_config(r.config, "bounds", c, alpha);
  r.config["u"] = u;
  r.config["samples"] = o.samples;
  r.config["tol"] = o.tol;
  r.config["extremal_tol"] = o.extremal_tol;

  CurvatureTensor tensor = riemann_alpha(u, alpha, c.n);
  const std::size_t theta = 2 * c.n - 2, radial = 2 * c.n - 1;
  if (c.mutate) tensor.set(theta, radial, theta, radial, tensor(theta, radial, theta, radial) - 0.5);
  const BoundsReport rep = verify_bounds_with_tensor(tensor, alpha, c.n, u, o.samples, c.seed, o.tol);

  r.results.push_back(Json{{"alpha", alpha},
                           {"n", c.n},
                           {"u", u},
                           {"lower_bound", rep.bounds.lower},
                           {"upper_bound", rep.bounds.upper},
                           {"sample_min", rep.samples.min},
                           {"sample_max", rep.samples.max},
                           {"lower_extremal", rep.lower_extremal},
                           {"upper_extremal", rep.upper_extremal},
                           {"samples", rep.samples.count},
                           {"asserted", rep.asserted}});
  const double attain =
      std::max(std::abs(rep.upper_extremal - rep.bounds.upper), std::abs(rep.lower_extremal - rep.bounds.lower));
  double violation = 0.0;
  if (o.samples > 0)
    violation = std::max({0.0, rep.bounds.lower - rep.samples.min, rep.samples.max - rep.bounds.upper});
  r.max_error = std::max(attain, violation);
  r.check("sample_violation", violation, o.tol, !rep.asserted || rep.pass);
  r.check("extremal_attainment", attain, o.extremal_tol, !rep.asserted || attain <= o.extremal_tol);
  return r;
}

struct RadialOptions {
  double rmax = 5.0;
  double step = 1e-3;
  int every = 100;
  double gh_tol = 1e-6;
  double energy_tol = 1e-8;
  double cosh_tol = 1e-8;
};

Report radial(Common& c, const RadialOptions& o) {
  const double alpha = resolve_alpha(c, 2);
  if (o.every < 1) throw ParameterError("--every must be positive");
  const EinsteinWarp profile(c.n, alpha);

  Report r;
  fill_common_config(r.config, "radial", c, alpha);
  r.config["rmax"] = o.rmax;
  r.config["step"] = o.step;
  r.config["every"] = o.every;
  r.config["gh_tol"] = o.gh_tol;
  r.config["energy_tol"] = o.energy_tol;

  const std::vector<RadialSample> path = radial_profile(profile, o.rmax, o.step);
  const int n_eff = c.mutate ? c.n + 1 : c.n;
  const bool plain = alpha == 0.0;
  double gh = 0.0, energy = 0.0, cosh_err = 0.0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const RadialSample& s = path[i];
    const double g = gh_ode_residual(s.f, s.f1, s.f2, n_eff);
    const double e = s.f1 * s.f1 - profile.evaluate(s.f).v;
    const double ce = plain ? s.f - std::cosh(s.r) : 0.0;
    gh = max_abs(gh, g);
    energy = max_abs(energy, e);
    cosh_err = max_abs(cosh_err, ce);
    if (i % o.every == 0 || i + 1 == path.size()) {
      Json row{{"r", s.r}, {"f", s.f}, {"f1", s.f1}, {"f2", s.f2}, {"gh_residual", g}, {"energy_residual", e}};
      if (plain) row["cosh_error"] = ce;
      r.results.push_back(row);
    }
  }
  r.max_error = gh;
  r.check("gh_residual", gh, o.gh_tol, gh <= o.gh_tol);
  r.check("energy_residual", energy, o.energy_tol, energy <= o.energy_tol);
  if (plain) r.check("cosh_error", cosh_err, o.cosh_tol, cosh_err <= o.cosh_tol);
  return r;
}

void add_common(CLI::App* sub, Common& c, bool with_alpha) {
  sub->add_option("--n", c.n, "complex dimension (>= 2)")->capture_default_str();
  if (with_alpha) {
    auto* a = sub->add_option("--alpha", c.alpha, "Einstein parameter alpha");
    auto* d = sub->add_option("--d", c.d, "branching degree; alpha is chosen so the cone angle is 2 pi / d");
    a->excludes(d);
  }
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--output", c.output, "write the report here instead of stdout");
  sub->add_flag("--timing", c.timing, "record wall-clock runtime_ms (output is then not reproducible)");
  sub->add_flag("--mutate", c.mutate, "inject a formula fault; the command must then fail")->group("");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature checks for warped complex-hyperbolic metrics", "warpcurv"};
  app.require_subcommand(1);

  Common common;
  CurvatureOptions co;
  ConeOptions cone;
  DeficitOptions dopt;
  BoundsOptions bopt;
  RadialOptions ropt;

  auto* vc = app.add_subcommand("verify-curvature", "frame-engine curvature against the closed forms (n = 3)");
  add_common(vc, common, true);
  vc->add_option("--grid", co.grid, "grid points per axis in (sigma, u)")->capture_default_str();
  vc->add_option("--rel-tol", co.rel_tol)->capture_default_str();
  vc->add_option("--abs-tol", co.abs_tol)->capture_default_str();
  vc->add_option("--connection-tol", co.connection_tol)->capture_default_str();
  vc->add_option("--structure-tol", co.structure_tol)->capture_default_str();

  auto* ct = app.add_subcommand("cone-table", "alpha, u_alpha and cone angle per branching degree");
  add_common(ct, common, false);
  ct->add_option("--d-min", cone.d_min)->capture_default_str();
  ct->add_option("--d-max", cone.d_max)->capture_default_str();
  ct->add_option("--offset", cone.offset, "quadrature offset from u_alpha")->capture_default_str();
  ct->add_option("--cone-tol", cone.cone_tol)->capture_default_str();
  ct->add_option("--roundtrip-tol", cone.roundtrip_tol)->capture_default_str();

  auto* de = app.add_subcommand("deficit", "Einstein deficit of the interpolated metric");
  add_common(de, common, true);
  de->add_option("--eta", dopt.eta, "tube radius; the decay fit uses eta/2, 3eta/4, eta, 5eta/4")->capture_default_str();
  de->add_option("--grid", dopt.grid, "radii per annulus")->capture_default_str();
  de->add_option("--order", dopt.order, "Y6-derivative order, 0..2")->capture_default_str();
  de->add_option("--points", dopt.points, "radii in the curvature scan")->capture_default_str();
  de->add_option("--samples", dopt.samples, "random planes per scan radius")->capture_default_str();
  de->add_option("--cutoff", dopt.cutoff, "cutoff argument for the support check: rho or u")
      ->check(CLI::IsMember({"rho", "u"}))
      ->capture_default_str();
  de->add_option("--support-tol", dopt.support_tol)->capture_default_str();
  de->add_option("--slope-tol", dopt.slope_tol)->capture_default_str();
  de->add_option("--ratio-tol", dopt.ratio_tol)->capture_default_str();

  auto* bo = app.add_subcommand("bounds", "random-plane check of the sectional-curvature pinching");
  add_common(bo, common, true);
  bo->add_option("--u", bopt.u, "radius (default u_alpha)");
  bo->add_option("--samples", bopt.samples)->capture_default_str();
  bo->add_option("--tol", bopt.tol)->capture_default_str();
  bo->add_option("--extremal-tol", bopt.extremal_tol)->capture_default_str();

  auto* ra = app.add_subcommand("radial", "geodesic-radius profile and the second-order ODE residual");
  add_common(ra, common, true);
  ra->add_option("--rmax", ropt.rmax)->capture_default_str();
  ra->add_option("--step", ropt.step)->capture_default_str();
  ra->add_option("--every", ropt.every, "emit every k-th step")->capture_default_str();
  ra->add_option("--gh-tol", ropt.gh_tol)->capture_default_str();
  ra->add_option("--energy-tol", ropt.energy_tol)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*vc) report = verify_curvature(common, co);
    else if (*ct) report = cone_table(common, cone);
    else if (*de) report = deficit(common, dopt);
    else if (*bo) report = bounds(common, bopt);
    else report = radial(common, ropt);
  } catch (const NumericsError& e) {
    err << "numerics failure: " << e.what() << '\n';
    return kNumerics;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::optional<double> runtime;
  if (common.timing)
    runtime = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string text = render(report, common, runtime);
  if (common.output.empty()) {
    out << text;
  } else {
    std::ofstream file(common.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << common.output << '\n';
      return kUsage;
    }
    file << text;
  }
  for (const Json& c : report.checks)
    if (!c["pass"].get<bool>()) err << "FAIL " << c["name"].get<std::string>() << '\n';
  return report.pass() ? kPass : kVerificationFailed;
}

}  // namespace warpcurv::cli
