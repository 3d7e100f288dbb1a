#pragma once

namespace warpcurv {

/// Constants of the cone-angle lemma for the Einstein family
/// V(u) = u^2 - 1 + alpha u^{-2n}.
struct ConeData {
  int n = 0;
  double alpha = 0.0;
  double v = 0.0;          // sqrt(n / (n + 1)), critical point of (1 - u^2) u^{2n}
  double alpha_max = 0.0;  // v^{2n} / (n + 1)
  double u_alpha = 0.0;    // largest root of V
  double c_alpha = 0.0;    // (u_alpha / 2) V'(u_alpha)
  double cone_angle = 0.0; // 2 pi c_alpha
};

double critical_radius(int n);
double alpha_max(int n);

/// (1 - u^2) u^{2n}; roots of V are exactly the solutions of root_function(u) == alpha.
double root_function(double u, int n);

/// Largest root of V by bisection. Throws ParameterError for alpha > alpha_max(n).
double largest_root(double alpha, int n);

ConeData cone_data(double alpha, int n);

/// Alpha giving cone-angle fraction c in (0, 1], i.e. angle 2 pi c.
double alpha_for_cone_angle(double c, int n);
/// Alpha for a d-fold branched cover (c = 1/d).
double alpha_for_degree(int d, int n);

/// Circumference-to-radius estimate of c_alpha at u = u_alpha + offset.
/// Tends to c_alpha as offset -> 0 with O(offset) error.
double cone_angle_numeric(double alpha, int n, double offset);

struct MetricDeviation {
  double measured = 0.0;
  double bound = 0.0;
};

/// Frame-slot relative deviation of the Einstein metric from the complex
/// hyperbolic metric, measured in the latter's orthonormal frame, together
/// with the 2|alpha| / u^{2n} bound. Requires u >= 1.5.
MetricDeviation metric_deviation(double alpha, int n, double u);

}  // namespace warpcurv
