#pragma once

#include "warpcurv/curvature_engine.hpp"
#include "warpcurv/frame_model.hpp"
#include "warpcurv/warp_profiles.hpp"

namespace warpcurv {

/// The 36 connection components of the n = 3 frame, transcribed directly.
ConnectionTable connection_closed_form(const FramePoint& point, const WarpProfile& profile);

/// Scalar building blocks of the curvature of the warped metric at u.
struct CurvatureScalars {
  double horizontal = 0.0;  // (1 + W^2) / u^2
  double mixed = 0.0;       // W W' / u
  double fiber = 0.0;       // -3 W W'/u - (W W'' + W'^2)
};

CurvatureScalars curvature_scalars(double u, const WarpProfile& profile);

/// Full 2n-dimensional tensor of the warped metric in the frame
/// (Y_1..Y_{2n-2} horizontal with holomorphic pairs (2p, 2p+1), then Y_{2n-1}
/// along d/dtheta and Y_{2n} along d/du), all unlisted components zero.
CurvatureTensor riemann_closed_form(double u, const WarpProfile& profile, int n);

/// Same assembly with the Einstein-family values substituted, written in
/// terms of q = alpha / u^{2n+2}. Valid for u >= u_alpha.
CurvatureTensor riemann_alpha(double u, double alpha, int n);

struct RicciDiagonal {
  double horizontal = 0.0;  // Ric(Y_i, Y_i), i <= 2n-2
  double fiber = 0.0;       // Ric(Y_{2n-1}, Y_{2n-1}) = Ric(Y_{2n}, Y_{2n})
};

RicciDiagonal ricci_diagonal(double u, const WarpProfile& profile, int n);

}  // namespace warpcurv
