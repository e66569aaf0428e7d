#pragma once

#include <functional>
#include <string>

namespace bitload {

// Invertible warp applied to the abscissa before the secant interpolation.
// With the right warp a curved monotone function becomes near-affine and the
// secant step lands almost exactly.
struct AxisShape {
  std::function<double(double)> fwd;
  std::function<double(double)> inv;
  std::string name;
};

AxisShape identity_shape();
AxisShape log2_shape();  // domain x > 0

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // f(root)
  int iterations = 0;     // f evaluations inside the loop
  int fallbacks = 0;      // steps replaced by a bracket bisection
};

// Bracketed secant iteration on the warped axis: fit f ~ a h(x) + b through
// the two bracket points, step to x0 = h_inv of the interpolated zero,
// replace the endpoint whose sign matches. An iterate that leaves the open
// bracket or repeats an endpoint falls back to bisecting h.
//
// Stops when |f| < abs_y_tol (if > 0), when successive iterate values
// satisfy |y_i - y_{i-1}| <= delta_y_tol (if > 0, seeded with f(x1)), or on
// an exact zero. Throws std::invalid_argument when [x1, x2] does not
// bracket a sign change and std::runtime_error when max_iter runs out.
RootResult generalized_secant(const std::function<double(double)>& f,
                              const AxisShape& shape, double x1, double x2,
                              double delta_y_tol, int max_iter,
                              double abs_y_tol = 0.0);

}  // namespace bitload
