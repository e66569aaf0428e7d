#include "bitload/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bitload {

AxisShape identity_shape() {
  return {[](double x) { return x; }, [](double x) { return x; }, "identity"};
}

AxisShape log2_shape() {
  return {[](double x) { return std::log2(x); }, [](double h) { return std::exp2(h); },
          "log2"};
}

RootResult generalized_secant(const std::function<double(double)>& f,
                              const AxisShape& shape, double x1, double x2,
                              double delta_y_tol, int max_iter, double abs_y_tol) {
  if (!std::isfinite(x1) || !std::isfinite(x2))
    throw std::invalid_argument("generalized_secant: non-finite bracket");
  if (x1 > x2) std::swap(x1, x2);
  if (x1 == x2) throw std::invalid_argument("generalized_secant: degenerate bracket");
  if (max_iter < 1) throw std::invalid_argument("generalized_secant: max_iter must be >= 1");

  double y1 = f(x1);
  double y2 = f(x2);
  RootResult out;
  // An endpoint that already meets the acceptance tolerance is the answer;
  // callers may construct brackets whose residual proof holds in real
  // arithmetic but whose floating-point sign is arbitrary near equality
  // (e.g. a uniform profile putting every channel exactly at the mean rate).
  if (y1 == 0.0 || (abs_y_tol > 0.0 && std::abs(y1) < abs_y_tol)) {
    out.root = x1;
    out.residual = y1;
    return out;
  }
  if (y2 == 0.0 || (abs_y_tol > 0.0 && std::abs(y2) < abs_y_tol)) {
    out.root = x2;
    out.residual = y2;
    return out;
  }
  if ((y1 < 0) == (y2 < 0)) throw std::invalid_argument("generalized_secant: no sign change");

  double prev_y = y1;  // delta rule is seeded with f(x1)
  for (int iter = 1; iter <= max_iter; ++iter) {
    const double h1 = shape.fwd(x1);
    const double h2 = shape.fwd(x2);
    if (!std::isfinite(h1) || !std::isfinite(h2))
      throw std::invalid_argument("generalized_secant: shape undefined on bracket");
    double x0 = shape.inv((h2 * y1 - h1 * y2) / (y1 - y2));
    if (!std::isfinite(x0) || !(x0 > x1 && x0 < x2)) {
      x0 = shape.inv(0.5 * (h1 + h2));
      ++out.fallbacks;
      if (!(x0 > x1 && x0 < x2))
        throw std::runtime_error("generalized_secant: bracket collapsed before tolerance");
    }
    const double y0 = f(x0);
    out.root = x0;
    out.residual = y0;
    out.iterations = iter;
    if (y0 == 0.0) return out;
    if (abs_y_tol > 0.0 && std::abs(y0) < abs_y_tol) return out;
    if (delta_y_tol > 0.0 && std::abs(y0 - prev_y) <= delta_y_tol) return out;
    prev_y = y0;
    // Pegasus update: the new point replaces the endpoint with the matching
    // sign, and the retained endpoint's stored ordinate is scaled by
    // y_replaced / (y_replaced + y0), a factor in (0, 1) because both share
    // a sign. A plain replacement would let a huge stale residual pin the
    // chord, so the iterate creeps linearly along the knees of a clipped-sum
    // objective; the scaling deflates the stale ordinate and restores
    // superlinear convergence there. Signs are untouched, so the bracket
    // invariant is preserved.
    if ((y0 < 0) == (y1 < 0)) {
      y2 *= y1 / (y1 + y0);
      x1 = x0;
      y1 = y0;
    } else {
      y1 *= y2 / (y2 + y0);
      x2 = x0;
      y2 = y0;
    }
  }
  throw std::runtime_error("generalized_secant: no convergence within max_iter");
}

}  // namespace bitload
