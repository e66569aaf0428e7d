#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bitload/rootfind.hpp"

using namespace bitload;

TEST_CASE("secant nails an affine function in one iteration") {
  const auto res = generalized_secant([](double x) { return 2.0 * x - 3.0; },
                                      identity_shape(), 0.0, 10.0, 1e-12, 50);
  CHECK_EQ(res.root, doctest::Approx(1.5).epsilon(1e-12));
  CHECK_EQ(res.iterations, 1);
}

TEST_CASE("log2 axis nails functions affine in log2(x) in one iteration") {
  const auto res = generalized_secant([](double x) { return std::log2(x) - 3.0; },
                                      log2_shape(), 1.0, 64.0, 1e-12, 50);
  CHECK_EQ(res.root, doctest::Approx(8.0).epsilon(1e-9));
  CHECK_EQ(res.iterations, 1);
}

TEST_CASE("decreasing functions work the same way") {
  const auto res = generalized_secant([](double x) { return 3.0 - x; },
                                      identity_shape(), 0.0, 10.0, 1e-12, 50);
  CHECK_EQ(res.root, doctest::Approx(3.0).epsilon(1e-12));
  CHECK_EQ(res.iterations, 1);
}

TEST_CASE("an endpoint that is already a root returns immediately") {
  const auto res = generalized_secant([](double x) { return x - 10.0; },
                                      identity_shape(), 10.0, 20.0, 1e-12, 50);
  CHECK_EQ(res.root, 10.0);
  CHECK_EQ(res.iterations, 0);
}

TEST_CASE("the shrinking-residual stop rule converges on a smooth curve") {
  const auto res = generalized_secant([](double x) { return x * x - 2.0; },
                                      identity_shape(), 0.0, 2.0, 1e-12, 100);
  CHECK_EQ(res.root, doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(res.iterations >= 1);
}

TEST_CASE("the absolute stop rule bounds the final residual") {
  const auto res = generalized_secant([](double x) { return std::exp(x) - 5.0; },
                                      identity_shape(), 0.0, 4.0, 0.0, 100, 1e-9);
  CHECK(std::abs(res.residual) < 1e-9);
  CHECK_EQ(res.root, doctest::Approx(std::log(5.0)).epsilon(1e-9));
}

TEST_CASE("a degenerate interpolation falls back to bisection and recovers") {
  // Doubles near 2^53 are two apart, so the chord root x1 + 4e-31 rounds
  // onto the left endpoint itself; the solver must detect the collapsed
  // proposal and take the (exactly representable) midpoint, which is the
  // root of the right-hand affine piece.
  const double left = 9007199254740992.0;   // 2^53
  const double mid = 9007199254740994.0;    // 2^53 + 2
  const double right = 9007199254740996.0;  // 2^53 + 4
  auto f = [=](double x) { return x <= left ? -1e-30 : x - mid; };
  const auto res = generalized_secant(f, identity_shape(), left, right, 0.0, 50);
  CHECK_EQ(res.root, mid);
  CHECK_EQ(res.fallbacks, 1);
  CHECK_EQ(res.iterations, 1);
}

TEST_CASE("brackets without a sign change are rejected") {
  CHECK_THROWS_AS(generalized_secant([](double x) { return x * x + 1.0; },
                                     identity_shape(), -1.0, 1.0, 1e-12, 50),
                  std::invalid_argument);
}

TEST_CASE("running out of iterations raises an error") {
  CHECK_THROWS_AS(generalized_secant([](double x) { return (x - 5.0) * (x - 5.0) *
                                                           (x - 5.0); },
                                     identity_shape(), 0.0, 9.0, 0.0, 8),
                  std::runtime_error);
}
