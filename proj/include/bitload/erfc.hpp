#pragma once

namespace bitload {

// Complementary error function, erfc(x) = (2/sqrt(pi)) * integral_x^inf exp(-t^2) dt.
// Maclaurin series below the crossover, Lentz continued fraction above it,
// reflection for negative arguments. Relative error <= 1e-12 for |x| <= 10;
// for larger x the value decays smoothly into the subnormal range and
// underflows to 0 near x = 26.6.
double erfc(double x);

// log(erfc(x)), evaluated without underflow for large positive x.
// Needed when comparing error-rate expressions whose linear-scale values
// are far below the smallest double.
double log_erfc(double x);

}  // namespace bitload
