#pragma once

namespace testsupport {

// erfc(x) evaluated with 256-bit arithmetic, rounded to double.
double erfc_ref(double x);

// ln(erfc(x)) evaluated with 256-bit arithmetic, rounded to double.
double log_erfc_ref(double x);

}  // namespace testsupport
