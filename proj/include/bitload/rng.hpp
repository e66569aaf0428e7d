#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace bitload {

// Counter-free splitmix64 generator. Chosen over std::mt19937_64 so that
// channel realizations are reproducible bit-for-bit from the seed alone,
// independent of standard-library distribution internals.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1); never returns 0 or 1, so it is
  // safe to feed through -log for exponential draws.
  double next_open01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unit-mean exponential via inverse CDF.
  double next_unit_exponential() { return -std::log(next_open01()); }

 private:
  std::uint64_t state_;
};

// Identifier recorded in generated outputs so a channel file can be traced
// back to the exact draw procedure.
inline constexpr std::string_view kRngAlgorithm = "splitmix64/exp-invcdf";

}  // namespace bitload
