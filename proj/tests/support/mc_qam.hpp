#pragma once

#include <cstdint>

namespace testsupport {

struct McBer {
  double ber = 0.0;
  double std_error = 0.0;  // standard error of the ber estimate
  long long bits = 0;
};

// Bit error rate of Gray-mapped rectangular QAM with 2^r points over an AWGN
// channel, estimated by simulation. Per-axis maximum likelihood detection.
McBer simulate_qam_ber(int r, double snr, long long symbols, std::uint64_t seed);

}  // namespace testsupport
