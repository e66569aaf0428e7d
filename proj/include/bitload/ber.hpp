#pragma once

namespace bitload {

// Rectangular Gray-mapped QAM constellation for r bits per symbol:
// i_side = 2^floor(r/2) levels on one axis, j_side = 2^ceil(r/2) on the
// other. Square when r is even, 2:1 rectangular when odd.
struct QamShape {
  int bits = 0;
  long long i_side = 0;
  long long j_side = 0;

  static QamShape from_bits(int r);  // throws std::invalid_argument for r < 1
};

// Approximate bit error rate of Gray-mapped rectangular QAM at the given
// SNR (symbol energy over complex noise variance):
//   ber = (1/r) (2 - 1/I - 1/J) erfc(sqrt(3 snr / (I^2 + J^2 - 2))).
// Accurate to ~1% relative while the result stays below
// kBerModelValidityLimit; r = 1 and r = 2 reduce to the exact BPSK/QPSK
// expressions.
double qam_ber(int r, double snr);

// Same model parameterized by the SNR gap gamma = snr / (2^r - 1):
//   ber = (1/r) (2 - 1/I - 1/J) erfc(sqrt(3 (I J - 1) gamma / (I^2 + J^2 - 2))).
// Agrees with qam_ber(r, gamma * (2^r - 1)).
double qam_ber_from_gap(int r, double gamma);

// log(qam_ber(r, snr)); stays finite where the linear value underflows.
double log_qam_ber(int r, double snr);

// gamma_i = snr / (2^r - 1): the factor by which the channel exceeds the
// minimum SNR needed to carry r bits at the reference operating point.
double snr_gap(int r, double snr);

// (2^r - 1) / snr, the reciprocal gap. Greedy costs, the exhaustive-search
// objective and the acceptance checks all flow through this one expression
// so their values are comparable bit-for-bit.
double inverse_gap(int r, double snr);

// r * qam_ber(r, snr) with the r = 0 convention of zero contribution.
double rate_weighted_ber(int r, double snr);

// log(r * qam_ber(r, snr)); -inf for r = 0.
double log_rate_weighted_ber(int r, double snr);

// Operating region in which r * ber(r) is convex in r, the condition under
// which the incremental-BER greedy is provably optimal. The certificate at
// level r requires ber(r + 2, snr) <= kConvexDomainBerLimit: that is where
// the underlying doubling relation ber(r+2) >= 2 ber(r+1) is verified, and
// monotonicity in r extends it to every lower level.
inline constexpr double kConvexDomainBerLimit = 2e-2;
bool in_convex_domain(int r, double snr);

// Largest BER at which the closed-form model is trusted; reports carry a
// flag once any loaded channel exceeds it.
inline constexpr double kBerModelValidityLimit = 5e-2;

}  // namespace bitload
