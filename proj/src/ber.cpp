#include "bitload/ber.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bitload/erfc.hpp"

namespace bitload {
namespace {

void check_rate(int r) {
  if (r < 1 || r > 62)
    throw std::invalid_argument("qam_ber: r must be in [1, 62], got " + std::to_string(r));
}

void check_snr(double snr) {
  if (snr < 0.0 || !std::isfinite(snr))
    throw std::invalid_argument("qam_ber: snr must be finite and >= 0");
}

// (2 - 1/I - 1/J), the average number of nearest-neighbour bit flips.
double neighbour_coeff(const QamShape& q) {
  return 2.0 - 1.0 / static_cast<double>(q.i_side) - 1.0 / static_cast<double>(q.j_side);
}

// I^2 + J^2 - 2, exact in double for r <= 52. Computed in double because
// the integer intermediate I^2 + J^2 reaches 2^63 at r = 62.
double energy_norm(const QamShape& q) {
  const double i = static_cast<double>(q.i_side);
  const double j = static_cast<double>(q.j_side);
  return i * i + j * j - 2.0;
}

}  // namespace

QamShape QamShape::from_bits(int r) {
  check_rate(r);
  QamShape q;
  q.bits = r;
  q.i_side = 1LL << (r / 2);
  q.j_side = 1LL << (r - r / 2);
  return q;
}

double qam_ber(int r, double snr) {
  check_snr(snr);
  const QamShape q = QamShape::from_bits(r);
  const double arg = 3.0 * snr / energy_norm(q);
  return neighbour_coeff(q) / r * erfc(std::sqrt(arg));
}

double qam_ber_from_gap(int r, double gamma) {
  if (gamma < 0.0 || !std::isfinite(gamma))
    throw std::invalid_argument("qam_ber_from_gap: gamma must be finite and >= 0");
  const QamShape q = QamShape::from_bits(r);
  const double arg =
      3.0 * static_cast<double>(q.i_side * q.j_side - 1) * gamma / energy_norm(q);
  return neighbour_coeff(q) / r * erfc(std::sqrt(arg));
}

double log_qam_ber(int r, double snr) {
  check_snr(snr);
  const QamShape q = QamShape::from_bits(r);
  const double arg = 3.0 * snr / energy_norm(q);
  return std::log(neighbour_coeff(q) / r) + log_erfc(std::sqrt(arg));
}

double snr_gap(int r, double snr) {
  check_rate(r);
  check_snr(snr);
  return snr / static_cast<double>((1LL << r) - 1);
}

double inverse_gap(int r, double snr) {
  check_rate(r);
  check_snr(snr);
  return static_cast<double>((1LL << r) - 1) / snr;
}

double rate_weighted_ber(int r, double snr) {
  if (r == 0) return 0.0;
  check_snr(snr);
  const QamShape q = QamShape::from_bits(r);
  const double arg = 3.0 * snr / energy_norm(q);
  return neighbour_coeff(q) * erfc(std::sqrt(arg));
}

double log_rate_weighted_ber(int r, double snr) {
  if (r == 0) return -std::numeric_limits<double>::infinity();
  check_snr(snr);
  const QamShape q = QamShape::from_bits(r);
  const double arg = 3.0 * snr / energy_norm(q);
  return std::log(neighbour_coeff(q)) + log_erfc(std::sqrt(arg));
}

bool in_convex_domain(int r, double snr) {
  // Convexity of the rate-weighted BER at level r rests on the doubling
  // relation ber(r+2) >= 2 * ber(r+1), which holds whenever the larger of
  // the two BERs stays under the limit; BER grows with r at fixed snr, so
  // every level below r is then covered as well. Two levels above the
  // largest supported constellation the relation cannot be evaluated, and
  // no certificate is issued.
  if (r + 2 > 62) return false;
  return qam_ber(r + 2, snr) <= kConvexDomainBerLimit;
}

}  // namespace bitload
