#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "bitload/channel.hpp"

using namespace bitload;

TEST_CASE("dB conversions round-trip and hit anchors") {
  CHECK_EQ(to_db(100.0), doctest::Approx(20.0).epsilon(1e-12));
  CHECK_EQ(from_db(30.0), doctest::Approx(1000.0).epsilon(1e-12));
  for (double x : {1e-6, 0.25, 1.0, 7.5, 1e8}) {
    CHECK_EQ(from_db(to_db(x)), doctest::Approx(x).epsilon(1e-12));
  }
}

TEST_CASE("snr_profile multiplies gain, power share, budget and noise") {
  ChannelSpec spec;
  spec.gains = {2.0, 1.0};
  spec.noise_vars = {0.5, 4.0};
  spec.peak_power = 4.0;
  spec.power_fractions = {0.25, 1.0};
  const SnrProfile p = snr_profile(spec);
  REQUIRE_EQ(p.size(), 2);
  CHECK_EQ(p.snr[0], doctest::Approx(4.0).epsilon(1e-15));
  CHECK_EQ(p.snr[1], doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("channel spec validation rejects malformed input") {
  ChannelSpec spec;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.gains = {1.0, 1.0};
  spec.noise_vars = {1.0};
  spec.power_fractions = {1.0, 1.0};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.noise_vars = {1.0, 0.0};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.noise_vars = {1.0, 1.0};
  spec.power_fractions = {1.0, 1.5};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.power_fractions = {1.0, 1.0};
  spec.peak_power = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.peak_power = 1.0;
  CHECK_NOTHROW(spec.validate());
}

TEST_CASE("snr profile validation flags dead and malformed inputs") {
  SnrProfile p;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.snr = {0.0, 0.0};
  CHECK_THROWS_WITH_AS(p.validate(), "SnrProfile: all channels are dead",
                       std::invalid_argument);
  p.snr = {1.0, -0.5};
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.snr = {0.0, 3.0};
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("psdnr ignores the power split") {
  ChannelSpec spec;
  spec.gains = {1.0, 1.0};
  spec.noise_vars = {1.0, 1.0};
  spec.peak_power = 10.0;
  spec.power_fractions = {1.0, 1.0};
  CHECK_EQ(psdnr_db(spec), doctest::Approx(10.0).epsilon(1e-12));
  spec.power_fractions = {0.1, 0.7};
  CHECK_EQ(psdnr_db(spec), doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("rayleigh profiles hit the requested psdnr exactly in sample mean") {
  const SnrProfile p = rayleigh_profile(4096, 13.0, 5);
  double sum = 0.0;
  for (double s : p.snr) {
    REQUIRE(s > 0.0);
    sum += s;
  }
  CHECK_EQ(sum / 4096.0, doctest::Approx(from_db(13.0)).epsilon(1e-12));
}

TEST_CASE("rayleigh profiles are seed-deterministic") {
  const SnrProfile a = rayleigh_profile(64, 20.0, 9);
  const SnrProfile b = rayleigh_profile(64, 20.0, 9);
  const SnrProfile c = rayleigh_profile(64, 20.0, 10);
  CHECK(a.snr == b.snr);
  CHECK(a.snr != c.snr);
}

TEST_CASE("a single rayleigh channel degenerates to the psdnr itself") {
  const SnrProfile p = rayleigh_profile(1, 17.0, 123);
  REQUIRE_EQ(p.size(), 1);
  CHECK_EQ(p.snr[0], doctest::Approx(from_db(17.0)).epsilon(1e-12));
}

TEST_CASE("single-path response is attenuation times unit phasor") {
  MultipathModel m;
  m.paths = {{0.5, 100.0}};
  m.a0 = 0.01;
  m.a1 = 0.0;
  const std::complex<double> h = multipath_response(m, 2e6);
  CHECK_EQ(std::abs(h), doctest::Approx(0.5 * std::exp(-0.01 * 100.0)).epsilon(1e-12));
}

TEST_CASE("without attenuation the response magnitude ignores distance") {
  MultipathModel m;
  m.paths = {{0.3, 987.0}};
  for (double f : {1e5, 3e6, 1.9e7}) {
    CHECK_EQ(std::abs(multipath_response(m, f)), doctest::Approx(0.3).epsilon(1e-12));
  }
}

TEST_CASE("two paths offset by half a wavelength cancel") {
  MultipathModel m;
  const double f = 4e6;
  const double half_wave = m.velocity / (2.0 * f);
  m.paths = {{0.4, 120.0}, {0.4, 120.0 + half_wave}};
  CHECK(std::abs(multipath_response(m, f)) < 1e-12);
}

TEST_CASE("multipath profile squares the magnitude and scales by the budget") {
  MultipathModel m;
  m.paths = {{0.5, 10.0}};
  const SnrProfile p = multipath_profile(m, {1e6, 2e6}, 0.01, 2.0);
  REQUIRE_EQ(p.size(), 2);
  CHECK_EQ(p.snr[0], doctest::Approx(0.25 * 2.0 / 0.01).epsilon(1e-12));
  CHECK_EQ(p.snr[1], doctest::Approx(p.snr[0]).epsilon(1e-12));
}

TEST_CASE("target bitrate floors the capacity-like sum at half snr") {
  CHECK_EQ(target_bitrate(SnrProfile{{6.0}}, 15), 2);           // log2(4) = 2
  CHECK_EQ(target_bitrate(SnrProfile{{6.0, 6.0}}, 15), 4);
  CHECK_EQ(target_bitrate(SnrProfile{{3.0}}, 15), 1);           // log2(2.5) = 1.32
  CHECK_EQ(target_bitrate(SnrProfile{{1e9}}, 15), 15);          // capped per channel
  CHECK_EQ(target_bitrate(SnrProfile{{1e9, 6.0}}, 15), 17);
  CHECK_THROWS_AS(target_bitrate(SnrProfile{{1.0}}, 0), std::invalid_argument);
}
