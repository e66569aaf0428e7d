#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bitload/ber.hpp"
#include "bitload/metrics.hpp"
#include "bitload/rng.hpp"

using namespace bitload;

namespace {

Allocation alloc_of(std::vector<int> bits, int beta = 1, int cap = 15) {
  Allocation a;
  a.bits = std::move(bits);
  a.granularity = beta;
  a.cap = cap;
  return a;
}

}  // namespace

TEST_CASE("system margin is the smallest loaded-channel gap in dB") {
  CHECK_EQ(system_margin_db(alloc_of({1}), SnrProfile{{1.0}}),
           doctest::Approx(0.0).epsilon(1e-12));
  // empty channels are excluded no matter how strong they are
  CHECK_EQ(system_margin_db(alloc_of({2, 0}), SnrProfile{{3.0, 999.0}}),
           doctest::Approx(0.0).epsilon(1e-12));
  CHECK_EQ(system_margin_db(alloc_of({1, 2}), SnrProfile{{10.0, 30.0}}),
           doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("margin refuses an entirely empty allocation") {
  CHECK_THROWS_AS(system_margin_db(alloc_of({0, 0}), SnrProfile{{1.0, 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("margin and max inverse gap are two views of one objective") {
  const SnrProfile p{{12.0, 3.0, 50.0}};
  const std::vector<int> bits = {2, 1, 0};
  const double inv = max_inverse_gap(bits, p);
  CHECK_EQ(inv, doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_EQ(system_margin_db(alloc_of({2, 1, 0}), p),
           doctest::Approx(-10.0 * std::log10(inv)).epsilon(1e-12));
  CHECK_EQ(max_inverse_gap({0, 0}, SnrProfile{{1.0, 1.0}}), 0.0);
}

TEST_CASE("weighted ber averages per-channel ber with rate weights") {
  const double s1 = 8.0, s2 = 90.0;
  CHECK_EQ(weighted_ber(alloc_of({3}), SnrProfile{{s1}}),
           doctest::Approx(qam_ber(3, s1)).epsilon(1e-13));
  CHECK_EQ(weighted_ber(alloc_of({1, 1}), SnrProfile{{s1, s1}}),
           doctest::Approx(qam_ber(1, s1)).epsilon(1e-13));
  CHECK_EQ(weighted_ber(alloc_of({2, 4}), SnrProfile{{s1, s2}}),
           doctest::Approx((2.0 * qam_ber(2, s1) + 4.0 * qam_ber(4, s2)) / 6.0)
               .epsilon(1e-13));
  // zero-rate channels contribute nothing
  CHECK_EQ(weighted_ber(alloc_of({2, 0, 4}), SnrProfile{{s1, 1e-3, s2}}),
           doctest::Approx(weighted_ber(alloc_of({2, 4}), SnrProfile{{s1, s2}}))
               .epsilon(1e-13));
  CHECK_THROWS_AS(weighted_ber(alloc_of({0}), SnrProfile{{5.0}}), std::invalid_argument);
}

TEST_CASE("total rate ber sums the rate-weighted terms") {
  const SnrProfile p{{8.0, 90.0}};
  CHECK_EQ(total_rate_ber({2, 4}, p),
           doctest::Approx(2.0 * qam_ber(2, 8.0) + 4.0 * qam_ber(4, 90.0)).epsilon(1e-13));
  CHECK_EQ(total_rate_ber({0, 0}, p), 0.0);
}

TEST_CASE("dissimilarity reproduces the worked examples") {
  CHECK_EQ(dissimilarity(alloc_of({4, 3, 3, 0}), alloc_of({3, 2, 2, 2})), 1.0);
  CHECK_EQ(dissimilarity(alloc_of({4, 3, 3, 0}), alloc_of({4, 3, 2, 1})), 0.5);
  CHECK_EQ(dissimilarity(alloc_of({4, 3, 3, 0}), alloc_of({4, 3, 3, 0})), 0.0);
  // The ratio normalizes by the larger support, not by the union of the
  // changed positions, so disjoint supports push it above one: both loaded
  // channels differ while each allocation only loads one of them.
  CHECK_EQ(dissimilarity(alloc_of({1, 0}), alloc_of({0, 1})), 2.0);
}

TEST_CASE("dissimilarity properties hold on random pairs") {
  SplitMix64 rng(31);
  auto random_alloc = [&rng](std::size_t n) {
    Allocation a;
    a.cap = 6;
    for (std::size_t i = 0; i < n; ++i)
      a.bits.push_back(static_cast<int>(rng.next_u64() % 7));
    return a;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.next_u64() % 8;
    Allocation x = random_alloc(n);
    Allocation y = random_alloc(n);
    bool x_empty = x.total() == 0;
    bool y_empty = y.total() == 0;
    if (x_empty && y_empty) continue;
    const double mu = dissimilarity(x, y);
    CHECK(mu >= 0.0);
    CHECK_EQ(mu, dissimilarity(y, x));           // symmetry
    CHECK_EQ(mu == 0.0, x.bits == y.bits);       // identity of indiscernibles
    if (!x_empty) CHECK_EQ(dissimilarity(x, x), 0.0);
    if (mu == 0.0 && !x_empty) {
      Allocation z = random_alloc(n);
      if (z.total() != 0) CHECK_EQ(dissimilarity(x, z), dissimilarity(y, z));
    }
  }
}

TEST_CASE("dissimilarity rejects undefined or mismatched input") {
  CHECK_THROWS_AS(dissimilarity(alloc_of({0, 0}), alloc_of({0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(dissimilarity(alloc_of({1}), alloc_of({1, 0})), std::invalid_argument);
}

TEST_CASE("robustness report gathers margins, bers and the validity flag") {
  const SnrProfile p{{40.0, 400.0, 7.0}};
  const Allocation a = alloc_of({2, 4, 0});
  const RobustnessReport rep = robustness_report(a, p);
  CHECK_EQ(rep.system_margin_db, doctest::Approx(system_margin_db(a, p)).epsilon(1e-13));
  CHECK_EQ(rep.weighted_ber, doctest::Approx(weighted_ber(a, p)).epsilon(1e-13));
  REQUIRE_EQ(rep.per_channel_gap.size(), 3);
  CHECK_EQ(rep.per_channel_gap[0], doctest::Approx(snr_gap(2, 40.0)).epsilon(1e-13));
  CHECK_EQ(rep.per_channel_gap[2], std::numeric_limits<double>::infinity());
  CHECK_EQ(rep.per_channel_ber[2], 0.0);
  CHECK(rep.validity_flag);

  // a deliberately overloaded channel breaks the validity flag
  const RobustnessReport bad = robustness_report(alloc_of({6}), SnrProfile{{10.0}});
  CHECK(bad.per_channel_ber[0] > kBerModelValidityLimit);
  CHECK_FALSE(bad.validity_flag);
}

TEST_CASE("report serializes with null for unbounded gaps") {
  const RobustnessReport rep =
      robustness_report(alloc_of({2, 0}), SnrProfile{{40.0, 9.0}});
  const nlohmann::json j = to_json(rep);
  CHECK(j.contains("system_margin_db"));
  CHECK_EQ(j["per_channel_gap"].size(), 2);
  CHECK(j["per_channel_gap"][1].is_null());
  CHECK_EQ(j["per_channel_ber"][1].get<double>(), 0.0);
  CHECK_EQ(j["validity_flag"].get<bool>(), true);
}
