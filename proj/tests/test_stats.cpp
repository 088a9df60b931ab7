#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "isingbench/oracle.hpp"
#include "isingbench/rng.hpp"
#include "isingbench/stats.hpp"

using namespace isingbench;

TEST_CASE("clopper_pearson: zero and full success closed forms") {
  for (std::int64_t r : {std::int64_t{1}, std::int64_t{10}, std::int64_t{100},
                         std::int64_t{1000}}) {
    const auto [low0, high0] = clopper_pearson(0, r);
    CHECK(low0 == 0.0);
    CHECK(std::abs(high0 - (1.0 - std::pow(0.025, 1.0 / r))) <= 1e-9);
    const auto [low_r, high_r] = clopper_pearson(r, r);
    CHECK(high_r == 1.0);
    CHECK(std::abs(low_r - std::pow(0.025, 1.0 / r)) <= 1e-9);
  }
  // pinned example: k=0, R=10 -> high ~ 0.30850
  CHECK(clopper_pearson(0, 10).second == doctest::Approx(0.30850).epsilon(1e-4));
}

TEST_CASE("clopper_pearson: brackets the point estimate") {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const std::int64_t r = 1 + rng.uniform_below(500);
    const std::int64_t k = rng.uniform_below(r + 1);
    const auto [low, high] = clopper_pearson(k, r);
    const double p_hat = static_cast<double>(k) / r;
    CHECK(low >= 0.0);
    CHECK(low <= p_hat);
    CHECK(p_hat <= high);
    CHECK(high <= 1.0);
  }
}

TEST_CASE("clopper_pearson: symmetry low(k) = 1 - high(R-k)") {
  for (std::int64_t k : {std::int64_t{5}, std::int64_t{30}, std::int64_t{50}}) {
    const auto a = clopper_pearson(k, 100);
    const auto b = clopper_pearson(100 - k, 100);
    CHECK(std::abs(a.first - (1.0 - b.second)) <= 1e-8);
    CHECK(std::abs(a.second - (1.0 - b.first)) <= 1e-8);
  }
}

TEST_CASE("clopper_pearson: interval narrows as alpha grows") {
  const auto strict = clopper_pearson(30, 100, 0.01);
  const auto mid = clopper_pearson(30, 100, 0.05);
  const auto loose = clopper_pearson(30, 100, 0.20);
  CHECK(strict.first <= mid.first);
  CHECK(mid.first <= loose.first);
  CHECK(loose.second <= mid.second);
  CHECK(mid.second <= strict.second);
}

TEST_CASE("clopper_pearson: quick coverage check") {
  // binomial draws at p=0.3, R=100; the exact interval must cover p in at
  // least ~95% of trials (the acceptance suite runs the full-size version)
  const double p = 0.3;
  const std::int64_t r = 100;
  Rng rng(77);
  std::map<std::int64_t, std::pair<double, double>> memo;
  int covered = 0;
  const int trials = 2000;
  for (int t = 0; t < trials; ++t) {
    std::int64_t k = 0;
    for (std::int64_t i = 0; i < r; ++i)
      if (rng.uniform01() < p) ++k;
    auto it = memo.find(k);
    if (it == memo.end()) it = memo.emplace(k, clopper_pearson(k, r)).first;
    if (it->second.first <= p && p <= it->second.second) ++covered;
  }
  CHECK(covered >= 0.94 * trials);
}

TEST_CASE("clopper_pearson: contract violations") {
  CHECK_THROWS_AS(clopper_pearson(-1, 10), std::invalid_argument);
  CHECK_THROWS_AS(clopper_pearson(11, 10), std::invalid_argument);
  CHECK_THROWS_AS(clopper_pearson(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(clopper_pearson(1, 10, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(clopper_pearson(1, 10, 1.0), std::invalid_argument);
}

TEST_CASE("time_to_solution: pinned values and endpoints") {
  CHECK(time_to_solution(0.99, 1000.0).tts == doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(time_to_solution(0.5, 1000.0).tts == doctest::Approx(6643.856189774724).epsilon(1e-12));
  CHECK(time_to_solution(0.0, 1000.0).tts == std::numeric_limits<double>::infinity());
  CHECK(time_to_solution(1.0, 1000.0).tts == 1000.0);
  CHECK(time_to_solution(0.5, 1000.0).basis == TtsResult::Basis::point);
  CHECK(time_to_solution(0.5, 1000.0, TtsResult::Basis::ci_low).basis ==
        TtsResult::Basis::ci_low);
}

TEST_CASE("time_to_solution: strictly decreasing on (0, 1)") {
  double prev = std::numeric_limits<double>::infinity();
  for (double p = 0.005; p < 1.0; p += 0.005) {
    const double tts = time_to_solution(p, 64.0).tts;
    CHECK(tts < prev);
    prev = tts;
  }
}

TEST_CASE("time_to_solution: contract violations") {
  CHECK_THROWS_AS(time_to_solution(-0.1, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(time_to_solution(1.1, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(time_to_solution(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("restart_success: examples and monotonicity") {
  CHECK(restart_success(0.37, 1) == 0.37);
  CHECK(restart_success(0.5, 2) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(restart_success(0.0, 10) == 0.0);
  CHECK(restart_success(1.0, 3) == 1.0);
  double prev = 0.0;
  for (std::int64_t r = 1; r <= 20; ++r) {
    const double p = restart_success(0.2, r);
    CHECK(p >= prev);
    prev = p;
  }
  prev = 0.0;
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    const double composed = restart_success(std::min(p, 1.0), 3);
    CHECK(composed >= prev);
    prev = composed;
  }
  CHECK_THROWS_AS(restart_success(0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(restart_success(-0.5, 2), std::invalid_argument);
}

TEST_CASE("restart inequality for brute force (small sizes)") {
  // multiple shorter brute-force runs never beat one long run
  for (std::uint64_t n = 2; n <= 64; ++n) {
    for (std::uint64_t k = 1; k <= n; ++k) {
      const double p_k = bf_success_probability(n, k, 2);
      for (std::uint64_t k_short = 1; k_short <= k; ++k_short) {
        if (k % k_short != 0) continue;
        const double p_short = bf_success_probability(n, k_short, 2);
        CHECK(restart_success(p_short, k / k_short) <= p_k + 1e-12);
      }
    }
  }
}

TEST_CASE("estimate: aggregates run outcomes") {
  std::vector<RunOutcome> outcomes(100);
  for (int i = 0; i < 50; ++i) outcomes[i].success = true;
  const SuccessEstimate est = estimate(outcomes, 256);
  CHECK(est.successes == 50);
  CHECK(est.repetitions == 100);
  CHECK(est.p_s == 0.5);
  CHECK(est.anneal_steps == 256);
  const auto [low, high] = clopper_pearson(50, 100);
  CHECK(est.ci_low == low);
  CHECK(est.ci_high == high);
  CHECK(low < 0.5);
  CHECK(high > 0.5);
}

TEST_CASE("estimate: degenerate counts") {
  std::vector<RunOutcome> all(20), none(20);
  for (auto& o : all) o.success = true;
  const SuccessEstimate up = estimate(all, 16);
  CHECK(up.p_s == 1.0);
  CHECK(up.ci_high == 1.0);
  const SuccessEstimate down = estimate(none, 16);
  CHECK(down.p_s == 0.0);
  CHECK(down.ci_low == 0.0);
  CHECK_THROWS_AS(estimate({}, 16), std::invalid_argument);
}
