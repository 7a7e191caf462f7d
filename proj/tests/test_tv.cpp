#include <cmath>

#include <doctest.h>

#include "figure1_reference.hpp"
#include "shelfmix/errors.hpp"
#include "shelfmix/normal.hpp"
#include "shelfmix/tv.hpp"

using namespace shelfmix;

TEST_CASE("tv_report reproduces the full 52-card reference table") {
  BigRat previous(2);
  for (int m = 1; m <= 300; ++m) {
    const TVReport report = tv_report(52, BigInt(m));
    CHECK(report.tv_decimal == testdata::kFigure1Exact[static_cast<size_t>(m - 1)]);
    CHECK(std::abs(report.tv_asym - testdata::kFigure1Asym[static_cast<size_t>(m - 1)]) <= 2e-5);
    // the exact distance never increases with the shelf count
    CHECK(report.tv <= previous);
    previous = report.tv;
  }
}

TEST_CASE("tv is exactly zero for decks of one or two cards") {
  for (long m : {1L, 2L, 7L, 300L}) {
    CHECK(tv_exact(1, BigInt(m)) == 0);
    CHECK(tv_exact(2, BigInt(m)) == 0);
  }
}

TEST_CASE("sum form recomputed independently matches the report") {
  for (const auto& [n, m] : std::vector<std::pair<int, long>>{{5, 2}, {10, 7}, {33, 50}}) {
    const ValleyTable vt = ValleyTable::build(n);
    const QTable qt = q_table(vt, BigInt(m));
    const auto pmf = shuffle_valley_pmf(qt, vt);
    BigRat half_l1(0);
    for (int k = 0; k <= vt.u(); ++k) half_l1 += abs(pmf[static_cast<size_t>(k)] - vt.pmf(k));
    half_l1 /= 2;
    CHECK(tv_exact(n, BigInt(m)) == half_l1);
  }
}

TEST_CASE("tv_asymptotic fixed points") {
  CHECK(std::abs(tv_asymptotic(52, BigInt(52)) - 0.15071) <= 2e-5);
  CHECK(std::abs(tv_asymptotic(52, BigInt(15)) - 0.97761) <= 2e-5);
  CHECK(std::abs(tv_asymptotic(52, BigInt(20)) - 0.80107) <= 2e-5);
}

TEST_CASE("tv_asymptotic limits") {
  CHECK(tv_asymptotic(52, BigInt("100000000000")) <= 1e-9);
  CHECK(tv_asymptotic(52, BigInt(1)) >= 1.0 - 1e-12);
  const BigInt astronomically(pow_int(BigInt(10), 400));
  CHECK(tv_asymptotic(52, astronomically) == 0.0);
}

TEST_CASE("tv_asymptotic is monotone in each argument") {
  double previous = 2.0;
  for (long m = 10; m <= 300; m += 10) {
    const double value = tv_asymptotic(52, BigInt(m));
    CHECK(value < previous);
    previous = value;
  }
  previous = 0.0;
  for (int n = 8; n <= 64; n += 8) {
    const double value = tv_asymptotic(n, BigInt(52));
    CHECK(value > previous);
    previous = value;
  }
}

TEST_CASE("tv_asymptotic depends on (n, m) only through c") {
  // both quotients are exactly 1 in floating point
  CHECK(tv_asymptotic(16, BigInt(32)) == tv_asymptotic(256, BigInt(1024)));
  CHECK(tv_asymptotic_from_c(1.0) == tv_asymptotic(16, BigInt(32)));
}

TEST_CASE("tv_asymptotic input validation") {
  CHECK_THROWS_AS(tv_asymptotic(1, BigInt(5)), std::invalid_argument);
  CHECK_THROWS_AS(tv_asymptotic(52, BigInt(0)), std::invalid_argument);
}

TEST_CASE("tv_normal_shift basics") {
  CHECK(tv_normal_shift(0.0) == 0.0);
  CHECK_THROWS_AS(tv_normal_shift(-0.5), std::invalid_argument);

  // definitional consistency with the asymptotic at the 52/52 point
  const double c = 52.0 / std::pow(52.0, 1.25);
  const double mu = 1.0 / (6.0 * c * c * std::sqrt(10.0));
  CHECK(std::abs(tv_normal_shift(mu) - tv_asymptotic(52, BigInt(52))) <= 1e-14);

  // mu = 2z with Phi(-z) = 1/4 gives exactly 1/2; invert by bisection
  double lo = 0.0, hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    (phi(-mid) > 0.25 ? lo : hi) = mid;
  }
  CHECK(std::abs(tv_normal_shift(2.0 * lo) - 0.5) <= 1e-9);
}

TEST_CASE("cutoff_profile fixed point and limits") {
  const std::vector<double> grid = {0.0};
  const auto profile = cutoff_profile(52, grid);
  // 1 - 2*Phi(-1/(3*sqrt(10))) at theta = 0, where c = 1/2
  CHECK(std::abs(profile[0].second - 0.0839489277) <= 1e-9);

  CHECK(cutoff_profile(52, std::vector<double>{-10.0})[0].second >= 1.0 - 1e-6);
  CHECK(cutoff_profile(52, std::vector<double>{12.0})[0].second <= 1e-6);
}

TEST_CASE("cutoff_profile decreases along the window and ignores n") {
  std::vector<double> grid;
  for (double theta = -3.0; theta <= 3.0; theta += 0.5) grid.push_back(theta);
  const auto profile = cutoff_profile(52, grid);
  REQUIRE(profile.size() == 13);
  for (size_t i = 1; i < profile.size(); ++i)
    CHECK(profile[i].second < profile[i - 1].second);

  const auto other = cutoff_profile(8, grid);
  for (size_t i = 0; i < profile.size(); ++i)
    CHECK(profile[i].second == other[i].second);
}

TEST_CASE("effective_shelves composition") {
  CHECK(effective_shelves(BigInt(10), 1) == 10);
  CHECK(effective_shelves(BigInt(10), 2) == 200);
  for (int repeats = 1; repeats <= 20; ++repeats)
    CHECK(effective_shelves(BigInt(1), repeats) == pow2(static_cast<unsigned long>(repeats - 1)));
  CHECK_THROWS_AS(effective_shelves(BigInt(10), 0), std::invalid_argument);

  const ShuffleSpec spec{52, BigInt(10), 3};
  CHECK(effective_shelves(spec) == 4000);  // 2^2 * 10^3
}

TEST_CASE("mixing_time fixed answers with witnesses") {
  const MixingResult ten = mixing_time(52, BigInt(10), 0.25);
  CHECK(ten.repeats == 2);
  CHECK(ten.effective_m == 200);
  CHECK(rat_to_decimal(ten.witness_tv, 5) == "0.01028");

  const MixingResult three_hundred = mixing_time(52, BigInt(300), 0.01);
  CHECK(three_hundred.repeats == 1);
  CHECK(three_hundred.effective_m == 300);
  CHECK(rat_to_decimal(three_hundred.witness_tv, 5) == "0.00457");

  const MixingResult single = mixing_time(52, BigInt(1), 0.25);
  CHECK(single.repeats == 7);
  CHECK(single.effective_m == 64);
  CHECK(rat_to_decimal(single.witness_tv, 5) == "0.09867");
}

TEST_CASE("mixing_time trivial and guarded cases") {
  const MixingResult zero = mixing_time(52, BigInt(10), 1.0);
  CHECK(zero.repeats == 0);
  CHECK(zero.effective_m == 0);

  // a 2-card deck is exactly mixed after one pass
  const MixingResult pair = mixing_time(2, BigInt(3), 0.1);
  CHECK(pair.repeats == 1);
  CHECK(pair.witness_tv == 0);

  CHECK_THROWS_AS(mixing_time(52, BigInt(10), 1e-12, BigInt(1000)), bound_error);
  CHECK_THROWS_AS(mixing_time(52, BigInt(10), 0.0), std::invalid_argument);
}

TEST_CASE("asymptotic error stays within the frozen C/sqrt(n) envelope at n = 52") {
  constexpr double kC = 0.6;  // calibrated over this grid, frozen
  for (long m : {15L, 20L, 26L, 52L, 100L, 200L, 300L}) {
    const TVReport report = tv_report(52, BigInt(m));
    CHECK(std::abs(report.tv.get_d() - report.tv_asym) <= kC / std::sqrt(52.0));
  }
}

TEST_CASE("CDF-gap maximizer tracks the predicted location") {
  const double mu = (52 - 2) / 3.0;
  const double sigma = std::sqrt((2.0 * 52 + 2) / 45.0);
  for (long m : {26L, 33L, 52L, 100L, 200L, 300L}) {
    const TVReport report = tv_report(52, BigInt(m));
    const double c = static_cast<double>(m) / std::pow(52.0, 1.25);
    const double x_star = 1.0 / (12.0 * std::sqrt(10.0) * c * c);
    const long predicted = std::lround(mu + x_star * sigma);
    // drift reaches 3 at m = 26 and settles to 1 from m = 33 on
    const long tolerance = m < 33 ? 3 : 2;
    CHECK(std::abs(report.argmax_k - predicted) <= tolerance);
  }
}
