#include "shelfmix/valleys.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shelfmix/errors.hpp"
#include "shelfmix/normal.hpp"

namespace shelfmix {

int max_valleys(int n) {
  if (n < 1) throw std::invalid_argument("max_valleys: n must be positive");
  return (n - 1) / 2;
}

int count_valleys(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1) throw std::invalid_argument("count_valleys: empty input");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("count_valleys: not a permutation of 1..n");
    seen[static_cast<size_t>(v)] = true;
  }
  int valleys = 0;
  for (int j = 1; j + 1 < n; ++j)
    if (perm[j - 1] > perm[j] && perm[j] < perm[j + 1]) ++valleys;
  return valleys;
}

ValleyTable::ValleyTable(int n, std::vector<BigInt> counts, BigInt total)
    : n_(n), counts_(std::move(counts)), total_(std::move(total)) {
  cdf_.reserve(counts_.size());
  BigRat acc(0);
  for (const BigInt& c : counts_) {
    acc += make_rat(c, total_);
    cdf_.push_back(acc);
  }
}

ValleyTable ValleyTable::build(int n) {
  if (n < 1) throw std::invalid_argument("valley_table: n must be positive");
  if (n > kMaxDeckSize) throw bound_error("valley_table: n exceeds the deck-size cap");

  // Insert the largest value into each gap of a shorter permutation: with k
  // valleys at length N there are exactly N-1-2k gaps that create a new
  // valley, and the remaining 2k+2 leave the count unchanged.
  std::vector<BigInt> counts{BigInt(1)};
  for (int len = 2; len <= n; ++len) {
    std::vector<BigInt> next(static_cast<size_t>((len - 1) / 2) + 1, BigInt(0));
    for (int k = 0; k < static_cast<int>(next.size()); ++k) {
      if (k < static_cast<int>(counts.size()))
        next[static_cast<size_t>(k)] += (2 * k + 2) * counts[static_cast<size_t>(k)];
      if (k >= 1 && k - 1 < static_cast<int>(counts.size()))
        next[static_cast<size_t>(k)] += (len - 2 * k) * counts[static_cast<size_t>(k - 1)];
    }
    counts.swap(next);
  }

  BigInt total(0);
  for (const BigInt& c : counts) total += c;
  if (total != factorial(static_cast<unsigned long>(n)))
    throw invariant_error("valley_table: counts do not sum to n!");
  return ValleyTable(n, std::move(counts), std::move(total));
}

BigRat ValleyTable::pmf(int k) const {
  if (k < 0 || k > u()) return BigRat(0);
  return make_rat(counts_[static_cast<size_t>(k)], total_);
}

BigRat ValleyTable::cdf(int k) const {
  if (k < 0) return BigRat(0);
  if (k >= u()) return BigRat(1);
  return cdf_[static_cast<size_t>(k)];
}

MomentPair ValleyTable::moments() const {
  BigRat mean(0), second(0);
  for (int k = 0; k <= u(); ++k) {
    const BigRat p = pmf(k);
    mean += k * p;
    second += k * k * p;
  }
  return {mean, second - mean * mean};
}

ValleyTable valley_table(int n) { return ValleyTable::build(n); }

MomentPair uniform_moments(int n) {
  if (n < 2) throw std::invalid_argument("uniform_moments: n must be at least 2");
  return {make_rat(BigInt(n - 2), BigInt(3)), make_rat(BigInt(2 * n + 2), BigInt(45))};
}

std::pair<double, double> cgf_moments(const ValleyTable& vt, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("cgf_moments: non-finite theta");
  const auto& counts = vt.counts();

  std::vector<double> logw(counts.size());
  double lmax = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < counts.size(); ++k) {
    logw[k] = log_big(counts[k]) + theta * static_cast<double>(k);
    lmax = std::max(lmax, logw[k]);
  }

  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (size_t k = 0; k < counts.size(); ++k) {
    const double w = std::exp(logw[k] - lmax);
    const double kd = static_cast<double>(k);
    s0 += w;
    s1 += kd * w;
    s2 += kd * kd * w;
  }
  const double mean = s1 / s0;
  return {mean, s2 / s0 - mean * mean};
}

std::pair<double, double> cgf_moments(int n, double theta) {
  return cgf_moments(ValleyTable::build(n), theta);
}

BigRat uniform_cdf(int n, int k) { return ValleyTable::build(n).cdf(k); }

double clt_error(int n) {
  if (n < 3) throw std::invalid_argument("clt_error: n must be at least 3");
  const ValleyTable vt = ValleyTable::build(n);
  const double mu = (n - 2) / 3.0;
  const double sigma = std::sqrt((2.0 * n + 2.0) / 45.0);
  double worst = 0.0;
  for (int k = 0; k <= vt.u(); ++k) {
    const double gap = std::abs(vt.cdf(k).get_d() - phi((k - mu) / sigma));
    worst = std::max(worst, gap);
  }
  return worst;
}

}  // namespace shelfmix
