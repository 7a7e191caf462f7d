#pragma once

#include <span>
#include <utility>
#include <vector>

#include "shelfmix/rational.hpp"

namespace shelfmix {

// Deck sizes are capped so that valley-count tables stay modest; 64 covers
// a standard deck with headroom (counts reach ~1e89, fine for big ints).
inline constexpr int kMaxDeckSize = 64;

// Largest possible valley count of an n-permutation: floor((n-1)/2).
int max_valleys(int n);

// Number of interior positions j with p[j-1] > p[j] < p[j+1]. The input
// must be a permutation of 1..n.
int count_valleys(std::span<const int> perm);

struct MomentPair {
  BigRat mean;
  BigRat variance;
};

// Exact counts of n-permutations by valley count, k = 0..max_valleys(n).
class ValleyTable {
 public:
  static ValleyTable build(int n);

  int n() const { return n_; }
  int u() const { return static_cast<int>(counts_.size()) - 1; }
  const std::vector<BigInt>& counts() const { return counts_; }
  const BigInt& total() const { return total_; }  // n!

  BigRat pmf(int k) const;  // P(V_n = k), zero outside 0..u
  BigRat cdf(int k) const;  // P(V_n <= k), clamped to 0 and 1 outside

  // Exact mean and variance computed from the counts themselves.
  MomentPair moments() const;

 private:
  ValleyTable(int n, std::vector<BigInt> counts, BigInt total);

  int n_;
  std::vector<BigInt> counts_;
  BigInt total_;
  std::vector<BigRat> cdf_;
};

ValleyTable valley_table(int n);

// Closed forms (n-2)/3 and (2n+2)/45, n >= 2. For n = 2 these disagree with
// the point mass at zero that the table yields; both views are exposed and
// neither is patched over.
MomentPair uniform_moments(int n);

// Mean and variance of the law reweighted by exp(theta * k). The maximal
// log-weight is factored out so exp never overflows.
std::pair<double, double> cgf_moments(const ValleyTable& vt, double theta);
std::pair<double, double> cgf_moments(int n, double theta);

// Exact P(V_n <= k); 0 for k < 0, 1 for k >= max_valleys(n).
BigRat uniform_cdf(int n, int k);

// sup_k |P(V_n <= k) - Phi((k - mu_n)/sigma_n)| over k = 0..max_valleys(n),
// for n >= 3.
double clt_error(int n);

}  // namespace shelfmix
