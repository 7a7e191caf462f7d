#pragma once

#include <vector>

#include "shelfmix/rational.hpp"
#include "shelfmix/valleys.hpp"

namespace shelfmix {

// Exact probability that an m-shelf shuffle of n cards produces one given
// permutation with k valleys:
//
//   q(k) = sum_{r=k+1}^{n-k} m^{-n} C(m+n-r, n) 2^{-(n-1-2k)} C(n-1-2k, r-1-k)
//
// as a reduced rational. Requires 1 <= n <= kMaxDeckSize, m >= 1 and
// 0 <= k <= max_valleys(n).
BigRat q_value(int n, const BigInt& m, int k);

// q_value swept over k. Construction verifies exact normalization
// (sum_k q[k] * counts[k] == 1) and that q is nonincreasing, aborting with
// invariant_error otherwise. q[k] is zero for k >= m: the shuffle cannot
// produce more than m - 1 valleys.
struct QTable {
  int n = 0;
  BigInt m;
  std::vector<BigRat> q;  // k = 0..max_valleys(n)

  // Number of leading k with q[k] > 0.
  int support() const;
};

QTable q_table(const ValleyTable& vt, const BigInt& m);
QTable q_table(int n, const BigInt& m);

// P(V_{n,m} = k) = q[k] * counts[k]; sums to exactly 1.
std::vector<BigRat> shuffle_valley_pmf(const QTable& qt, const ValleyTable& vt);

// Extremes of the consecutive ratio q[k]/q[k-1], taken over the k in
// 1..max_valleys(n) with q[k-1] > 0. Both bounds are attained and at most 1;
// they degenerate to 0 when m <= max_valleys(n) (the valley support of the
// shuffle measure is then a strict prefix). Requires n >= 3.
struct TiltBounds {
  BigRat delta_minus;
  BigRat delta_plus;
  int argmin_k = 0;
  int argmax_k = 0;
};

TiltBounds tilt_bounds(const QTable& qt);

// Geometric reweighting of the uniform valley law:
// pmf(k) proportional to ratio^k * counts[k]. Requires ratio > 0.
class TiltedDist {
 public:
  TiltedDist(const ValleyTable& vt, const BigRat& ratio);

  const BigRat& ratio() const { return ratio_; }
  const std::vector<BigRat>& pmf() const { return pmf_; }
  BigRat cdf(int k) const;  // clamped outside 0..u
  BigRat mean() const;      // exact

 private:
  BigRat ratio_;
  std::vector<BigRat> pmf_;
  std::vector<BigRat> cdf_;
};

TiltedDist tilted_dist(const ValleyTable& vt, const BigRat& ratio);

// Exact verification of the tilt sandwich
//   F_{tilt by delta_plus}(k) <= F_{V_{n,m}}(k) <= F_{tilt by delta_minus}(k)
// at every k, with the largest slack seen on each side. A zero tilt bound is
// handled as the point mass at k = 0 (CDF identically one). Requires n >= 3.
struct DominationReport {
  bool ok = false;
  int violation_k = -1;       // first failing k, -1 when ok
  BigRat max_slack_lower;     // max_k [F_shuffle - F_upper_tilt]
  BigRat max_slack_upper;     // max_k [F_lower_tilt - F_shuffle]
};

DominationReport domination_check(int n, const BigInt& m);

}  // namespace shelfmix
