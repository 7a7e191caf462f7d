#include "shelfmix/shelf_measure.hpp"

#include <stdexcept>
#include <utility>

#include "shelfmix/binomial.hpp"
#include "shelfmix/errors.hpp"

namespace shelfmix {

namespace {

void validate_nm(int n, const BigInt& m) {
  if (n < 1) throw std::invalid_argument("shelf measure: n must be positive");
  if (n > kMaxDeckSize) throw bound_error("shelf measure: n exceeds the deck-size cap");
  if (m < 1) throw std::invalid_argument("shelf measure: m must be at least 1");
}

}  // namespace

BigRat q_value(int n, const BigInt& m, int k) {
  validate_nm(n, m);
  if (k < 0 || k > max_valleys(n))
    throw std::invalid_argument("q_value: k outside 0..max_valleys(n)");

  const int spread = n - 1 - 2 * k;
  BigInt num(0);
  for (int r = k + 1; r <= n - k; ++r)
    num += binom(m + (n - r), BigInt(n)) * binom(BigInt(spread), BigInt(r - 1 - k));
  const BigInt den =
      pow_int(m, static_cast<unsigned long>(n)) * pow2(static_cast<unsigned long>(spread));
  return make_rat(num, den);
}

int QTable::support() const {
  int s = 0;
  while (s < static_cast<int>(q.size()) && q[static_cast<size_t>(s)] > 0) ++s;
  return s;
}

QTable q_table(const ValleyTable& vt, const BigInt& m) {
  QTable qt;
  qt.n = vt.n();
  qt.m = m;
  qt.q.reserve(static_cast<size_t>(vt.u()) + 1);
  for (int k = 0; k <= vt.u(); ++k) qt.q.push_back(q_value(vt.n(), m, k));

  BigRat total(0);
  for (int k = 0; k <= vt.u(); ++k) total += qt.q[static_cast<size_t>(k)] * vt.counts()[static_cast<size_t>(k)];
  if (total != 1)
    throw invariant_error("q_table: class probabilities do not sum to 1 (n=" +
                          std::to_string(vt.n()) + ", m=" + m.get_str() + ")");
  for (int k = 1; k <= vt.u(); ++k)
    if (qt.q[static_cast<size_t>(k)] > qt.q[static_cast<size_t>(k - 1)])
      throw invariant_error("q_table: q increases at k=" + std::to_string(k) +
                            " (n=" + std::to_string(vt.n()) + ", m=" + m.get_str() + ")");
  return qt;
}

QTable q_table(int n, const BigInt& m) { return q_table(ValleyTable::build(n), m); }

std::vector<BigRat> shuffle_valley_pmf(const QTable& qt, const ValleyTable& vt) {
  if (qt.n != vt.n())
    throw std::invalid_argument("shuffle_valley_pmf: table sizes disagree");
  std::vector<BigRat> pmf(qt.q.size());
  for (size_t k = 0; k < pmf.size(); ++k) pmf[k] = qt.q[k] * vt.counts()[k];
  return pmf;
}

TiltBounds tilt_bounds(const QTable& qt) {
  if (qt.n < 3)
    throw std::invalid_argument("tilt_bounds: no consecutive ratios exist for n < 3");
  TiltBounds tb;
  bool first = true;
  for (int k = 1; k < static_cast<int>(qt.q.size()); ++k) {
    if (qt.q[static_cast<size_t>(k - 1)] == 0) break;  // support is a prefix
    const BigRat ratio = qt.q[static_cast<size_t>(k)] / qt.q[static_cast<size_t>(k - 1)];
    if (first || ratio < tb.delta_minus) {
      tb.delta_minus = ratio;
      tb.argmin_k = k;
    }
    if (first || ratio > tb.delta_plus) {
      tb.delta_plus = ratio;
      tb.argmax_k = k;
    }
    first = false;
  }
  return tb;
}

TiltedDist::TiltedDist(const ValleyTable& vt, const BigRat& ratio) : ratio_(ratio) {
  if (ratio <= 0) throw std::invalid_argument("tilted_dist: ratio must be positive");
  std::vector<BigRat> weights;
  weights.reserve(static_cast<size_t>(vt.u()) + 1);
  BigRat power(1), total(0);
  for (int k = 0; k <= vt.u(); ++k) {
    BigRat w = power * vt.counts()[static_cast<size_t>(k)];
    total += w;
    weights.push_back(std::move(w));
    power *= ratio;
  }
  pmf_.reserve(weights.size());
  cdf_.reserve(weights.size());
  BigRat acc(0);
  for (BigRat& w : weights) {
    BigRat p = w / total;
    acc += p;
    pmf_.push_back(std::move(p));
    cdf_.push_back(acc);
  }
}

BigRat TiltedDist::cdf(int k) const {
  if (k < 0) return BigRat(0);
  if (k >= static_cast<int>(cdf_.size())) return BigRat(1);
  return cdf_[static_cast<size_t>(k)];
}

BigRat TiltedDist::mean() const {
  BigRat mean(0);
  for (size_t k = 0; k < pmf_.size(); ++k) mean += static_cast<long>(k) * pmf_[k];
  return mean;
}

TiltedDist tilted_dist(const ValleyTable& vt, const BigRat& ratio) {
  return TiltedDist(vt, ratio);
}

DominationReport domination_check(int n, const BigInt& m) {
  if (n < 3) throw std::invalid_argument("domination_check: n must be at least 3");
  const ValleyTable vt = ValleyTable::build(n);
  const QTable qt = q_table(vt, m);
  const TiltBounds tb = tilt_bounds(qt);
  const std::vector<BigRat> pmf = shuffle_valley_pmf(qt, vt);

  // A zero tilt ratio degenerates to the point mass at k = 0.
  const auto tilt_cdf = [&](const BigRat& delta) {
    std::vector<BigRat> cdf(pmf.size(), BigRat(1));
    if (delta > 0) {
      const TiltedDist dist(vt, delta);
      for (int k = 0; k < static_cast<int>(cdf.size()); ++k)
        cdf[static_cast<size_t>(k)] = dist.cdf(k);
    }
    return cdf;
  };

  const std::vector<BigRat> upper = tilt_cdf(tb.delta_minus);  // sits above
  const std::vector<BigRat> lower = tilt_cdf(tb.delta_plus);   // sits below

  DominationReport report;
  report.ok = true;
  report.max_slack_lower = 0;
  report.max_slack_upper = 0;
  BigRat shuffle_cdf(0);
  for (int k = 0; k < static_cast<int>(pmf.size()); ++k) {
    shuffle_cdf += pmf[static_cast<size_t>(k)];
    const BigRat slack_lower = shuffle_cdf - lower[static_cast<size_t>(k)];
    const BigRat slack_upper = upper[static_cast<size_t>(k)] - shuffle_cdf;
    if (slack_lower < 0 || slack_upper < 0) {
      report.ok = false;
      report.violation_k = k;
      return report;
    }
    report.max_slack_lower = std::max(report.max_slack_lower, slack_lower);
    report.max_slack_upper = std::max(report.max_slack_upper, slack_upper);
  }
  return report;
}

}  // namespace shelfmix
