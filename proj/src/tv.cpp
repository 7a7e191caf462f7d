#include "shelfmix/tv.hpp"

#include <cmath>
#include <stdexcept>

#include "shelfmix/errors.hpp"
#include "shelfmix/normal.hpp"

namespace shelfmix {

TVReport tv_report(int n, const BigInt& m) {
  const ValleyTable vt = ValleyTable::build(n);
  const QTable qt = q_table(vt, m);
  const std::vector<BigRat> shuffle = shuffle_valley_pmf(qt, vt);

  BigRat sum_form(0);
  for (int k = 0; k <= vt.u(); ++k)
    sum_form += abs(shuffle[static_cast<size_t>(k)] - vt.pmf(k));
  sum_form /= 2;

  BigRat shuffle_cdf(0), uniform_cdf(0), max_gap(-1);
  int argmax_k = 0;
  for (int k = 0; k <= vt.u(); ++k) {
    shuffle_cdf += shuffle[static_cast<size_t>(k)];
    uniform_cdf += vt.pmf(k);
    const BigRat gap = shuffle_cdf - uniform_cdf;
    if (gap > max_gap) {
      max_gap = gap;
      argmax_k = k;
    }
  }

  if (sum_form != max_gap)
    throw invariant_error("tv_report: half-l1 and max-CDF forms disagree (n=" +
                          std::to_string(n) + ", m=" + m.get_str() + ")");

  TVReport report;
  report.n = n;
  report.m = m;
  report.tv = sum_form;
  report.tv_decimal = rat_to_decimal(sum_form, kTvDecimalPlaces);
  report.tv_asym = n >= 2 ? tv_asymptotic(n, m) : 0.0;
  report.argmax_k = argmax_k;
  if (n >= 3) report.deltas = tilt_bounds(qt);
  return report;
}

BigRat tv_exact(int n, const BigInt& m) { return tv_report(n, m).tv; }

double tv_asymptotic_from_c(double c) {
  if (!(c > 0)) throw std::invalid_argument("tv_asymptotic: c must be positive");
  return 1.0 - 2.0 * phi(-1.0 / (12.0 * c * c * std::sqrt(10.0)));
}

double tv_asymptotic(int n, const BigInt& m) {
  if (n < 2) throw std::invalid_argument("tv_asymptotic: n must be at least 2");
  if (m < 1) throw std::invalid_argument("tv_asymptotic: m must be at least 1");
  const double c = m.get_d() / std::pow(static_cast<double>(n), 1.25);
  if (std::isinf(c)) return 0.0;
  return tv_asymptotic_from_c(c);
}

double tv_normal_shift(double mu) {
  if (!(mu >= 0) || !std::isfinite(mu))
    throw std::invalid_argument("tv_normal_shift: mu must be nonnegative");
  return 1.0 - 2.0 * phi(-mu / 2.0);
}

std::vector<std::pair<double, double>> cutoff_profile(int n, std::span<const double> thetas) {
  if (n < 2) throw std::invalid_argument("cutoff_profile: n must be at least 2");
  std::vector<std::pair<double, double>> profile;
  profile.reserve(thetas.size());
  for (double theta : thetas) {
    const double c = std::exp2(theta - 1.0);
    profile.emplace_back(theta, tv_asymptotic_from_c(c));
  }
  return profile;
}

BigInt effective_shelves(const BigInt& m, int repeats) {
  if (repeats < 1) throw std::invalid_argument("effective_shelves: repeats must be positive");
  if (m < 1) throw std::invalid_argument("effective_shelves: m must be at least 1");
  return pow2(static_cast<unsigned long>(repeats - 1)) *
         pow_int(m, static_cast<unsigned long>(repeats));
}

BigInt effective_shelves(const ShuffleSpec& spec) {
  return effective_shelves(spec.m, spec.repeats);
}

MixingResult mixing_time(int n, const BigInt& m, double eps,
                         const BigInt& max_effective_shelves) {
  if (!(eps > 0) || !std::isfinite(eps))
    throw std::invalid_argument("mixing_time: eps must be positive");
  if (n < 1) throw std::invalid_argument("mixing_time: n must be positive");
  if (m < 1) throw std::invalid_argument("mixing_time: m must be at least 1");

  // Zero passes leave the point mass at the identity.
  const BigInt fact = factorial(static_cast<unsigned long>(n));
  const BigRat start_tv = make_rat(fact - 1, fact);
  if (start_tv <= eps) return {0, BigInt(0), start_tv};

  for (int repeats = 1;; ++repeats) {
    const BigInt effective = effective_shelves(m, repeats);
    if (effective > max_effective_shelves)
      throw bound_error("mixing_time: effective shelf count " + effective.get_str() +
                        " exceeds the configured bound");
    const BigRat tv = tv_exact(n, effective);
    if (tv <= eps) return {repeats, effective, tv};
  }
}

}  // namespace shelfmix
