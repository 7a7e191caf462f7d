#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shelfmix/rational.hpp"
#include "shelfmix/shelf_measure.hpp"

namespace shelfmix {

inline constexpr int kTvDecimalPlaces = 5;

// One (n, m) evaluation. The exact distance is computed both as half the
// l1 distance of the valley pmfs and as the maximal CDF gap; the two must
// agree exactly (a consequence of q being nonincreasing) or construction
// aborts with invariant_error.
struct TVReport {
  int n = 0;
  BigInt m;
  BigRat tv;               // exact distance
  std::string tv_decimal;  // rendered at kTvDecimalPlaces, half-up
  double tv_asym = 0.0;    // normal-limit approximation
  int argmax_k = 0;        // first k maximizing the CDF gap
  std::optional<TiltBounds> deltas;  // present for n >= 3
};

TVReport tv_report(int n, const BigInt& m);

// Exact distance only.
BigRat tv_exact(int n, const BigInt& m);

// Normal-limit approximation 1 - 2*Phi(-1/(12 c^2 sqrt(10))) with
// c = m / n^{5/4}. (The sign variant with a positive argument inside Phi is
// negative for every c; this is the form the exact series converges to.)
// n >= 2.
double tv_asymptotic(int n, const BigInt& m);
double tv_asymptotic_from_c(double c);

// d_TV(N(-mu, 1), N(0, 1)) = 1 - 2*Phi(-mu/2), mu >= 0.
double tv_normal_shift(double mu);

// Limiting profile across the cutoff window: theta extra one-shelf passes
// beyond (5/4) log2 n give an effective shelf count with c = 2^{theta-1},
// so the value depends on theta alone. Decreases from 1 to 0.
std::vector<std::pair<double, double>> cutoff_profile(int n, std::span<const double> thetas);

// r passes of an m-shelf shuffle compose into one 2^{r-1} m^r-shelf shuffle.
struct ShuffleSpec {
  int n = 0;
  BigInt m;
  int repeats = 1;
};

BigInt effective_shelves(const BigInt& m, int repeats);
BigInt effective_shelves(const ShuffleSpec& spec);

// Least number of m-shelf passes bringing the exact distance within eps.
// Zero passes corresponds to the point mass at the identity, at exact
// distance 1 - 1/n!. Aborts with bound_error once the effective shelf count
// would exceed max_effective_shelves.
struct MixingResult {
  int repeats = 0;
  BigInt effective_m;  // 0 when repeats == 0 (no shuffle performed)
  BigRat witness_tv;
};

MixingResult mixing_time(int n, const BigInt& m, double eps,
                         const BigInt& max_effective_shelves = BigInt(1000000000));

}  // namespace shelfmix
