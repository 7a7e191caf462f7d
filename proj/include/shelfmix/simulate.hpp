#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "shelfmix/rational.hpp"

namespace shelfmix {

inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

// Deterministic generator: mt19937_64 seeded with splitmix64(splitmix64(seed)
// + stream). Distinct streams of the same seed are independent substreams,
// used to parallelize sampling reproducibly.
class ShuffleRng {
 public:
  explicit ShuffleRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();

  // Unbiased uniform draw from [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Sizes of the 2m piles of a symmetric multinomial cut of n cards.
std::vector<int> multinomial_cut(int n, long m, ShuffleRng& rng);

// One draw from the m-shelf shuffle measure: cut the identity deck into 2m
// piles multinomially, reverse every even-numbered pile (1-based), riffle
// the piles together dropping cards with probability proportional to
// remaining pile size, and return the inverse of the resulting arrangement.
std::vector<int> inverse_shuffle_sample(int n, long m, ShuffleRng& rng);

// Exact distribution over all n-permutations, obtained by enumerating every
// (pile-size composition, interleaving) outcome. A composition carries
// multinomial weight (2m)^-n n!/prod(s_i!) and each of its n!/prod(s_i!)
// interleavings the closed-form weight prod(s_i!)/n!, so every outcome
// weighs exactly (2m)^-n; this route never touches the sampler's
// sequential-drop rule. Feasible for n <= 6 within the term budget.
struct PermDist {
  int n = 0;
  std::map<std::vector<int>, BigRat> probs;
};

PermDist enumerate_exact(int n, long m, std::uint64_t budget = kDefaultEnumBudget);

// Exact check that an m1-shuffle followed by an m2-shuffle is distributed as
// one 2*m1*m2-shuffle, permutation by permutation.
struct CompositionReport {
  bool equal = false;
  std::vector<int> witness;  // first differing permutation, empty when equal
};

CompositionReport composition_check(int n, long m1, long m2,
                                    std::uint64_t budget = kDefaultEnumBudget);

// Seeded sampling run summarized by its valley histogram. Identical
// (n, m, samples, seed) always reproduce the identical histogram.
struct SampleRun {
  int n = 0;
  long m = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> valley_histogram;  // k = 0..max_valleys(n)
};

SampleRun run_samples(int n, long m, std::uint64_t samples, std::uint64_t seed);

// Monte Carlo estimate of the exact shuffle-vs-uniform distance: half the
// l1 distance between the empirical valley histogram and the exact uniform
// valley pmf. Concentration budget: the estimate sits within
// 5 * sqrt(max_valleys(n) / samples) of the exact distance with probability
// at least 0.99. Requires samples >= 1000.
double empirical_tv(int n, long m, std::uint64_t samples, std::uint64_t seed);

}  // namespace shelfmix
