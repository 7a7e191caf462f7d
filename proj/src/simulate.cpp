#include "shelfmix/simulate.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "shelfmix/errors.hpp"
#include "shelfmix/valleys.hpp"

namespace shelfmix {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

void validate_nm(int n, long m) {
  if (n < 1) throw std::invalid_argument("simulate: n must be positive");
  if (m < 1) throw std::invalid_argument("simulate: m must be at least 1");
}

// A contiguous block of the identity deck sitting on one pile. Even piles
// (1-based) hold their cards in reversed order.
struct Packet {
  int lo = 0;    // first card of the block, 0-based
  int size = 0;
  int taken = 0;
  bool reversed = false;

  int pop() {
    const int offset = reversed ? size - 1 - taken : taken;
    ++taken;
    return lo + offset;  // 0-based card index
  }
};

// Valley count without the permutation validation of the public API.
int valleys_unchecked(const std::vector<int>& perm) {
  int valleys = 0;
  for (int j = 1; j + 1 < static_cast<int>(perm.size()); ++j)
    if (perm[j - 1] > perm[j] && perm[j] < perm[j + 1]) ++valleys;
  return valleys;
}

std::vector<std::uint64_t> sorted_pile_labels(int n, long m, ShuffleRng& rng) {
  const std::uint64_t piles = 2ull * static_cast<std::uint64_t>(m);
  std::vector<std::uint64_t> labels(static_cast<size_t>(n));
  for (auto& label : labels) label = rng.below(piles);
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<Packet> packets_from_labels(const std::vector<std::uint64_t>& labels) {
  std::vector<Packet> packets;
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && labels[static_cast<size_t>(j)] == labels[static_cast<size_t>(i)]) ++j;
    // pile number label+1 is even exactly when the 0-based label is odd
    packets.push_back({i, j - i, 0, labels[static_cast<size_t>(i)] % 2 == 1});
    i = j;
  }
  return packets;
}

}  // namespace

ShuffleRng::ShuffleRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) + stream)) {}

std::uint64_t ShuffleRng::next() { return engine_(); }

std::uint64_t ShuffleRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("ShuffleRng::below: zero bound");
  const std::uint64_t reject_below = (-bound) % bound;  // 2^64 mod bound
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < reject_below);
  return x % bound;
}

std::vector<int> multinomial_cut(int n, long m, ShuffleRng& rng) {
  validate_nm(n, m);
  if (m > (1L << 26))
    throw bound_error("multinomial_cut: dense pile-size vector too large; "
                      "inverse_shuffle_sample handles large m sparsely");
  std::vector<int> sizes(2ul * static_cast<unsigned long>(m), 0);
  const std::uint64_t piles = 2ull * static_cast<std::uint64_t>(m);
  for (int i = 0; i < n; ++i) ++sizes[rng.below(piles)];
  return sizes;
}

std::vector<int> inverse_shuffle_sample(int n, long m, ShuffleRng& rng) {
  validate_nm(n, m);
  std::vector<Packet> packets = packets_from_labels(sorted_pile_labels(n, m, rng));

  // GSR riffle: drop the next card from a pile chosen with probability
  // proportional to its remaining size.
  std::vector<int> deck;
  deck.reserve(static_cast<size_t>(n));
  for (int remaining = n; remaining > 0; --remaining) {
    std::uint64_t u = rng.below(static_cast<std::uint64_t>(remaining));
    for (Packet& p : packets) {
      const std::uint64_t left = static_cast<std::uint64_t>(p.size - p.taken);
      if (u < left) {
        deck.push_back(p.pop());
        break;
      }
      u -= left;
    }
  }

  std::vector<int> perm(static_cast<size_t>(n));
  for (int pos = 0; pos < n; ++pos) perm[static_cast<size_t>(deck[static_cast<size_t>(pos)])] = pos + 1;
  return perm;
}

PermDist enumerate_exact(int n, long m, std::uint64_t budget) {
  validate_nm(n, m);
  if (n > 6) throw bound_error("enumerate_exact: n is limited to 6");
  const BigInt outcomes = pow_int(2 * BigInt(m), static_cast<unsigned long>(n));
  if (outcomes > BigInt(budget))
    throw bound_error("enumerate_exact: " + outcomes.get_str() +
                      " outcomes exceed the term budget");
  const std::uint64_t piles = 2ull * static_cast<std::uint64_t>(m);

  std::map<std::vector<int>, unsigned long> occurrences;
  std::vector<int> word(static_cast<size_t>(n), 0);   // pile of each output position
  std::vector<int> sizes(static_cast<size_t>(piles));
  std::vector<int> taken(static_cast<size_t>(piles));
  std::vector<int> lo(static_cast<size_t>(piles));
  std::vector<int> deck(static_cast<size_t>(n));
  std::vector<int> perm(static_cast<size_t>(n));

  while (true) {
    std::fill(sizes.begin(), sizes.end(), 0);
    for (int a : word) ++sizes[static_cast<size_t>(a)];
    int start = 0;
    for (size_t i = 0; i < sizes.size(); ++i) {
      lo[i] = start;
      start += sizes[i];
    }
    std::fill(taken.begin(), taken.end(), 0);
    for (int pos = 0; pos < n; ++pos) {
      const size_t pile = static_cast<size_t>(word[static_cast<size_t>(pos)]);
      const bool reversed = pile % 2 == 1;
      const int offset = reversed ? sizes[pile] - 1 - taken[pile] : taken[pile];
      deck[static_cast<size_t>(pos)] = lo[pile] + offset;
      ++taken[pile];
    }
    for (int pos = 0; pos < n; ++pos)
      perm[static_cast<size_t>(deck[static_cast<size_t>(pos)])] = pos + 1;
    ++occurrences[perm];

    int digit = n - 1;
    while (digit >= 0 && word[static_cast<size_t>(digit)] == static_cast<int>(piles) - 1) {
      word[static_cast<size_t>(digit)] = 0;
      --digit;
    }
    if (digit < 0) break;
    ++word[static_cast<size_t>(digit)];
  }

  PermDist dist;
  dist.n = n;
  for (auto& [p, count] : occurrences)
    dist.probs.emplace(p, make_rat(BigInt(count), outcomes));
  return dist;
}

CompositionReport composition_check(int n, long m1, long m2, std::uint64_t budget) {
  const PermDist first = enumerate_exact(n, m1, budget);
  const PermDist second = enumerate_exact(n, m2, budget);
  const PermDist direct = enumerate_exact(n, 2 * m1 * m2, budget);

  std::map<std::vector<int>, BigRat> convolved;
  std::vector<int> composed(static_cast<size_t>(n));
  for (const auto& [s, ps] : first.probs)
    for (const auto& [t, pt] : second.probs) {
      for (int i = 0; i < n; ++i)
        composed[static_cast<size_t>(i)] = t[static_cast<size_t>(s[static_cast<size_t>(i)] - 1)];
      convolved[composed] += ps * pt;
    }

  CompositionReport report;
  report.equal = convolved == direct.probs;
  if (!report.equal) {
    for (const auto& [p, prob] : direct.probs) {
      auto it = convolved.find(p);
      if (it == convolved.end() || it->second != prob) {
        report.witness = p;
        break;
      }
    }
    if (report.witness.empty() && !convolved.empty())
      report.witness = convolved.begin()->first;
  }
  return report;
}

SampleRun run_samples(int n, long m, std::uint64_t samples, std::uint64_t seed) {
  validate_nm(n, m);
  if (samples < 1) throw std::invalid_argument("run_samples: need at least one sample");

  // Fixed stream fan-out keeps the histogram identical no matter how many
  // threads actually run.
  constexpr int kStreams = 8;
  const int u = max_valleys(n);
  std::vector<std::vector<std::uint64_t>> partial(
      kStreams, std::vector<std::uint64_t>(static_cast<size_t>(u) + 1, 0));

  const auto worker = [&](int stream) {
    const std::uint64_t share = samples / kStreams +
                                (static_cast<std::uint64_t>(stream) < samples % kStreams ? 1 : 0);
    ShuffleRng rng(seed, static_cast<std::uint64_t>(stream));
    auto& hist = partial[static_cast<size_t>(stream)];
    for (std::uint64_t i = 0; i < share; ++i) {
      const std::vector<int> perm = inverse_shuffle_sample(n, m, rng);
      ++hist[static_cast<size_t>(valleys_unchecked(perm))];
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(kStreams);
  for (int s = 0; s < kStreams; ++s) threads.emplace_back(worker, s);
  for (auto& t : threads) t.join();

  SampleRun run;
  run.n = n;
  run.m = m;
  run.samples = samples;
  run.seed = seed;
  run.valley_histogram.assign(static_cast<size_t>(u) + 1, 0);
  for (const auto& hist : partial)
    for (size_t k = 0; k < hist.size(); ++k) run.valley_histogram[k] += hist[k];
  return run;
}

double empirical_tv(int n, long m, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1000) throw std::invalid_argument("empirical_tv: need at least 1000 samples");
  const SampleRun run = run_samples(n, m, samples, seed);
  const ValleyTable vt = ValleyTable::build(n);
  const BigInt total(static_cast<unsigned long>(samples));
  BigRat distance(0);
  for (int k = 0; k <= vt.u(); ++k)
    distance += abs(make_rat(BigInt(run.valley_histogram[static_cast<size_t>(k)]), total) - vt.pmf(k));
  distance /= 2;
  return distance.get_d();
}

}  // namespace shelfmix
