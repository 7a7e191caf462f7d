#include "shelfmix/binomial.hpp"

#include <stdexcept>
#include <utility>

#include "shelfmix/errors.hpp"

namespace shelfmix {

namespace {
// Per-row materialization cap; anything bigger is a mistake upstream.
constexpr unsigned long kMaxColumns = 1ul << 21;
}  // namespace

BigInt BinomialCache::operator()(const BigInt& a, const BigInt& b) const {
  if (a < 0) throw std::invalid_argument("binom: negative row index");
  if (b < 0 || b > a) return BigInt(0);

  BigInt col = b;
  if (a - b < col) col = a - b;
  if (!col.fits_ulong_p() || col.get_ui() > kMaxColumns)
    throw bound_error("binom: column too large to materialize");
  const unsigned long c = col.get_ui();

  std::lock_guard<std::mutex> lock(mu_);
  std::vector<BigInt>& row = rows_[a];
  if (row.empty()) row.emplace_back(1);
  while (row.size() <= c) {
    // C(a, j) = C(a, j-1) * (a - j + 1) / j, an exact division.
    const unsigned long j = row.size();
    BigInt next = row.back() * (a - static_cast<long>(j - 1));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), j);
    row.push_back(std::move(next));
  }
  return row[c];
}

BinomialCache& shared_binomial_cache() {
  static BinomialCache cache;
  return cache;
}

BigInt binom(const BigInt& a, const BigInt& b) { return shared_binomial_cache()(a, b); }

}  // namespace shelfmix
