#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "shelfmix/rational.hpp"

namespace shelfmix {

// Lazily filled rows of Pascal's triangle keyed by row index. A row with a
// huge index only materializes the leading columns that actually get
// requested (queries are reduced through C(a,b) = C(a,a-b) first). Safe for
// concurrent callers; the row map is filled under a lock and entries are
// returned by value.
class BinomialCache {
 public:
  BigInt operator()(const BigInt& a, const BigInt& b) const;

 private:
  mutable std::mutex mu_;
  mutable std::map<BigInt, std::vector<BigInt>> rows_;
};

// C(a, b) through a process-wide shared cache. Requires a >= 0; returns 0
// when b < 0 or b > a.
BigInt binom(const BigInt& a, const BigInt& b);

BinomialCache& shared_binomial_cache();

}  // namespace shelfmix
