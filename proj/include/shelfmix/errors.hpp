#pragma once

#include <stdexcept>
#include <string>

namespace shelfmix {

// A requested computation exceeds a configured size limit (deck-size cap,
// enumeration budget, shelf-count bound).
class bound_error : public std::runtime_error {
 public:
  explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal exactness invariant failed (normalization, monotonicity,
// dual-form agreement). Signals an arithmetic bug, not bad input.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace shelfmix
