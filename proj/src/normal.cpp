#include "shelfmix/normal.hpp"

#include <cmath>
#include <stdexcept>

namespace shelfmix {

double phi(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("phi: non-finite input");
  // erfc keeps full relative accuracy in the lower tail, so the absolute
  // error stays a few ulps everywhere.
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

}  // namespace shelfmix
