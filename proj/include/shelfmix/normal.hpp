#pragma once

namespace shelfmix {

// Standard normal CDF, absolute error below 1e-12 everywhere. Rejects
// non-finite input.
double phi(double x);

}  // namespace shelfmix
