#pragma once

#include <gmpxx.h>

#include <string>

namespace shelfmix {

using BigInt = mpz_class;
using BigRat = mpq_class;

// num/den reduced to lowest terms with a positive denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned long n);
BigInt pow_int(const BigInt& base, unsigned long exp);
BigInt pow2(unsigned long exp);

// Natural log of a positive big integer, accurate to a few ulps.
double log_big(const BigInt& x);

// Decimal rendering with exactly `places` fractional digits, rounded
// half-up (ties away from zero). places == 0 renders an integer without a
// decimal point. places must be at most 50.
std::string rat_to_decimal(const BigRat& x, int places);

}  // namespace shelfmix
