#include "shelfmix/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace shelfmix {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt pow2(unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
  return r;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw std::invalid_argument("log_big: argument must be positive");
  signed long e = 0;
  const double d = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * M_LN2;
}

std::string rat_to_decimal(const BigRat& x, int places) {
  if (places < 0 || places > 50)
    throw std::invalid_argument("rat_to_decimal: places must be in 0..50");
  BigInt num = x.get_num();
  const BigInt& den = x.get_den();
  const bool negative = num < 0;
  if (negative) num = -num;

  const BigInt scaled = num * pow_int(BigInt(10), static_cast<unsigned long>(places));
  BigInt quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) ++quot;

  std::string digits = quot.get_str();
  std::string out;
  if (places == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= places)
      digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - places) + "." +
          digits.substr(digits.size() - places);
  }
  if (negative && quot != 0) out.insert(0, 1, '-');
  return out;
}

}  // namespace shelfmix
