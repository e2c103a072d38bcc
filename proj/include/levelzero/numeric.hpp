// levelzero: exact arithmetic aliases and small number-theory helpers.
// All computation in this project is exact: arbitrary-precision integers
// (GMP) and rationals. No floating point is used anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace levelzero {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int abs(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// a^e for e >= 0.
inline Int pow(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

// Nonnegative representative of a mod m (m > 0).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Largest power of p dividing n (n != 0), together with the cofactor.
inline void split_prime_power(const Int& n, const Int& p, Int& p_part,
                              Int& cofactor) {
  p_part = 1;
  cofactor = n;
  while (cofactor % p == 0) {
    cofactor /= p;
    p_part *= p;
  }
}

// Inverse of a mod m; requires gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  (void)ok;
  return r;
}

// Smallest prime factor, trial division (inputs here are tiny).
inline Int smallest_prime_factor(const Int& n) {
  if (n % 2 == 0) return 2;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return d;
  return n;
}

inline bool is_prime_power(const Int& q, Int& p_out) {
  if (q < 2) return false;
  Int p = smallest_prime_factor(q);
  Int m = q;
  while (m % p == 0) m /= p;
  p_out = p;
  return m == 1;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) {
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

}  // namespace levelzero
