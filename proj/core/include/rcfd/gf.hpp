#pragma once

#include <vector>

#include "rcfd/errors.hpp"

namespace rcfd {

struct PrimePower {
  long long p = 0;  // prime base
  int s = 0;        // exponent
  long long q = 0;  // p^s
};

bool is_prime(long long v);
bool is_prime_power(long long q);

// Splits q >= 2 into (p, s) with q = p^s. Throws NotPrimePower when q has
// two distinct prime divisors.
PrimePower factor_prime_power(long long q);

// Largest field order for which lookup tables are built by default.
inline constexpr int kDefaultFieldCap = 256;

// The monic irreducible polynomial of degree s over GF(p) that comes first
// when the non-leading coefficient tuples (a_{s-1},...,a_0) are compared
// lexicographically in ascending order. Returned with coefficients in
// descending powers, so x^2+x+1 is {1,1,1} and x is {1,0}.
std::vector<int> find_irreducible(long long p, int s);

// Lookup tables for GF(q). Element e stands for the polynomial whose
// base-p digits are the coefficients, i.e. label(sum a_i x^i) = sum a_i p^i,
// so 0 is the zero of the field and 1 its unit.
struct FieldTable {
  int q = 0;
  int p = 0;
  int s = 0;
  std::vector<int> irreducible;  // descending coefficients, size s+1
  std::vector<int> add_t;        // q*q
  std::vector<int> mul_t;        // q*q
  std::vector<int> neg_t;        // q
  std::vector<int> inv_t;        // q; entry 0 is meaningless

  int add(int a, int b) const { return add_t[a * q + b]; }
  int mul(int a, int b) const { return mul_t[a * q + b]; }
  int neg(int a) const { return neg_t[a]; }
  int sub(int a, int b) const { return add_t[a * q + neg_t[b]]; }
  int inv(int a) const {
    if (a == 0) throw ZeroInverse("0 has no multiplicative inverse");
    return inv_t[a];
  }
};

// Builds the full tables for GF(q). Throws NotPrimePower for composite q
// with several prime divisors and UnsupportedShape when q exceeds the cap.
FieldTable build_field(int q, int cap = kDefaultFieldCap);

}  // namespace rcfd
