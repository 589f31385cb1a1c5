#include "rcfd/gf.hpp"

#include <algorithm>

namespace rcfd {
namespace {

// Polynomials over GF(p) in ascending-power order, trailing zeros trimmed.
using Poly = std::vector<int>;

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& divisor, long long p) {
  a = trim(std::move(a));
  const int dd = degree(divisor);
  while (degree(a) >= dd) {
    // divisor is monic, so the quotient digit is just the leading coefficient
    const int lead = a.back();
    const int shift = degree(a) - dd;
    for (int i = 0; i <= dd; ++i) {
      long long v = a[shift + i] - 1LL * lead * divisor[i];
      a[shift + i] = static_cast<int>(((v % p) + p) % p);
    }
    a = trim(std::move(a));
  }
  return a;
}

// Candidate enumeration order for monic degree-s polynomials: the value v
// spells the non-leading coefficients (a_{s-1},...,a_0) as big-endian base-p
// digits, so ascending v is exactly the required lexicographic order.
Poly monic_from_value(long long v, long long p, int s) {
  Poly c(s + 1, 0);
  c[s] = 1;
  for (int i = 0; i < s; ++i) {
    c[i] = static_cast<int>(v % p);
    v /= p;
  }
  return c;
}

bool is_irreducible(const Poly& f, long long p, int s) {
  // Trial division by every monic polynomial of degree 1..s/2.
  for (int d = 1; 2 * d <= s; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      Poly g = monic_from_value(v, p, d);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(long long v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (long long d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

PrimePower factor_prime_power(long long q) {
  if (q < 2) throw RangeError("prime power expected, got " + std::to_string(q));
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1, q};  // q itself is prime
  long long rest = q;
  int s = 0;
  while (rest % p == 0) {
    rest /= p;
    ++s;
  }
  if (rest != 1) {
    throw NotPrimePower(std::to_string(q) + " is not a prime power");
  }
  return PrimePower{p, s, q};
}

bool is_prime_power(long long q) {
  if (q < 2) return false;
  try {
    factor_prime_power(q);
    return true;
  } catch (const NotPrimePower&) {
    return false;
  }
}

std::vector<int> find_irreducible(long long p, int s) {
  if (!is_prime(p)) throw RangeError("base of a field must be prime");
  if (s < 1) throw RangeError("field extension degree must be positive");
  long long count = 1;
  for (int i = 0; i < s; ++i) count *= p;
  for (long long v = 0; v < count; ++v) {
    Poly f = monic_from_value(v, p, s);
    if (is_irreducible(f, p, s)) {
      // convert to descending order for the public representation
      std::vector<int> out(f.rbegin(), f.rend());
      return out;
    }
  }
  throw InternalAssertion("no irreducible polynomial found");  // cannot happen
}

FieldTable build_field(int q, int cap) {
  const PrimePower pp = factor_prime_power(q);
  if (q > cap) {
    throw UnsupportedShape("field order " + std::to_string(q) +
                           " exceeds the table cap " + std::to_string(cap));
  }
  const int p = static_cast<int>(pp.p);
  const int s = pp.s;

  FieldTable f;
  f.q = q;
  f.p = p;
  f.s = s;
  f.irreducible = find_irreducible(p, s);

  Poly divisor(f.irreducible.rbegin(), f.irreducible.rend());

  // base-p digits of every element, digit i = coefficient of x^i
  std::vector<std::vector<int>> digits(q, std::vector<int>(s, 0));
  for (int e = 0; e < q; ++e) {
    int v = e;
    for (int i = 0; i < s; ++i) {
      digits[e][i] = v % p;
      v /= p;
    }
  }
  // a is trimmed and has degree < s, so the label is its plain base-p value
  auto label_of = [&](const Poly& a) {
    int e = 0;
    int scale = 1;
    for (size_t i = 0; i < a.size(); ++i) {
      e += a[i] * scale;
      scale *= p;
    }
    return e;
  };

  f.add_t.assign(static_cast<size_t>(q) * q, 0);
  f.mul_t.assign(static_cast<size_t>(q) * q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      int sum = 0;
      int scale = 1;
      for (int i = 0; i < s; ++i) {
        sum += ((digits[a][i] + digits[b][i]) % p) * scale;
        scale *= p;
      }
      f.add_t[a * q + b] = sum;

      Poly prod(2 * s - 1, 0);
      for (int i = 0; i < s; ++i) {
        if (digits[a][i] == 0) continue;
        for (int j = 0; j < s; ++j) {
          prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
        }
      }
      f.mul_t[a * q + b] = label_of(poly_mod(std::move(prod), divisor, p));
    }
  }

  f.neg_t.assign(q, 0);
  f.inv_t.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add_t[a * q + b] == 0) f.neg_t[a] = b;
      if (a != 0 && f.mul_t[a * q + b] == 1) f.inv_t[a] = b;
    }
  }

  if (f.mul(1, 1) != 1 || f.add(0, 1) != 1) {
    throw InternalAssertion("field table construction produced a broken labelling");
  }
  return f;
}

}  // namespace rcfd
