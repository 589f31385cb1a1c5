#include "rcfd/sudoku.hpp"

#include <algorithm>
#include <map>

#include "rcfd/combinators.hpp"

namespace rcfd {

Design sudoku_latin(int q1, int q2) {
  if (q1 < 1 || q2 < 1) throw RangeError("block sides must be positive");
  const int q = q1 * q2;
  Design out = Design::filled({1, q, q, q});
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      const int in_block = (j % q2) * q1 + (i % q1);      // column-major base block
      const int block_shift = (i / q1) * q1 + (j / q2);   // block (r,c) -> S_{r*q1+c}
      out.set(i, j, 0, static_cast<Symbol>((in_block + block_shift) % q));
    }
  }
  return out;
}

FactorSplit split_factors(long long b1, long long b2, long long q) {
  if (b1 < 1 || b2 < 1 || q < 1) throw RangeError("factors must be positive");
  if ((b1 * b2) % q != 0) {
    throw Indivisible("q = " + std::to_string(q) + " does not divide b1*b2 = " +
                      std::to_string(b1 * b2));
  }
  FactorSplit out;
  long long rest = q;
  for (long long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;  // remaining part is prime
    if (rest % p != 0) continue;
    int s = 0;
    while (rest % p == 0) {
      rest /= p;
      ++s;
    }
    int beta = 0;
    for (long long v = b2; v % p == 0; v /= p) ++beta;
    const int t = std::max(0, s - beta);
    for (int i = 0; i < t; ++i) out.q2 *= p;
    for (int i = 0; i < s - t; ++i) out.q1 *= p;
  }
  return out;
}

Design sudoku_rectangle(int q1, int q2, int mu, int lambda) {
  return blowup(sudoku_latin(q1, q2), mu, lambda);
}

Design extend_by_one_factor(const Design& base, int b1, int b2) {
  const auto& p = base.params;
  if (p.q < 2) throw BadBase("base symbol set must have at least two elements");

  // m and n must be exact powers q^M and q^N with M+N = k
  int m_exp = 0, n_exp = 0;
  for (long long v = p.m; v > 1; v /= p.q) {
    if (v % p.q != 0) throw BadBase("base row count is not a power of q");
    ++m_exp;
  }
  for (long long v = p.n; v > 1; v /= p.q) {
    if (v % p.q != 0) throw BadBase("base column count is not a power of q");
    ++n_exp;
  }
  if (m_exp < 1 || n_exp < 1 || m_exp + n_exp != p.k) {
    throw BadBase("base must be of type I_{M+N}(q^M, q^N; q) with M,N >= 1");
  }
  if (!is_verified(base)) {
    throw BadBase("base design does not verify");
  }
  const FactorSplit split = split_factors(b1, b2, p.q);
  const int q1 = static_cast<int>(split.q1);
  const int q2 = static_cast<int>(split.q2);

  // tile the base q2 block-rows by q1 block-columns
  const Design tiled = kronecker(trivial_design(p.k, q2, q1), base);

  long long mu = q2, lambda = q1;
  for (int i = 1; i < m_exp; ++i) mu *= p.q;
  for (int i = 1; i < n_exp; ++i) lambda *= p.q;
  const Design stripes = sudoku_rectangle(q1, q2, static_cast<int>(mu),
                                          static_cast<int>(lambda));

  const Design joined = concat(tiled, stripes);

  // every (k+1)-tuple must occupy exactly one cell before the final blowup
  std::map<std::vector<Symbol>, int> seen;
  for (int i = 0; i < joined.params.m; ++i) {
    for (int j = 0; j < joined.params.n; ++j) {
      auto t = joined.cell(i, j);
      if (++seen[std::vector<Symbol>(t.begin(), t.end())] > 1) {
        throw InternalAssertion("extension lost the replication-1 property");
      }
    }
  }

  return blowup(joined, b1 / q2, b2 / q1);
}

}  // namespace rcfd
