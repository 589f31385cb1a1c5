#pragma once

#include "rcfd/design.hpp"

namespace rcfd {

// A factorization q = q1*q2 with q1 | b2 and q2 | b1 for the inputs that
// produced it.
struct FactorSplit {
  long long q1 = 1;
  long long q2 = 1;
};

// Latin square of order q1*q2 whose residue classes
// {(i',j') : i' = i (mod q1), j' = j (mod q2)} each contain every symbol
// exactly once. Block (r,c) of the q1 x q2 block grid is the base block
// shifted by r*q1 + c; the base block is filled column-major ascending.
Design sudoku_latin(int q1, int q2);

// The split with q2 = prod p^max(0, s_p - v_p(b2)) over the prime powers
// p^s_p of q, and q1 = q/q2. Throws Indivisible unless q | b1*b2.
FactorSplit split_factors(long long b1, long long b2, long long q);

// blowup(sudoku_latin(q1,q2), mu, lambda): a frequency rectangle of type
// FR(q*mu, q*lambda; q) whose classes mod (mu*q1, lambda*q2) each contain
// every symbol exactly once.
Design sudoku_rectangle(int q1, int q2, int mu, int lambda);

// Adds one coordinate: from a verified base of type I_{M+N}(q^M, q^N; q)
// with replication 1 and any b1, b2 with q | b1*b2, builds an
// I_{M+N+1}(q^M*b1, q^N*b2; q). The intermediate replication-1 state is
// asserted at runtime.
Design extend_by_one_factor(const Design& base, int b1, int b2);

}  // namespace rcfd
