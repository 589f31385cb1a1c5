#pragma once

#include <span>

#include "rcfd/design.hpp"

namespace rcfd {

// A bijection [q_left] x [q_right] -> [q_left*q_right] used to relabel the
// symbol pairs of a Kronecker product.
struct SymbolBijection {
  int q_left = 1;
  int q_right = 1;
  std::vector<Symbol> table;  // index a*q_right+b

  // (a,b) -> a*q_right + b
  static SymbolBijection standard(int q_left, int q_right);

  Symbol map(int a, int b) const { return table[a * q_right + b]; }
  bool is_bijection() const;
};

// The all-zero design with q=1; exists for every shape.
Design trivial_design(int k, int m, int n);

// Side-by-side juxtaposition. Inputs must share (m,k,q) and verify.
Design glue_cols(const Design& left, const Design& right);

// Stacking; inputs must share (n,k,q) and verify.
Design glue_rows(const Design& top, const Design& bottom);

// Coordinate-wise Kronecker product: the cell at (i,j) combines the outer
// cell (i/m', j/n') of a with the inner cell (i mod m', j mod n') of b,
// mapping each coordinate's symbol pair through f. Yields an
// I_k(m*m', n*n'; q*q') when both inputs verify.
Design kronecker(const Design& a, const Design& b, const SymbolBijection& f);
Design kronecker(const Design& a, const Design& b);  // standard bijection

// Left fold of kronecker over the list with standard bijections.
Design kronecker_many(std::span<const Design> designs);

// Replaces every cell by a row_factor x col_factor block of copies.
Design blowup(const Design& d, int row_factor, int col_factor);

}  // namespace rcfd
