#pragma once

#include "rcfd/design.hpp"
#include "rcfd/gf.hpp"

namespace rcfd {

// Coefficients of M+N linearly independent linear forms over GF(q) in
// M+N variables. Row r holds (a_{r,0},...,a_{r,M+N-1}); the first M
// positions address row variables and the last N column variables.
struct CoefficientMatrix {
  int q = 0;
  int row_vars = 0;  // M
  int col_vars = 0;  // N
  std::vector<std::vector<Symbol>> rows;
};

// Invariants: full rank over GF(q), every row nonzero on the first M
// positions and nonzero on the last N positions.
bool matrix_invariants_hold(const CoefficientMatrix& c, const FieldTable& f);

// Deterministic construction of a valid coefficient matrix.
//  - M=N=1, q>2: rows (1,1) and (1,a) with a the element labelled 2.
//  - N>=2: start from the identity; add row 0 to every later row; then, for
//    the first M rows, add the last two rows (characteristic 2) or the last
//    row (odd characteristic).
// The result is self-checked; if the check ever failed, a deterministic
// exhaustive search would take over, and only its failure raises
// InternalAssertion.
// Throws UnsupportedShape for (M,N,q)=(1,1,2) and for N=1 with M>=2
// (callers transpose instead).
CoefficientMatrix coefficient_matrix(const FieldTable& f, int m_vars, int n_vars);

// Lexicographic backtracking over candidate rows, keeping rank and both
// nonzero-block conditions. Used as the fallback behind coefficient_matrix
// and tested in its own right.
CoefficientMatrix coefficient_matrix_search(const FieldTable& f, int m_vars,
                                            int n_vars);

// Evaluates the forms over all assignments: the cell in row r and column s
// holds (f_0(b,c),...,f_{M+N-1}(b,c)) where r spells (b_0..b_{M-1}) and s
// spells (c_0..c_{N-1}) as big-endian base-q digits. The result is a
// q^M x q^N design with k = M+N.
Design evaluate_design(const CoefficientMatrix& c, const FieldTable& f);

// The complete construction: an I_{M+N}(q^M, q^N; q) with every vector of
// [q]^{M+N} in exactly one cell. Throws UnsupportedShape only for
// (M,N,q)=(1,1,2); the N=1, M>=2 case is built transposed.
Design prime_power_design(int q, int m_vars, int n_vars);

}  // namespace rcfd
