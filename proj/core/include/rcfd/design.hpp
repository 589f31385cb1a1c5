#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rcfd/errors.hpp"

namespace rcfd {

using Symbol = std::uint16_t;

struct DesignParams {
  int k = 1;  // coordinates per cell
  int m = 1;  // rows
  int n = 1;  // columns
  int q = 1;  // symbols per coordinate, drawn from [q] = {0,...,q-1}

  bool operator==(const DesignParams&) const = default;
  long long cell_count() const { return 1LL * m * n; }
  std::string str() const;  // "I_k(m,n;q)"
};

// An m x n grid of k-tuples over [q]. This is a *candidate*: whether it is a
// regular row-column factorial design of its type is decided by
// verify_design, never assumed.
struct Design {
  DesignParams params;
  std::vector<Symbol> cells;  // ((i * n) + j) * k + c

  Design() = default;
  Design(DesignParams p, std::vector<Symbol> data);
  static Design filled(DesignParams p, Symbol value = 0);

  Symbol at(int i, int j, int c) const {
    return cells[(static_cast<size_t>(i) * params.n + j) * params.k + c];
  }
  void set(int i, int j, int c, Symbol v) {
    cells[(static_cast<size_t>(i) * params.n + j) * params.k + c] = v;
  }
  std::span<const Symbol> cell(int i, int j) const {
    return {cells.data() + (static_cast<size_t>(i) * params.n + j) * params.k,
            static_cast<size_t>(params.k)};
  }

  bool operator==(const Design&) const = default;
};

struct Violation {
  std::string check;     // "divisibility", "vector-count", "row-count", "col-count"
  std::string location;  // human-readable position of the failure
  long long expected = 0;
  long long actual = 0;
};

struct VerificationReport {
  bool pass = false;
  std::vector<Violation> violations;
};

// Exact integer certification that D is of type I_k(m,n;q):
//   (a) q | m, q | n and q^k | m*n,
//   (b) every vector of [q]^k occurs exactly m*n/q^k times,
//   (c) per row, coordinate and symbol: exactly n/q occurrences,
//   (d) per column, coordinate and symbol: exactly m/q occurrences.
// Failures are reported, never thrown, so arbitrary external candidates can
// be checked.
VerificationReport verify_design(const Design& d);

inline bool is_verified(const Design& d) { return verify_design(d).pass; }

// True when superimposing the two k=1 designs yields every ordered symbol
// pair exactly m*n/q^2 times. Throws ShapeMismatch unless both have k=1 and
// identical (m,n,q).
bool verify_orthogonal(const Design& f, const Design& g);

// Keeps coordinates 0..keep-1 of every cell.
Design truncate(const Design& d, int keep);

Design transpose(const Design& d);

// The k=1 design formed by coordinate c of every cell.
Design component(const Design& d, int c);

// Coordinate-wise concatenation of two designs over the same grid and symbol
// set: cell tuples of the result are the tuples of a followed by those of b.
Design concat(const Design& a, const Design& b);

// Rebuilds a k=len(parts) design from k=1 components; the inverse of taking
// all components in order.
Design join_components(std::span<const Design> parts);

}  // namespace rcfd
