#include "rcfd/polyfield.hpp"

namespace rcfd {
namespace {

void check_shape(int q, int m_vars, int n_vars) {
  if (m_vars < 1 || n_vars < 1) {
    throw RangeError("block sizes must be positive");
  }
  if (m_vars == 1 && n_vars == 1 && q == 2) {
    throw UnsupportedShape("no coefficient matrix exists for M=N=1 over GF(2)");
  }
  if (n_vars == 1 && m_vars >= 2) {
    throw UnsupportedShape("N=1 with M>=2 is built by transposing (M,N)=(1,M)");
  }
}

bool conditions_hold(const std::vector<Symbol>& row, int m_vars, int n_vars) {
  bool left = false, right = false;
  for (int t = 0; t < m_vars; ++t) left = left || row[t] != 0;
  for (int t = 0; t < n_vars; ++t) right = right || row[m_vars + t] != 0;
  return left && right;
}

// Reduces candidate against the echelon basis; returns the residue (empty
// when dependent). Basis rows are kept with their leading position.
struct Echelon {
  const FieldTable* f;
  std::vector<std::vector<Symbol>> basis;
  std::vector<int> lead;

  bool insert(std::vector<Symbol> v) {
    for (size_t b = 0; b < basis.size(); ++b) {
      const Symbol head = v[lead[b]];
      if (head == 0) continue;
      // v -= head * basis[b]
      const int factor = head;
      for (size_t t = 0; t < v.size(); ++t) {
        v[t] = static_cast<Symbol>(
            f->sub(v[t], f->mul(factor, basis[b][t])));
      }
    }
    int pos = -1;
    for (size_t t = 0; t < v.size(); ++t) {
      if (v[t] != 0) {
        pos = static_cast<int>(t);
        break;
      }
    }
    if (pos < 0) return false;
    // normalize the pivot to 1
    const int inv = f->inv(v[pos]);
    for (size_t t = 0; t < v.size(); ++t) {
      v[t] = static_cast<Symbol>(f->mul(inv, v[t]));
    }
    basis.push_back(std::move(v));
    lead.push_back(pos);
    return true;
  }
};

}  // namespace

bool matrix_invariants_hold(const CoefficientMatrix& c, const FieldTable& f) {
  const int k = c.row_vars + c.col_vars;
  if (c.q != f.q || static_cast<int>(c.rows.size()) != k) return false;
  Echelon e{&f, {}, {}};
  for (const auto& row : c.rows) {
    if (static_cast<int>(row.size()) != k) return false;
    if (!conditions_hold(row, c.row_vars, c.col_vars)) return false;
    if (!e.insert(row)) return false;  // linearly dependent
  }
  return true;
}

CoefficientMatrix coefficient_matrix(const FieldTable& f, int m_vars, int n_vars) {
  check_shape(f.q, m_vars, n_vars);
  const int k = m_vars + n_vars;
  CoefficientMatrix c{f.q, m_vars, n_vars, {}};

  if (m_vars == 1 && n_vars == 1) {
    c.rows = {{1, 1}, {1, 2}};
  } else {
    c.rows.assign(k, std::vector<Symbol>(k, 0));
    for (int r = 0; r < k; ++r) c.rows[r][r] = 1;
    // first sweep: add row 0 into every later row
    for (int s = 1; s < k; ++s) {
      for (int t = 0; t < k; ++t) {
        c.rows[s][t] = static_cast<Symbol>(f.add(c.rows[0][t], c.rows[s][t]));
      }
    }
    // second sweep over the first M rows
    for (int s = 0; s < m_vars; ++s) {
      for (int t = 0; t < k; ++t) {
        int delta = c.rows[k - 1][t];
        if (f.p == 2) delta = f.add(delta, c.rows[k - 2][t]);
        c.rows[s][t] = static_cast<Symbol>(f.add(c.rows[s][t], delta));
      }
    }
  }

  if (matrix_invariants_hold(c, f)) return c;
  return coefficient_matrix_search(f, m_vars, n_vars);
}

CoefficientMatrix coefficient_matrix_search(const FieldTable& f, int m_vars,
                                            int n_vars) {
  check_shape(f.q, m_vars, n_vars);
  const int k = m_vars + n_vars;
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= f.q;
    if (total > 100'000'000LL) {
      throw UnsupportedShape("coefficient search space too large");
    }
  }

  CoefficientMatrix c{f.q, m_vars, n_vars, {}};
  std::vector<long long> chosen;  // candidate codes, strictly increasing

  // depth-first over candidate rows in ascending code order; rank is kept
  // incrementally by re-running the echelon insert on the current set
  auto decode = [&](long long code) {
    std::vector<Symbol> row(k);
    for (int t = k - 1; t >= 0; --t) {
      row[t] = static_cast<Symbol>(code % f.q);
      code /= f.q;
    }
    return row;
  };

  std::vector<std::vector<Symbol>> rows;
  auto independent = [&](const std::vector<Symbol>& cand) {
    Echelon e{&f, {}, {}};
    for (const auto& r : rows) e.insert(r);
    return e.insert(cand);
  };

  // rows may repeat codes only upward, which is enough: any valid set can be
  // listed in increasing order
  std::vector<long long> stack{0};
  while (!stack.empty()) {
    long long code = stack.back();
    if (code >= total) {
      stack.pop_back();
      if (!rows.empty()) rows.pop_back();
      if (!stack.empty()) ++stack.back();
      continue;
    }
    std::vector<Symbol> cand = decode(code);
    if (conditions_hold(cand, m_vars, n_vars) && independent(cand)) {
      rows.push_back(std::move(cand));
      if (static_cast<int>(rows.size()) == k) {
        c.rows = rows;
        if (!matrix_invariants_hold(c, f)) {
          throw InternalAssertion("coefficient search produced an invalid matrix");
        }
        return c;
      }
      stack.push_back(code + 1);
    } else {
      ++stack.back();
    }
  }
  throw InternalAssertion("no coefficient matrix found for a feasible shape");
}

Design evaluate_design(const CoefficientMatrix& c, const FieldTable& f) {
  if (c.q != f.q) throw FieldMismatch("coefficient matrix and field orders differ");
  const int m_vars = c.row_vars;
  const int n_vars = c.col_vars;
  const int k = m_vars + n_vars;

  long long rows = 1, cols = 1;
  for (int i = 0; i < m_vars; ++i) rows *= f.q;
  for (int i = 0; i < n_vars; ++i) cols *= f.q;
  if (rows > 1'000'000 || cols > 1'000'000 || rows * cols > 8'000'000) {
    throw RangeError("evaluated design would be too large");
  }

  // big-endian digit tables for all row and column labels
  auto digit_table = [&](long long count, int width) {
    std::vector<std::vector<int>> d(static_cast<size_t>(count),
                                    std::vector<int>(width));
    for (long long v = 0; v < count; ++v) {
      long long rest = v;
      for (int t = width - 1; t >= 0; --t) {
        d[static_cast<size_t>(v)][t] = static_cast<int>(rest % f.q);
        rest /= f.q;
      }
    }
    return d;
  };
  const auto bdig = digit_table(rows, m_vars);
  const auto cdig = digit_table(cols, n_vars);

  Design out = Design::filled(
      {k, static_cast<int>(rows), static_cast<int>(cols), f.q});
  for (int i = 0; i < out.params.m; ++i) {
    for (int j = 0; j < out.params.n; ++j) {
      for (int r = 0; r < k; ++r) {
        int acc = 0;
        for (int t = 0; t < m_vars; ++t) {
          acc = f.add(acc, f.mul(c.rows[r][t], bdig[i][t]));
        }
        for (int t = 0; t < n_vars; ++t) {
          acc = f.add(acc, f.mul(c.rows[r][m_vars + t], cdig[j][t]));
        }
        out.set(i, j, r, static_cast<Symbol>(acc));
      }
    }
  }
  return out;
}

Design prime_power_design(int q, int m_vars, int n_vars) {
  if (m_vars < 1 || n_vars < 1) throw RangeError("block sizes must be positive");
  if (m_vars == 1 && n_vars == 1 && q == 2) {
    throw UnsupportedShape("I_2(2,2;2) does not exist");
  }
  if (n_vars == 1 && m_vars >= 2) {
    return transpose(prime_power_design(q, 1, m_vars));
  }
  const FieldTable f = build_field(q);
  return evaluate_design(coefficient_matrix(f, m_vars, n_vars), f);
}

}  // namespace rcfd
