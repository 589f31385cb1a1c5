#include "rcfd/combinators.hpp"

#include <limits>

namespace rcfd {
namespace {

void require_verified(const Design& d, const char* who) {
  if (!is_verified(d)) {
    throw UnverifiedInput(std::string(who) + ": input " + d.params.str() +
                          " does not verify");
  }
}

int checked_product(long long a, long long b, const char* what) {
  const long long v = a * b;
  if (a != 0 && (v / a != b || v > std::numeric_limits<int>::max())) {
    throw RangeError(std::string(what) + " overflows");
  }
  return static_cast<int>(v);
}

}  // namespace

SymbolBijection SymbolBijection::standard(int q_left, int q_right) {
  SymbolBijection f;
  f.q_left = q_left;
  f.q_right = q_right;
  f.table.resize(static_cast<size_t>(q_left) * q_right);
  for (int a = 0; a < q_left; ++a) {
    for (int b = 0; b < q_right; ++b) {
      f.table[a * q_right + b] = static_cast<Symbol>(a * q_right + b);
    }
  }
  return f;
}

bool SymbolBijection::is_bijection() const {
  const size_t qq = static_cast<size_t>(q_left) * q_right;
  if (table.size() != qq) return false;
  std::vector<char> seen(qq, 0);
  for (Symbol v : table) {
    if (v >= qq || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Design trivial_design(int k, int m, int n) {
  return Design::filled({k, m, n, 1});
}

Design glue_cols(const Design& left, const Design& right) {
  if (left.params.m != right.params.m || left.params.k != right.params.k ||
      left.params.q != right.params.q) {
    throw ShapeMismatch("glue_cols requires equal (m,k,q)");
  }
  require_verified(left, "glue_cols");
  require_verified(right, "glue_cols");
  const auto& p = left.params;
  Design out = Design::filled({p.k, p.m, p.n + right.params.n, p.q});
  for (int i = 0; i < p.m; ++i) {
    for (int j = 0; j < p.n; ++j) {
      for (int c = 0; c < p.k; ++c) out.set(i, j, c, left.at(i, j, c));
    }
    for (int j = 0; j < right.params.n; ++j) {
      for (int c = 0; c < p.k; ++c) out.set(i, p.n + j, c, right.at(i, j, c));
    }
  }
  return out;
}

Design glue_rows(const Design& top, const Design& bottom) {
  if (top.params.n != bottom.params.n || top.params.k != bottom.params.k ||
      top.params.q != bottom.params.q) {
    throw ShapeMismatch("glue_rows requires equal (n,k,q)");
  }
  require_verified(top, "glue_rows");
  require_verified(bottom, "glue_rows");
  const auto& p = top.params;
  Design out = Design::filled({p.k, p.m + bottom.params.m, p.n, p.q});
  for (int j = 0; j < p.n; ++j) {
    for (int i = 0; i < p.m; ++i) {
      for (int c = 0; c < p.k; ++c) out.set(i, j, c, top.at(i, j, c));
    }
    for (int i = 0; i < bottom.params.m; ++i) {
      for (int c = 0; c < p.k; ++c) out.set(p.m + i, j, c, bottom.at(i, j, c));
    }
  }
  return out;
}

Design kronecker(const Design& a, const Design& b, const SymbolBijection& f) {
  if (a.params.k != b.params.k) {
    throw KMismatch("kronecker requires equal k");
  }
  if (f.q_left != a.params.q || f.q_right != b.params.q) {
    throw ShapeMismatch("symbol bijection does not match the input symbol sets");
  }
  if (!f.is_bijection()) {
    throw ShapeMismatch("symbol map is not a bijection");
  }
  require_verified(a, "kronecker");
  require_verified(b, "kronecker");

  DesignParams p;
  p.k = a.params.k;
  p.m = checked_product(a.params.m, b.params.m, "kronecker rows");
  p.n = checked_product(a.params.n, b.params.n, "kronecker cols");
  p.q = checked_product(a.params.q, b.params.q, "kronecker symbols");
  Design out = Design::filled(p);

  const int mi = b.params.m;
  const int ni = b.params.n;
  for (int i = 0; i < p.m; ++i) {
    const int ao = i / mi;
    const int bi = i % mi;
    for (int j = 0; j < p.n; ++j) {
      const int aj = j / ni;
      const int bj = j % ni;
      for (int c = 0; c < p.k; ++c) {
        out.set(i, j, c, f.map(a.at(ao, aj, c), b.at(bi, bj, c)));
      }
    }
  }
  return out;
}

Design kronecker(const Design& a, const Design& b) {
  return kronecker(a, b, SymbolBijection::standard(a.params.q, b.params.q));
}

Design kronecker_many(std::span<const Design> designs) {
  if (designs.empty()) throw ShapeMismatch("kronecker_many needs at least one design");
  Design out = designs[0];
  for (size_t i = 1; i < designs.size(); ++i) out = kronecker(out, designs[i]);
  return out;
}

Design blowup(const Design& d, int row_factor, int col_factor) {
  if (row_factor < 1 || col_factor < 1) {
    throw RangeError("blowup factors must be positive");
  }
  require_verified(d, "blowup");
  DesignParams p = d.params;
  p.m = checked_product(p.m, row_factor, "blowup rows");
  p.n = checked_product(p.n, col_factor, "blowup cols");
  Design out = Design::filled(p);
  for (int i = 0; i < p.m; ++i) {
    const int si = i / row_factor;
    for (int j = 0; j < p.n; ++j) {
      const int sj = j / col_factor;
      for (int c = 0; c < p.k; ++c) out.set(i, j, c, d.at(si, sj, c));
    }
  }
  return out;
}

}  // namespace rcfd
