#include "rcfd/design.hpp"

#include <map>

namespace rcfd {
namespace {

void check_params(const DesignParams& p) {
  if (p.k < 1 || p.m < 1 || p.n < 1 || p.q < 1) {
    throw RangeError("design parameters must all be positive");
  }
}

// q^k if it fits below limit, otherwise 0 (meaning "larger than limit").
long long pow_within(long long q, int k, long long limit) {
  long long v = 1;
  for (int i = 0; i < k; ++i) {
    if (v > limit / q) return 0;
    v *= q;
  }
  return v;
}

std::string vector_str(std::span<const Symbol> t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  s += ')';
  return s;
}

}  // namespace

std::string DesignParams::str() const {
  return "I_" + std::to_string(k) + "(" + std::to_string(m) + "," +
         std::to_string(n) + ";" + std::to_string(q) + ")";
}

Design::Design(DesignParams p, std::vector<Symbol> data)
    : params(p), cells(std::move(data)) {
  check_params(params);
  const size_t want =
      static_cast<size_t>(params.m) * params.n * params.k;
  if (cells.size() != want) {
    throw DimensionMismatch("cell data has " + std::to_string(cells.size()) +
                            " symbols, expected " + std::to_string(want));
  }
  for (Symbol v : cells) {
    if (v >= params.q) {
      throw DimensionMismatch("symbol " + std::to_string(v) +
                              " out of range for q=" + std::to_string(params.q));
    }
  }
}

Design Design::filled(DesignParams p, Symbol value) {
  check_params(p);
  Design d;
  d.params = p;
  d.cells.assign(static_cast<size_t>(p.m) * p.n * p.k, value);
  return d;
}

VerificationReport verify_design(const Design& d) {
  const auto& p = d.params;
  VerificationReport rep;
  auto violate = [&rep](std::string check, std::string loc, long long exp,
                        long long act) {
    rep.violations.push_back({std::move(check), std::move(loc), exp, act});
  };

  const long long mn = p.cell_count();
  if (p.m % p.q != 0) violate("divisibility", "q | m", 0, p.m % p.q);
  if (p.n % p.q != 0) violate("divisibility", "q | n", 0, p.n % p.q);

  const long long qk = pow_within(p.q, p.k, mn);
  const bool power_divides = qk != 0 && mn % qk == 0;
  const long long alpha = power_divides ? mn / qk : 0;
  if (!power_divides) {
    violate("divisibility", "q^k | m*n", 0, qk == 0 ? mn : mn % qk);
    violate("vector-count", "replication m*n/q^k is not an integer", 0, 1);
  } else {
    // exact multiset check: every vector of [q]^k exactly alpha times
    if (qk <= (1LL << 24)) {
      std::vector<long long> count(static_cast<size_t>(qk), 0);
      for (int i = 0; i < p.m; ++i) {
        for (int j = 0; j < p.n; ++j) {
          auto t = d.cell(i, j);
          long long code = 0;
          for (int c = p.k - 1; c >= 0; --c) code = code * p.q + t[c];
          ++count[static_cast<size_t>(code)];
        }
      }
      std::vector<Symbol> t(p.k);
      for (long long code = 0; code < qk; ++code) {
        if (count[static_cast<size_t>(code)] == alpha) continue;
        long long v = code;
        for (int c = 0; c < p.k; ++c) {
          t[c] = static_cast<Symbol>(v % p.q);
          v /= p.q;
        }
        violate("vector-count", "vector " + vector_str(t), alpha,
                count[static_cast<size_t>(code)]);
      }
    } else {
      // q^k too large to tabulate; only vectors that occur can deviate
      // upward, and missing ones are caught by the total.
      std::map<std::vector<Symbol>, long long> count;
      for (int i = 0; i < p.m; ++i) {
        for (int j = 0; j < p.n; ++j) {
          auto t = d.cell(i, j);
          ++count[std::vector<Symbol>(t.begin(), t.end())];
        }
      }
      long long distinct = 0;
      for (const auto& [vec, c] : count) {
        ++distinct;
        if (c != alpha) {
          violate("vector-count", "vector " + vector_str(vec), alpha, c);
        }
      }
      if (distinct != qk) {
        violate("vector-count", "distinct vectors present", qk, distinct);
      }
    }
  }

  if (p.n % p.q == 0) {
    const long long per_row = p.n / p.q;
    std::vector<long long> cnt(static_cast<size_t>(p.k) * p.q);
    for (int i = 0; i < p.m; ++i) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (int j = 0; j < p.n; ++j) {
        auto t = d.cell(i, j);
        for (int c = 0; c < p.k; ++c) ++cnt[static_cast<size_t>(c) * p.q + t[c]];
      }
      for (int c = 0; c < p.k; ++c) {
        for (int e = 0; e < p.q; ++e) {
          const long long got = cnt[static_cast<size_t>(c) * p.q + e];
          if (got != per_row) {
            violate("row-count",
                    "row " + std::to_string(i) + ", coordinate " +
                        std::to_string(c) + ", symbol " + std::to_string(e),
                    per_row, got);
          }
        }
      }
    }
  }

  if (p.m % p.q == 0) {
    const long long per_col = p.m / p.q;
    std::vector<long long> cnt(static_cast<size_t>(p.k) * p.q);
    for (int j = 0; j < p.n; ++j) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (int i = 0; i < p.m; ++i) {
        auto t = d.cell(i, j);
        for (int c = 0; c < p.k; ++c) ++cnt[static_cast<size_t>(c) * p.q + t[c]];
      }
      for (int c = 0; c < p.k; ++c) {
        for (int e = 0; e < p.q; ++e) {
          const long long got = cnt[static_cast<size_t>(c) * p.q + e];
          if (got != per_col) {
            violate("col-count",
                    "column " + std::to_string(j) + ", coordinate " +
                        std::to_string(c) + ", symbol " + std::to_string(e),
                    per_col, got);
          }
        }
      }
    }
  }

  rep.pass = rep.violations.empty();
  return rep;
}

bool verify_orthogonal(const Design& f, const Design& g) {
  if (f.params.k != 1 || g.params.k != 1) {
    throw ShapeMismatch("orthogonality is defined for k=1 designs");
  }
  if (f.params != g.params) {
    throw ShapeMismatch("orthogonality requires identical (m,n,q)");
  }
  const int q = f.params.q;
  const long long mn = f.params.cell_count();
  if (mn % (1LL * q * q) != 0) return false;
  const long long want = mn / (1LL * q * q);
  std::vector<long long> pairs(static_cast<size_t>(q) * q, 0);
  for (int i = 0; i < f.params.m; ++i) {
    for (int j = 0; j < f.params.n; ++j) {
      ++pairs[static_cast<size_t>(f.at(i, j, 0)) * q + g.at(i, j, 0)];
    }
  }
  for (long long c : pairs) {
    if (c != want) return false;
  }
  return true;
}

Design truncate(const Design& d, int keep) {
  if (keep < 1 || keep > d.params.k) {
    throw RangeError("truncate length must lie in 1..k");
  }
  Design out = Design::filled({keep, d.params.m, d.params.n, d.params.q});
  for (int i = 0; i < d.params.m; ++i) {
    for (int j = 0; j < d.params.n; ++j) {
      for (int c = 0; c < keep; ++c) out.set(i, j, c, d.at(i, j, c));
    }
  }
  return out;
}

Design transpose(const Design& d) {
  Design out = Design::filled({d.params.k, d.params.n, d.params.m, d.params.q});
  for (int i = 0; i < d.params.m; ++i) {
    for (int j = 0; j < d.params.n; ++j) {
      for (int c = 0; c < d.params.k; ++c) out.set(j, i, c, d.at(i, j, c));
    }
  }
  return out;
}

Design component(const Design& d, int c) {
  if (c < 0 || c >= d.params.k) throw RangeError("component index out of range");
  Design out = Design::filled({1, d.params.m, d.params.n, d.params.q});
  for (int i = 0; i < d.params.m; ++i) {
    for (int j = 0; j < d.params.n; ++j) out.set(i, j, 0, d.at(i, j, c));
  }
  return out;
}

Design concat(const Design& a, const Design& b) {
  if (a.params.m != b.params.m || a.params.n != b.params.n ||
      a.params.q != b.params.q) {
    throw ShapeMismatch("concatenation requires identical (m,n,q)");
  }
  const int ka = a.params.k;
  const int kb = b.params.k;
  Design out = Design::filled({ka + kb, a.params.m, a.params.n, a.params.q});
  for (int i = 0; i < a.params.m; ++i) {
    for (int j = 0; j < a.params.n; ++j) {
      for (int c = 0; c < ka; ++c) out.set(i, j, c, a.at(i, j, c));
      for (int c = 0; c < kb; ++c) out.set(i, j, ka + c, b.at(i, j, c));
    }
  }
  return out;
}

Design join_components(std::span<const Design> parts) {
  if (parts.empty()) throw ShapeMismatch("cannot join an empty component list");
  for (const Design& p : parts) {
    if (p.params.k != 1) throw ShapeMismatch("join expects k=1 components");
  }
  Design out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out = concat(out, parts[i]);
  return out;
}

}  // namespace rcfd
