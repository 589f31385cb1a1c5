#include "rcfd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>

#include "rcfd/io.hpp"

namespace rcfd {
namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  const Budget* budget;
  Clock::time_point start = Clock::now();
  unsigned long long nodes = 0;
  bool timed_out = false;

  // Returns false when a limit has been hit. The wall clock is polled only
  // every few thousand nodes.
  bool tick() {
    ++nodes;
    if (nodes > budget->max_nodes) {
      timed_out = true;
      return false;
    }
    if ((nodes & 0x1FFF) == 0) {
      const double elapsed =
          std::chrono::duration<double>(Clock::now() - start).count();
      if (elapsed > budget->max_seconds) {
        timed_out = true;
        return false;
      }
    }
    return !timed_out;
  }
};

struct GridSearch {
  int k, m, n, q;
  long long alpha;
  long long qk;
  std::vector<std::vector<Symbol>> tuples;  // lexicographic candidate order
  std::vector<long long> row_cnt;           // [m][k][q]
  std::vector<long long> col_cnt;           // [n][k][q]
  std::vector<long long> vec_cnt;           // [q^k]
  Design grid;
  Deadline* deadline;
  bool found = false;

  long long& rc(int i, int c, int e) {
    return row_cnt[(static_cast<size_t>(i) * k + c) * q + e];
  }
  long long& cc(int j, int c, int e) {
    return col_cnt[(static_cast<size_t>(j) * k + c) * q + e];
  }

  bool place(int i, int j, const std::vector<Symbol>& t, long long code) {
    const long long row_cap = n / q;
    const long long col_cap = m / q;
    if (vec_cnt[code] >= alpha) return false;
    for (int c = 0; c < k; ++c) {
      if (rc(i, c, t[c]) >= row_cap || cc(j, c, t[c]) >= col_cap) return false;
    }
    ++vec_cnt[code];
    for (int c = 0; c < k; ++c) {
      ++rc(i, c, t[c]);
      ++cc(j, c, t[c]);
      grid.set(i, j, c, t[c]);
    }
    return true;
  }

  void unplace(int i, int j, const std::vector<Symbol>& t, long long code) {
    --vec_cnt[code];
    for (int c = 0; c < k; ++c) {
      --rc(i, c, t[c]);
      --cc(j, c, t[c]);
    }
  }

  // The symmetry-fixed value of coordinate 0, or -1 when free.
  int fixed_coord0(int i, int j) const {
    if (i == 0) return j / (n / q);
    if (j == 0) return i / (m / q);
    return -1;
  }

  bool fill(int cell) {
    if (cell == m * n) {
      found = true;
      return true;
    }
    const int i = cell / n;
    const int j = cell % n;
    const int want0 = fixed_coord0(i, j);
    for (long long code = 0; code < qk; ++code) {
      const auto& t = tuples[static_cast<size_t>(code)];
      if (want0 >= 0 && t[0] != want0) continue;
      if (!deadline->tick()) return false;
      if (!place(i, j, t, code)) continue;
      if (fill(cell + 1)) return true;
      unplace(i, j, t, code);
      if (deadline->timed_out) return false;
    }
    return false;
  }
};

SearchOutcome exhaust(int k, int m, int n, int q, const Budget& budget) {
  SearchOutcome out;
  out.budget = budget;

  // infeasible parameters need no search
  const long long mn = 1LL * m * n;
  long long qk = 1;
  bool fits = true;
  for (int i = 0; i < k; ++i) {
    if (qk > mn / q) {
      fits = false;
      break;
    }
    qk *= q;
  }
  if (m % q != 0 || n % q != 0 || !fits || mn % qk != 0) {
    out.status = SearchStatus::ExhaustedNone;
    return out;
  }

  GridSearch s;
  s.k = k;
  s.m = m;
  s.n = n;
  s.q = q;
  s.qk = qk;
  s.alpha = mn / qk;
  s.tuples.resize(static_cast<size_t>(qk), std::vector<Symbol>(k));
  for (long long code = 0; code < qk; ++code) {
    long long v = code;
    for (int c = k - 1; c >= 0; --c) {  // big-endian: coordinate 0 most significant
      s.tuples[static_cast<size_t>(code)][c] = static_cast<Symbol>(v % q);
      v /= q;
    }
  }
  s.row_cnt.assign(static_cast<size_t>(m) * k * q, 0);
  s.col_cnt.assign(static_cast<size_t>(n) * k * q, 0);
  s.vec_cnt.assign(static_cast<size_t>(qk), 0);
  s.grid = Design::filled({k, m, n, q});

  Deadline deadline{&budget};
  s.deadline = &deadline;
  s.fill(0);

  out.nodes = deadline.nodes;
  if (s.found) {
    out.status = SearchStatus::Found;
    out.design = std::move(s.grid);
  } else {
    out.status = deadline.timed_out ? SearchStatus::Timeout
                                    : SearchStatus::ExhaustedNone;
  }
  return out;
}

// ---- pair-of-MOLS discovery -------------------------------------------

using Rng = std::mt19937_64;

// Random order-v Latin square by row-wise backtracking with shuffled
// candidate order. Always terminates: every Latin rectangle extends.
std::vector<std::vector<int>> random_latin(int v, Rng& rng, Deadline& dl) {
  std::vector<std::vector<int>> square(v, std::vector<int>(v, -1));
  std::vector<std::vector<char>> col_used(v, std::vector<char>(v, 0));

  for (int i = 0; i < v; ++i) {
    std::vector<std::vector<int>> prefs(v);
    for (int j = 0; j < v; ++j) {
      prefs[j].resize(v);
      for (int s = 0; s < v; ++s) prefs[j][s] = s;
      std::shuffle(prefs[j].begin(), prefs[j].end(), rng);
    }
    std::vector<char> row_used(v, 0);
    std::vector<int> choice(v, -1);
    int j = 0;
    while (j >= 0 && j < v) {
      if (!dl.tick()) return {};
      bool advanced = false;
      for (int idx = choice[j] + 1; idx < v; ++idx) {
        const int s = prefs[j][idx];
        if (row_used[s] || col_used[j][s]) continue;
        choice[j] = idx;
        row_used[s] = 1;
        square[i][j] = s;
        advanced = true;
        break;
      }
      if (advanced) {
        ++j;
      } else {
        choice[j] = -1;
        --j;
        if (j >= 0) {
          row_used[square[i][j]] = 0;
          square[i][j] = -1;
        }
      }
    }
    if (j < 0) {
      // dead row (cannot happen for a fresh row, but keep the search honest)
      return {};
    }
    for (int jj = 0; jj < v; ++jj) col_used[jj][square[i][jj]] = 1;
  }
  return square;
}

struct Transversal {
  std::vector<int> col_of_row;     // column chosen in each row
  std::vector<unsigned long long> cells;  // bitmask over v*v cells, 2 words for v<=11
};

// Enumerates transversals of the square in deterministic order.
void enumerate_transversals(const std::vector<std::vector<int>>& sq,
                            std::vector<Transversal>& out, Deadline& dl,
                            size_t cap) {
  const int v = static_cast<int>(sq.size());
  std::vector<char> col_used(v, 0), sym_used(v, 0);
  std::vector<int> cols(v, -1);

  struct Frame {
    int row;
    int next_col;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty() && out.size() < cap) {
    Frame& f = stack.back();
    if (f.row == v) {
      Transversal t;
      t.col_of_row.assign(cols.begin(), cols.end());
      t.cells.assign((static_cast<size_t>(v) * v + 63) / 64, 0);
      for (int r = 0; r < v; ++r) {
        const size_t cell = static_cast<size_t>(r) * v + cols[r];
        t.cells[cell / 64] |= 1ULL << (cell % 64);
      }
      out.push_back(std::move(t));
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        const int r = p.row;
        col_used[cols[r]] = 0;
        sym_used[sq[r][cols[r]]] = 0;
        cols[r] = -1;
      }
      continue;
    }
    bool advanced = false;
    for (int j = f.next_col; j < v; ++j) {
      if (!dl.tick()) return;
      if (col_used[j] || sym_used[sq[f.row][j]]) continue;
      f.next_col = j + 1;
      cols[f.row] = j;
      col_used[j] = 1;
      sym_used[sq[f.row][j]] = 1;
      stack.push_back({f.row + 1, 0});
      advanced = true;
      break;
    }
    if (!advanced) {
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        const int r = p.row;
        col_used[cols[r]] = 0;
        sym_used[sq[r][cols[r]]] = 0;
        cols[r] = -1;
      }
    }
  }
}

// Exact cover: pick v pairwise disjoint transversals covering every cell.
// Gives up once the slice counter runs out so one hard square cannot eat
// the whole budget.
bool cover_cells(const std::vector<Transversal>& ts,
                 const std::vector<std::vector<int>>& by_cell, int v,
                 std::vector<int>& picked,
                 std::vector<unsigned long long>& covered, Deadline& dl,
                 long long& slice) {
  if (static_cast<int>(picked.size()) == v) return true;
  if (--slice <= 0) return false;
  // lowest uncovered cell; padding bits above v*v are pre-marked covered
  int cell = -1;
  for (size_t w = 0; w < covered.size(); ++w) {
    const unsigned long long free_bits = ~covered[w];
    if (free_bits != 0) {
      cell = static_cast<int>(w * 64 + std::countr_zero(free_bits));
      break;
    }
  }
  if (cell < 0) return false;
  for (int ti : by_cell[cell]) {
    if (!dl.tick()) return false;
    const auto& t = ts[ti];
    bool disjoint = true;
    for (size_t w = 0; w < covered.size(); ++w) {
      if (t.cells[w] & covered[w]) {
        disjoint = false;
        break;
      }
    }
    if (!disjoint) continue;
    for (size_t w = 0; w < covered.size(); ++w) covered[w] |= t.cells[w];
    picked.push_back(ti);
    if (cover_cells(ts, by_cell, v, picked, covered, dl, slice)) return true;
    picked.pop_back();
    for (size_t w = 0; w < covered.size(); ++w) covered[w] &= ~t.cells[w];
    if (dl.timed_out || slice <= 0) return false;
  }
  return false;
}

SearchOutcome mols_outcome(int v, const Budget& budget) {
  SearchOutcome out;
  out.budget = budget;
  if (v < 1) throw RangeError("order must be positive");
  Deadline dl{&budget};

  if (v == 1) {
    out.status = SearchStatus::Found;
    out.design = Design::filled({2, 1, 1, 1});
    out.nodes = 0;
    return out;
  }

  Rng rng(0x5EEDBA5EULL ^ static_cast<unsigned long long>(v));
  while (!dl.timed_out) {
    const auto square = random_latin(v, rng, dl);
    if (square.empty()) break;

    std::vector<Transversal> ts;
    enumerate_transversals(square, ts, dl, 2'000'000);
    if (dl.timed_out) break;
    if (static_cast<int>(ts.size()) < v) continue;

    std::vector<std::vector<int>> by_cell(static_cast<size_t>(v) * v);
    for (size_t ti = 0; ti < ts.size(); ++ti) {
      for (int r = 0; r < v; ++r) {
        by_cell[static_cast<size_t>(r) * v + ts[ti].col_of_row[r]].push_back(
            static_cast<int>(ti));
      }
    }
    std::vector<int> picked;
    std::vector<unsigned long long> covered((static_cast<size_t>(v) * v + 63) / 64, 0);
    for (int bit = v * v; bit < static_cast<int>(covered.size()) * 64; ++bit) {
      covered[bit / 64] |= 1ULL << (bit % 64);
    }
    long long slice = 2'000'000;
    if (cover_cells(ts, by_cell, v, picked, covered, dl, slice)) {
      Design d = Design::filled({2, v, v, v});
      for (int idx = 0; idx < v; ++idx) {
        const auto& t = ts[picked[idx]];
        for (int r = 0; r < v; ++r) {
          const int c = t.col_of_row[r];
          d.set(r, c, 0, static_cast<Symbol>(square[r][c]));
          d.set(r, c, 1, static_cast<Symbol>(idx));
        }
      }
      if (!is_verified(d)) {
        throw InternalAssertion("transversal cover produced a non-verifying pair");
      }
      out.status = SearchStatus::Found;
      out.design = std::move(d);
      out.nodes = dl.nodes;
      return out;
    }
  }
  out.nodes = dl.nodes;
  out.status = SearchStatus::Timeout;  // this strategy never exhausts
  return out;
}

}  // namespace

SearchOutcome exhaustive_exists(int k, int m, int n, int q, const Budget& budget) {
  if (k < 1 || m < 1 || n < 1 || q < 1) {
    throw RangeError("search parameters must be positive");
  }
  SearchOutcome out = exhaust(k, m, n, q, budget);
  if (out.design && !is_verified(*out.design)) {
    throw InternalAssertion("oracle returned a non-verifying design");
  }
  return out;
}

SearchOutcome search_mols_pair(int v, const Budget& budget) {
  return mols_outcome(v, budget);
}

SearchOutcome find_seed(const DesignParams& spec, const Budget& budget,
                        const std::string& cache_dir) {
  SearchOutcome out;
  if (spec.k == 2 && spec.m == spec.n && spec.q == spec.m && spec.q > 3) {
    out = search_mols_pair(spec.m, budget);
  } else {
    out = exhaustive_exists(spec.k, spec.m, spec.n, spec.q, budget);
  }
  if (out.design && !cache_dir.empty()) {
    store_seed(*out.design, cache_dir);
  }
  return out;
}

}  // namespace rcfd
