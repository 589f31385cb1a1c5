#pragma once

#include <optional>

#include "rcfd/design.hpp"

namespace rcfd {

struct Budget {
  unsigned long long max_nodes = 100'000'000ULL;
  double max_seconds = 60.0;
};

enum class SearchStatus { Found, ExhaustedNone, Timeout };

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::optional<Design> design;
  unsigned long long nodes = 0;
  Budget budget;
};

// Backtracking search for any design of type I_k(m,n;q). Cells are filled in
// row-major order, candidate tuples are tried in lexicographic order, and
// the search prunes on partial row, column and vector-multiset counts.
// Symmetry reduction: the first row and first column of coordinate 0 are
// fixed to their lexicographically least completions, which is sound because
// row and column permutations preserve the design properties.
// ExhaustedNone is only reported when the reduced tree was fully explored.
SearchOutcome exhaustive_exists(int k, int m, int n, int q,
                                const Budget& budget = {});

// Discovery-oriented search for a pair of orthogonal Latin squares of order
// v as an I_2(v,v;v): fixes the first coordinate to deterministically
// sampled Latin squares and looks for a mate by partitioning the cells into
// v disjoint transversals. Not exhaustive, so a failure is Timeout, never
// ExhaustedNone. Fully deterministic for fixed inputs and budget.
SearchOutcome search_mols_pair(int v, const Budget& budget = {});

// As exhaustive_exists (or search_mols_pair for square I_2(v,v;v) shapes)
// but stores the first hit into the seed cache directory when one is given.
SearchOutcome find_seed(const DesignParams& spec, const Budget& budget = {},
                        const std::string& cache_dir = "");

}  // namespace rcfd
