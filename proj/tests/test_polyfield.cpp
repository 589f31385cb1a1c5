#include <map>

#include "doctest.h"
#include "rcfd/polyfield.hpp"

using namespace rcfd;

TEST_SUITE("polyfield") {

TEST_CASE("coefficient matrix small shapes") {
  const FieldTable f3 = build_field(3);
  const CoefficientMatrix c = coefficient_matrix(f3, 1, 1);
  REQUIRE(c.rows.size() == 2);
  CHECK(c.rows[0] == std::vector<Symbol>{1, 1});
  CHECK(c.rows[1] == std::vector<Symbol>{1, 2});

  const FieldTable f2 = build_field(2);
  const CoefficientMatrix c2 = coefficient_matrix(f2, 1, 2);
  REQUIRE(c2.rows.size() == 3);
  CHECK(c2.rows[0] == std::vector<Symbol>{1, 1, 1});
  CHECK(c2.rows[1] == std::vector<Symbol>{1, 1, 0});
  CHECK(c2.rows[2] == std::vector<Symbol>{1, 0, 1});

  CHECK_THROWS_AS(coefficient_matrix(f2, 1, 1), UnsupportedShape);
  CHECK_THROWS_AS(coefficient_matrix(f3, 3, 1), UnsupportedShape);
}

TEST_CASE("matrix invariants hold for every constructed shape") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const FieldTable f = build_field(q);
    for (int m_vars = 1; m_vars <= 4; ++m_vars) {
      for (int n_vars = 1; n_vars <= 4; ++n_vars) {
        if (n_vars == 1 && m_vars >= 2) continue;
        if (m_vars == 1 && n_vars == 1 && q == 2) continue;
        long long cells = 1;
        for (int i = 0; i < m_vars + n_vars; ++i) cells *= q;
        if (cells > 4096) continue;
        const CoefficientMatrix c = coefficient_matrix(f, m_vars, n_vars);
        CHECK(matrix_invariants_hold(c, f));
      }
    }
  }
}

TEST_CASE("the fallback search also yields valid matrices") {
  for (int q : {2, 3, 4, 5}) {
    const FieldTable f = build_field(q);
    for (auto [m_vars, n_vars] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
      const CoefficientMatrix c = coefficient_matrix_search(f, m_vars, n_vars);
      CHECK(matrix_invariants_hold(c, f));
    }
  }
  const FieldTable f5 = build_field(5);
  CHECK(matrix_invariants_hold(coefficient_matrix_search(f5, 1, 1), f5));
}

TEST_CASE("evaluation places the zero tuple at the origin") {
  const FieldTable f = build_field(4);
  const CoefficientMatrix c = coefficient_matrix(f, 1, 2);
  const Design d = evaluate_design(c, f);
  for (int u = 0; u < d.params.k; ++u) CHECK(d.at(0, 0, u) == 0);

  const FieldTable f3 = build_field(3);
  CHECK_THROWS_AS(evaluate_design(c, f3), FieldMismatch);
}

TEST_CASE("evaluated designs verify with replication one") {
  const Design latin_pair = prime_power_design(3, 1, 1);
  CHECK(latin_pair.params == DesignParams{2, 3, 3, 3});
  CHECK(is_verified(latin_pair));

  const Design d = prime_power_design(2, 1, 2);
  CHECK(d.params == DesignParams{3, 2, 4, 2});
  CHECK(is_verified(d));
  std::map<std::vector<Symbol>, int> seen;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 4; ++j) {
      auto t = d.cell(i, j);
      ++seen[std::vector<Symbol>(t.begin(), t.end())];
    }
  }
  CHECK(seen.size() == 8);  // each of the 8 binary triples exactly once
}

TEST_CASE("transposed route for single-column blocks") {
  const Design d = prime_power_design(2, 2, 1);
  CHECK(d.params == DesignParams{3, 4, 2, 2});
  CHECK(is_verified(d));

  const Design dp = prime_power_design(3, 1, 2);
  CHECK(dp.params == DesignParams{3, 3, 9, 3});
  CHECK(is_verified(dp));

  const Design sq = prime_power_design(5, 1, 1);
  CHECK(sq.params == DesignParams{2, 5, 5, 5});
  CHECK(is_verified(sq));

  CHECK_THROWS_AS(prime_power_design(2, 1, 1), UnsupportedShape);
}

TEST_CASE("full property sweep: q^{M+N} <= 4096") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int m_vars = 1; m_vars <= 12; ++m_vars) {
      for (int n_vars = 1; n_vars <= 12; ++n_vars) {
        if (m_vars == 1 && n_vars == 1 && q == 2) continue;
        long long cells = 1;
        bool fits = true;
        for (int i = 0; i < m_vars + n_vars; ++i) {
          cells *= q;
          if (cells > 4096) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        const Design d = prime_power_design(q, m_vars, n_vars);
        CHECK(is_verified(d));

        // replication one: q^{M+N} cells, all tuples distinct
        std::map<std::vector<Symbol>, int> seen;
        for (int i = 0; i < d.params.m; ++i) {
          for (int j = 0; j < d.params.n; ++j) {
            auto t = d.cell(i, j);
            ++seen[std::vector<Symbol>(t.begin(), t.end())];
          }
        }
        CHECK(static_cast<long long>(seen.size()) == cells);

        // per-coordinate frequency rectangle counts
        long long per_row = 1, per_col = 1;
        for (int i = 1; i < n_vars; ++i) per_row *= q;
        for (int i = 1; i < m_vars; ++i) per_col *= q;
        std::vector<long long> rc(q, 0);
        for (int j = 0; j < d.params.n; ++j) ++rc[d.at(0, j, 0)];
        for (int e = 0; e < q; ++e) CHECK(rc[e] == per_row);
        std::vector<long long> cc(q, 0);
        for (int i = 0; i < d.params.m; ++i) ++cc[d.at(i, 0, 0)];
        for (int e = 0; e < q; ++e) CHECK(cc[e] == per_col);
      }
    }
  }
}

}  // TEST_SUITE
