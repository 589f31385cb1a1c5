#include <random>

#include "doctest.h"
#include "rcfd/design.hpp"
#include "rcfd/fixtures.hpp"
#include "rcfd/io.hpp"
#include "rcfd/solver.hpp"

using namespace rcfd;

TEST_SUITE("design") {

TEST_CASE("fixture verification status matches the documented claims") {
  CHECK(is_verified(fixture("TABLE1")));
  CHECK(fixture("TABLE1").params == DesignParams{4, 4, 4, 2});
  CHECK(is_verified(fixture("B18")));
  CHECK(fixture("B18").params == DesignParams{2, 6, 18, 6});
  CHECK(is_verified(fixture("EX_D")));
  CHECK(is_verified(fixture("EX_DP")));
  CHECK(is_verified(fixture("EX_PROD")));
  CHECK(is_verified(fixture("L23")));
}

TEST_CASE("overlapped orthogonal squares are not a factorial design") {
  const Design& mofs = fixture("THREE_MOFS");
  const auto report = verify_design(mofs);
  CHECK_FALSE(report.pass);
  bool vector_check_failed = false;
  for (const auto& v : report.violations) {
    if (v.check == "vector-count") vector_check_failed = true;
  }
  CHECK(vector_check_failed);

  // each component is a valid frequency rectangle and each pair orthogonal
  for (int a = 0; a < 3; ++a) {
    CHECK(is_verified(component(mofs, a)));
    for (int b = a + 1; b < 3; ++b) {
      CHECK(verify_orthogonal(component(mofs, a), component(mofs, b)));
    }
  }
}

TEST_CASE("trivial one-cell design verifies") {
  const Design d({1, 1, 1, 1}, {0});
  CHECK(verify_design(d).pass);
}

TEST_CASE("orthogonality basics") {
  const Design f0 = component(fixture("TABLE1"), 0);
  const Design f1 = component(fixture("TABLE1"), 1);
  CHECK(verify_orthogonal(f0, f1));
  CHECK_FALSE(verify_orthogonal(f0, f0));  // only (a,a) pairs occur

  const Design other = Design::filled({1, 4, 4, 4});
  CHECK_THROWS_AS(verify_orthogonal(f0, other), ShapeMismatch);
  CHECK_THROWS_AS(verify_orthogonal(fixture("TABLE1"), fixture("TABLE1")),
                  ShapeMismatch);
}

TEST_CASE("truncate") {
  const Design& t1 = fixture("TABLE1");
  CHECK(truncate(t1, 4) == t1);
  CHECK_THROWS_AS(truncate(t1, 0), RangeError);
  CHECK_THROWS_AS(truncate(t1, 5), RangeError);

  const Design i324 = generate(3, 2, 4, 2).design;
  const Design cut = truncate(i324, 2);
  CHECK(cut.params == DesignParams{2, 2, 4, 2});
  CHECK(is_verified(cut));

  // projections compose
  CHECK(truncate(truncate(t1, 3), 2) == truncate(t1, 2));
}

TEST_CASE("transpose") {
  const Design& d = fixture("EX_D");  // 4x2
  const Design dt = read_design(
      "3 2 4 2\n"
      "000 011 101 110\n"
      "111 100 010 001\n");
  CHECK(transpose(dt) == d);
  CHECK(transpose(transpose(d)) == d);
  CHECK(transpose(d).params == DesignParams{3, 2, 4, 2});
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int c = 0; c < 3; ++c) CHECK(transpose(d).at(j, i, c) == d.at(i, j, c));
    }
  }
}

TEST_CASE("components join back to the original") {
  const Design& t1 = fixture("TABLE1");
  std::vector<Design> parts;
  for (int c = 0; c < t1.params.k; ++c) parts.push_back(component(t1, c));
  CHECK(join_components(parts) == t1);
  CHECK(is_verified(parts[0]));

  const Design two = join_components(std::span<const Design>(parts.data(), 2));
  CHECK(two.params == DesignParams{2, 4, 4, 2});
  CHECK(is_verified(two));

  CHECK(join_components(std::span<const Design>(parts.data(), 1)) == parts[0]);
  CHECK_THROWS_AS(join_components(std::span<const Design>()), ShapeMismatch);
  CHECK_THROWS_AS(component(t1, 4), RangeError);
}

TEST_CASE("verified designs stay verified under transpose and truncate, and "
          "components stay pairwise orthogonal") {
  std::mt19937 rng(20240811);
  std::vector<GenerateResult> pool;
  // a deterministic mix of generated designs across branches
  const int shapes[][4] = {{4, 4, 4, 2},  {3, 12, 18, 6}, {2, 6, 6, 2},
                           {2, 10, 30, 10}, {5, 8, 8, 2},  {3, 9, 3, 3},
                           {2, 6, 18, 6}, {1, 12, 8, 4},  {3, 8, 8, 4},
                           {2, 15, 15, 15}};
  int produced = 0;
  for (const auto& s : shapes) {
    pool.push_back(generate(s[0], s[1], s[2], s[3]));
    ++produced;
  }
  // pad with random admissible points to pass 100 designs overall
  while (produced < 100) {
    const int q = 2 + static_cast<int>(rng() % 5);
    const int m = q * (1 + static_cast<int>(rng() % 4));
    const int n = q * (1 + static_cast<int>(rng() % 4));
    const int k = 1 + static_cast<int>(rng() % 4);
    if (!exists(k, m, n, q).exists) continue;
    pool.push_back(generate(k, m, n, q));
    ++produced;
  }

  for (const auto& r : pool) {
    const Design& d = r.design;
    CHECK(is_verified(transpose(d)));
    CHECK(is_verified(truncate(d, 1 + d.params.k / 2)));
    for (int a = 0; a < d.params.k; ++a) {
      for (int b = a + 1; b < d.params.k; ++b) {
        CHECK(verify_orthogonal(component(d, a), component(d, b)));
      }
    }
  }
}

TEST_CASE("the verifier notices a single perturbed cell") {
  std::mt19937 rng(77);
  const int shapes[][4] = {{4, 4, 4, 2}, {2, 6, 12, 6}, {3, 4, 6, 2},
                           {1, 6, 6, 3}, {2, 9, 9, 3}};
  for (const auto& s : shapes) {
    Design d = generate(s[0], s[1], s[2], s[3]).design;
    const int i = static_cast<int>(rng() % d.params.m);
    const int j = static_cast<int>(rng() % d.params.n);
    const int c = static_cast<int>(rng() % d.params.k);
    const Symbol old = d.at(i, j, c);
    d.set(i, j, c, static_cast<Symbol>((old + 1) % d.params.q));
    CHECK_FALSE(verify_design(d).pass);
  }
}

TEST_CASE("malformed cell data is rejected at construction") {
  CHECK_THROWS_AS(Design({1, 2, 2, 2}, {0, 1, 0}), DimensionMismatch);
  CHECK_THROWS_AS(Design({1, 2, 2, 2}, {0, 1, 0, 2}), DimensionMismatch);
  CHECK_THROWS_AS(Design({0, 2, 2, 2}, {}), RangeError);
}

}  // TEST_SUITE
