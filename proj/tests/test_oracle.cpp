#include <filesystem>

#include "doctest.h"
#include "rcfd/io.hpp"
#include "rcfd/oracle.hpp"
#include "rcfd/seeds.hpp"
#include "rcfd/solver.hpp"

using namespace rcfd;

TEST_SUITE("oracle") {

TEST_CASE("small existence searches") {
  Budget b;
  b.max_nodes = 50'000'000;
  b.max_seconds = 30;

  const auto none = exhaustive_exists(2, 2, 6, 2, b);
  CHECK(none.status == SearchStatus::ExhaustedNone);

  const auto found = exhaustive_exists(2, 2, 4, 2, b);
  REQUIRE(found.status == SearchStatus::Found);
  CHECK(is_verified(*found.design));
  CHECK(found.design->params == DesignParams{2, 2, 4, 2});

  const auto latin22 = exhaustive_exists(1, 2, 2, 2, b);
  REQUIRE(latin22.status == SearchStatus::Found);
  CHECK(latin22.design->cells == std::vector<Symbol>{0, 1, 1, 0});
}

TEST_CASE("nonexistence certificates for the two-row binary family") {
  Budget b;
  b.max_nodes = 50'000'000;
  for (int n : {2, 6, 10}) {
    const auto out = exhaustive_exists(2, 2, n, 2, b);
    CHECK(out.status == SearchStatus::ExhaustedNone);
  }
  // and the divisibility-infeasible case exits before searching
  const auto quick = exhaustive_exists(2, 3, 6, 2, b);
  CHECK(quick.status == SearchStatus::ExhaustedNone);
  CHECK(quick.nodes == 0);
}

TEST_CASE("identical inputs give identical node counts") {
  Budget b;
  b.max_nodes = 10'000'000;
  const auto a1 = exhaustive_exists(2, 4, 4, 2, b);
  const auto a2 = exhaustive_exists(2, 4, 4, 2, b);
  CHECK(a1.status == a2.status);
  CHECK(a1.nodes == a2.nodes);
  CHECK(a1.design == a2.design);

  const auto m1 = search_mols_pair(7, b);
  const auto m2 = search_mols_pair(7, b);
  REQUIRE(m1.status == SearchStatus::Found);
  CHECK(m1.nodes == m2.nodes);
  CHECK(m1.design == m2.design);
}

TEST_CASE("budget exhaustion reports timeout, not a verdict") {
  Budget b;
  b.max_nodes = 50;
  const auto out = exhaustive_exists(2, 6, 6, 3, b);
  CHECK(out.status == SearchStatus::Timeout);
}

TEST_CASE("agreement with the existence predicate on the feasible grid") {
  Budget b;
  b.max_nodes = 200'000'000;
  b.max_seconds = 60;
  for (int k = 1; k <= 2; ++k) {
    for (int q = 1; q <= 3; ++q) {
      for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
          const auto verdict = exists(k, m, n, q);
          const auto out = exhaustive_exists(k, m, n, q, b);
          REQUIRE(out.status != SearchStatus::Timeout);
          CHECK((out.status == SearchStatus::Found) == verdict.exists);
        }
      }
    }
  }
}

TEST_CASE("seed discovery reproduces the embedded bases") {
  Budget b;
  b.max_nodes = 100'000'000;
  b.max_seconds = 60;

  const auto s66 = find_seed(DesignParams{2, 6, 6, 2}, b);
  REQUIRE(s66.status == SearchStatus::Found);
  CHECK(*s66.design == builtin_seed("S66"));

  const auto m10 = find_seed(DesignParams{2, 10, 10, 10}, b);
  REQUIRE(m10.status == SearchStatus::Found);
  CHECK(*m10.design == builtin_seed("MOLS10"));

  const auto none = find_seed(DesignParams{2, 2, 2, 2}, b);
  CHECK(none.status == SearchStatus::ExhaustedNone);
}

TEST_CASE("found seeds land in the cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "rcfd-oracle-test";
  std::filesystem::remove_all(dir);
  Budget b;
  b.max_nodes = 10'000'000;
  const auto out = find_seed(DesignParams{2, 2, 4, 2}, b, dir.string());
  REQUIRE(out.status == SearchStatus::Found);
  const auto cached = load_cached_seed(DesignParams{2, 2, 4, 2}, dir.string());
  REQUIRE(cached.has_value());
  CHECK(*cached == *out.design);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
