#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "rcfd/fixtures.hpp"
#include "rcfd/io.hpp"
#include "rcfd/seeds.hpp"
#include "rcfd/solver.hpp"

using namespace rcfd;

TEST_SUITE("solver") {

TEST_CASE("existence verdicts") {
  CHECK(exists(2, 2, 2, 2).reason == Reason::Exception_2_2_2_n);
  CHECK(exists(2, 2, 6, 2).reason == Reason::Exception_2_2_2_n);
  CHECK(exists(2, 6, 2, 2).reason == Reason::Exception_2_2_2_n);
  CHECK(exists(2, 6, 6, 6).reason == Reason::Exception_2_6_6_6);
  CHECK(exists(4, 4, 4, 2).exists);
  CHECK(exists(3, 6, 6, 6).reason == Reason::NotDivPower);
  CHECK(exists(2, 2, 8, 2).exists);
  CHECK(exists(2, 3, 6, 6).reason == Reason::NotDivRow);
  CHECK(exists(2, 6, 3, 6).reason == Reason::NotDivCol);
  CHECK(exists(1, 2, 6, 2).exists);     // k=1 asks only for divisibility
  CHECK(exists(9, 5, 5, 1).exists);     // q=1 always exists
  CHECK(exists(2, 12, 6, 6).exists);    // exception needs min = q = 6
  CHECK_THROWS_AS(exists(0, 1, 1, 1), RangeError);

  CHECK(exists(2, 6, 6, 6).describe() == "no: exception (k,q,m,n)=(2,6,6,6)");
}

TEST_CASE("existence is symmetric in m and n") {
  for (int k = 1; k <= 5; ++k) {
    for (int q = 1; q <= 8; ++q) {
      for (int m = 1; m <= 20; ++m) {
        for (int n = 1; n <= 20; ++n) {
          CHECK(exists(k, m, n, q).exists == exists(k, n, m, q).exists);
        }
      }
    }
  }
}

TEST_CASE("prime decomposition of the grid sides") {
  const auto d = decompose(12, 18, 6);
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].q_c == 2);
  CHECK(d.components[0].i_c == 2);
  CHECK(d.components[0].alpha_c == 0);
  CHECK(d.components[0].j_c == 1);
  CHECK(d.components[0].beta_c == 0);
  CHECK(d.components[1].q_c == 3);
  CHECK(d.components[1].i_c == 1);
  CHECK(d.components[1].j_c == 2);
  CHECK(d.a1 == 1);
  CHECK(d.a2 == 1);

  const auto e = decompose(8, 8, 4);
  REQUIRE(e.components.size() == 1);
  CHECK(e.components[0].q_c == 4);
  CHECK(e.components[0].s_c == 2);
  CHECK(e.components[0].i_c == 1);
  CHECK(e.components[0].alpha_c == 1);
  CHECK(e.components[0].j_c == 1);
  CHECK(e.components[0].beta_c == 1);

  const auto f = decompose(7, 7, 7);
  REQUIRE(f.components.size() == 1);
  CHECK(f.components[0].i_c == 1);
  CHECK(f.components[0].j_c == 1);
  CHECK(f.a1 == 1);
  CHECK(f.a2 == 1);

  const auto g = decompose(10, 45, 6);
  CHECK(g.a1 == 5);
  CHECK(g.a2 == 5);
}

TEST_CASE("generate covers every dispatch branch") {
  const int shapes[][4] = {
      {3, 12, 18, 6},   // two components, both plain
      {2, 2, 6, 1},     // trivial symbol set
      {1, 6, 9, 3},     // single frequency rectangle
      {2, 6, 36, 6},    // six-level strips
      {2, 10, 10, 2},   // binary patchwork square
      {2, 30, 50, 10},  // mod-4 remainder glueing
      {2, 14, 14, 2},   // binary square via patchwork
      {2, 9, 21, 3},    // odd q blowup
      {2, 12, 20, 4},   // 4 | q blowup
      {5, 8, 8, 2},     // high k
      {3, 8, 8, 4},     // extension case
      {3, 16, 4, 4},    // transposed orientation (m > n)
      {3, 4, 6, 2},     // coprime residue blowup
      {8, 48, 48, 2},   // deepest admissible k in the sweep
  };
  for (const auto& s : shapes) {
    const auto r = generate(s[0], s[1], s[2], s[3]);
    CHECK(r.design.params == DesignParams{s[0], s[1], s[2], s[3]});
    CHECK(is_verified(r.design));  // generate re-verifies; belt and braces
    CHECK(replay(r.plan) == r.design);
  }
}

TEST_CASE("nonexistent requests throw with the verdict attached") {
  CHECK_THROWS_AS(generate(2, 2, 6, 2), NonExistent);
  try {
    generate(2, 6, 6, 6);
    FAIL("expected NonExistent");
  } catch (const NonExistent& e) {
    CHECK(e.verdict.reason == Reason::Exception_2_6_6_6);
  }
}

TEST_CASE("truncation monotonicity") {
  for (const auto& s : {std::array<int, 4>{5, 8, 8, 2}, {3, 12, 18, 6},
                        {4, 36, 36, 6}}) {
    const auto r = generate(s[0], s[1], s[2], s[3]);
    for (int l = 1; l < s[0]; ++l) {
      CHECK(exists(l, s[1], s[2], s[3]).exists);
      CHECK(is_verified(truncate(r.design, l)));
    }
  }
}

TEST_CASE("pairs of orthogonal Latin squares") {
  const auto three = mols_pair(3);
  CHECK(three.design.params == DesignParams{2, 3, 3, 3});
  CHECK(is_verified(three.design));

  const auto twelve = mols_pair(12);
  CHECK(twelve.design.params == DesignParams{2, 12, 12, 12});
  CHECK(is_verified(twelve.design));

  const auto ten = mols_pair(10);
  CHECK(ten.design == builtin_seed("MOLS10"));

  CHECK_THROWS_AS(mols_pair(2), NoSuchPair);
  CHECK_THROWS_AS(mols_pair(6), NoSuchPair);
}

TEST_CASE("kernel honesty for orders without a shipped seed") {
  KernelOptions kernel;
  kernel.cache_dir_override =
      (std::filesystem::temp_directory_path() / "rcfd-empty-cache").string();
  std::filesystem::remove_all(kernel.cache_dir_override);

  CHECK_THROWS_AS(generate(2, 14, 14, 14, kernel), KernelUnavailable);
  CHECK_THROWS_AS(generate(2, 14, 42, 14, kernel), KernelUnavailable);
  CHECK_THROWS_AS(mols_pair(14, kernel), KernelUnavailable);

  // a corrupt cache entry must be ignored, not trusted
  std::filesystem::create_directories(kernel.cache_dir_override);
  const auto bogus = std::filesystem::path(kernel.cache_dir_override) /
                     seed_cache_filename(DesignParams{2, 14, 14, 14});
  write_file(bogus.string(), "2 14 14 14\nnot a design\n");
  CHECK_THROWS_AS(generate(2, 14, 14, 14, kernel), KernelUnavailable);

  // a user seed file of the wrong shape is rejected loudly
  KernelOptions with_file = kernel;
  const auto wrong = std::filesystem::temp_directory_path() / "rcfd-wrong-seed.txt";
  write_file(wrong.string(), write_design(builtin_seed("MOLS10"), Format::Text));
  with_file.seed_file = wrong.string();
  CHECK_THROWS_AS(generate(2, 14, 14, 14, with_file), ShapeMismatch);

  std::filesystem::remove_all(kernel.cache_dir_override);
  std::filesystem::remove(wrong);
}

TEST_CASE("solver and predicate agree over a medium grid") {
  KernelOptions kernel;
  kernel.cache_dir_override =
      (std::filesystem::temp_directory_path() / "rcfd-none").string();
  for (int q = 2; q <= 8; ++q) {
    for (int m = q; m <= 24; m += q) {
      for (int n = m; n <= 24; n += q) {
        for (int k = 1; k <= 6; ++k) {
          const bool should = exists(k, m, n, q).exists;
          bool did = true;
          try {
            generate(k, m, n, q, kernel);
          } catch (const NonExistent&) {
            did = false;
          }
          CHECK(did == should);
        }
      }
    }
  }
}

TEST_CASE("plans replay to the same bytes") {
  const auto r = generate(3, 24, 36, 6);
  const Design again = replay(r.plan);
  CHECK(again == r.design);
  CHECK(write_design(again, Format::Text) == write_design(r.design, Format::Text));

  // a plan serializes to a JSON tree naming only library operations
  const std::string js = plan_to_json(r.plan);
  CHECK(js.find("\"op\"") != std::string::npos);
  CHECK(js.find("children") != std::string::npos);
}

}  // TEST_SUITE
