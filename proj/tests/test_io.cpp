#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "rcfd/combinators.hpp"
#include "rcfd/fixtures.hpp"
#include "rcfd/io.hpp"
#include "rcfd/solver.hpp"

using namespace rcfd;

TEST_SUITE("io") {

TEST_CASE("text format matches the embedded tables byte for byte") {
  const std::string text = write_design(fixture("TABLE1"), Format::Text);
  CHECK(text.substr(0, text.find('\n')) == "4 4 4 2");
  const size_t first_row = text.find('\n') + 1;
  CHECK(text.substr(first_row, text.find('\n', first_row) - first_row) ==
        "1111 0100 0010 1001");
}

TEST_CASE("tuple cells appear exactly when q exceeds ten") {
  const Design big = generate(2, 12, 12, 12).design;
  const std::string text = write_design(big, Format::Text);
  CHECK(text.find('(') != std::string::npos);
  CHECK(read_design(text) == big);

  const Design small = generate(2, 10, 10, 10).design;
  CHECK(write_design(small, Format::Text).find('(') == std::string::npos);
}

TEST_CASE("csv long form") {
  const Design d = trivial_design(1, 2, 2);
  CHECK(write_design(d, Format::Csv) ==
        "row,col,f0\n0,0,0\n0,1,0\n1,0,0\n1,1,0\n");
}

TEST_CASE("round trips through all three formats") {
  std::mt19937 rng(424242);
  int done = 0;
  while (done < 100) {
    const int q = 1 + static_cast<int>(rng() % 12);
    const int m = q * (1 + static_cast<int>(rng() % 3));
    const int n = q * (1 + static_cast<int>(rng() % 3));
    const int k = 1 + static_cast<int>(rng() % 4);
    if (!exists(k, m, n, q).exists) continue;
    const Design d = generate(k, m, n, q).design;
    for (Format f : {Format::Text, Format::Json, Format::Csv}) {
      const std::string bytes = write_design(d, f);
      const Design back = read_design(bytes);
      CHECK(back == d);
      CHECK(write_design(back, f) == bytes);
    }
    ++done;
  }
}

TEST_CASE("parse errors carry a line and column") {
  try {
    read_design("4 4 4\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }

  try {
    read_design("1 2 2 2\n0 1\n0 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col == 3);
  }

  // symbol out of range
  CHECK_THROWS_AS(read_design("1 2 2 2\n0 1\n0 5\n"), ParseError);
  // wrong tuple arity
  CHECK_THROWS_AS(read_design("2 1 1 2\n(1,0,1)\n"), ParseError);
  // row count mismatch
  CHECK_THROWS_AS(read_design("1 3 2 2\n0 1\n1 0\n"), DimensionMismatch);
  // cell count mismatch
  CHECK_THROWS_AS(read_design("1 2 2 2\n0 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_design(""), ParseError);
  CHECK_THROWS_AS(read_design("{\"k\":1}"), DimensionMismatch);
  CHECK_THROWS_AS(read_design("{broken"), ParseError);
  CHECK_THROWS_AS(read_design("row,col,f0\n0,0,0\n0,0,1\n"), DimensionMismatch);
}

TEST_CASE("seed cache stores and reloads designs") {
  const auto dir = std::filesystem::temp_directory_path() / "rcfd-io-cache";
  std::filesystem::remove_all(dir);

  const Design d = generate(2, 6, 12, 6).design;
  const std::string path = store_seed(d, dir.string());
  CHECK(std::filesystem::exists(path));

  const auto back = load_cached_seed(d.params, dir.string());
  REQUIRE(back.has_value());
  CHECK(*back == d);

  // wrong parameters or a corrupt file behave as absent
  CHECK_FALSE(load_cached_seed(DesignParams{2, 6, 18, 6}, dir.string()).has_value());
  write_file(dir / seed_cache_filename(DesignParams{2, 6, 18, 6}),
             "garbage\n");
  CHECK_FALSE(load_cached_seed(DesignParams{2, 6, 18, 6}, dir.string()).has_value());

  std::filesystem::remove_all(dir);
}

TEST_CASE("cli output is deterministic across invocations") {
  const char* bin = std::getenv("RCFD_CLI_BIN");
  if (bin == nullptr || std::string(bin).empty()) return;  // library-only run

  auto run = [&](const std::string& args) {
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
  };

  for (const std::string args :
       {"generate 3 12 18 6", "generate 2 6 36 6 --format csv",
        "exists 2 6 6 6", "fixtures B18", "oracle 2 2 6 2"}) {
    const std::string a = run(args);
    const std::string b = run(args);
    CHECK(a == b);
    CHECK_FALSE(a.empty());
  }
}

}  // TEST_SUITE
