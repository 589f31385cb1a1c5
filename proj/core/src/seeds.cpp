#include "rcfd/seeds.hpp"

#include <map>

#include "rcfd/fixtures.hpp"
#include "rcfd/io.hpp"

namespace rcfd {
namespace {

// First I_2(6,6;2) in the oracle's deterministic search order
// (exhaustive_exists(2,6,6,2) reproduces it).
const char* kS66 =
    "2 6 6 2\n"
    "00 00 00 11 11 11\n"
    "00 00 11 01 10 11\n"
    "01 01 01 10 10 10\n"
    "10 10 01 10 01 01\n"
    "11 11 10 00 01 00\n"
    "11 11 10 01 00 00\n";

// Pair of orthogonal Latin squares of order 10, found by the deterministic
// transversal-cover search (search_mols_pair(10)).
const char* kMols10 =
    "2 10 10 10\n"
    "80 01 52 33 44 65 26 97 18 79\n"
    "73 82 64 10 59 48 07 25 91 36\n"
    "46 68 75 84 93 02 50 39 27 11\n"
    "67 54 21 06 78 30 45 13 89 92\n"
    "94 76 38 62 17 29 83 41 55 00\n"
    "51 40 16 95 32 77 69 88 03 24\n"
    "35 23 87 49 61 96 12 04 70 58\n"
    "22 15 09 71 86 53 98 60 34 47\n"
    "19 37 90 28 05 81 74 56 42 63\n"
    "08 99 43 57 20 14 31 72 66 85\n";

}  // namespace

const Design& builtin_seed(const std::string& name) {
  static std::map<std::string, Design> parsed;
  auto it = parsed.find(name);
  if (it != parsed.end()) return it->second;
  if (name == "S66") return parsed.emplace(name, read_design(kS66)).first->second;
  if (name == "MOLS10") {
    return parsed.emplace(name, read_design(kMols10)).first->second;
  }
  if (name == "B18") return fixture("B18");
  throw RangeError("unknown builtin seed '" + name + "'");
}

const char* builtin_seed_name_for(const DesignParams& p) {
  for (const char* name : {"S66", "MOLS10", "B18"}) {
    if (builtin_seed(name).params == p) return name;
  }
  return nullptr;
}

const Design* builtin_seed_for(const DesignParams& p) {
  const char* name = builtin_seed_name_for(p);
  return name ? &builtin_seed(name) : nullptr;
}

}  // namespace rcfd
