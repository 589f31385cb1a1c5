#include "rcfd/fixtures.hpp"

#include <map>

#include "rcfd/io.hpp"

namespace rcfd {
namespace {

const char* kTable1 =
    "4 4 4 2\n"
    "1111 0100 0010 1001\n"
    "0001 1010 1100 0111\n"
    "1000 0011 0101 1110\n"
    "0110 1101 1011 0000\n";

const char* kThreeMofs =
    "3 6 6 2\n"
    "000 111 000 101 011 110\n"
    "111 000 000 011 110 101\n"
    "000 000 111 110 101 011\n"
    "101 011 110 010 100 001\n"
    "011 110 101 100 001 010\n"
    "110 101 011 001 010 100\n";

// The published 6x18 table carries two misprinted cells in its first
// column ("43" for "41" and "04" for "05"); with those restored every
// regularity and pair count checks out, and the fixture test re-verifies.
const char* kB18 =
    "2 6 18 6\n"
    "13 24 35 40 51 02 15 24 30 43 51 02 10 24 33 45 51 02\n"
    "34 43 01 52 20 15 34 45 01 52 23 10 34 40 01 52 25 13\n"
    "41 32 10 25 04 53 41 32 13 20 04 55 41 32 15 23 04 50\n"
    "22 11 54 03 45 30 22 11 54 05 40 33 22 11 54 00 43 35\n"
    "50 05 23 31 12 44 53 00 25 31 12 44 55 03 20 31 12 44\n"
    "05 50 42 14 33 21 00 53 42 14 35 21 03 55 42 14 30 21\n";

const char* kL23 =
    "1 6 6 6\n"
    "0 2 4 1 3 5\n"
    "1 3 5 2 4 0\n"
    "2 4 0 3 5 1\n"
    "3 5 1 4 0 2\n"
    "4 0 2 5 1 3\n"
    "5 1 3 0 2 4\n";

const char* kExD =
    "3 4 2 2\n"
    "000 111\n"
    "011 100\n"
    "101 010\n"
    "110 001\n";

const char* kExDp =
    "3 3 9 3\n"
    "000 011 022 101 112 120 202 210 221\n"
    "111 122 100 212 220 201 010 021 002\n"
    "222 200 211 020 001 012 121 102 110\n";

const char* kExProd =
    "3 12 18 6\n"
    "000 011 022 101 112 120 202 210 221 333 344 355 434 445 453 535 543 554\n"
    "111 122 100 212 220 201 010 021 002 444 455 433 545 553 534 343 354 335\n"
    "222 200 211 020 001 012 121 102 110 555 533 544 353 334 345 454 435 443\n"
    "033 044 055 134 145 153 235 243 254 300 311 322 401 412 420 502 510 521\n"
    "144 155 133 245 253 234 043 054 035 411 422 400 512 520 501 310 321 302\n"
    "255 233 244 053 034 045 154 135 143 522 500 511 320 301 312 421 402 410\n"
    "303 314 325 404 415 423 505 513 524 030 041 052 131 142 150 232 240 251\n"
    "414 425 403 515 523 504 313 324 305 141 152 130 242 250 231 040 051 032\n"
    "525 503 514 323 304 315 424 405 413 252 230 241 050 031 042 151 132 140\n"
    "330 341 352 431 442 450 532 540 551 003 014 025 104 115 123 205 213 224\n"
    "441 452 430 542 550 531 340 351 332 114 125 103 215 223 204 013 024 005\n"
    "552 530 541 350 331 342 451 432 440 225 203 214 023 004 015 124 105 113\n";

const std::map<std::string, const char*>& fixture_sources() {
  static const std::map<std::string, const char*> sources = {
      {"TABLE1", kTable1},   {"THREE_MOFS", kThreeMofs}, {"B18", kB18},
      {"L23", kL23},         {"EX_D", kExD},             {"EX_DP", kExDp},
      {"EX_PROD", kExProd},
  };
  return sources;
}

}  // namespace

const Design& fixture(const std::string& name) {
  static std::map<std::string, Design> parsed;
  auto it = parsed.find(name);
  if (it != parsed.end()) return it->second;
  auto src = fixture_sources().find(name);
  if (src == fixture_sources().end()) {
    throw RangeError("unknown fixture '" + name + "'");
  }
  return parsed.emplace(name, read_design(src->second)).first->second;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : fixture_sources()) names.push_back(name);
  return names;
}

}  // namespace rcfd
