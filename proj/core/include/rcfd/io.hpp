#pragma once

#include <optional>
#include <string>

#include "rcfd/design.hpp"
#include "rcfd/plan.hpp"

namespace rcfd {

enum class Format { Text, Json, Csv };

// TEXT: header line "k m n q" followed by m lines of n cells. A cell is k
//       base-q digits when q <= 10, otherwise a "(a,b,...)" tuple.
// JSON: {"k":..,"m":..,"n":..,"q":..,"cells":[[[..]..]..]} row-major.
// CSV:  header "row,col,f0,...,f{k-1}", one line per cell in row-major
//       order. The header carries no q, so reading infers q as 1 + the
//       largest symbol; exact for any design in which every symbol occurs
//       (all verified designs qualify).
std::string write_design(const Design& d, Format format);

// Parses any of the three formats, sniffing which one by the first
// non-whitespace character. Throws ParseError (with line and column) or
// DimensionMismatch.
Design read_design(const std::string& text);
Design read_design_file(const std::string& path);

void write_file(const std::string& path, const std::string& bytes);

// Plans serialize as a nested JSON tree {"op","args","children"}.
std::string plan_to_json(const PlanNode& plan);

// Seed cache: a directory of TEXT design files named by parameters.
// Resolution order for the directory: the RCFD_SEED_CACHE environment
// variable, then $HOME/.cache/rcfd/seeds, else disabled ("").
std::string default_seed_cache_dir();
std::string seed_cache_filename(const DesignParams& p);

// Loads and re-verifies a cached seed; a missing, unreadable or
// non-verifying file is treated as absent.
std::optional<Design> load_cached_seed(const DesignParams& p,
                                       const std::string& dir);

// Stores via write-to-temporary plus atomic rename. Returns the final path.
std::string store_seed(const Design& d, const std::string& dir);

}  // namespace rcfd
