#pragma once

#include <string>

#include "rcfd/design.hpp"

namespace rcfd {

// Built-in base-case designs. "S66" is an I_2(6,6;2) and "MOLS10" an
// I_2(10,10;10); both were discovered once by the oracle in this repository
// and are re-verified by the test suite. "B18" aliases the embedded
// I_2(6,18;6) fixture.
const Design& builtin_seed(const std::string& name);

// The seed for these exact parameters, or nullptr.
const Design* builtin_seed_for(const DesignParams& p);

// Its registry name, or nullptr.
const char* builtin_seed_name_for(const DesignParams& p);

}  // namespace rcfd
