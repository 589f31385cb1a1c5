#pragma once

#include <string>
#include <vector>

#include "rcfd/design.hpp"

namespace rcfd {

// Embedded reference designs used by tests, the solver and the CLI:
//   TABLE1     I_4(4,4;2)
//   THREE_MOFS three mutually orthogonal FR(6,6;2) squares stored as one
//              k=3 grid; pairwise orthogonal but not a factorial design
//   B18        I_2(6,18;6)
//   L23        the Sudoku Latin square L(2,3) as a k=1 design
//   EX_D       I_3(4,2;2)
//   EX_DP      I_3(3,9;3)
//   EX_PROD    I_3(12,18;6), the Kronecker product of EX_D and EX_DP
const Design& fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace rcfd
