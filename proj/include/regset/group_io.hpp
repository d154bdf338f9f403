#pragma once

#include <string>
#include <vector>

#include "regset/group.hpp"

namespace regset {

// Text format, one group per file:
//   table <n>   followed by n lines of n space-separated element indices, or
//   perm <d>    followed by one generator per line in cycle notation,
//               e.g. (0 1 2)(3 4)
// Lines starting with '#' and blank lines are ignored. Parse errors carry
// 1-based line numbers. Ingested tables are structurally validated.
GroupTable parse_group_text(const std::string& text);
GroupTable parse_group_file(const std::string& path);

// Serializes in the `table <n>` form, re-ingestable by the parser.
std::string format_group_table(const GroupTable& g);

// Cycle notation for a single permutation; cycles are applied left to right.
Permutation parse_permutation_cycles(const std::string& s, int degree);

}  // namespace regset
