#pragma once

#include <string>
#include <string_view>

#include "demyanov/converter.hpp"

namespace demyanov {

inline constexpr std::string_view kFamilyFormatVersion = "1";

/// Reads a family document:
///
///   {"version":"1","polytopes":[[["1","0"],["1","1"],["-1","0"]], ...]}
///
/// Coordinates are strings holding an integer or "p/q"; JSON numbers are
/// rejected. Each vertex list is hulled, and duplicates collapse.
/// Throws ParseError (with line/column for syntax errors) or EmptyInput.
Collection parse_family(std::string_view text);

/// Canonical document text, one polytope per line. Byte-identical for equal
/// collections and accepted by parse_family.
std::string serialize_family(const Collection& omega);

}  // namespace demyanov
