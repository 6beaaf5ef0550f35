#pragma once

#include <string>
#include <string_view>

#include "houghton/element.hpp"

namespace houghton {

/// Canonical one-line document:
///   {"n":3,"t":[1,-1,0],"exceptions":[[[2,0],[1,0]]]}
/// with exceptions sorted by source point. Ends with a newline.
std::string serialize(const HoughtonElement &g);

/// Inverse of serialize. Every invariant is checked; tables that are not
/// minimal or not bijective are rejected with InvalidElement.
HoughtonElement deserialize(std::string_view text);

} // namespace houghton
