#pragma once

#include "houghton/element.hpp"

namespace houghton {

// Internal construction path for algorithms that produce bijections by
// construction. Normalizes the table but skips the bijectivity check in
// release builds.
class ElementBuilder {
public:
  static HoughtonElement unchecked(int n, TranslationVector t, std::vector<Exception> table);
};

} // namespace houghton
