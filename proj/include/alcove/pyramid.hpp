#pragma once

// Text layout for type-A Shi vectors: the coefficient over e_i - e_j sits in
// row j - i, so the bottom row holds the simple coefficients. Input rows may
// be given top-down (widening) or bottom-up (narrowing); the row lengths
// disambiguate.

#include <string>

#include "alcove/shi.hpp"

namespace alcove {

// Requires a type-A root system; does not validate alcove-hood.
ShiVector parse_pyramid(const RootSystem& rs, const std::string& text);

std::string format_pyramid(const RootSystem& rs, const ShiVector& v);

}  // namespace alcove
