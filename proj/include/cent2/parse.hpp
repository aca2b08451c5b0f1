#pragma once

// Literal grammar shared by the library and the CLI.
//
//   int element    -?[0-9]+
//   gauss element  signed sum of terms `a` and `bi`, e.g. 3, 6i, 3+6i, -2-1i.
//                  The imaginary unit always carries a coefficient (`1i`).
//   poly element   signed sum of terms `c`, `cx`, `cx^n` (coefficient
//                  optional, `*` allowed), e.g. x^2+2x+1
//   ring spec      int/<k> | gauss/<gauss element> | poly/<p>/<poly element>
//   matrix         [[e,f],[g,h]] (or any n x n nesting for MatN)
//
// Errors are ParseError with a byte offset into the input.

#include <string_view>

#include "cent2/matrix.hpp"

namespace cent2 {

Element parse_element(std::string_view text, const BaseRing& ring);
Context parse_ring(std::string_view text);
Mat2<Element> parse_matrix2(std::string_view text, const BaseRing& ring);
MatN<Element> parse_matrix(std::string_view text, const BaseRing& ring);

}  // namespace cent2
