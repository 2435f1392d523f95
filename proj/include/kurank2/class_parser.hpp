#pragma once

#include <string>

#include "kurank2/ku_class.hpp"

namespace kurank2 {

// Grammar (whitespace ignored):
//   class  := "0" | sign? term (sign term)*
//   term   := digits? letter | digits
//   letter := a | b | g | α | β | γ | A | B | G
//   sign   := "+" | "-"
// or a coordinate pair "n,m" / "(n,m)". A bare integer term is not
// a class and is rejected.
KuClass parse_class(const std::string& text);

}  // namespace kurank2
