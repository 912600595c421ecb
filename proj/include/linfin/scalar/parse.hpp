#pragma once

#include <string_view>

#include "linfin/scalar/field.hpp"

namespace linfin::scalar {

// Grammar:
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := base ("^" nonneg-integer)?
//   base   := integer | identifier | "(" expr ")" | "-" base
// Identifiers are the field's variables and generator names.
// Throws ParseError (with offset) on malformed text or unknown names and
// MathError on division by zero.
Field::Elem parse_elem(const Field& field, std::string_view text);
Scalar parse_scalar(const FieldPtr& field, std::string_view text);

}  // namespace linfin::scalar
