#pragma once

#include <string>

#include "ehk/field.h"

namespace ehk {

// Parses expressions over the context's generators built from + - * / ^ and
// parentheses, with integer and half-integer exponents (q^2, q^(-1/2),
// (q - 1)^3). Printing a FieldElement and parsing it back is the identity.
FieldElement parse_field(const std::string& text, const Context* ctx);

} // namespace ehk
