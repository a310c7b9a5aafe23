#pragma once

#include <string>
#include <string_view>

#include "ringdef/formula.hpp"

namespace ringdef {

// UTF-8 s-expression grammar:
//   formula := "false" | "(=" term term ")" | "(neq" term term ")"
//            | "(and" formula+ ")" | "(or" formula+ ")"
//            | "(exists (" var+ ")" formula ")"
//   term    := "(const" enc ")" | "(var" name ")"
//            | "(+" term+ ")" | "(*" term+ ")" | "(-" term ")"
// Constant encodings are ring-specific; errors carry byte offsets.
Formula parse_formula(std::string_view text, const RingSpec& ring);
std::string print_formula(const Formula& f, const RingSpec& ring);

Term parse_term(std::string_view text, const RingSpec& ring);
std::string print_term(const Term& t, const RingSpec& ring);

// Mathematical rendering for documentation output.
std::string pretty_formula(const Formula& f, const RingSpec& ring);

}  // namespace ringdef
