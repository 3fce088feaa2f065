#pragma once

#include "liehr/repcalc.hpp"

namespace liehr {

// Grammar (tokens separated by '*' for group factors, 'x' for weight lists):
//   group   := factor ('*' factor)*
//   factor  := TYPE rank            e.g. "B3", "E7", "G2"
//            | "SU" n | "SO" n | "Spin" n | "Sp" n | "T" k
//              (parenthesized ranks also accepted: "SO(7)")
//   weights := list ('x' list)*
//   list    := '[' int (',' int)* ']'
// SO(4) expands to two A1 factors and therefore consumes two weight lists.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GroupSpec parse_group(const std::string& text);
std::vector<HighestWeight> parse_weights(const std::string& text);

// Combines the two; validates one weight list per simple factor, with
// coordinate counts matching the factor ranks (domain_error otherwise).
IrrepSpec parse_irrep(const std::string& group_text, const std::string& weights_text);

}  // namespace liehr
