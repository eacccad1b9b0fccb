#pragma once

#include <string>
#include <string_view>

#include "fdgen/canonicalizer.hpp"

namespace fdgen {

// Bracket notation without whitespace:
//   tree       [4,1,2,1]
//   component  [[1],[3,1,1]]
//   digraph    [[[1]],[[1],[3,1,1]]]

std::string render(const TreeCode& t);
std::string render(const ComponentCode& c);
std::string render(const DigraphCode& g);

/// Parsers throw InvalidInput with a message naming the first violated rule
/// (syntax, tree-code validity, canonical rotation, component order).
TreeCode parse_tree(std::string_view text);
ComponentCode parse_component(std::string_view text);
DigraphCode parse_digraph(std::string_view text);

/// One table per line: n whitespace-separated integers in 0..n-1.
FunctionTable parse_table(std::string_view line);

}  // namespace fdgen
