#pragma once

#include "lpa/element.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpa {

class ExpressionError : public std::invalid_argument {
 public:
  ExpressionError(std::size_t column, const std::string& what)
      : std::invalid_argument("column " + std::to_string(column) + ": " + what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses an element of L_K(E).
///
///   expr    := ['-'] term (('+' | '-') term)*
///   term    := factor (['.'] factor)*          juxtaposition multiplies
///   factor  := primary '*'* ('/' integer)*     postfix '*' is the involution
///   primary := integer | integer 'i' | 'i' | name | '(' expr ')'
///
/// Names resolve to vertices and edges of the graph; `i` is the imaginary
/// unit and shadows a graph symbol called `i`.  A number stands for that
/// multiple of the identity, so `(1/2) u` and `(1+2i)/3 e*` read naturally.
Element parse_element(GraphRef g, FieldSpec f, std::string_view text);

}  // namespace lpa
