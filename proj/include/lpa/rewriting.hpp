#pragma once

#include "lpa/element.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace lpa {

/// One letter of a word in the free algebra on E^0, E^1 and the ghost edges.
struct Generator {
  enum class Kind : std::uint8_t { Vertex, Edge, Ghost };
  Kind kind;
  std::uint32_t id;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

enum class RewriteStrategy { Leftmost, Rightmost };

struct WordRewriteStats {
  std::size_t steps = 0;
  std::size_t ck2_steps = 0;
};

/// Reduces a linear combination of words with the defining relations read
/// as rewrite rules, always contracting the leftmost (or rightmost) redex
/// of a word.  Irreducible words are exactly the normal-form monomials.
Element reduce_words(GraphRef g, FieldSpec f, const std::map<Word, Scalar>& words, RewriteStrategy strategy,
                     SpecialEdgeRule rule = SpecialEdgeRule::Last, WordRewriteStats* stats = nullptr);

/// Product of the generators computed with Element arithmetic.
Element evaluate_word(GraphRef g, FieldSpec f, const Word& w);

std::string to_string(const Graph& g, const Word& w);

}  // namespace lpa
