#pragma once

#include "lpa/element.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lpa {

/// t+ = sum of one chosen edge entering each vertex, t- = t+*, p = t+ t-.
struct CornerSkewData {
  Element t_plus;
  Element t_minus;
  Element p;
  /// chosen[v] = first edge in declaration order with range v
  std::vector<EdgeId> chosen;

  /// phi(x) = t+ x t-
  Element phi(const Element& x) const { return t_plus * x * t_minus; }
};

/// Requires a graph without sources (std::invalid_argument otherwise).  The
/// returned data has t- t+ = 1, t+ t- = p and p a projection; these are
/// checked before returning and a violation throws std::logic_error.
CornerSkewData corner_skew_data(GraphRef g, FieldSpec f);

struct ProperSampleResult {
  std::optional<std::vector<Element>> witness;  // nonzero tuple with sum x x* = 0
  std::size_t samples = 0;                      // tuples tried until the witness
};

/// Samples tuples (x_1..x_n), n <= 4, and reports the first nonzero one with
/// sum x_i x_i* = 0.
ProperSampleResult proper_sample_test(GraphRef g, FieldSpec f, std::size_t n_samples, std::uint64_t seed);

/// sum x_i x_i*
Element sum_of_hermitian_squares(const std::vector<Element>& xs);

}  // namespace lpa
