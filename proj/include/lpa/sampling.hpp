#pragma once

#include "lpa/element.hpp"
#include "lpa/rewriting.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace lpa {

struct SamplerOptions {
  std::size_t max_terms = 4;
  std::size_t max_path_length = 4;
  /// Bounds on |p| - |q| for sampled monomials.
  std::optional<std::pair<int, int>> degree_window;
};

/// Seeded generator of random monomials, elements and words.  Coefficients
/// come from {+-1, +-i, +-1/2} over Q(i) and {+-1, +-2, +-1/2} over Q.
class ElementSampler {
 public:
  ElementSampler(GraphRef g, FieldSpec f, std::uint64_t seed, SamplerOptions opts = {});

  Scalar coefficient();
  /// Nothing when the graph has no vertices or the window admits no monomial.
  std::optional<Monomial> monomial();
  std::optional<Monomial> monomial_of_degree(int degree);
  Element element();
  Element homogeneous(int degree);
  /// Mostly composable letters, occasionally an arbitrary one.
  Word word(std::size_t max_length = 6);

  std::mt19937_64& rng() { return rng_; }
  const GraphRef& graph() const { return g_; }
  const FieldSpec& field() const { return f_; }

 private:
  std::size_t uniform(std::size_t n);

  GraphRef g_;
  FieldSpec f_;
  SamplerOptions opts_;
  std::mt19937_64 rng_;
  // paths_by_range_[v] = all paths of length <= max_path_length ending at v
  std::vector<std::vector<Path>> paths_by_range_;
};

/// All paths of length at most `max_length`, grouped by range.
std::vector<std::vector<Path>> paths_up_to(const Graph& g, std::size_t max_length);

}  // namespace lpa
