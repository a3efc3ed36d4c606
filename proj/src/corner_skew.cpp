#include "lpa/corner_skew.hpp"

#include "lpa/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

CornerSkewData corner_skew_data(GraphRef g, FieldSpec f) {
  const Graph& gr = *g;
  auto srcs = sources(gr);
  if (!srcs.empty()) throw std::invalid_argument("vertex '" + gr.vertex_name(srcs.front()) + "' is a source");
  CornerSkewData d{Element::zero(g, f), Element::zero(g, f), Element::zero(g, f), {}};
  for (VertexId v = 0; v < gr.vertex_count(); ++v) {
    EdgeId e = gr.in_edges(v).front();
    d.chosen.push_back(e);
    d.t_plus += Element::edge(g, f, e);
  }
  d.t_minus = d.t_plus.star();
  d.p = d.t_plus * d.t_minus;
  if (!(d.t_minus * d.t_plus == Element::identity(g, f))) throw std::logic_error("t- t+ != 1");
  if (!is_projection(d.p)) throw std::logic_error("t+ t- is not a projection");
  return d;
}

Element sum_of_hermitian_squares(const std::vector<Element>& xs) {
  if (xs.empty()) throw std::invalid_argument("empty tuple");
  Element total = Element::zero(xs.front().graph_ref(), xs.front().field());
  for (const Element& x : xs) total += x * x.star();
  return total;
}

ProperSampleResult proper_sample_test(GraphRef g, FieldSpec f, std::size_t n_samples, std::uint64_t seed) {
  ProperSampleResult result;
  if (g->vertex_count() == 0) return result;
  // Short elements make cancellation between the x_i x_i* likely enough to
  // be observed when the involution permits it.
  ElementSampler sampler(g, f, seed, SamplerOptions{2, 2, std::nullopt});
  for (std::size_t s = 0; s < n_samples; ++s) {
    ++result.samples;
    std::size_t n = 1 + std::uniform_int_distribution<std::size_t>(0, 3)(sampler.rng());
    std::vector<Element> xs;
    for (std::size_t k = 0; k < n; ++k) xs.push_back(sampler.element());
    if (std::all_of(xs.begin(), xs.end(), [](const Element& x) { return x.is_zero(); })) continue;
    if (sum_of_hermitian_squares(xs).is_zero()) {
      result.witness = std::move(xs);
      return result;
    }
  }
  return result;
}

}  // namespace lpa
