#include "lpa/sampling.hpp"

namespace lpa {

std::vector<std::vector<Path>> paths_up_to(const Graph& g, std::size_t max_length) {
  std::vector<std::vector<Path>> by_range(g.vertex_count());
  std::vector<Path> frontier;
  for (VertexId v = 0; v < g.vertex_count(); ++v) frontier.push_back(Path{v, {}});
  for (std::size_t len = 0;; ++len) {
    for (const Path& p : frontier) by_range[p.finish(g)].push_back(p);
    if (len == max_length) break;
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (EdgeId e : g.out_edges(p.finish(g))) {
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return by_range;
}

ElementSampler::ElementSampler(GraphRef g, FieldSpec f, std::uint64_t seed, SamplerOptions opts)
    : g_(std::move(g)), f_(f), opts_(opts), rng_(seed), paths_by_range_(paths_up_to(*g_, opts.max_path_length)) {}

std::size_t ElementSampler::uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

Scalar ElementSampler::coefficient() {
  static const Scalar gaussian[] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i(), Scalar::rational(1, 2),
                                    Scalar::rational(-1, 2)};
  static const Scalar rational[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar::rational(1, 2),
                                    Scalar::rational(-1, 2)};
  const Scalar* pool = f_.base == BaseField::GaussianRationals ? gaussian : rational;
  return pool[uniform(6)];
}

std::optional<Monomial> ElementSampler::monomial() {
  if (g_->vertex_count() == 0) return std::nullopt;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto& pool = paths_by_range_[uniform(g_->vertex_count())];
    Monomial m{pool[uniform(pool.size())], pool[uniform(pool.size())]};
    if (opts_.degree_window) {
      auto [lo, hi] = *opts_.degree_window;
      if (m.degree() < lo || m.degree() > hi) continue;
    }
    return m;
  }
  return std::nullopt;
}

std::optional<Monomial> ElementSampler::monomial_of_degree(int degree) {
  if (g_->vertex_count() == 0) return std::nullopt;
  for (int attempt = 0; attempt < 256; ++attempt) {
    const auto& pool = paths_by_range_[uniform(g_->vertex_count())];
    const Path& p = pool[uniform(pool.size())];
    std::vector<const Path*> partners;
    for (const Path& q : pool)
      if (static_cast<int>(p.length()) - static_cast<int>(q.length()) == degree) partners.push_back(&q);
    if (partners.empty()) continue;
    return Monomial{p, *partners[uniform(partners.size())]};
  }
  return std::nullopt;
}

Element ElementSampler::element() {
  Element::Terms terms;
  std::size_t n = 1 + uniform(opts_.max_terms);
  for (std::size_t k = 0; k < n; ++k)
    if (auto m = monomial()) terms[*m] += coefficient();
  for (auto it = terms.begin(); it != terms.end();) it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  return Element::from_terms(g_, f_, terms);
}

Element ElementSampler::homogeneous(int degree) {
  Element::Terms terms;
  std::size_t n = 1 + uniform(opts_.max_terms);
  for (std::size_t k = 0; k < n; ++k)
    if (auto m = monomial_of_degree(degree)) terms[*m] += coefficient();
  for (auto it = terms.begin(); it != terms.end();) it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  return Element::from_terms(g_, f_, terms);
}

Word ElementSampler::word(std::size_t max_length) {
  const Graph& g = *g_;
  using Kind = Generator::Kind;
  Word w;
  if (g.vertex_count() == 0) return w;
  std::size_t len = 1 + uniform(max_length);
  VertexId at = static_cast<VertexId>(uniform(g.vertex_count()));
  for (std::size_t k = 0; k < len; ++k) {
    // Letters that can follow position `at` in the doubled graph.
    std::vector<Generator> options{{Kind::Vertex, at}};
    for (EdgeId e : g.out_edges(at)) options.push_back({Kind::Edge, e});
    for (EdgeId e : g.in_edges(at)) options.push_back({Kind::Ghost, e});
    Generator x = options[uniform(options.size())];
    if (uniform(10) == 0) {
      std::size_t total = g.vertex_count() + 2 * g.edge_count();
      std::size_t pick = uniform(total);
      if (pick < g.vertex_count())
        x = {Kind::Vertex, static_cast<std::uint32_t>(pick)};
      else if (pick < g.vertex_count() + g.edge_count())
        x = {Kind::Edge, static_cast<std::uint32_t>(pick - g.vertex_count())};
      else
        x = {Kind::Ghost, static_cast<std::uint32_t>(pick - g.vertex_count() - g.edge_count())};
    }
    w.push_back(x);
    switch (x.kind) {
      case Kind::Vertex:
        at = x.id;
        break;
      case Kind::Edge:
        at = g.range(x.id);
        break;
      case Kind::Ghost:
        at = g.source(x.id);
        break;
    }
  }
  return w;
}

}  // namespace lpa
