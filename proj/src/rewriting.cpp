#include "lpa/rewriting.hpp"

#include <optional>
#include <stdexcept>

namespace lpa {

namespace {

using Kind = Generator::Kind;

Generator vtx(VertexId v) { return {Kind::Vertex, v}; }
Generator edg(EdgeId e) { return {Kind::Edge, e}; }
Generator gst(EdgeId e) { return {Kind::Ghost, e}; }

// Result of contracting a two-letter redex: a combination of replacement
// words (empty list means the redex is zero).
struct Contraction {
  std::vector<std::pair<Word, Scalar>> replacements;
  bool ck2 = false;
};

std::optional<Contraction> contract(const Graph& g, Generator a, Generator b, SpecialEdgeRule rule) {
  Contraction zero;
  auto keep = [](Generator x) { return Contraction{{{Word{x}, Scalar(1)}}, false}; };
  switch (a.kind) {
    case Kind::Vertex:
      switch (b.kind) {
        case Kind::Vertex:  // (V)
          return a.id == b.id ? keep(a) : zero;
        case Kind::Edge:  // (E1)
          return g.source(b.id) == a.id ? keep(b) : zero;
        case Kind::Ghost:  // (E2)
          return g.range(b.id) == a.id ? keep(b) : zero;
      }
      break;
    case Kind::Edge:
      switch (b.kind) {
        case Kind::Vertex:
          return g.range(a.id) == b.id ? keep(a) : zero;
        case Kind::Edge:
          if (g.range(a.id) != g.source(b.id)) return zero;
          return std::nullopt;
        case Kind::Ghost: {
          if (g.range(a.id) != g.range(b.id)) return zero;
          VertexId v = g.source(a.id);
          if (a.id != b.id || a.id != special_edge(g, v, rule)) return std::nullopt;
          // (CK2): gamma gamma* -> v - sum_{f != gamma} f f*
          Contraction c;
          c.ck2 = true;
          c.replacements.push_back({Word{vtx(v)}, Scalar(1)});
          for (EdgeId f : g.out_edges(v))
            if (f != a.id) c.replacements.push_back({Word{edg(f), gst(f)}, Scalar(-1)});
          return c;
        }
      }
      break;
    case Kind::Ghost:
      switch (b.kind) {
        case Kind::Vertex:
          return g.source(a.id) == b.id ? keep(a) : zero;
        case Kind::Edge:  // (CK1)
          return a.id == b.id ? keep(vtx(g.range(a.id))) : zero;
        case Kind::Ghost:
          if (g.source(a.id) != g.range(b.id)) return zero;
          return std::nullopt;
      }
      break;
  }
  return std::nullopt;
}

Monomial word_to_monomial(const Graph& g, const Word& w) {
  if (w.size() == 1 && w[0].kind == Kind::Vertex) return vertex_monomial(w[0].id);
  std::vector<EdgeId> forward, ghosts;
  for (const Generator& x : w) {
    if (x.kind == Kind::Vertex) throw std::logic_error("irreducible word still contains a vertex");
    if (x.kind == Kind::Edge) {
      if (!ghosts.empty()) throw std::logic_error("irreducible word has a ghost before an edge");
      forward.push_back(x.id);
    } else {
      ghosts.push_back(x.id);
    }
  }
  Path q{0, {ghosts.rbegin(), ghosts.rend()}};
  Path p{0, forward};
  if (!q.edges.empty()) q.start = g.source(q.edges.front());
  if (!p.edges.empty()) p.start = g.source(p.edges.front());
  if (p.edges.empty()) p.start = q.finish(g);
  if (q.edges.empty()) q.start = p.finish(g);
  return make_monomial(g, std::move(p), std::move(q));
}

}  // namespace

Element reduce_words(GraphRef g, FieldSpec f, const std::map<Word, Scalar>& words, RewriteStrategy strategy,
                     SpecialEdgeRule rule, WordRewriteStats* stats) {
  const Graph& gr = *g;
  std::map<Word, Scalar> pending;
  auto add = [](std::map<Word, Scalar>& t, Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  };
  for (const auto& [w, c] : words) {
    if (w.empty()) throw std::invalid_argument("empty word");
    add(pending, w, c);
  }
  Element::Terms result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    std::optional<std::size_t> site;
    std::optional<Contraction> how;
    const std::size_t n = w.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
      std::size_t i = strategy == RewriteStrategy::Leftmost ? k : n - 2 - k;
      if (auto r = contract(gr, w[i], w[i + 1], rule)) {
        site = i;
        how = std::move(r);
        break;
      }
    }
    if (!site) {
      Monomial m = word_to_monomial(gr, w);
      auto [it, inserted] = result.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) result.erase(it);
      }
      continue;
    }
    if (stats) {
      ++stats->steps;
      if (how->ck2) ++stats->ck2_steps;
    }
    for (const auto& [rep, coef] : how->replacements) {
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*site));
      next.insert(next.end(), rep.begin(), rep.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(*site + 2), w.end());
      add(pending, std::move(next), c * coef);
    }
  }
  return Element::raw(std::move(g), f, std::move(result));
}

Element evaluate_word(GraphRef g, FieldSpec f, const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word");
  Element acc = Element::identity(g, f);
  for (const Generator& x : w) {
    switch (x.kind) {
      case Kind::Vertex:
        acc = acc * Element::vertex(g, f, x.id);
        break;
      case Kind::Edge:
        acc = acc * Element::edge(g, f, x.id);
        break;
      case Kind::Ghost:
        acc = acc * Element::ghost(g, f, x.id);
        break;
    }
  }
  return acc;
}

std::string to_string(const Graph& g, const Word& w) {
  std::string out;
  for (const Generator& x : w) {
    if (!out.empty()) out += '.';
    switch (x.kind) {
      case Kind::Vertex:
        out += g.vertex_name(x.id);
        break;
      case Kind::Edge:
        out += g.edge_name(x.id);
        break;
      case Kind::Ghost:
        out += g.edge_name(x.id) + "*";
        break;
    }
  }
  return out;
}

}  // namespace lpa
