#include "lpa/structure.hpp"

#include <algorithm>

namespace lpa {

namespace {

std::string describe_exit(const Graph& g) {
  auto mask = on_cycle_mask(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (mask[v] && g.out_edges(v).size() > 1)
      return "vertex '" + g.vertex_name(v) + "' lies on a cycle and emits " + std::to_string(g.out_edges(v).size()) +
             " edges";
  return "graph is not no-exit";
}

std::vector<int> lengths(const std::vector<Path>& paths) {
  std::vector<int> out;
  for (const Path& p : paths) out.push_back(static_cast<int>(p.length()));
  return out;
}

}  // namespace

Decomposition decompose(const Graph& g) {
  if (!is_no_exit(g)) throw NotDecomposable("no structure decomposition: " + describe_exit(g));
  Decomposition d;
  for (VertexId s : sinks(g)) {
    auto paths = paths_ending_at(g, s, false);
    d.sink_summands.push_back({s, paths, lengths(paths)});
  }
  for (Cycle& c : cycles(g)) {
    auto paths = paths_ending_at(g, c.base, true);
    d.cycle_summands.push_back({std::move(c), paths, lengths(paths)});
  }
  return d;
}

StructureMap::StructureMap(GraphRef g)
    : g_(std::move(g)), dec_(decompose(*g_)), vertex_target_(g_->vertex_count()), arc_to_base_(g_->vertex_count()) {
  for (std::size_t k = 0; k < dec_.sink_summands.size(); ++k)
    vertex_target_[dec_.sink_summands[k].sink] = Target{SummandKind::Sink, k};
  for (std::size_t k = 0; k < dec_.cycle_summands.size(); ++k) {
    const auto& edges = dec_.cycle_summands[k].cycle.path.edges;
    for (std::size_t pos = 0; pos < edges.size(); ++pos) {
      VertexId z = g_->source(edges[pos]);
      vertex_target_[z] = Target{SummandKind::Cycle, k};
      arc_to_base_[z] = Path{z, {edges.begin() + static_cast<std::ptrdiff_t>(pos), edges.end()}};
    }
  }
}

std::size_t StructureMap::index_of(const std::vector<Path>& paths, const Path& p) const {
  auto it = std::find(paths.begin(), paths.end(), p);
  if (it == paths.end()) throw std::logic_error("path " + to_string(*g_, p) + " is not an index path");
  return static_cast<std::size_t>(it - paths.begin());
}

void StructureMap::embed_monomial(const Monomial& m, const Scalar& c, std::vector<SummandMatrix>& out) const {
  const Graph& g = *g_;
  VertexId z = m.p.finish(g);
  const auto& target = vertex_target_[z];
  if (!target) {
    // z is regular and off every cycle: z = sum_f f f*.
    for (EdgeId f : g.out_edges(z)) {
      Monomial next = m;
      next.p.edges.push_back(f);
      next.q.edges.push_back(f);
      embed_monomial(next, c, out);
    }
    return;
  }
  if (target->kind == SummandKind::Sink) {
    const auto& summand = dec_.sink_summands[target->summand];
    out[target->summand].entries(index_of(summand.index_paths, m.p), index_of(summand.index_paths, m.q)) +=
        LaurentPoly(c);
    return;
  }
  const auto& summand = dec_.cycle_summands[target->summand];
  const VertexId base = summand.cycle.base;
  const auto n = static_cast<std::int64_t>(summand.n());
  // Rotate into base coordinates (z = a a* for the arc a from z to the base),
  // then split each path as (entry path) (cycle)^k.
  auto split = [&](const Path& path) {
    Path full = concat(g, path, arc_to_base_[z]);
    std::size_t first = 0;
    VertexId at = full.start;
    while (at != base) at = g.range(full.edges[first++]);
    Path entry{full.start, {full.edges.begin(), full.edges.begin() + static_cast<std::ptrdiff_t>(first)}};
    auto power = static_cast<std::int64_t>(full.length() - first) / n;
    return std::pair{entry, power};
  };
  auto [p0, a] = split(m.p);
  auto [q0, b] = split(m.q);
  const std::size_t slot = dec_.sink_summands.size() + target->summand;
  out[slot].entries(index_of(summand.index_paths, p0), index_of(summand.index_paths, q0)) +=
      LaurentPoly::monomial(c, a - b);
}

std::vector<SummandMatrix> StructureMap::embed(const Element& x) const {
  if (!(x.graph() == *g_)) throw std::invalid_argument("element belongs to a different graph");
  std::vector<SummandMatrix> out;
  for (std::size_t k = 0; k < dec_.sink_summands.size(); ++k) {
    auto n = dec_.sink_summands[k].kappa();
    out.push_back({SummandKind::Sink, k, LaurentMatrix(n, n)});
  }
  for (std::size_t k = 0; k < dec_.cycle_summands.size(); ++k) {
    auto n = dec_.cycle_summands[k].mu();
    out.push_back({SummandKind::Cycle, k, LaurentMatrix(n, n)});
  }
  for (const auto& [m, c] : x.terms()) embed_monomial(m, c, out);
  return out;
}

std::vector<SummandMatrix> StructureMap::star(const std::vector<SummandMatrix>& m, Involution inv) {
  std::vector<SummandMatrix> out;
  for (const auto& s : m) out.push_back({s.kind, s.index, conjugate_transpose(s.entries, inv)});
  return out;
}

std::vector<SummandMatrix> StructureMap::multiply(const std::vector<SummandMatrix>& a,
                                                  const std::vector<SummandMatrix>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("summand count mismatch");
  std::vector<SummandMatrix> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back({a[k].kind, a[k].index, a[k].entries * b[k].entries});
  return out;
}

std::vector<SummandMatrix> StructureMap::add(const std::vector<SummandMatrix>& a, const std::vector<SummandMatrix>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("summand count mismatch");
  std::vector<SummandMatrix> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back({a[k].kind, a[k].index, a[k].entries + b[k].entries});
  return out;
}

bool StructureMap::graded_check(const Element& x) const {
  auto parts = degree_split(x);
  if (parts.size() > 1) throw std::invalid_argument("graded_check needs a homogeneous element");
  if (parts.empty()) return true;
  const std::int64_t degree = parts.begin()->first;
  for (const auto& s : embed(x)) {
    const bool sink = s.kind == SummandKind::Sink;
    const auto& shifts = sink ? dec_.sink_summands[s.index].shifts : dec_.cycle_summands[s.index].shifts;
    const std::int64_t n = sink ? 0 : static_cast<std::int64_t>(dec_.cycle_summands[s.index].n());
    for (std::size_t i = 0; i < s.entries.rows(); ++i)
      for (std::size_t j = 0; j < s.entries.cols(); ++j) {
        const LaurentPoly& entry = s.entries(i, j);
        if (entry.is_zero()) continue;
        const std::int64_t expected = degree + shifts[j] - shifts[i];
        for (const auto& [e, c] : entry.terms()) {
          if (sink && e != 0) return false;
          if (e * n != expected) return false;
        }
      }
  }
  return true;
}

std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>, Scalar> StructureMap::coordinates(
    const Element& x) const {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>, Scalar> out;
  auto images = embed(x);
  for (std::size_t k = 0; k < images.size(); ++k) {
    const auto& m = images[k].entries;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [e, c] : m(i, j).terms()) out.emplace(std::tuple{k, i, j, e}, c);
  }
  return out;
}

}  // namespace lpa
