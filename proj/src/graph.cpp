#include "lpa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace lpa {

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeDecl>& edges)
    : vertex_names_(std::move(vertices)) {
  for (VertexId v = 0; v < vertex_names_.size(); ++v) {
    if (!vertex_index_.emplace(vertex_names_[v], v).second)
      throw std::invalid_argument("duplicate identifier '" + vertex_names_[v] + "'");
  }
  out_.resize(vertex_names_.size());
  in_.resize(vertex_names_.size());
  for (const auto& decl : edges) {
    if (vertex_index_.count(decl.name) || edge_index_.count(decl.name))
      throw std::invalid_argument("duplicate identifier '" + decl.name + "'");
    auto s = find_vertex(decl.source);
    auto r = find_vertex(decl.range);
    if (!s || !r)
      throw std::invalid_argument("edge '" + decl.name + "' has undeclared endpoint '" + (s ? decl.range : decl.source) +
                                  "'");
    auto id = static_cast<EdgeId>(edges_.size());
    edge_index_.emplace(decl.name, id);
    edges_.push_back({decl.name, *s, *r});
    out_[*s].push_back(id);
    in_[*r].push_back(id);
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::string Graph::to_text() const {
  std::string out;
  for (const auto& v : vertex_names_) out += v + ";\n";
  for (const auto& e : edges_) out += e.name + ": " + vertex_names_[e.source] + " -> " + vertex_names_[e.range] + ";\n";
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_names_ != b.vertex_names_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t k = 0; k < a.edges_.size(); ++k) {
    const auto& x = a.edges_[k];
    const auto& y = b.edges_[k];
    if (x.name != y.name || x.source != y.source || x.range != y.range) return false;
  }
  return true;
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.start >= g.vertex_count()) return false;
  VertexId at = p.start;
  for (EdgeId e : p.edges) {
    if (e >= g.edge_count() || g.source(e) != at) return false;
    at = g.range(e);
  }
  return true;
}

Path concat(const Graph& g, const Path& a, const Path& b) {
  if (a.finish(g) != b.start) throw std::invalid_argument("paths do not compose");
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

std::string to_string(const Graph& g, const Path& p) {
  if (p.trivial()) return g.vertex_name(p.start);
  std::string out;
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    if (k) out += '.';
    out += g.edge_name(p.edges[k]);
  }
  return out;
}

bool canonical_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.edges != b.edges) return a.edges < b.edges;
  return a.start < b.start;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Statement {
  std::string text;
  std::size_t line;
};

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  std::string current;
  std::size_t line = 1;
  std::size_t start_line = 0;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      in_comment = false;
      current += ' ';
      continue;
    }
    if (in_comment) continue;
    if (c == '#') {
      in_comment = true;
      continue;
    }
    if (c == ';') {
      if (trim(current).empty()) throw GraphParseError(line, "empty statement");
      out.push_back({std::string(trim(current)), start_line});
      current.clear();
      start_line = 0;
      continue;
    }
    if (start_line == 0 && !std::isspace(static_cast<unsigned char>(c))) start_line = line;
    current += c;
  }
  if (!trim(current).empty()) throw GraphParseError(start_line, "missing ';' after '" + std::string(trim(current)) + "'");
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<EdgeDecl> edges;
  std::vector<std::size_t> edge_lines;
  std::set<std::string, std::less<>> names;
  auto claim = [&](const std::string& name, std::size_t line) {
    if (!is_identifier(name)) throw GraphParseError(line, "invalid identifier '" + name + "'");
    if (!names.insert(name).second) throw GraphParseError(line, "duplicate identifier '" + name + "'");
  };

  for (const auto& [stmt, line] : split_statements(text)) {
    std::string_view sv = stmt;
    auto colon = sv.find(':');
    if (colon == std::string_view::npos) {
      std::string name(trim(sv));
      claim(name, line);
      vertices.push_back(std::move(name));
      continue;
    }
    std::string name(trim(sv.substr(0, colon)));
    std::string_view rest = sv.substr(colon + 1);
    auto arrow = rest.find("->");
    if (arrow == std::string_view::npos) throw GraphParseError(line, "expected 'name: src -> dst'");
    std::string src(trim(rest.substr(0, arrow)));
    std::string dst(trim(rest.substr(arrow + 2)));
    if (!is_identifier(src) || !is_identifier(dst)) throw GraphParseError(line, "malformed edge endpoints in '" + stmt + "'");
    claim(name, line);
    edges.push_back({std::move(name), std::move(src), std::move(dst)});
    edge_lines.push_back(line);
  }

  std::set<std::string, std::less<>> declared(vertices.begin(), vertices.end());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    for (const auto* endpoint : {&edges[k].source, &edges[k].range}) {
      if (!declared.count(*endpoint))
        throw GraphParseError(edge_lines[k], "edge '" + edges[k].name + "' refers to undeclared vertex '" + *endpoint + "'");
    }
  }
  return Graph(std::move(vertices), edges);
}

// ---------------------------------------------------------------------------
// Predicates

std::vector<VertexId> regular_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!g.out_edges(v).empty()) out.push_back(v);
  return out;
}

std::vector<VertexId> sinks(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.out_edges(v).empty()) out.push_back(v);
  return out;
}

std::vector<VertexId> sources(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.in_edges(v).empty()) out.push_back(v);
  return out;
}

std::vector<Cycle> cycles(const Graph& g) {
  std::vector<Cycle> found;
  std::vector<bool> visiting(g.vertex_count(), false);
  Path current;
  // Enumerate simple closed paths through `base` using only vertices whose
  // names sort after the base name, so each cycle is found exactly once.
  std::function<void(VertexId, VertexId)> extend = [&](VertexId base, VertexId at) {
    for (EdgeId e : g.out_edges(at)) {
      VertexId next = g.range(e);
      if (next == base) {
        current.edges.push_back(e);
        found.push_back({current, base});
        current.edges.pop_back();
        continue;
      }
      if (visiting[next] || g.vertex_name(next) < g.vertex_name(base)) continue;
      visiting[next] = true;
      current.edges.push_back(e);
      extend(base, next);
      current.edges.pop_back();
      visiting[next] = false;
    }
  };
  for (VertexId base = 0; base < g.vertex_count(); ++base) {
    current = Path{base, {}};
    visiting[base] = true;
    extend(base, base);
    visiting[base] = false;
  }
  std::sort(found.begin(), found.end(), [](const Cycle& a, const Cycle& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.path.edges < b.path.edges;
  });
  return found;
}

std::vector<bool> on_cycle_mask(const Graph& g) {
  // Tarjan's strongly connected components.
  const std::size_t n = g.vertex_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false), mask(n, false);
  std::vector<VertexId> stack;
  int counter = 0;
  std::function<void(VertexId)> visit = [&](VertexId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.range(e);
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] != index[v]) return;
    std::vector<VertexId> scc;
    VertexId w;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack[w] = false;
      scc.push_back(w);
    } while (w != v);
    bool cyclic = scc.size() > 1;
    if (!cyclic)
      for (EdgeId e : g.out_edges(v)) cyclic = cyclic || g.range(e) == v;
    if (cyclic)
      for (VertexId u : scc) mask[u] = true;
  };
  for (VertexId v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return mask;
}

bool is_no_exit(const Graph& g) {
  auto mask = on_cycle_mask(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (mask[v] && g.out_edges(v).size() != 1) return false;
  return true;
}

bool is_acyclic(const Graph& g) {
  auto mask = on_cycle_mask(g);
  return std::none_of(mask.begin(), mask.end(), [](bool b) { return b; });
}

std::vector<Graph> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<VertexId(VertexId)> root = [&](VertexId v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId a = root(g.source(e)), b = root(g.range(e));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> slot(n, -1);
  std::vector<std::vector<std::string>> vertex_sets;
  for (VertexId v = 0; v < n; ++v) {
    VertexId r = root(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(vertex_sets.size());
      vertex_sets.emplace_back();
    }
    vertex_sets[slot[r]].push_back(g.vertex_name(v));
  }
  std::vector<std::vector<EdgeDecl>> edge_sets(vertex_sets.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    edge_sets[slot[root(g.source(e))]].push_back(
        {g.edge_name(e), g.vertex_name(g.source(e)), g.vertex_name(g.range(e))});
  std::vector<Graph> out;
  for (std::size_t k = 0; k < vertex_sets.size(); ++k) out.emplace_back(std::move(vertex_sets[k]), edge_sets[k]);
  return out;
}

bool is_isolated_loop(const Graph& g) {
  if (components(g).size() != 1) throw std::invalid_argument("is_isolated_loop requires a connected graph");
  return g.vertex_count() == 1 && g.edge_count() == 1;
}

std::vector<Path> paths_ending_at(const Graph& g, VertexId v, bool entry_only, std::size_t cap) {
  if (v >= g.vertex_count()) throw std::out_of_range("unknown vertex");
  if (entry_only && !on_cycle_mask(g)[v])
    throw std::invalid_argument("entry paths requested for vertex '" + g.vertex_name(v) + "' which lies on no cycle");
  std::vector<Path> out;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<EdgeId> reversed;
  std::function<void(VertexId)> grow = [&](VertexId start) {
    out.push_back(Path{start, {reversed.rbegin(), reversed.rend()}});
    if (out.size() > cap)
      throw InfinitePathCount("more than " + std::to_string(cap) + " paths end at '" + g.vertex_name(v) + "'");
    for (EdgeId e : g.in_edges(start)) {
      VertexId u = g.source(e);
      if (entry_only && u == v) continue;
      if (on_path[u])
        throw InfinitePathCount("a cycle through '" + g.vertex_name(u) + "' reaches '" + g.vertex_name(v) +
                                "': infinitely many paths");
      on_path[u] = true;
      reversed.push_back(e);
      grow(u);
      reversed.pop_back();
      on_path[u] = false;
    }
  };
  on_path[v] = true;
  grow(v);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Graph attach_hooks(const Graph& g) {
  auto srcs = sources(g);
  if (srcs.empty()) return g;
  std::set<std::string> used;
  std::vector<std::string> vertices;
  std::vector<EdgeDecl> edges;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back(g.vertex_name(v));
    used.insert(g.vertex_name(v));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    edges.push_back({g.edge_name(e), g.vertex_name(g.source(e)), g.vertex_name(g.range(e))});
    used.insert(g.edge_name(e));
  }
  auto fresh = [&](std::string name) {
    while (used.count(name)) name += '_';
    used.insert(name);
    return name;
  };
  for (VertexId u : srcs) {
    const std::string& target = g.vertex_name(u);
    std::string w = fresh("hook_" + target);
    vertices.push_back(w);
    edges.push_back({fresh(w + "_loop"), w, w});
    edges.push_back({fresh(w + "_in"), w, target});
  }
  return Graph(std::move(vertices), edges);
}

}  // namespace lpa
