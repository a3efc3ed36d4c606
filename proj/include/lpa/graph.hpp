#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpa {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised by parse_graph; `line()` is 1-based.
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a path enumeration would not terminate.
class InfinitePathCount : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EdgeDecl {
  std::string name;
  std::string source;
  std::string range;
};

/// Finite directed multigraph.  Vertices and edges are stored in declaration
/// order; that order is the canonical order used everywhere else.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on duplicate names or dangling endpoints.
  Graph(std::vector<std::string> vertices, const std::vector<EdgeDecl>& edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const std::string& edge_name(EdgeId e) const { return edges_.at(e).name; }
  VertexId source(EdgeId e) const { return edges_.at(e).source; }
  VertexId range(EdgeId e) const { return edges_.at(e).range; }

  /// s^-1(v) and r^-1(v), ascending edge order.
  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// Serialization in the graph file format; parse_graph(to_text()) == *this.
  std::string to_text() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Edge {
    std::string name;
    VertexId source;
    VertexId range;
  };
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// A path of length |edges|; the trivial path at `start` when edges is empty.
struct Path {
  VertexId start = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool trivial() const { return edges.empty(); }
  VertexId finish(const Graph& g) const { return edges.empty() ? start : g.range(edges.back()); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Checks r(e_i) = s(e_{i+1}) and that the first edge leaves `start`.
bool is_valid_path(const Graph& g, const Path& p);
/// Concatenation; throws std::invalid_argument if r(a) != s(b).
Path concat(const Graph& g, const Path& a, const Path& b);
/// Edge names joined by '.', or the vertex name for a trivial path.
std::string to_string(const Graph& g, const Path& p);
/// Canonical index order: by length, then edge sequence.
bool canonical_less(const Path& a, const Path& b);

/// Closed path with pairwise distinct edge sources, rooted at `base`, the
/// lexicographically smallest vertex name on it.
struct Cycle {
  Path path;
  VertexId base = 0;

  std::size_t length() const { return path.length(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

Graph parse_graph(std::string_view text);

std::vector<VertexId> regular_vertices(const Graph& g);
std::vector<VertexId> sinks(const Graph& g);
std::vector<VertexId> sources(const Graph& g);

/// Every cycle once, rotated to start at its base; ordered by (base, edges).
std::vector<Cycle> cycles(const Graph& g);
/// Vertices lying on some cycle, computed from strongly connected components.
std::vector<bool> on_cycle_mask(const Graph& g);

bool is_no_exit(const Graph& g);
bool is_acyclic(const Graph& g);

/// Connected components of the underlying undirected graph, ordered by their
/// first declared vertex; each keeps declaration order and names.
std::vector<Graph> components(const Graph& g);

/// One vertex carrying exactly one loop.  Throws if g is not connected.
bool is_isolated_loop(const Graph& g);

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// All paths with range v (entry_only: only those meeting v at their end),
/// in canonical index order.  Throws InfinitePathCount when a cycle feeds
/// the enumeration or more than `cap` paths exist.
std::vector<Path> paths_ending_at(const Graph& g, VertexId v, bool entry_only, std::size_t cap = kDefaultPathCap);

/// Gives every source u a fresh vertex w with a loop at w and an edge w -> u.
Graph attach_hooks(const Graph& g);

}  // namespace lpa
