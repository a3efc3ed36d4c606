#include <doctest.h>

#include "lpa/decision.hpp"
#include "lpa/graph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace lpa;

namespace {

std::set<std::string> names(const Graph& g, const std::vector<VertexId>& vs) {
  std::set<std::string> out;
  for (VertexId v : vs) out.insert(g.vertex_name(v));
  return out;
}

std::set<std::set<std::string>> cycle_edge_sets(const Graph& g) {
  std::set<std::set<std::string>> out;
  for (const Cycle& c : cycles(g)) {
    std::set<std::string> es;
    for (EdgeId e : c.path.edges) es.insert(g.edge_name(e));
    out.insert(es);
  }
  return out;
}

// Closed paths with pairwise distinct edge sources, enumerated from every
// edge and identified up to rotation.
std::size_t brute_force_cycle_count(const Graph& g) {
  std::set<std::vector<EdgeId>> seen;
  std::vector<EdgeId> path;
  std::vector<bool> used(g.vertex_count());
  auto extend = [&](auto& self, VertexId start, VertexId at) -> void {
    for (EdgeId e : g.out_edges(at)) {
      path.push_back(e);
      used[at] = true;
      if (g.range(e) == start) {
        auto rot = path;
        std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
        seen.insert(rot);
      } else if (!used[g.range(e)]) {
        self(self, start, g.range(e));
      }
      used[at] = false;
      path.pop_back();
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) extend(extend, v, v);
  return seen.size();
}

// Paths ending at w in an acyclic graph, counted through powers of the
// adjacency matrix: sum_k (A^k)_{u,w} over all u.
std::size_t matrix_power_count(const Graph& g, VertexId w) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n, std::vector<std::size_t>(n)), power(n, std::vector<std::size_t>(n));
  for (EdgeId e = 0; e < g.edge_count(); ++e) ++adj[g.source(e)][g.range(e)];
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) total += power[u][w];
    std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) next[i][j] += power[i][m] * adj[m][j];
    power = std::move(next);
  }
  return total;
}

// Isomorphism classes counted on adjacency-count matrices: every matrix
// with entry sum <= max_edges, keyed by its least relabelling.
std::size_t isomorphism_class_count(std::size_t max_vertices, std::size_t max_edges) {
  std::size_t total = 0;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::set<std::vector<std::size_t>> classes;
    std::vector<std::size_t> m(n * n, 0);
    auto visit = [&](auto& self, std::size_t cell, std::size_t left) -> void {
      if (cell == m.size()) {
        std::vector<std::size_t> perm(n), best;
        for (std::size_t k = 0; k < n; ++k) perm[k] = k;
        do {
          std::vector<std::size_t> relabelled(n * n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) relabelled[perm[i] * n + perm[j]] = m[i * n + j];
          if (best.empty() || relabelled < best) best = relabelled;
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
        return;
      }
      for (std::size_t c = 0; c <= left; ++c) {
        m[cell] = c;
        self(self, cell + 1, left - c);
      }
      m[cell] = 0;
    };
    visit(visit, 0, max_edges);
    total += classes.size();
  }
  return total;
}

Graph shuffled_edges(const Graph& g, std::mt19937_64& rng) {
  std::vector<std::string> vs;
  for (VertexId v = 0; v < g.vertex_count(); ++v) vs.push_back(g.vertex_name(v));
  std::vector<EdgeDecl> es;
  for (EdgeId e = 0; e < g.edge_count(); ++e) es.push_back({g.edge_name(e), g.vertex_name(g.source(e)), g.vertex_name(g.range(e))});
  std::shuffle(es.begin(), es.end(), rng);
  return Graph(vs, es);
}

}  // namespace

TEST_CASE("parse_graph") {
  SUBCASE("single vertex") {
    Graph g = parse_graph("v;\n");
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("isolated loop") {
    Graph g = parse_graph("v;\ne: v -> v;");
    CHECK(g.edge_count() == 1);
    CHECK(g.source(0) == g.range(0));
  }
  SUBCASE("arrow into loop keeps declaration order") {
    Graph g = parse_graph("u; v;\ne: u -> v;\nf: v -> v;");
    CHECK(g.vertex_name(0) == "u");
    CHECK(g.edge_name(1) == "f");
    CHECK(g.out_edges(*g.find_vertex("v")).size() == 1);
  }
  SUBCASE("comments and round trip") {
    Graph g = parse_graph("# header\nu; v; # two vertices\ne: u -> v;\n");
    CHECK(parse_graph(g.to_text()) == g);
  }
  SUBCASE("errors carry line numbers") {
    auto line_of = [](std::string_view text) {
      try {
        parse_graph(text);
      } catch (const GraphParseError& e) {
        return e.line();
      }
      return std::size_t{0};
    };
    CHECK(line_of("v;\nv;") == 2);
    CHECK(line_of("v;\ne: v -> w;") == 2);
    CHECK(line_of("v;\n\ne: v -> v") == 3);
    CHECK(line_of("v;\ne v -> v;") == 2);
    CHECK(line_of("v;\ne: v -> v;\nv: v -> v;") == 3);
  }
}

TEST_CASE("regular vertices, sinks and sources") {
  Graph isolated = parse_graph("v;");
  Graph loop = gallery("loop");
  Graph line = parse_graph("u; v; e: u -> v;");
  Graph toeplitz = gallery("toeplitz");
  CHECK(regular_vertices(isolated).empty());
  CHECK(names(loop, regular_vertices(loop)) == std::set<std::string>{"v"});
  CHECK(names(line, regular_vertices(line)) == std::set<std::string>{"u"});
  CHECK(names(line, sinks(line)) == std::set<std::string>{"v"});
  CHECK(names(line, sources(line)) == std::set<std::string>{"u"});
  CHECK(sinks(loop).empty());
  CHECK(sources(loop).empty());
  CHECK(names(toeplitz, sinks(toeplitz)) == std::set<std::string>{"u"});
  CHECK(sources(toeplitz).empty());
}

TEST_CASE("cycles") {
  CHECK(cycles(gallery("line(4)")).empty());
  auto rose = cycles(gallery("rose(2)"));
  REQUIRE(rose.size() == 2);
  CHECK(rose[0].length() == 1);
  CHECK(rose[1].length() == 1);
  Graph two = gallery("cycle(2)");
  auto c = cycles(two);
  REQUIRE(c.size() == 1);
  CHECK(c[0].length() == 2);
  CHECK(brute_force_cycle_count(two) == 1);
  CHECK(two.vertex_name(c[0].base) == "v1");

  SUBCASE("base is the smallest vertex name") {
    Graph g = parse_graph("z; b; a; e1: z -> b; e2: b -> a; e3: a -> z;");
    auto cs = cycles(g);
    REQUIRE(cs.size() == 1);
    CHECK(g.vertex_name(cs[0].base) == "a");
    CHECK(cs[0].path.start == cs[0].base);
  }
}

TEST_CASE("graph invariants over the small-graph sweep") {
  std::mt19937_64 rng(7);
  auto graphs = enumerate_small_graphs(3, 3);
  CHECK(graphs.size() == isomorphism_class_count(3, 3));
  for (const Graph& g : graphs) {
    CAPTURE(g.to_text());
    auto sk = sinks(g), reg = regular_vertices(g);
    CHECK(sk.size() + reg.size() == g.vertex_count());
    for (VertexId v : sk) CHECK(std::find(reg.begin(), reg.end(), v) == reg.end());

    CHECK(cycles(g).size() == brute_force_cycle_count(g));
    CHECK(cycle_edge_sets(shuffled_edges(g, rng)) == cycle_edge_sets(g));

    bool via_cycles = true;
    for (const Cycle& c : cycles(g))
      for (EdgeId e : c.path.edges) via_cycles = via_cycles && g.out_edges(g.source(e)).size() == 1;
    CHECK(is_no_exit(g) == via_cycles);
    CHECK(is_acyclic(g) == cycles(g).empty());

    Graph hooked = attach_hooks(g);
    CHECK(sources(hooked).empty());
    CHECK(attach_hooks(hooked) == hooked);

    if (is_acyclic(g))
      for (VertexId w : sinks(g)) CHECK(paths_ending_at(g, w, false).size() == matrix_power_count(g, w));
  }
}

TEST_CASE("components") {
  Graph both = parse_graph("u; v; w; e: u -> v; f: w -> w;");
  auto comps = components(both);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].vertex_count() == 2);
  CHECK(comps[1].edge_count() == 1);
  CHECK(components(gallery("toeplitz")).size() == 1);
  CHECK(components(parse_graph("a; b; c;")).size() == 3);
}

TEST_CASE("is_no_exit, is_acyclic, is_isolated_loop") {
  CHECK(is_no_exit(gallery("arrow_to_loop")));
  CHECK_FALSE(is_no_exit(gallery("toeplitz")));
  CHECK_FALSE(is_no_exit(gallery("rose(2)")));
  CHECK(is_acyclic(gallery("line(3)")));
  CHECK_FALSE(is_acyclic(gallery("loop")));
  CHECK_FALSE(is_acyclic(gallery("toeplitz")));
  CHECK(is_isolated_loop(gallery("loop")));
  CHECK_FALSE(is_isolated_loop(gallery("arrow_to_loop")));
  CHECK_FALSE(is_isolated_loop(gallery("cycle(2)")));
  CHECK_THROWS_AS(is_isolated_loop(parse_graph("a; b;")), std::invalid_argument);
}

TEST_CASE("paths_ending_at") {
  Graph line = parse_graph("u; v; e: u -> v;");
  auto ps = paths_ending_at(line, 1, false);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].trivial());
  CHECK(to_string(line, ps[1]) == "e");

  Graph loop = gallery("loop");
  CHECK(paths_ending_at(loop, 0, true).size() == 1);

  Graph a2l = gallery("arrow_to_loop");
  auto entry = paths_ending_at(a2l, *a2l.find_vertex("v"), true);
  REQUIRE(entry.size() == 2);
  CHECK(to_string(a2l, entry[1]) == "e");

  CHECK_THROWS_AS(paths_ending_at(loop, 0, false), InfinitePathCount);
  CHECK_THROWS_AS(paths_ending_at(gallery("toeplitz"), 0, false), InfinitePathCount);
  CHECK_THROWS_AS(paths_ending_at(gallery("line(6)"), 5, false, 3), InfinitePathCount);
}

TEST_CASE("attach_hooks") {
  Graph line = parse_graph("u; v; e: u -> v;");
  Graph hooked = attach_hooks(line);
  CHECK(hooked.vertex_count() == 3);
  CHECK(hooked.edge_count() == 3);
  CHECK(sources(hooked).empty());
  auto w = hooked.find_vertex("hook_u");
  REQUIRE(w);
  CHECK(hooked.out_edges(*w).size() == 2);
  CHECK(attach_hooks(gallery("loop")) == gallery("loop"));
  Graph single = attach_hooks(parse_graph("v;"));
  CHECK(single.vertex_count() == 2);
  CHECK(sources(single).empty());
}

TEST_CASE("gallery") {
  Graph mn = gallery("mn_toeplitz(2)");
  CHECK(mn.vertex_count() == 4);
  CHECK(mn.edge_count() == 4);
  CHECK(sources(mn).size() == 2);
  Graph rose = gallery("rose(2)");
  CHECK(rose.vertex_count() == 1);
  CHECK(rose.edge_count() == 2);
  Graph l2 = gallery("line(2)");
  CHECK(l2.vertex_count() == 2);
  CHECK(l2.edge_count() == 1);
  CHECK(gallery("hooked(line(2))").vertex_count() == 3);
  CHECK(gallery("cycle_entry(2)").edge_count() == 3);
  CHECK_THROWS_AS(gallery("petersen"), std::invalid_argument);
  CHECK_THROWS_AS(gallery("line"), std::invalid_argument);
  CHECK_THROWS_AS(gallery("loop(3)"), std::invalid_argument);
}
