#include "lpa/decision.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

namespace lpa {

std::string to_string(Property p) {
  switch (p) {
    case Property::Rickart:
      return "Rickart";
    case Property::GradedRickart:
      return "GradedRickart";
    case Property::GradedRickartStar:
      return "GradedRickartStar";
    case Property::Baer:
      return "Baer";
    case Property::GradedBaer:
      return "GradedBaer";
    case Property::GradedBaerStar:
      return "GradedBaerStar";
    case Property::BaerStar:
      return "BaerStar";
  }
  throw std::logic_error("unknown property");
}

std::string property_key(Property p) {
  switch (p) {
    case Property::Rickart:
      return "rickart";
    case Property::GradedRickart:
      return "graded-rickart";
    case Property::GradedRickartStar:
      return "graded-rickart-star";
    case Property::Baer:
      return "baer";
    case Property::GradedBaer:
      return "graded-baer";
    case Property::GradedBaerStar:
      return "graded-baer-star";
    case Property::BaerStar:
      return "baer-star";
  }
  throw std::logic_error("unknown property");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::NotApplicable:
      return "not-applicable";
  }
  throw std::logic_error("unknown verdict");
}

namespace {

constexpr const char* kNotPositiveDefinite =
    "the involution is not positive definite, so the characterization does not apply";

std::optional<Certificate> cycle_with_exit(const Graph& g) {
  for (Cycle& c : cycles(g))
    for (EdgeId on_cycle : c.path.edges) {
      VertexId v = g.source(on_cycle);
      for (EdgeId f : g.out_edges(v)) {
        if (f == on_cycle) continue;
        Certificate cert{Certificate::Kind::CycleWithExit, c, f, std::nullopt, ""};
        cert.description = "cycle " + to_string(g, c.path) + " has exit " + g.edge_name(f) + " at vertex " +
                           g.vertex_name(v);
        return cert;
      }
    }
  return std::nullopt;
}

Decision star_variant(Property p, const FieldSpec& f, Verdict when_pd, std::optional<Certificate> cert) {
  Decision d{p, when_pd, std::move(cert), true, f.positive_definite(), ""};
  if (!d.field_satisfied) {
    d.verdict = Verdict::NotApplicable;
    d.certificate.reset();
    d.note = kNotPositiveDefinite;
  }
  return d;
}

}  // namespace

std::vector<Decision> decide_rickart(const Graph&, const FieldSpec& f) {
  f.validate();
  return {
      Decision{Property::Rickart, Verdict::Yes, std::nullopt, false, true, "finitely many vertices"},
      Decision{Property::GradedRickart, Verdict::Yes, std::nullopt, false, true, "finitely many vertices"},
      star_variant(Property::GradedRickartStar, f, Verdict::Yes, std::nullopt),
  };
}

std::vector<Decision> decide_baer(const Graph& g, const FieldSpec& f) {
  f.validate();
  std::optional<Certificate> cert;
  if (!is_no_exit(g)) {
    cert = cycle_with_exit(g);
    if (!cert) throw std::logic_error("graph has an exit but no cycle with an exit was found");
  }
  const Verdict v = cert ? Verdict::No : Verdict::Yes;
  return {
      Decision{Property::Baer, v, cert, false, true, ""},
      Decision{Property::GradedBaer, v, cert, false, true, ""},
      star_variant(Property::GradedBaerStar, f, v, cert),
  };
}

Decision decide_baer_star(const Graph& g, const FieldSpec& f) {
  f.validate();
  std::optional<Certificate> cert;
  for (Graph& comp : components(g)) {
    if (is_acyclic(comp) || is_isolated_loop(comp)) continue;
    Certificate c{Certificate::Kind::BadComponent, std::nullopt, std::nullopt, std::nullopt, ""};
    std::string names;
    for (VertexId v = 0; v < comp.vertex_count(); ++v) names += (v ? ", " : "") + comp.vertex_name(v);
    c.description = "component {" + names + "} has a cycle but is not an isolated loop";
    c.component = std::move(comp);
    cert = std::move(c);
    break;
  }
  return star_variant(Property::BaerStar, f, cert ? Verdict::No : Verdict::Yes, std::move(cert));
}

const Decision& Classification::at(Property p) const {
  for (const Decision& d : decisions)
    if (d.property == p) return d;
  throw std::out_of_range("property missing from classification");
}

Classification classify(const Graph& g, const FieldSpec& f) {
  Classification c;
  for (auto& d : decide_rickart(g, f)) c.decisions.push_back(std::move(d));
  for (auto& d : decide_baer(g, f)) c.decisions.push_back(std::move(d));
  c.decisions.push_back(decide_baer_star(g, f));
  auto implies = [&](Property a, Property b) {
    const Verdict va = c.at(a).verdict;
    return va != Verdict::Yes || c.at(b).verdict == Verdict::Yes;
  };
  c.consistent = implies(Property::BaerStar, Property::Baer) && implies(Property::Baer, Property::Rickart) &&
                 implies(Property::GradedBaerStar, Property::GradedBaer) &&
                 implies(Property::GradedBaer, Property::GradedRickart) &&
                 implies(Property::BaerStar, Property::GradedBaerStar);
  return c;
}

namespace {

std::size_t parse_count(const std::string& text, const std::string& name, std::size_t min) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n < min || n > 64)
    throw std::invalid_argument("bad parameter '" + text + "' for " + name);
  return n;
}

std::string letter_name(std::size_t k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "e" + std::to_string(k + 1);
}

Graph cycle_graph(std::size_t n, bool entry) {
  std::vector<std::string> vs;
  std::vector<EdgeDecl> es;
  for (std::size_t k = 1; k <= n; ++k) vs.push_back("v" + std::to_string(k));
  for (std::size_t k = 1; k <= n; ++k) es.push_back({"e" + std::to_string(k), vs[k - 1], vs[k % n]});
  if (entry) {
    vs.insert(vs.begin(), "u");
    es.insert(es.begin(), {"f", "u", "v1"});
  }
  return Graph(vs, es);
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"loop", "arrow_to_loop", "toeplitz", "mn_toeplitz(n)", "line(n)", "rose(k)", "cycle(n)", "cycle_entry(n)",
          "hooked(<name>)"};
}

Graph gallery(std::string_view spec) {
  static const std::regex pattern(R"(\s*([a-z_]+)\s*(?:\((.*)\))?\s*)");
  std::smatch m;
  const std::string text(spec);
  if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("bad gallery name '" + text + "'");
  const std::string name = m[1];
  const bool has_arg = m[2].matched;
  const std::string arg = m[2];
  auto no_arg = [&] {
    if (has_arg) throw std::invalid_argument(name + " takes no parameter");
  };
  auto count = [&](std::size_t min) {
    if (!has_arg) throw std::invalid_argument(name + " needs a parameter");
    return parse_count(arg, name, min);
  };

  if (name == "loop") {
    no_arg();
    return Graph({"v"}, {{"e", "v", "v"}});
  }
  if (name == "arrow_to_loop") {
    no_arg();
    return Graph({"u", "v"}, {{"e", "u", "v"}, {"f", "v", "v"}});
  }
  if (name == "toeplitz") {
    no_arg();
    return Graph({"u", "v"}, {{"f", "v", "v"}, {"e", "v", "u"}});
  }
  if (name == "mn_toeplitz") {
    std::size_t n = count(1);
    std::vector<std::string> vs{"u", "v"};
    std::vector<EdgeDecl> es{{"f", "v", "v"}, {"e", "v", "u"}};
    for (const std::string base : {"u", "v"})
      for (std::size_t k = 1; k < n; ++k) {
        std::string from = base + std::to_string(k);
        std::string to = k == 1 ? base : base + std::to_string(k - 1);
        vs.push_back(from);
        es.push_back({"g" + from, from, to});
      }
    return Graph(vs, es);
  }
  if (name == "line") {
    std::size_t n = count(1);
    std::vector<std::string> vs;
    std::vector<EdgeDecl> es;
    for (std::size_t k = 1; k <= n; ++k) vs.push_back("v" + std::to_string(k));
    for (std::size_t k = 1; k < n; ++k) es.push_back({"e" + std::to_string(k), vs[k - 1], vs[k]});
    return Graph(vs, es);
  }
  if (name == "rose") {
    std::size_t k = count(1);
    std::vector<EdgeDecl> es;
    for (std::size_t j = 0; j < k; ++j) es.push_back({letter_name(j), "v", "v"});
    return Graph({"v"}, es);
  }
  if (name == "cycle") return cycle_graph(count(1), false);
  if (name == "cycle_entry") return cycle_graph(count(1), true);
  if (name == "hooked") {
    if (!has_arg) throw std::invalid_argument("hooked needs a graph name");
    return attach_hooks(gallery(arg));
  }
  throw std::invalid_argument("unknown gallery graph '" + name + "'");
}

std::vector<Graph> enumerate_small_graphs(std::size_t max_vertices, std::size_t max_edges) {
  using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;
  std::vector<Graph> out;
  for (std::size_t nv = 1; nv <= max_vertices; ++nv) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t s = 0; s < nv; ++s)
      for (std::size_t r = 0; r < nv; ++r) slots.emplace_back(s, r);
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<EdgeList> seen;
    auto canonical = [&](const EdgeList& edges) {
      EdgeList best;
      bool first = true;
      for (const auto& p : perms) {
        EdgeList mapped;
        for (auto [s, r] : edges) mapped.emplace_back(p[s], p[r]);
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) best = mapped;
        first = false;
      }
      return best;
    };
    // Multisets of slots, as nondecreasing index sequences.
    std::vector<std::size_t> pick;
    auto emit = [&] {
      EdgeList edges;
      for (std::size_t k : pick) edges.push_back(slots[k]);
      EdgeList canon = canonical(edges);
      if (!seen.insert(canon).second) return;
      std::vector<std::string> vs;
      std::vector<EdgeDecl> es;
      for (std::size_t v = 0; v < nv; ++v) vs.push_back("v" + std::to_string(v));
      for (std::size_t k = 0; k < canon.size(); ++k) es.push_back({"e" + std::to_string(k), vs[canon[k].first], vs[canon[k].second]});
      out.emplace_back(vs, es);
    };
    auto recurse = [&](auto& self, std::size_t from) -> void {
      emit();
      if (pick.size() == max_edges) return;
      for (std::size_t k = from; k < slots.size(); ++k) {
        pick.push_back(k);
        self(self, k);
        pick.pop_back();
      }
    };
    recurse(recurse, 0);
  }
  return out;
}

}  // namespace lpa
