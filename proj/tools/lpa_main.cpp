// Command-line front end: lpa <subcommand> ...
//
// Exit codes: 0 ok, 1 unmet --expect or failing verify suite, 2 usage or
// input error, 3 internal invariant violation.

#include "lpa/annihilator.hpp"
#include "lpa/decision.hpp"
#include "lpa/expression.hpp"
#include "lpa/snf.hpp"
#include "lpa/structure.hpp"
#include "lpa/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace lpa;
using Json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field = "qi-conj";
  std::uint64_t seed = 1;
  bool json = false;
  bool timing = false;

  std::string graph;
  std::vector<std::string> exprs;
  std::string matrix;
  std::string property = "all";
  std::string expect;
  std::string degree_window = "-3,3";
  double scale = 1.0;
  bool oracle = false;
  std::size_t cases = 100;
  std::string gallery_name;
};

// Result of one subcommand: the JSON payload, its human-readable rendering
// and the exit status.
struct Outcome {
  Json result = Json::object();
  std::ostringstream text;
  int exit_code = 0;
};

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

Graph load_graph(const std::string& arg) {
  if (arg.starts_with("gallery:")) return gallery(arg.substr(8));
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read graph file '" + arg + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

Json path_list(const Graph& g, const std::vector<Path>& paths) {
  Json out = Json::array();
  for (const Path& p : paths) out.push_back(to_string(g, p));
  return out;
}

Json element_json(const Element& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms())
    terms.push_back({{"p", to_string(x.graph(), m.p)}, {"q", to_string(x.graph(), m.q)}, {"coefficient", c.to_string()}});
  return {{"text", to_string(x)}, {"terms", terms}};
}

Json matrix_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::string summand_algebra(std::size_t size, bool cycle) {
  return "M_" + std::to_string(size) + (cycle ? "(K[x,x^-1])" : "(K)");
}

Json certificate_json(const Graph& g, const Certificate& c) {
  Json out{{"kind", c.kind == Certificate::Kind::CycleWithExit ? "cycle-with-exit" : "bad-component"},
           {"description", c.description}};
  if (c.cycle) {
    out["cycle"] = to_string(g, c.cycle->path);
    out["base"] = g.vertex_name(c.cycle->base);
  }
  if (c.exit_edge) out["exit_edge"] = g.edge_name(*c.exit_edge);
  if (c.component) {
    Json vs = Json::array();
    for (VertexId v = 0; v < c.component->vertex_count(); ++v) vs.push_back(c.component->vertex_name(v));
    out["component"] = vs;
  }
  return out;
}

std::vector<Property> selected_properties(const std::string& key) {
  using P = Property;
  if (key == "all")
    return {P::Rickart, P::GradedRickart, P::GradedRickartStar, P::Baer, P::GradedBaer, P::GradedBaerStar, P::BaerStar};
  if (key == "rickart") return {P::Rickart, P::GradedRickart, P::GradedRickartStar};
  if (key == "baer") return {P::Baer, P::GradedBaer, P::GradedBaerStar};
  for (P p : selected_properties("all"))
    if (property_key(p) == key) return {p};
  throw UsageError("unknown property '" + key + "'");
}

// Subcommands -------------------------------------------------------------

void cmd_decide(const Options& o, const Graph& g, const FieldSpec& f, Outcome& out) {
  std::optional<Verdict> expect;
  if (o.expect == "yes") expect = Verdict::Yes;
  else if (o.expect == "no") expect = Verdict::No;
  else if (!o.expect.empty()) throw UsageError("--expect takes yes or no");

  const Classification c = classify(g, f);
  Json decisions = Json::array();
  bool met = true;
  for (Property p : selected_properties(o.property)) {
    const Decision& d = c.at(p);
    Json j{{"property", to_string(p)}, {"key", property_key(p)}, {"verdict", to_string(d.verdict)},
           {"field_hypothesis", d.field_hypothesis}, {"field_satisfied", d.field_satisfied}};
    j["certificate"] = d.certificate ? certificate_json(g, *d.certificate) : Json(nullptr);
    if (!d.note.empty()) j["note"] = d.note;
    decisions.push_back(j);
    if (expect && d.verdict != *expect) met = false;

    out.text << std::left << std::setw(20) << to_string(p) << to_string(d.verdict);
    if (d.certificate) out.text << "  (" << d.certificate->description << ")";
    if (!d.note.empty()) out.text << "  (" << d.note << ")";
    out.text << "\n";
  }
  out.result["decisions"] = decisions;
  out.result["consistent"] = c.consistent;
  out.result["note"] = "the graph is finite, so the algebra is unital and the locally Rickart/Baer variants coincide "
                       "with the properties above";
  if (expect) {
    out.result["expect"] = {{"verdict", o.expect}, {"met", met}};
    out.text << "expectation " << o.expect << (met ? " met" : " not met") << "\n";
    if (!met) out.exit_code = 1;
  }
  if (!c.consistent) throw std::logic_error("verdicts violate the implication chain");
}

Json images_json(const StructureMap& sm, const Element& x, std::ostream& text) {
  Json images = Json::array();
  const auto& dec = sm.decomposition();
  for (const SummandMatrix& s : sm.embed(x)) {
    const bool cycle = s.kind == SummandKind::Cycle;
    images.push_back({{"kind", cycle ? "cycle" : "sink"}, {"index", s.index}, {"matrix", matrix_json(s.entries)}});
    const std::string where = cycle ? "cycle " + to_string(sm.graph(), dec.cycle_summands[s.index].cycle.path)
                                    : "sink " + sm.graph().vertex_name(dec.sink_summands[s.index].sink);
    text << where << ": " << to_string(s.entries) << "\n";
  }
  return images;
}

void cmd_decompose(const Options& o, const GraphRef& g, const FieldSpec& f, Outcome& out) {
  const StructureMap sm(g);
  const Decomposition& dec = sm.decomposition();
  Json summands = Json::array();
  for (const SinkSummand& s : dec.sink_summands) {
    summands.push_back({{"kind", "sink"},
                        {"vertex", g->vertex_name(s.sink)},
                        {"algebra", summand_algebra(s.kappa(), false)},
                        {"size", s.kappa()},
                        {"index_paths", path_list(*g, s.index_paths)},
                        {"shifts", s.shifts}});
    out.text << summand_algebra(s.kappa(), false) << "  sink " << g->vertex_name(s.sink) << ", shifts "
             << nlohmann::json(s.shifts).dump() << "\n";
  }
  for (const CycleSummand& s : dec.cycle_summands) {
    summands.push_back({{"kind", "cycle"},
                        {"cycle", to_string(*g, s.cycle.path)},
                        {"base", g->vertex_name(s.cycle.base)},
                        {"length", s.n()},
                        {"algebra", summand_algebra(s.mu(), true)},
                        {"size", s.mu()},
                        {"index_paths", path_list(*g, s.index_paths)},
                        {"shifts", s.shifts}});
    out.text << summand_algebra(s.mu(), true) << "  cycle " << to_string(*g, s.cycle.path) << " at "
             << g->vertex_name(s.cycle.base) << ", shifts " << nlohmann::json(s.shifts).dump() << "\n";
  }
  out.result["summands"] = summands;
  if (!o.exprs.empty()) {
    const Element x = parse_element(g, f, o.exprs.front());
    out.result["element"] = element_json(x);
    out.result["images"] = images_json(sm, x, out.text);
  }
}

void cmd_embed(const Options& o, const GraphRef& g, const FieldSpec& f, Outcome& out) {
  const StructureMap sm(g);
  const Element x = parse_element(g, f, o.exprs.front());
  out.result["element"] = element_json(x);
  out.result["images"] = images_json(sm, x, out.text);
  out.result["graded"] = is_homogeneous(x) ? Json(sm.graded_check(x)) : Json(nullptr);
}

void cmd_eval(const Options& o, const GraphRef& g, const FieldSpec& f, Outcome& out) {
  const Element x = parse_element(g, f, o.exprs.front());
  Json parts = Json::array();
  for (const auto& [d, part] : degree_split(x)) parts.push_back({{"degree", d}, {"element", to_string(part)}});
  out.result["input"] = o.exprs.front();
  out.result["normal_form"] = element_json(x);
  out.result["degree_parts"] = parts;
  out.result["homogeneous"] = is_homogeneous(x);
  out.result["idempotent"] = is_idempotent(x);
  out.result["projection"] = is_projection(x);
  out.text << to_string(x) << "\n";
  for (const auto& p : parts) out.text << "  degree " << p["degree"] << ": " << p["element"].get<std::string>() << "\n";
  out.text << "  idempotent " << std::boolalpha << is_idempotent(x) << ", projection " << is_projection(x) << "\n";
}

Json optional_element(const std::optional<Element>& e) { return e ? Json(to_string(*e)) : Json(nullptr); }

void cmd_annihilate(const Options& o, const GraphRef& g, const FieldSpec& f, Outcome& out) {
  const FDAlgebra a(g, f);
  out.result["algebra_dimension"] = a.dimension();
  out.text << "algebra dimension " << a.dimension() << "\n";
  if (!o.exprs.empty()) {
    std::vector<Element> xs;
    Json set = Json::array();
    for (const std::string& e : o.exprs) {
      xs.push_back(parse_element(g, f, e));
      set.push_back(to_string(xs.back()));
    }
    const SubspaceBasis n = right_annihilator_fd(a, xs);
    Json basis = Json::array();
    for (const Coords& v : n.vectors) basis.push_back(to_string(a.element(v)));
    const auto idem = idempotent_generator(a, n);
    const auto proj = projection_generator(a, n);
    out.result["set"] = set;
    out.result["annihilator"] = {{"dimension", n.dim()}, {"basis", basis}};
    out.result["idempotent_generator"] = optional_element(idem);
    out.result["projection_generator"] = optional_element(proj);
    out.text << "ann_r has dimension " << n.dim() << "\n"
             << "idempotent generator: " << (idem ? to_string(*idem) : "none") << "\n"
             << "projection generator: " << (proj ? to_string(*proj) : "none") << "\n";
  }
  if (o.oracle) {
    const OracleReport rep = baer_star_oracle_fd(a, OracleOptions{o.cases, 3, o.seed});
    Json witness = nullptr;
    if (rep.witness) {
      witness = Json::array();
      for (const Element& x : *rep.witness) witness.push_back(to_string(x));
    }
    out.result["oracle"] = {{"pass", rep.pass},
                            {"family", rep.family},
                            {"witness", witness},
                            {"counts",
                             {{"singletons", rep.counts.singletons},
                              {"pairs", rep.counts.pairs},
                              {"random", rep.counts.random},
                              {"structured", rep.counts.structured}}}};
    out.text << "oracle " << (rep.pass ? "PASS" : "FAIL") << " after " << rep.counts.total() << " sets";
    if (rep.witness) out.text << "; witness from " << rep.family << ": " << witness.dump();
    out.text << "\n";
  }
}

void cmd_snf(const Options& o, const FieldSpec& f, Outcome& out) {
  const LaurentMatrix a = parse_laurent_matrix(o.matrix);
  const SNFResult s = snf(a);
  if (!(s.U * a * s.V == s.D)) throw std::logic_error("U A V != D");
  Json diagonal = Json::array();
  for (const LaurentPoly& d : s.diagonal()) diagonal.push_back(d.to_string());
  out.result["input"] = matrix_json(a);
  out.result["U"] = matrix_json(s.U);
  out.result["D"] = matrix_json(s.D);
  out.result["V"] = matrix_json(s.V);
  out.result["rank"] = s.rank();
  out.result["diagonal"] = diagonal;
  out.result["divisibility_chain"] = divisibility_chain(s.D);
  const bool idempotent = a.rows() == a.cols() && a * a == a;
  out.result["projection_generator"] =
      idempotent ? Json(has_projection_generator_laurent(a, f.involution)) : Json(nullptr);
  out.text << "D = " << to_string(s.D) << "\nU = " << to_string(s.U) << "\nV = " << to_string(s.V) << "\n"
           << "rank " << s.rank() << "\n";
  if (idempotent)
    out.text << "idempotent; projection generator " << (out.result["projection_generator"].get<bool>() ? "yes" : "no")
             << "\n";
}

std::pair<int, int> parse_window(const std::string& text) {
  int lo = 0, hi = 0;
  char sep = 0;
  std::istringstream in(text);
  if (!(in >> lo >> sep >> hi) || sep != ',' || !in.eof() || lo > hi)
    throw UsageError("--degree-window takes LO,HI with LO <= HI");
  return {lo, hi};
}

void cmd_verify(const Options& o, const FieldSpec& f, Outcome& out) {
  if (!(o.scale > 0)) throw UsageError("--scale must be positive");
  const auto suites = run_all(VerifyOptions{f, o.seed, o.scale, parse_window(o.degree_window)});
  Json list = Json::array();
  bool all_ok = true;
  for (const SuiteResult& r : suites) {
    all_ok = all_ok && r.ok();
    list.push_back({{"name", r.name},
                    {"status", r.status()},
                    {"cases", r.cases},
                    {"failures", r.failures},
                    {"seed", r.seed},
                    {"messages", r.messages}});
    out.text << std::left << std::setw(16) << r.status() << std::setw(22) << r.name << r.cases << " cases, "
             << r.failures << " failures\n";
    for (const std::string& m : r.messages) out.text << "    " << m << "\n";
  }
  out.result["suites"] = list;
  out.result["all_ok"] = all_ok;
  if (!all_ok) out.exit_code = 1;
}

void cmd_gallery(const Options& o, Outcome& out) {
  if (o.gallery_name.empty()) {
    out.result["names"] = gallery_names();
    for (const std::string& n : gallery_names()) out.text << n << "\n";
    return;
  }
  const Graph g = gallery(o.gallery_name);
  out.result["name"] = o.gallery_name;
  out.result["vertices"] = g.vertex_count();
  out.result["edges"] = g.edge_count();
  out.result["graph"] = g.to_text();
  out.text << g.to_text();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leavitt path algebra toolkit"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "q, qi-conj or qi-id")->check(CLI::IsMember({"q", "qi-conj", "qi-id"}));
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_flag("--json", o.json, "print a JSON report");
    sub->add_flag("--timing", o.timing, "include wall-clock time in the report");
  };
  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "graph file, or gallery:<name>")->required();
  };

  CLI::App* decide = app.add_subcommand("decide", "classify the algebra of a graph");
  graph_arg(decide);
  decide->add_option("--property", o.property, "all, rickart, baer, baer-star or a single property key");
  decide->add_option("--expect", o.expect, "exit 1 unless every selected verdict is this (yes|no)");
  CLI::App* decompose = app.add_subcommand("decompose", "matrix decomposition of a no-exit graph");
  graph_arg(decompose);
  decompose->add_option("--expr", o.exprs, "also embed this element")->expected(1);
  CLI::App* embed = app.add_subcommand("embed", "image of an element in the matrix decomposition");
  graph_arg(embed);
  embed->add_option("expr", o.exprs, "element")->required()->expected(1);
  CLI::App* eval = app.add_subcommand("eval", "normal form of an element");
  eval->alias("normalform");
  graph_arg(eval);
  eval->add_option("expr", o.exprs, "element")->required()->expected(1);
  CLI::App* annihilate = app.add_subcommand("annihilate", "right annihilators in the algebra of an acyclic graph");
  graph_arg(annihilate);
  annihilate->add_option("exprs", o.exprs, "elements of the set X");
  annihilate->add_flag("--oracle", o.oracle, "search for an annihilator without a projection generator");
  annihilate->add_option("--cases", o.cases, "random subsets tried by --oracle");
  CLI::App* snf_cmd = app.add_subcommand("snf", "Smith normal form over K[x,x^-1]");
  snf_cmd->add_option("matrix", o.matrix, "rows separated by ';', entries by ','")->required();
  CLI::App* verify = app.add_subcommand("verify", "run the cross-check suites");
  verify->add_option("--degree-window", o.degree_window, "LO,HI degrees of sampled structure-map pairs");
  verify->add_option("--scale", o.scale, "multiplier on sample counts");
  CLI::App* gallery_cmd = app.add_subcommand("gallery", "list named graphs or print one");
  gallery_cmd->add_option("name", o.gallery_name, "gallery name such as line(3)");
  for (CLI::App* sub : {decide, decompose, embed, eval, annihilate, snf_cmd, verify, gallery_cmd}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  CLI::App* sub = app.get_subcommands().front();

  try {
    const auto start = std::chrono::steady_clock::now();
    const FieldSpec f = FieldSpec::from_name(o.field);
    Outcome out;
    std::string digest_input;
    std::optional<GraphRef> g;
    if (!o.graph.empty()) {
      g = share(load_graph(o.graph));
      digest_input = (*g)->to_text();
    }
    for (const std::string& e : o.exprs) digest_input += "\n" + e;
    digest_input += "\n" + o.matrix + "\n" + o.gallery_name;

    const std::string name = sub->get_name();
    if (name == "decide") cmd_decide(o, **g, f, out);
    else if (name == "decompose") cmd_decompose(o, *g, f, out);
    else if (name == "embed") cmd_embed(o, *g, f, out);
    else if (name == "eval") cmd_eval(o, *g, f, out);
    else if (name == "annihilate") cmd_annihilate(o, *g, f, out);
    else if (name == "snf") cmd_snf(o, f, out);
    else if (name == "verify") cmd_verify(o, f, out);
    else cmd_gallery(o, out);

    if (o.json) {
      Json args = Json::array();
      for (int k = 1; k < argc; ++k) args.push_back(argv[k]);
      Json report{{"command", name}, {"argv", args}, {"input_digest", fnv1a64(digest_input)}, {"field", f.name()},
                  {"seed", o.seed}};
      if (g) report["graph"] = {{"vertices", (*g)->vertex_count()}, {"edges", (*g)->edge_count()}};
      report["result"] = out.result;
      if (o.timing)
        report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << out.text.str();
      if (o.timing)
        std::cout << "time "
                  << std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()
                  << " ms\n";
    }
    return out.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const GraphParseError& e) {
    std::cerr << "graph parse error: " << e.what() << "\n";
  } catch (const InfinitePathCount& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
