#include "lpa/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  auto la = a.p.length() + a.q.length();
  auto lb = b.p.length() + b.q.length();
  if (la != lb) return la < lb;
  if (a.p != b.p) return a.p < b.p;
  return a.q < b.q;
}

Monomial vertex_monomial(VertexId v) { return {Path{v, {}}, Path{v, {}}}; }

Monomial make_monomial(const Graph& g, Path p, Path q) {
  if (!is_valid_path(g, p) || !is_valid_path(g, q)) throw std::invalid_argument("invalid path in monomial");
  if (p.finish(g) != q.finish(g)) throw std::invalid_argument("monomial p q* needs r(p) = r(q)");
  return {std::move(p), std::move(q)};
}

std::string to_string(const Graph& g, const Monomial& m) {
  if (m.p.trivial() && m.q.trivial()) return g.vertex_name(m.p.start);
  std::string out;
  for (EdgeId e : m.p.edges) {
    if (!out.empty()) out += '.';
    out += g.edge_name(e);
  }
  for (auto it = m.q.edges.rbegin(); it != m.q.edges.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += g.edge_name(*it) + "*";
  }
  return out;
}

EdgeId special_edge(const Graph& g, VertexId v, SpecialEdgeRule rule) {
  auto out = g.out_edges(v);
  if (out.empty()) throw std::invalid_argument("sink '" + g.vertex_name(v) + "' has no special edge");
  return rule == SpecialEdgeRule::Last ? out.back() : out.front();
}

bool is_reducible(const Graph& g, const Monomial& m, SpecialEdgeRule rule) {
  if (m.p.trivial() || m.q.trivial()) return false;
  EdgeId e = m.p.edges.back();
  return e == m.q.edges.back() && e == special_edge(g, g.source(e), rule);
}

std::optional<Monomial> multiply_monomials(const Graph& g, const Monomial& a, const Monomial& b) {
  // q* r with s(q) = s(r) is nonzero only when one path extends the other.
  const Path& q = a.q;
  const Path& r = b.p;
  if (q.start != r.start) return std::nullopt;
  const std::size_t common = std::min(q.length(), r.length());
  if (!std::equal(q.edges.begin(), q.edges.begin() + static_cast<std::ptrdiff_t>(common), r.edges.begin()))
    return std::nullopt;
  Monomial out{a.p, b.q};
  if (r.length() >= q.length()) {
    // q* r = r' with r = q r'
    out.p.edges.insert(out.p.edges.end(), r.edges.begin() + static_cast<std::ptrdiff_t>(common), r.edges.end());
  } else {
    // q* r = q'* with q = r q'
    out.q.edges.insert(out.q.edges.end(), q.edges.begin() + static_cast<std::ptrdiff_t>(common), q.edges.end());
  }
  (void)g;
  return out;
}

// ---------------------------------------------------------------------------

Element::Element(GraphRef g, FieldSpec f) : graph_(std::move(g)), field_(f) {
  if (!graph_) throw std::invalid_argument("element needs a graph");
  field_.validate();
}

Element Element::identity(GraphRef g, FieldSpec f) {
  Element x(std::move(g), f);
  for (VertexId v = 0; v < x.graph().vertex_count(); ++v) x.terms_.emplace(vertex_monomial(v), Scalar(1));
  return x;
}

Element Element::vertex(GraphRef g, FieldSpec f, VertexId v) {
  Element x(std::move(g), f);
  if (v >= x.graph().vertex_count()) throw std::out_of_range("unknown vertex");
  x.terms_.emplace(vertex_monomial(v), Scalar(1));
  return x;
}

Element Element::edge(GraphRef g, FieldSpec f, EdgeId e) {
  Element x(std::move(g), f);
  const Graph& gr = x.graph();
  if (e >= gr.edge_count()) throw std::out_of_range("unknown edge");
  x.terms_.emplace(Monomial{Path{gr.source(e), {e}}, Path{gr.range(e), {}}}, Scalar(1));
  return x;
}

Element Element::ghost(GraphRef g, FieldSpec f, EdgeId e) { return edge(std::move(g), f, e).star(); }

Element Element::scalar(GraphRef g, FieldSpec f, const Scalar& s) { return identity(std::move(g), f) * s; }

Element Element::monomial(GraphRef g, FieldSpec f, const Monomial& m, const Scalar& c) {
  Terms t;
  t.emplace(make_monomial(*g, m.p, m.q), c);
  return from_terms(std::move(g), f, t);
}

Element Element::from_terms(GraphRef g, FieldSpec f, const Terms& terms) {
  return normal_form(raw(std::move(g), f, terms));
}

Element Element::raw(GraphRef g, FieldSpec f, Terms terms) {
  Element x(std::move(g), f);
  for (auto& [m, c] : terms) {
    if (!belongs_to(c, f)) throw std::invalid_argument("coefficient " + c.to_string() + " is not in the field " + f.name());
    if (!c.is_zero()) x.terms_.emplace(m, c);
  }
  return x;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::check_compatible(const Element& o) const {
  if (field_ != o.field_) throw std::invalid_argument("elements over different fields");
  if (graph_ != o.graph_ && !(*graph_ == *o.graph_)) throw std::invalid_argument("elements over different graphs");
}

Element Element::operator-() const {
  Element x = *this;
  for (auto& [m, c] : x.terms_) c = -c;
  return x;
}

Element& Element::operator+=(const Element& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (!belongs_to(s, field_)) throw std::invalid_argument("scalar " + s.to_string() + " is not in the field " + field_.name());
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  a.check_compatible(b);
  const Graph& g = a.graph();
  Element raw(a.graph_, a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      if (auto m = multiply_monomials(g, ma, mb)) raw.add_term(*m, ca * cb);
  return normal_form(raw);
}

Element Element::star() const {
  Element x(graph_, field_);
  for (const auto& [m, c] : terms_) x.terms_.emplace(m.star(), c.conj(field_.involution));
  return x;
}

bool operator==(const Element& a, const Element& b) {
  if (a.field_ != b.field_) return false;
  if (a.graph_ != b.graph_ && !(*a.graph_ == *b.graph_)) return false;
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

Element normal_form(const Element& x, SpecialEdgeRule rule, NormalFormStats* stats) {
  const Graph& g = x.graph();
  Element::Terms pending = x.terms();
  Element::Terms done;
  auto accumulate = [](Element::Terms& t, Monomial m, const Scalar& c) {
    auto [it, inserted] = t.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  };
  while (!pending.empty()) {
    // Longest first: rewrites only produce shorter or equal-length terms.
    auto node = pending.extract(std::prev(pending.end()));
    Monomial& m = node.key();
    const Scalar& c = node.mapped();
    if (!is_reducible(g, m, rule)) {
      accumulate(done, std::move(m), c);
      continue;
    }
    if (stats) ++stats->rewrites;
    EdgeId gamma = m.p.edges.back();
    VertexId v = g.source(gamma);
    Monomial shorter = m;
    shorter.p.edges.pop_back();
    shorter.q.edges.pop_back();
    for (EdgeId f : g.out_edges(v)) {
      if (f == gamma) continue;
      Monomial sibling = shorter;
      sibling.p.edges.push_back(f);
      sibling.q.edges.push_back(f);
      accumulate(pending, std::move(sibling), -c);
    }
    accumulate(pending, std::move(shorter), c);
  }
  return Element::raw(x.graph_ref(), x.field(), std::move(done));
}

Element mono_mul(GraphRef g, FieldSpec f, const Monomial& a, const Monomial& b) {
  Element out(g, f);
  if (auto m = multiply_monomials(*g, a, b)) {
    Element::Terms t;
    t.emplace(*m, Scalar(1));
    return Element::from_terms(std::move(g), f, t);
  }
  return out;
}

std::map<int, Element> degree_split(const Element& x) {
  std::map<int, Element::Terms> parts;
  for (const auto& [m, c] : x.terms()) parts[m.degree()].emplace(m, c);
  std::map<int, Element> out;
  for (auto& [d, t] : parts) out.emplace(d, Element::raw(x.graph_ref(), x.field(), std::move(t)));
  return out;
}

bool is_homogeneous(const Element& x) { return degree_split(x).size() <= 1; }

bool is_idempotent(const Element& x) { return x * x == x; }

bool is_projection(const Element& x) { return is_idempotent(x) && x.star() == x; }

Element corner(const Element& x, const std::set<VertexId>& u) {
  Element unit = Element::zero(x.graph_ref(), x.field());
  for (VertexId v : u) unit += Element::vertex(x.graph_ref(), x.field(), v);
  return unit * x * unit;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Scalar coef = c;
    std::string cs = coef.to_string();
    bool negative = cs.front() == '-';
    if (negative) {
      coef = -coef;
      cs = coef.to_string();
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (!coef.is_one()) {
      if (cs.find('/') != std::string::npos && cs.front() != '(') cs = "(" + cs + ")";
      out += cs + " ";
    }
    out += to_string(x.graph(), m);
  }
  return out;
}

}  // namespace lpa
