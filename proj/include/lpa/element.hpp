#pragma once

#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace lpa {

using GraphRef = std::shared_ptr<const Graph>;

inline GraphRef share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// The spanning element p q* of L_K(E); requires r(p) = r(q).
struct Monomial {
  Path p;
  Path q;

  int degree() const { return static_cast<int>(p.length()) - static_cast<int>(q.length()); }
  Monomial star() const { return {q, p}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Orders by total length, then p, then q; the print order of elements.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial vertex_monomial(VertexId v);
/// Throws std::invalid_argument unless both paths are valid and r(p) = r(q).
Monomial make_monomial(const Graph& g, Path p, Path q);
std::string to_string(const Graph& g, const Monomial& m);

/// Which edge of s^-1(v) is eliminated by the (CK2) rewrite.
enum class SpecialEdgeRule { Last, First };

EdgeId special_edge(const Graph& g, VertexId v, SpecialEdgeRule rule = SpecialEdgeRule::Last);

/// True when p and q end in the same special edge, i.e. the monomial still
/// contains the pattern gamma gamma*.
bool is_reducible(const Graph& g, const Monomial& m, SpecialEdgeRule rule = SpecialEdgeRule::Last);

/// (p q*)(r s*) by (V), (E1), (E2) and (CK1), without (CK2) rewriting.
std::optional<Monomial> multiply_monomials(const Graph& g, const Monomial& a, const Monomial& b);

/// Exact element of L_K(E): a finite combination of monomials.  Elements
/// built through the public operations are in canonical normal form (with
/// respect to the last-edge rule), so equality is structural.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialLess>;

  Element(GraphRef g, FieldSpec f);

  static Element zero(GraphRef g, FieldSpec f) { return Element(std::move(g), f); }
  static Element identity(GraphRef g, FieldSpec f);
  static Element vertex(GraphRef g, FieldSpec f, VertexId v);
  static Element edge(GraphRef g, FieldSpec f, EdgeId e);
  static Element ghost(GraphRef g, FieldSpec f, EdgeId e);
  static Element scalar(GraphRef g, FieldSpec f, const Scalar& s);
  static Element monomial(GraphRef g, FieldSpec f, const Monomial& m, const Scalar& c = Scalar(1));
  /// Builds from arbitrary terms and normalizes.
  static Element from_terms(GraphRef g, FieldSpec f, const Terms& terms);
  /// Keeps terms as given; only for representations in another basis.
  static Element raw(GraphRef g, FieldSpec f, Terms terms);

  const Graph& graph() const { return *graph_; }
  const GraphRef& graph_ref() const { return graph_; }
  const FieldSpec& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(const Element& a, const Element& b);

  /// (sum k p q*)* = sum k* q p*
  Element star() const;

  /// Same graph and field, identical canonical terms.
  friend bool operator==(const Element& a, const Element& b);

  /// Checks operands share graph and field; throws std::invalid_argument.
  void check_compatible(const Element& o) const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  GraphRef graph_;
  FieldSpec field_;
  Terms terms_;
};

struct NormalFormStats {
  std::size_t rewrites = 0;
};

/// Applies v = sum_{e in s^-1(v)} e e* in the direction eliminating the
/// special edge until no monomial contains gamma_v gamma_v*.
Element normal_form(const Element& x, SpecialEdgeRule rule = SpecialEdgeRule::Last, NormalFormStats* stats = nullptr);

/// (p q*)(r s*) followed by normal_form.
Element mono_mul(GraphRef g, FieldSpec f, const Monomial& a, const Monomial& b);

/// Homogeneous components keyed by |p| - |q|.
std::map<int, Element> degree_split(const Element& x);
bool is_homogeneous(const Element& x);

bool is_idempotent(const Element& x);
bool is_projection(const Element& x);

/// (sum u) x (sum u)
Element corner(const Element& x, const std::set<VertexId>& u);

/// Expression-grammar rendering: `(1/2) u + e.e* - i e*`.
std::string to_string(const Element& x);

}  // namespace lpa
