#pragma once

#include "lpa/element.hpp"
#include "lpa/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpa {

using Coords = std::vector<Scalar>;

/// L_K(E) for a finite acyclic graph, as a finite-dimensional algebra on the
/// normal-form monomial basis.
class FDAlgebra {
 public:
  /// Throws std::invalid_argument if g has a cycle.
  FDAlgebra(GraphRef g, FieldSpec f);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const GraphRef& graph_ref() const { return g_; }
  const FieldSpec& field() const { return f_; }

  Element basis_element(std::size_t k) const;
  Coords coords(const Element& x) const;
  Element element(const Coords& c) const;

  Coords multiply(const Coords& a, const Coords& b) const;
  Coords star(const Coords& a) const;
  /// a b_j
  Coords multiply_basis(const Coords& a, std::size_t j) const;
  /// Index of the basis monomial b_k*.
  std::size_t star_index(std::size_t k) const { return star_[k]; }
  /// Matrix of a -> x a in basis coordinates.
  Matrix<Scalar> left_multiplication(const Coords& x) const;

 private:
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;
  GraphRef g_;
  FieldSpec f_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, MonomialLess> index_;
  std::vector<std::vector<Sparse>> table_;  // table_[i][j] = b_i b_j
  std::vector<std::size_t> star_;
};

/// Linearly independent coordinate vectors.
struct SubspaceBasis {
  std::vector<Coords> vectors;
  std::size_t dim() const { return vectors.size(); }
};

std::size_t span_rank(const FDAlgebra& a, const std::vector<Coords>& vs);
bool contains(const FDAlgebra& a, const SubspaceBasis& n, const Coords& v);
bool is_right_ideal(const FDAlgebra& a, const SubspaceBasis& n);

/// {a : x a = 0 for every x in X}
SubspaceBasis right_annihilator_fd(const FDAlgebra& a, const std::vector<Element>& xs);

/// Some idempotent e in N with e n = n for all n in N, so that N = eA.
/// Throws std::invalid_argument if N is not a right ideal.
std::optional<Element> idempotent_generator(const FDAlgebra& a, const SubspaceBasis& n);

/// The projection generating N, if one exists.  Throws std::invalid_argument
/// if N is not a right ideal and std::logic_error if the solution space is
/// not a single point.
std::optional<Element> projection_generator(const FDAlgebra& a, const SubspaceBasis& n);

/// eA == N
bool generates(const FDAlgebra& a, const Element& e, const SubspaceBasis& n);

enum class GeneratorKind { Idempotent, Projection };

struct OracleOptions {
  std::size_t random_cases = 100;
  std::size_t max_subset = 3;
  std::uint64_t seed = 1;
};

struct OracleCounts {
  std::size_t singletons = 0;
  std::size_t pairs = 0;
  std::size_t random = 0;
  std::size_t structured = 0;
  std::size_t total() const { return singletons + pairs + random + structured; }
};

struct OracleReport {
  bool pass = true;
  std::optional<std::vector<Element>> witness;
  std::string family;  // family that produced the witness
  OracleCounts counts;
  std::uint64_t seed = 0;
};

/// Searches for a set X whose right annihilator lacks a generator of the
/// given kind: basis singletons, basis pairs, seeded random subsets, and the
/// families {t t* : t from v} split by index parity.
OracleReport annihilator_oracle_fd(const FDAlgebra& a, GeneratorKind kind, const OracleOptions& opts = {});

inline OracleReport baer_star_oracle_fd(const FDAlgebra& a, const OracleOptions& opts = {}) {
  return annihilator_oracle_fd(a, GeneratorKind::Projection, opts);
}
inline OracleReport baer_oracle_fd(const FDAlgebra& a, const OracleOptions& opts = {}) {
  return annihilator_oracle_fd(a, GeneratorKind::Idempotent, opts);
}

}  // namespace lpa
