#pragma once

#include "lpa/element.hpp"
#include "lpa/matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace lpa {

/// Raised when the graph has a cycle with an exit.
class NotDecomposable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// M_kappa(K) summand for one sink; rows/columns indexed by the paths ending
/// at the sink in canonical order, shifts are their lengths.
struct SinkSummand {
  VertexId sink;
  std::vector<Path> index_paths;
  std::vector<int> shifts;
  std::size_t kappa() const { return index_paths.size(); }
};

/// M_mu(K[x,x^-1]) summand for one cycle; indexed by the entry paths of the
/// cycle base.  The variable x stands for the cycle, of degree n.
struct CycleSummand {
  Cycle cycle;
  std::vector<Path> index_paths;
  std::vector<int> shifts;
  std::size_t n() const { return cycle.length(); }
  std::size_t mu() const { return index_paths.size(); }
};

struct Decomposition {
  std::vector<SinkSummand> sink_summands;
  std::vector<CycleSummand> cycle_summands;
  std::size_t summand_count() const { return sink_summands.size() + cycle_summands.size(); }
};

/// Requires a finite no-exit graph; throws NotDecomposable otherwise.
Decomposition decompose(const Graph& g);

enum class SummandKind { Sink, Cycle };

/// Image of an element in one summand.  Sink summand entries are constants.
struct SummandMatrix {
  SummandKind kind;
  std::size_t index;  // into sink_summands or cycle_summands
  LaurentMatrix entries;

  friend bool operator==(const SummandMatrix&, const SummandMatrix&) = default;
};

/// The *-homomorphism L_K(E) -> (+) M_kappa(K) (+) M_mu(K[x,x^-1]).
class StructureMap {
 public:
  explicit StructureMap(GraphRef g);

  const Decomposition& decomposition() const { return dec_; }
  const Graph& graph() const { return *g_; }

  std::vector<SummandMatrix> embed(const Element& x) const;
  /// Entrywise involution with transpose, summand by summand.
  static std::vector<SummandMatrix> star(const std::vector<SummandMatrix>& m, Involution inv);
  static std::vector<SummandMatrix> multiply(const std::vector<SummandMatrix>& a, const std::vector<SummandMatrix>& b);
  static std::vector<SummandMatrix> add(const std::vector<SummandMatrix>& a, const std::vector<SummandMatrix>& b);

  /// Requires x homogeneous (std::invalid_argument otherwise).  Checks that
  /// entry (i,j) of every summand lies in degree deg(x) + shift_j - shift_i,
  /// with x^m of degree m n on a cycle summand.
  bool graded_check(const Element& x) const;

  /// Coordinates of embed(x) keyed by (summand, row, column, exponent).
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>, Scalar> coordinates(const Element& x) const;

 private:
  struct Target {
    SummandKind kind;
    std::size_t summand;
  };
  void embed_monomial(const Monomial& m, const Scalar& c, std::vector<SummandMatrix>& out) const;
  std::size_t index_of(const std::vector<Path>& paths, const Path& p) const;

  GraphRef g_;
  Decomposition dec_;
  std::vector<std::optional<Target>> vertex_target_;  // sinks and cycle vertices
  std::vector<Path> arc_to_base_;                     // for cycle vertices
};

}  // namespace lpa
