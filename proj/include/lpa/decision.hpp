#pragma once

#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

enum class Property { Rickart, GradedRickart, GradedRickartStar, Baer, GradedBaer, GradedBaerStar, BaerStar };
enum class Verdict { Yes, No, NotApplicable };

std::string to_string(Property p);
std::string to_string(Verdict v);
/// rickart, graded-rickart, ..., baer-star
std::string property_key(Property p);

/// Evidence for a `no` verdict.
struct Certificate {
  enum class Kind { CycleWithExit, BadComponent } kind;
  std::optional<Cycle> cycle;
  std::optional<EdgeId> exit_edge;
  std::optional<Graph> component;
  std::string description;
};

struct Decision {
  Property property;
  Verdict verdict;
  std::optional<Certificate> certificate;
  bool field_hypothesis = false;  // the theorem needs a positive definite involution
  bool field_satisfied = true;
  std::string note;
};

/// Rickart, GradedRickart, GradedRickartStar.
std::vector<Decision> decide_rickart(const Graph& g, const FieldSpec& f);
/// Baer, GradedBaer, GradedBaerStar.
std::vector<Decision> decide_baer(const Graph& g, const FieldSpec& f);
Decision decide_baer_star(const Graph& g, const FieldSpec& f);

struct Classification {
  std::vector<Decision> decisions;
  /// BaerStar => Baer => Rickart and GradedBaerStar => GradedBaer hold.
  bool consistent = true;
  const Decision& at(Property p) const;
};

Classification classify(const Graph& g, const FieldSpec& f);

/// Named graphs: loop, arrow_to_loop, toeplitz, mn_toeplitz(n), line(n),
/// rose(k), cycle(n), cycle_entry(n), hooked(<name>).  Throws
/// std::invalid_argument for unknown names or bad parameters.
Graph gallery(std::string_view spec);
std::vector<std::string> gallery_names();

/// Every graph with at most `max_vertices` vertices and `max_edges` edges,
/// one per isomorphism class, with vertices v0.. and edges e0..
std::vector<Graph> enumerate_small_graphs(std::size_t max_vertices, std::size_t max_edges);

}  // namespace lpa
