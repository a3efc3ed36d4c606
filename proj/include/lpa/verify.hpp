#pragma once

#include "lpa/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lpa {

/// Outcome of one cross-check suite.
struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Failures are what the theory predicts for this field (reported as
  /// EXPECTED-FAIL rather than FAIL).
  bool failure_expected = false;
  std::uint64_t seed = 0;
  std::vector<std::string> messages;

  bool ok() const { return failure_expected ? failures > 0 : failures == 0; }
  /// PASS, FAIL, EXPECTED-FAIL or UNEXPECTED-PASS
  std::string status() const;
  void fail(std::string message);
  void note(std::string message);
};

/// Graphs used by the per-graph suites.
std::vector<std::string> verification_gallery();

SuiteResult gallery_verdict_suite(const FieldSpec& f);
SuiteResult oracle_suite(const FieldSpec& f, std::uint64_t seed, std::size_t random_cases = 100);
/// Always over (GaussianRationals, Identity) on the one-edge line graph.
SuiteResult field_necessity_suite(std::uint64_t seed, std::size_t samples = 1000);
SuiteResult laurent_witness_suite();
SuiteResult l12_suite();
SuiteResult structure_suite(const FieldSpec& f, std::uint64_t seed, std::size_t pairs = 500,
                            std::pair<int, int> degree_window = {-3, 3});
SuiteResult rewriting_suite(const FieldSpec& f, std::uint64_t seed, std::size_t elements = 1000);
SuiteResult corner_skew_suite(const FieldSpec& f);
SuiteResult snf_suite(std::uint64_t seed, std::size_t matrices = 500);
SuiteResult decision_consistency_suite(const FieldSpec& f, std::uint64_t seed, std::size_t samples = 1000);

struct VerifyOptions {
  FieldSpec field = FieldSpec::gaussian_conj();
  std::uint64_t seed = 1;
  /// Multiplies every sample count; 1 gives the full sweep.
  double scale = 1.0;
  /// Degrees of the random pairs in the structure suite.
  std::pair<int, int> degree_window{-3, 3};
};

/// All suites in a fixed order.
std::vector<SuiteResult> run_all(const VerifyOptions& opts);

}  // namespace lpa
