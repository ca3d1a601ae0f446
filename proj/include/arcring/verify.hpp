#pragma once

// Verification suites over a built ring.  Each returns named checks with a
// JSON payload describing what was examined, and a counterexample when a
// check fails.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcring/arc_ring.hpp"

namespace arcring {

struct CheckResult {
  std::string name;
  bool passed = false;
  nlohmann::json detail = nlohmann::json::object();
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Random associativity triples when the exhaustive check is too large.
  std::size_t random_triples = 10000;
  /// Random samples for the symmetric group action property.
  std::size_t action_samples = 200;
};

/// Dimension, unit law, associativity, grading, surgery-order
/// independence and the commutator quotient rank (n <= 3).
std::vector<CheckResult> verify_ring(const ArcRing& ring, const VerifyOptions& options);
/// Rank, centrality of every basis element, graded ranks against the
/// admissible counts, relations among the X_i.
std::vector<CheckResult> verify_center(const ArcRing& ring);
/// R1 quotient ranks, torsion, R1 = R2, the reduction identities, the
/// admissible normal form and stability under transpositions.
std::vector<CheckResult> verify_springer(int n);
std::vector<CheckResult> verify_iso(const ArcRing& ring);
std::vector<CheckResult> verify_homotopy(const ArcRing& ring);
std::vector<CheckResult> verify_symmetric(const ArcRing& ring, const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace arcring
