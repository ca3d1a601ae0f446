#pragma once

// Crossingless matchings of 2n points and the combinatorial structure the
// arc ring is built from: gluing into closed diagrams, arrows, the arrow
// partial order and its linear extensions, the arc graph of a matching,
// bottom arcs and admissible subsets.
//
// Endpoints are numbered 1..2n from left to right in every public
// interface.  Internally partners are stored 0-based.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcring {

/// Thrown when two objects built for different n are combined.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a value exceeds what an implementation supports.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Thrown when a mathematical invariant that must hold is found violated.
/// Seeing one of these means a bug, not bad input.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using ArcPair = std::pair<int, int>;

class Matching {
 public:
  Matching() = default;

  /// Validates that `pairs` is a crossingless perfect matching of [1,2n].
  /// Throws std::invalid_argument otherwise.
  static Matching from_pairs(const std::vector<ArcPair>& pairs);

  /// Like from_pairs but accepts crossing pairings.  Only meant for
  /// brute-force oracles that need the full set of pairings.
  static Matching from_pairs_unchecked(const std::vector<ArcPair>& pairs);

  int n() const { return static_cast<int>(partner_.size() / 2); }
  int point_count() const { return static_cast<int>(partner_.size()); }

  /// Partner of a 1-based endpoint.
  int partner(int endpoint) const { return partner_[endpoint - 1] + 1; }
  bool pairs_with(int i, int j) const { return partner(i) == j; }

  /// Arcs as (left, right) with left < right, sorted by left endpoint.
  std::vector<ArcPair> pairs() const;

  bool is_crossingless() const;

  std::string to_string() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  /// Canonical order: lexicographic on the sorted pair list.
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b);

 private:
  explicit Matching(std::vector<int> partner) : partner_(std::move(partner)) {}
  std::vector<int> partner_;
};

/// All crossingless matchings of 2n points in canonical order.  n = 0
/// yields the single empty matching.
std::vector<Matching> enumerate_matchings(int n);

/// The closed 1-manifold W(upper)lower, recorded as its circles.
struct ClosedDiagram {
  /// Each circle is a cyclic endpoint sequence starting at its smallest
  /// endpoint, stepping first along the lower matching.  Circles are
  /// sorted by smallest endpoint.
  std::vector<std::vector<int>> circles;
  /// endpoint_to_circle[e - 1] is the circle containing endpoint e.
  std::vector<int> endpoint_to_circle;

  int circle_count() const { return static_cast<int>(circles.size()); }
  int circle_of(int endpoint) const { return endpoint_to_circle[endpoint - 1]; }
};

ClosedDiagram glue(const Matching& lower, const Matching& upper);

/// n minus the number of circles of glue(a, b).
int distance(const Matching& a, const Matching& b);

/// True iff a -> b: a has side-by-side arcs (i,j),(k,l) with j < k that b
/// replaces by the nested arcs (i,l),(j,k), everything else equal.
bool is_arrow(const Matching& a, const Matching& b);

/// B^n with its arrow relation, indexed by canonical position.
class MatchingSet {
 public:
  explicit MatchingSet(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(matchings_.size()); }
  const std::vector<Matching>& matchings() const { return matchings_; }
  const Matching& operator[](int index) const { return matchings_[index]; }
  int index_of(const Matching& m) const;

  /// Arrow pairs (from, to) as canonical indices, sorted.
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

  /// Reflexive-transitive closure of arrows: a ⪯ b.
  bool precedes_or_equal(int a, int b) const { return reach_[a][b]; }

  int distance(int a, int b) const { return distance_[a][b]; }

  /// Topological sort of the arrow DAG, ties broken by canonical index.
  std::vector<int> total_order() const;

  bool is_linear_extension(const std::vector<int>& order) const;

  /// Up to `limit` linear extensions of the arrow order, in lexicographic
  /// order of index sequences.
  std::vector<std::vector<int>> linear_extensions(std::size_t limit) const;

 private:
  int n_;
  std::vector<Matching> matchings_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<std::vector<bool>> reach_;
  std::vector<std::vector<int>> distance_;
};

std::vector<std::pair<Matching, Matching>> arrows(int n);
std::vector<Matching> total_order(int n);

/// Graph on the arcs of a matching: two arcs are joined when some b -> a
/// un-nests exactly those two arcs.
struct MatchingGraph {
  std::vector<ArcPair> vertices;           // arcs sorted by left endpoint
  std::vector<std::pair<int, int>> edges;  // vertex indices, first < second
  std::vector<int> marks;                  // one vertex per component

  int component_count() const { return static_cast<int>(marks.size()); }
  bool is_forest() const;
};

MatchingGraph matching_graph(const Matching& a);

/// Number of outermost arcs, i.e. arcs not nested under any other arc.
int bottom_arc_count(const Matching& a);

/// Subsets of [1,2n]: bit (i - 1) stands for element i.
using SubsetMask = std::uint32_t;

std::vector<int> subset_elements(SubsetMask s);
SubsetMask subset_from_elements(const std::vector<int>& elements);
inline int subset_size(SubsetMask s) { return __builtin_popcount(s); }

/// |I ∩ [1,m]| <= m/2 for every m.
bool is_admissible(SubsetMask s, int n);

/// Admissible subsets ordered by (cardinality, lexicographic).
std::vector<SubsetMask> admissible_subsets(int n);

/// Some c with d(a,b) = d(a,c) + d(c,b), c ⪯ a and c ⪯ b.  Exhaustive.
Matching find_sink(const Matching& a, const Matching& b);
int find_sink(const MatchingSet& set, int a, int b);

std::uint64_t catalan(int n);
std::uint64_t binomial(int n, int k);

}  // namespace arcring
