#pragma once

// The square-free polynomial ring Z[X_1..X_2n]/(X_i^2), the ideals R1
// (generated by the full elementary symmetric functions) and R2 (partial
// elementary symmetric functions plus monomials of degree n+1), their
// graded quotients, and the admissible normal form.
//
// Grading here is by cardinality |I|; the cohomological degree is 2|I|.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "arcring/combinatorics.hpp"
#include "arcring/integer_linalg.hpp"

namespace arcring {

class SquareFreePoly {
 public:
  SquareFreePoly() = default;
  explicit SquareFreePoly(int n) : n_(n) {}

  static SquareFreePoly monomial(int n, SubsetMask s, long long coeff = 1);
  static SquareFreePoly constant(int n, long long value);
  /// X_i for i in [1,2n].
  static SquareFreePoly variable(int n, int i);

  int n() const { return n_; }
  int variable_count() const { return 2 * n_; }
  const std::map<SubsetMask, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(SubsetMask s) const;

  void add(SubsetMask s, long long coeff);

  /// Part of cardinality d.
  SquareFreePoly component(int d) const;
  bool is_homogeneous() const;

  /// Image under X_i -> X_{perm[i-1]}; perm is a permutation of [1,2n].
  SquareFreePoly permuted(const std::vector<int>& perm) const;

  SquareFreePoly& operator+=(const SquareFreePoly& o);
  SquareFreePoly& operator-=(const SquareFreePoly& o);
  friend SquareFreePoly operator+(SquareFreePoly a, const SquareFreePoly& b) { return a += b; }
  friend SquareFreePoly operator-(SquareFreePoly a, const SquareFreePoly& b) { return a -= b; }
  friend SquareFreePoly operator*(long long c, const SquareFreePoly& p);
  /// Product with X_i^2 = 0.
  friend SquareFreePoly operator*(const SquareFreePoly& a, const SquareFreePoly& b);
  friend bool operator==(const SquareFreePoly&, const SquareFreePoly&) = default;

  /// e.g. "X1X2 - 2X3 + 1"; "0" for zero.
  std::string to_string() const;

 private:
  void check(const SquareFreePoly& o) const;

  int n_ = 0;
  std::map<SubsetMask, long long> terms_;
};

/// Sum of X_J over J ⊆ I, |J| = k.  Zero when k > |I| or k < 0.
SquareFreePoly elem_sym(int k, SubsetMask I, int n);

/// The interval [lo, hi] as a subset; empty when lo > hi.
SubsetMask interval(int lo, int hi);

/// Subsets of [1,2n] of cardinality d, lexicographic in sorted elements.
/// This is the monomial basis of degree d used by the span matrices.
std::vector<SubsetMask> monomials_of_degree(int n, int d);

/// Coordinates of the degree-d component of p in monomials_of_degree(n, d).
IntVector monomial_coordinates(const SquareFreePoly& p, int d);

/// An ideal of the square-free ring, stored degree by degree as a lattice
/// of coordinate vectors closed under multiplication by every X_i.
class GradedIdealSpan {
 public:
  GradedIdealSpan(int n, const std::vector<SquareFreePoly>& generators);

  int n() const { return n_; }
  int top_degree() const { return 2 * n_; }

  /// Columns span the degree-d part, in Hermite normal form.
  IntMatrix span(int d) const;
  std::size_t rank(int d) const { return degrees_[d].rank(); }
  bool contains(const SquareFreePoly& p) const;

 private:
  int n_;
  std::vector<RowLattice> degrees_;
};

/// Generators e_k([1,2n]), k in [1,2n].
std::vector<SquareFreePoly> r1_generators(int n);
/// Generators e_k(I) with k + |I| = 2n+1 and X_I with |I| = n+1.
std::vector<SquareFreePoly> r2_generators(int n);

GradedIdealSpan ideal_R1(int n);
GradedIdealSpan ideal_R2(int n);

/// Degreewise equality of the two ideals.
bool lattice_equal(const GradedIdealSpan& a, const GradedIdealSpan& b);

struct QuotientRanks {
  std::vector<std::size_t> ranks;        // indexed by cardinality d
  std::vector<int> torsion_degrees;      // degrees with a nontrivial invariant factor
  bool torsion_free() const { return torsion_degrees.empty(); }
  std::size_t total() const;
};

QuotientRanks quotient_graded_ranks(const GradedIdealSpan& ideal);

/// Number of admissible subsets of each cardinality.
std::vector<std::size_t> admissible_counts_by_degree(int n);

/// Representative of p modulo R1 supported on admissible subsets.
SquareFreePoly reduce_to_admissible(const SquareFreePoly& p);

/// e_k([1,2n-k+1]) - Σ_{i<k} (-1)^i e_i([2n-k+2,2n]) e_{k-i}([1,2n]) in the
/// square-free ring; the identity says this is zero.
SquareFreePoly prefix_identity_residual(int n, int k);
/// X_{[1,n+1]} - Σ_{i<n} (-1)^i e_i([n+2,2n]) e_{n+1-i}([1,2n]).
SquareFreePoly top_monomial_identity_residual(int n);

/// Adjacent transposition s_i = (i, i+1) as a permutation of [1,2n].
std::vector<int> adjacent_transposition(int n, int i);

/// True iff every generator, permuted by every adjacent transposition,
/// stays in the ideal.
bool stable_under_transpositions(const GradedIdealSpan& ideal,
                                 const std::vector<SquareFreePoly>& generators);

}  // namespace arcring
