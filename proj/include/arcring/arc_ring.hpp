#pragma once

// The arc ring H^n.  As an abelian group it is the direct sum over pairs of
// crossingless matchings (b, a) of F(W(b)a) = A^{⊗ circles}; the product
// _cH_b ⊗ _bH_a -> _cH_a is the contraction cobordism, realised as n
// saddles, one per arc of b.  Products across different middle matchings
// vanish.

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "arcring/combinatorics.hpp"
#include "arcring/integer_linalg.hpp"
#include "arcring/surgery.hpp"

namespace arcring {

using Coeff = long long;
using LabelMask = surgery::Mask;

/// Integer combination of basis keys sharing one n.
template <class Key>
class Combination {
 public:
  Combination() = default;
  explicit Combination(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Key& k, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Combination& operator+=(const Combination& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(Coeff s, const Combination& x) {
    Combination out(x.n_);
    if (s == 0) return out;
    for (const auto& [k, c] : x.terms_) out.terms_.emplace(k, s * c);
    return out;
  }
  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  void check(const Combination& o) const {
    if (o.n_ != n_) throw SizeMismatch("combination: elements of different n");
  }

  int n_ = 0;
  std::map<Key, Coeff> terms_;
};

/// Basis vector of _row H_col: bit c of `labels` is X on circle c of
/// glue(col, row) (circles ordered by smallest endpoint).  row and col are
/// canonical matching indices.
struct BasisVector {
  int row = 0;
  int col = 0;
  LabelMask labels = 0;

  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

using RingElement = Combination<BasisVector>;

class ArcRing {
 public:
  static constexpr int kMaxN = 5;

  /// Basis ordered by the default total order of B^n.
  explicit ArcRing(int n);
  /// Basis ordered by the given linear extension (canonical indices).
  ArcRing(int n, std::vector<int> order);

  int n() const { return n_; }
  const MatchingSet& matchings() const { return matchings_; }
  const Matching& matching(int index) const { return matchings_[index]; }
  const std::vector<int>& order() const { return order_; }

  const std::vector<BasisVector>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t index_of(const BasisVector& v) const;
  /// Basis vectors of one block, contiguous in basis().
  std::span<const BasisVector> block(int row, int col) const;

  const ClosedDiagram& diagram(int row, int col) const {
    return diagrams_[row * size() + col];
  }
  int circle_count(int row, int col) const { return diagram(row, col).circle_count(); }
  std::size_t block_dimension(int row, int col) const {
    return std::size_t{1} << circle_count(row, col);
  }

  /// Label word of a basis vector, circle 0 first.
  std::string label_word(const BasisVector& v) const;
  LabelMask labels_from_word(int row, int col, const std::string& word) const;

  int degree(const BasisVector& v) const;
  /// Degree of a homogeneous element; throws otherwise.  Zero has degree 0.
  int degree(const RingElement& x) const;

  RingElement zero() const { return RingElement(n_); }
  RingElement element(const BasisVector& v, Coeff c = 1) const;
  RingElement idempotent(int a) const;
  /// _row 1_col: the all-One labeling of glue(col, row).
  RingElement block_one(int row, int col) const;
  RingElement unit() const;

  RingElement multiply(const BasisVector& x, const BasisVector& y) const;
  /// Same product with the arcs of the middle matching surgered in the
  /// given order (a permutation of 0..n-1, arcs sorted by left endpoint).
  RingElement multiply(const BasisVector& x, const BasisVector& y,
                       std::span<const int> arc_order) const;
  RingElement multiply(const RingElement& x, const RingElement& y) const;

  std::vector<Coeff> coordinates(const RingElement& x) const;
  RingElement from_coordinates(std::span<const Coeff> coords) const;

 private:
  int size() const { return matchings_.size(); }
  void build();

  int n_;
  MatchingSet matchings_;
  std::vector<int> order_;
  std::vector<ClosedDiagram> diagrams_;
  std::vector<BasisVector> basis_;
  std::vector<std::size_t> block_offset_;  // row * size + col
};

ArcRing build_ring(int n);

/// Σ_{a,b} 2^{n - d(a,b)}, computed from distances alone.
std::size_t expected_dimension(const MatchingSet& set);

/// Rank of H^n / [H^n, H^n].
std::size_t commutator_quotient_rank(const ArcRing& ring);

}  // namespace arcring
