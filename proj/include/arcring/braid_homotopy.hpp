#pragma once

// The H^n-bimodule F(U_i) for the flat tangle U_i (a cap on points i,i+1
// below a cup on the same points, every other strand vertical), the saddle
// maps α : F(U_i) -> H^n and β : H^n -> F(U_i), and the check that
// l_{X_i} - r_{X_{i+1}} and l_{X_{i+1}} - r_{X_i} are null-homotopic on the
// complex 0 -> F(U_i) -> H^n -> 0 via ±β.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "arcring/arc_ring.hpp"

namespace arcring {

struct FlatComposite {
  Matching result;
  int closed_circles = 0;
};

/// U_i stacked on top of a.  Endpoints i and i+1 of the result are joined;
/// if they were already joined in a a circle closes off.
FlatComposite compose_ui(int i, const Matching& a);

/// Basis vector of F(W(row) U_i col): bit c of labels is X on circle c of
/// glue(U_i∘col, row) (ordered by smallest endpoint), followed by the free
/// circle when U_i∘col closes one.
struct UiVector {
  int row = 0;
  int col = 0;
  LabelMask labels = 0;

  friend auto operator<=>(const UiVector&, const UiVector&) = default;
};

using UiElement = Combination<UiVector>;

class UiBimodule {
 public:
  /// Keeps a reference to ring.
  UiBimodule(const ArcRing& ring, int i);

  int i() const { return i_; }
  int n() const { return ring_.n(); }
  const ArcRing& ring() const { return ring_; }

  const std::vector<UiVector>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t index_of(const UiVector& v) const;

  const FlatComposite& composite(int col) const { return composites_[col]; }
  /// glue(U_i∘col, row), without the free circle.
  const ClosedDiagram& diagram(int row, int col) const {
    return diagrams_[row * ring_.matchings().size() + col];
  }
  int circle_count(int row, int col) const;
  int degree(const UiVector& v) const;

  UiElement zero() const { return UiElement(n()); }
  UiElement element(const UiVector& v, Coeff c = 1) const;

  UiElement left(const BasisVector& x, const UiVector& m) const;
  UiElement right(const UiVector& m, const BasisVector& y) const;
  UiElement left(const RingElement& x, const UiElement& m) const;
  UiElement right(const UiElement& m, const RingElement& y) const;

  RingElement alpha(const UiVector& m) const;
  RingElement alpha(const UiElement& m) const;
  UiElement beta(const BasisVector& x) const;
  UiElement beta(const RingElement& x) const;

 private:
  const ArcRing& ring_;
  int i_;
  std::vector<FlatComposite> composites_;  // by canonical col index
  std::vector<ClosedDiagram> diagrams_;     // row * size + col
  std::vector<UiVector> basis_;
  std::map<std::pair<int, int>, std::size_t> block_offset_;
};

struct HomotopyCheck {
  std::string name;           // e.g. "l_X1 - r_X2"
  bool chain_map = false;
  int sign = 0;               // s with φ = s(αβ) on H^n and s(βα) on F; 0 if none
  std::size_t checked_vectors = 0;
  std::string counterexample;

  bool passed() const { return chain_map && sign != 0; }
};

struct HomotopyReport {
  int n = 0;
  int i = 0;
  std::vector<HomotopyCheck> checks;

  bool passed() const;
};

HomotopyReport verify_null_homotopy(const ArcRing& ring, int i);

}  // namespace arcring
