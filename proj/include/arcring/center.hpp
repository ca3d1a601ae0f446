#pragma once

// The center of H^n as the equalizer of the diagonal blocks, the central
// elements X_i, the map from R/R1 onto the center, and the resulting
// action of the symmetric group S_2n.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcring/arc_ring.hpp"
#include "arcring/presentations.hpp"

namespace arcring {

/// Lattice basis of Z(H^n).  Central elements live on diagonal blocks,
/// where every basis vector has even degree 2d with d the number of X
/// labels; elements are grouped by d in increasing order.
struct CenterBasis {
  int n = 0;
  std::vector<RingElement> elements;
  std::vector<int> label_degree;              // d for each element
  std::vector<std::size_t> graded_ranks;      // indexed by d in [0, 2n]
  std::vector<std::size_t> offsets;           // first element of each d

  std::size_t rank() const { return elements.size(); }
};

CenterBasis center_basis(const ArcRing& ring);

/// x commutes with every basis vector of the ring.
bool is_central(const ArcRing& ring, const RingElement& x);

/// Σ_a (-1)^i X on the circle of W(a)a through endpoint i.
RingElement central_X(const ArcRing& ring, int i);

/// Product of central_X(i) over i in I, increasing i.  Empty I gives 1.
RingElement central_monomial(const ArcRing& ring, SubsetMask I);

/// Coordinates of a central element in the center basis, or nullopt when
/// the element is not in the center lattice.
std::optional<IntVector> center_coordinates(const CenterBasis& basis, const ArcRing& ring,
                                            const RingElement& z);
RingElement center_element(const CenterBasis& basis, const IntVector& coords);

struct PresentationReport {
  int n = 0;
  std::vector<std::string> relation_failures;
  std::vector<std::size_t> center_ranks;
  std::vector<std::size_t> quotient_ranks;
  /// Per d: columns are admissible X_I with |I| = d (admissible order),
  /// rows are center basis coordinates of label degree d.
  std::vector<IntMatrix> matrices;
  bool images_in_center = true;
  bool unimodular = true;
  bool quotient_torsion_free = true;
  std::vector<std::string> multiplicativity_failures;

  bool relations_hold() const { return relation_failures.empty(); }
  bool ranks_match() const { return center_ranks == quotient_ranks; }
  bool multiplicative() const { return multiplicativity_failures.empty(); }
  bool passed() const;
};

PresentationReport verify_presentation_iso(const ArcRing& ring, const CenterBasis& basis);

/// S_2n acting on Z(H^n) through X_i -> X_σ(i).  Permutations are given
/// as vectors p with p[i-1] = σ(i).
class SymmetricAction {
 public:
  explicit SymmetricAction(const ArcRing& ring);

  const CenterBasis& center() const { return center_; }
  const PresentationReport& presentation() const { return report_; }

  /// Admissible representative of a center element given in coordinates.
  SquareFreePoly to_polynomial(const IntVector& coords) const;
  IntVector from_polynomial(const SquareFreePoly& p) const;

  IntVector act(const std::vector<int>& sigma, const IntVector& coords) const;

 private:
  const ArcRing& ring_;
  CenterBasis center_;
  PresentationReport report_;
  std::vector<std::vector<SubsetMask>> admissible_;  // by cardinality
};

/// (σ τ)(i) = σ(τ(i)).
std::vector<int> compose_permutations(const std::vector<int>& sigma,
                                      const std::vector<int>& tau);

/// Coordinates of the center basis over the diagonal basis vectors sorted
/// canonically, so that lattices from different orders can be compared.
IntMatrix canonical_center_matrix(const ArcRing& ring, const CenterBasis& basis);

/// The center lattice computed under each given linear extension is the
/// same.  An empty list uses up to three extensions.
bool total_order_independence(int n, std::vector<std::vector<int>> orders = {});

}  // namespace arcring
