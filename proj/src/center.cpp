#include "arcring/center.hpp"

#include <algorithm>
#include <optional>

namespace arcring {

namespace {

int label_count(const BasisVector& v) { return __builtin_popcount(v.labels); }

// Diagonal basis vectors with d labels X, as ring basis indices in basis
// order.
std::vector<std::size_t> diagonal_indices(const ArcRing& ring, int d) {
  std::vector<std::size_t> out;
  const auto& basis = ring.basis();
  for (std::size_t t = 0; t < basis.size(); ++t)
    if (basis[t].row == basis[t].col && label_count(basis[t]) == d) out.push_back(t);
  return out;
}

IntMatrix center_block(const ArcRing& ring, const CenterBasis& basis, int d,
                       const std::vector<std::size_t>& unknowns) {
  IntMatrix m(unknowns.size(), basis.graded_ranks[d]);
  for (std::size_t e = 0; e < basis.graded_ranks[d]; ++e) {
    const RingElement& z = basis.elements[basis.offsets[d] + e];
    for (std::size_t r = 0; r < unknowns.size(); ++r)
      m(r, e) = static_cast<long>(z.coefficient(ring.basis()[unknowns[r]]));
  }
  return m;
}

std::string subset_name(SubsetMask s) {
  std::string out = "X{";
  bool first = true;
  for (int i : subset_elements(s)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

CenterBasis center_basis(const ArcRing& ring) {
  CenterBasis out;
  out.n = ring.n();
  const int size = ring.matchings().size();
  for (int d = 0; d <= 2 * ring.n(); ++d) {
    out.offsets.push_back(out.elements.size());
    const auto unknowns = diagonal_indices(ring, d);
    if (unknowns.empty()) {
      out.graded_ranks.push_back(0);
      continue;
    }
    // One column per unknown; rows are the off-diagonal basis vectors hit
    // by z_a·_a1_b - _a1_b·z_b.
    std::map<std::size_t, std::size_t> row_of;
    std::vector<std::map<std::size_t, Coeff>> columns(unknowns.size());
    auto put = [&](std::size_t col, const RingElement& x, Coeff sign) {
      for (const auto& [v, c] : x.terms()) {
        const auto [it, inserted] = row_of.emplace(ring.index_of(v), row_of.size());
        columns[col][it->second] += sign * c;
      }
    };
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      const BasisVector& u = ring.basis()[unknowns[j]];
      const int a = u.row;
      for (int b = 0; b < size; ++b) {
        if (b == a) continue;
        put(j, ring.multiply(u, BasisVector{a, b, 0}), 1);
        put(j, ring.multiply(BasisVector{b, a, 0}, u), -1);
      }
    }
    IntMatrix m(row_of.size(), unknowns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto& [r, c] : columns[j]) m(r, j) = static_cast<long>(c);

    const auto kernel = kernel_basis(m);
    for (const auto& k : kernel) {
      RingElement z(ring.n());
      for (std::size_t j = 0; j < unknowns.size(); ++j)
        if (k[j] != 0) z.add(ring.basis()[unknowns[j]], to_int64(k[j]));
      out.elements.push_back(std::move(z));
      out.label_degree.push_back(d);
    }
    out.graded_ranks.push_back(kernel.size());
  }
  return out;
}

bool is_central(const ArcRing& ring, const RingElement& x) {
  for (const auto& v : ring.basis()) {
    const RingElement y = ring.element(v);
    if (ring.multiply(x, y) != ring.multiply(y, x)) return false;
  }
  return true;
}

RingElement central_X(const ArcRing& ring, int i) {
  if (i < 1 || i > 2 * ring.n()) throw std::out_of_range("central_X: i outside [1,2n]");
  const Coeff sign = i % 2 ? -1 : 1;
  RingElement out(ring.n());
  for (int a = 0; a < ring.matchings().size(); ++a)
    out.add({a, a, LabelMask{1} << ring.diagram(a, a).circle_of(i)}, sign);
  return out;
}

RingElement central_monomial(const ArcRing& ring, SubsetMask I) {
  RingElement out = ring.unit();
  for (int i : subset_elements(I)) out = ring.multiply(out, central_X(ring, i));
  return out;
}

std::optional<IntVector> center_coordinates(const CenterBasis& basis, const ArcRing& ring,
                                            const RingElement& z) {
  if (z.n() != basis.n || ring.n() != basis.n)
    throw SizeMismatch("center_coordinates: different n");
  for (const auto& [v, c] : z.terms())
    if (v.row != v.col) return std::nullopt;
  IntVector out;
  for (int d = 0; d <= 2 * basis.n; ++d) {
    const auto unknowns = diagonal_indices(ring, d);
    IntVector target(unknowns.size());
    for (std::size_t r = 0; r < unknowns.size(); ++r)
      target[r] = static_cast<long>(z.coefficient(ring.basis()[unknowns[r]]));
    if (basis.graded_ranks[d] == 0) {
      if (std::any_of(target.begin(), target.end(), [](const Integer& x) { return x != 0; }))
        return std::nullopt;
      continue;
    }
    const auto x = solve_in_column_span(center_block(ring, basis, d, unknowns), target);
    if (!x) return std::nullopt;
    out.insert(out.end(), x->begin(), x->end());
  }
  return out;
}

RingElement center_element(const CenterBasis& basis, const IntVector& coords) {
  if (coords.size() != basis.rank()) throw SizeMismatch("center_element: wrong length");
  RingElement z(basis.n);
  for (std::size_t e = 0; e < coords.size(); ++e)
    if (coords[e] != 0) z += to_int64(coords[e]) * basis.elements[e];
  return z;
}

bool PresentationReport::passed() const {
  return relations_hold() && images_in_center && ranks_match() && unimodular &&
         quotient_torsion_free && multiplicative();
}

PresentationReport verify_presentation_iso(const ArcRing& ring, const CenterBasis& basis) {
  const int n = ring.n();
  const int vars = 2 * n;
  PresentationReport report;
  report.n = n;
  report.center_ranks = basis.graded_ranks;

  const auto quotient = quotient_graded_ranks(ideal_R1(n));
  report.quotient_ranks = quotient.ranks;
  report.quotient_torsion_free = quotient.torsion_free();

  std::vector<RingElement> x;
  for (int i = 1; i <= vars; ++i) x.push_back(central_X(ring, i));

  // Every square-free monomial, built up one variable at a time.
  const SubsetMask all = (SubsetMask{1} << vars) - 1;
  std::vector<RingElement> mono(std::size_t{all} + 1, ring.zero());
  mono[0] = ring.unit();
  for (SubsetMask s = 1; s <= all; ++s) {
    const int top = 31 - __builtin_clz(s);
    mono[s] = ring.multiply(mono[s & ~(SubsetMask{1} << top)], x[top]);
  }

  for (int i = 1; i <= vars; ++i)
    if (!ring.multiply(x[i - 1], x[i - 1]).is_zero())
      report.relation_failures.push_back("X" + std::to_string(i) + "^2 != 0");
  for (int k = 1; k <= vars; ++k) {
    RingElement sum = ring.zero();
    for (SubsetMask s = 1; s <= all; ++s)
      if (subset_size(s) == k) sum += mono[s];
    if (!sum.is_zero())
      report.relation_failures.push_back("e" + std::to_string(k) + " != 0");
  }

  const auto admissible = admissible_subsets(n);
  std::map<SubsetMask, IntVector> image;
  for (int d = 0; d <= vars; ++d) {
    std::vector<IntVector> cols;
    for (SubsetMask s : admissible) {
      if (subset_size(s) != d) continue;
      const auto coords = center_coordinates(basis, ring, mono[s]);
      if (!coords) {
        report.images_in_center = false;
        cols.push_back(IntVector(basis.graded_ranks[d]));
        continue;
      }
      IntVector slice(coords->begin() + basis.offsets[d],
                      coords->begin() + basis.offsets[d] + basis.graded_ranks[d]);
      image[s] = *coords;
      cols.push_back(std::move(slice));
    }
    IntMatrix m = IntMatrix::from_columns(cols, basis.graded_ranks[d]);
    if (m.rows() != m.cols() || (m.rows() > 0 && abs(determinant(m)) != 1))
      report.unimodular = false;
    report.matrices.push_back(std::move(m));
  }

  for (int i = 1; i <= vars; ++i) {
    for (SubsetMask s : admissible) {
      const SquareFreePoly reduced = reduce_to_admissible(
          SquareFreePoly::variable(n, i) * SquareFreePoly::monomial(n, s));
      RingElement lhs = ring.zero();
      for (const auto& [t, c] : reduced.terms()) lhs += c * mono[t];
      const RingElement rhs = ring.multiply(x[i - 1], mono[s]);
      if (lhs != rhs)
        report.multiplicativity_failures.push_back("X" + std::to_string(i) + "*" +
                                                   subset_name(s));
    }
  }
  return report;
}

SymmetricAction::SymmetricAction(const ArcRing& ring)
    : ring_(ring), center_(center_basis(ring)), report_(verify_presentation_iso(ring, center_)) {
  if (!report_.passed())
    throw InvariantFailure("symmetric action: R/R1 does not map isomorphically onto the center");
  admissible_.resize(2 * ring.n() + 1);
  for (SubsetMask s : admissible_subsets(ring.n())) admissible_[subset_size(s)].push_back(s);
}

SquareFreePoly SymmetricAction::to_polynomial(const IntVector& coords) const {
  if (coords.size() != center_.rank()) throw SizeMismatch("to_polynomial: wrong length");
  SquareFreePoly p(ring_.n());
  for (std::size_t d = 0; d < admissible_.size(); ++d) {
    if (admissible_[d].empty()) continue;
    IntVector slice(coords.begin() + center_.offsets[d],
                    coords.begin() + center_.offsets[d] + center_.graded_ranks[d]);
    const auto x = solve_in_column_span(report_.matrices[d], slice);
    if (!x) throw InvariantFailure("to_polynomial: presentation matrix not invertible");
    for (std::size_t t = 0; t < x->size(); ++t)
      p.add(admissible_[d][t], to_int64((*x)[t]));
  }
  return p;
}

IntVector SymmetricAction::from_polynomial(const SquareFreePoly& p) const {
  const SquareFreePoly reduced = reduce_to_admissible(p);
  IntVector out;
  for (std::size_t d = 0; d < admissible_.size(); ++d) {
    IntVector x(admissible_[d].size());
    for (std::size_t t = 0; t < x.size(); ++t)
      x[t] = static_cast<long>(reduced.coefficient(admissible_[d][t]));
    const IntVector y = report_.matrices[d] * x;
    out.insert(out.end(), y.begin(), y.end());
  }
  return out;
}

IntVector SymmetricAction::act(const std::vector<int>& sigma, const IntVector& coords) const {
  return from_polynomial(to_polynomial(coords).permuted(sigma));
}

std::vector<int> compose_permutations(const std::vector<int>& sigma,
                                      const std::vector<int>& tau) {
  if (sigma.size() != tau.size()) throw SizeMismatch("compose: permutations of different size");
  std::vector<int> out(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) out[i] = sigma[tau[i] - 1];
  return out;
}

IntMatrix canonical_center_matrix(const ArcRing& ring, const CenterBasis& basis) {
  std::vector<BasisVector> diagonal;
  for (const auto& v : ring.basis())
    if (v.row == v.col) diagonal.push_back(v);
  std::sort(diagonal.begin(), diagonal.end());
  IntMatrix m(diagonal.size(), basis.rank());
  for (std::size_t e = 0; e < basis.rank(); ++e)
    for (std::size_t r = 0; r < diagonal.size(); ++r)
      m(r, e) = static_cast<long>(basis.elements[e].coefficient(diagonal[r]));
  return m;
}

bool total_order_independence(int n, std::vector<std::vector<int>> orders) {
  if (orders.empty()) orders = MatchingSet(n).linear_extensions(3);
  std::optional<IntMatrix> reference;
  for (const auto& order : orders) {
    const ArcRing ring(n, order);
    IntMatrix m = canonical_center_matrix(ring, center_basis(ring));
    if (!reference) reference = std::move(m);
    else if (!lattice_equal(*reference, m)) return false;
  }
  return true;
}

}  // namespace arcring
