#include "arcring/arc_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace arcring {

namespace {

// Position of a labeling inside its block: label words are ordered
// lexicographically with circle 0 most significant and '1' < 'X'.
std::size_t word_rank(LabelMask labels, int circles) {
  std::size_t r = 0;
  for (int c = 0; c < circles; ++c)
    if ((labels >> c) & 1u) r |= std::size_t{1} << (circles - 1 - c);
  return r;
}

LabelMask word_unrank(std::size_t r, int circles) {
  LabelMask m = 0;
  for (int c = 0; c < circles; ++c)
    if ((r >> (circles - 1 - c)) & 1u) m |= LabelMask{1} << c;
  return m;
}

int checked_n(int n) {
  if (n < 1 || n > ArcRing::kMaxN)
    throw CapacityError("ArcRing: n must lie in [1, " +
                        std::to_string(ArcRing::kMaxN) + "]");
  return n;
}

std::vector<int> default_order(int n) { return MatchingSet(checked_n(n)).total_order(); }

}  // namespace

ArcRing::ArcRing(int n) : ArcRing(n, default_order(n)) {}

ArcRing::ArcRing(int n, std::vector<int> order)
    : n_(checked_n(n)), matchings_(n_), order_(std::move(order)) {
  if (!matchings_.is_linear_extension(order_))
    throw std::invalid_argument("ArcRing: order is not a linear extension of arrows");
  build();
}

void ArcRing::build() {
  const int s = size();
  diagrams_.resize(static_cast<std::size_t>(s) * s);
  for (int row = 0; row < s; ++row)
    for (int col = 0; col < s; ++col)
      diagrams_[row * s + col] = glue(matchings_[col], matchings_[row]);

  block_offset_.assign(static_cast<std::size_t>(s) * s, 0);
  for (int row : order_) {
    for (int col : order_) {
      block_offset_[row * s + col] = basis_.size();
      const int k = circle_count(row, col);
      for (std::size_t r = 0; r < (std::size_t{1} << k); ++r)
        basis_.push_back({row, col, word_unrank(r, k)});
    }
  }
}

std::size_t ArcRing::index_of(const BasisVector& v) const {
  if (v.row < 0 || v.row >= size() || v.col < 0 || v.col >= size())
    throw std::out_of_range("ArcRing: matching index out of range");
  const int k = circle_count(v.row, v.col);
  if (v.labels >> k) throw std::out_of_range("ArcRing: labeling has too many circles");
  return block_offset_[v.row * size() + v.col] + word_rank(v.labels, k);
}

std::span<const BasisVector> ArcRing::block(int row, int col) const {
  return std::span<const BasisVector>(basis_).subspan(
      block_offset_[row * size() + col], block_dimension(row, col));
}

std::string ArcRing::label_word(const BasisVector& v) const {
  const int k = circle_count(v.row, v.col);
  std::string w(k, '1');
  for (int c = 0; c < k; ++c)
    if ((v.labels >> c) & 1u) w[c] = 'X';
  return w;
}

LabelMask ArcRing::labels_from_word(int row, int col, const std::string& word) const {
  if (static_cast<int>(word.size()) != circle_count(row, col))
    throw std::invalid_argument("label word length differs from circle count");
  LabelMask m = 0;
  for (std::size_t c = 0; c < word.size(); ++c) {
    if (word[c] == 'X') m |= LabelMask{1} << c;
    else if (word[c] != '1') throw std::invalid_argument("label word: expected '1' or 'X'");
  }
  return m;
}

int ArcRing::degree(const BasisVector& v) const {
  return 2 * __builtin_popcount(v.labels) + n_ - circle_count(v.row, v.col);
}

int ArcRing::degree(const RingElement& x) const {
  int d = -1;
  for (const auto& [v, c] : x.terms()) {
    const int dv = degree(v);
    if (d >= 0 && dv != d) throw std::invalid_argument("degree: element not homogeneous");
    d = dv;
  }
  return d < 0 ? 0 : d;
}

RingElement ArcRing::element(const BasisVector& v, Coeff c) const {
  index_of(v);
  RingElement x(n_);
  x.add(v, c);
  return x;
}

RingElement ArcRing::idempotent(int a) const { return element({a, a, 0}); }

RingElement ArcRing::block_one(int row, int col) const { return element({row, col, 0}); }

RingElement ArcRing::unit() const {
  RingElement u(n_);
  for (int a = 0; a < size(); ++a) u.add({a, a, 0}, 1);
  return u;
}

RingElement ArcRing::multiply(const BasisVector& x, const BasisVector& y) const {
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  return multiply(x, y, order);
}

RingElement ArcRing::multiply(const BasisVector& x, const BasisVector& y,
                              std::span<const int> arc_order) const {
  RingElement out(n_);
  if (x.col != y.row) return out;

  const Matching& top = matchings_[x.row];
  const Matching& middle = matchings_[x.col];
  const Matching& bottom = matchings_[y.col];
  const int points = 2 * n_;
  // Vertex e-1 is endpoint e of the upper diagram W(top)middle, vertex
  // points+e-1 endpoint e of the lower diagram W(middle)bottom.
  auto upper = [](int e) { return e - 1; };
  auto lower = [points](int e) { return points + e - 1; };

  surgery::StrandGraph g(2 * points);
  for (auto [i, j] : top.pairs()) g.add_edge(upper(i), upper(j));
  const auto middle_arcs = middle.pairs();
  std::vector<int> upper_mid, lower_mid;
  for (auto [i, j] : middle_arcs) upper_mid.push_back(g.add_edge(upper(i), upper(j)));
  for (auto [i, j] : middle_arcs) lower_mid.push_back(g.add_edge(lower(i), lower(j)));
  for (auto [i, j] : bottom.pairs()) g.add_edge(lower(i), lower(j));

  auto representatives = [](const ClosedDiagram& d, auto vertex) {
    std::vector<int> rep;
    for (const auto& circle : d.circles) rep.push_back(vertex(circle.front()));
    return rep;
  };

  int count = 0;
  auto comp = g.components(count);
  LabelMask start = 0;
  surgery::place_labels(start, comp, x.labels, representatives(diagram(x.row, x.col), upper));
  surgery::place_labels(start, comp, y.labels, representatives(diagram(y.row, y.col), lower));

  surgery::LabelState state{{start, 1}};
  for (int t : arc_order) {
    const auto [i, j] = middle_arcs.at(t);
    state = surgery::apply_saddle(
        g, state, {upper_mid[t], lower_mid[t], {upper(i), lower(i)}, {upper(j), lower(j)}});
    if (state.empty()) return out;
  }

  comp = g.components(count);
  const ClosedDiagram& target = diagram(x.row, y.col);
  if (count != target.circle_count())
    throw InvariantFailure("multiply: result circles differ from glue(c, a)");
  const auto rep = representatives(target, upper);
  for (const auto& [mask, c] : state)
    out.add({x.row, y.col, surgery::read_labels(comp, mask, rep)}, c);
  return out;
}

RingElement ArcRing::multiply(const RingElement& x, const RingElement& y) const {
  if (x.n() != n_ || y.n() != n_) throw SizeMismatch("multiply: element of a different n");
  std::map<int, std::vector<std::pair<BasisVector, Coeff>>> by_row;
  for (const auto& [v, c] : y.terms()) by_row[v.row].emplace_back(v, c);
  RingElement out(n_);
  for (const auto& [xv, xc] : x.terms()) {
    auto it = by_row.find(xv.col);
    if (it == by_row.end()) continue;
    for (const auto& [yv, yc] : it->second) {
      const RingElement p = multiply(xv, yv);
      for (const auto& [v, c] : p.terms()) out.add(v, xc * yc * c);
    }
  }
  return out;
}

std::vector<Coeff> ArcRing::coordinates(const RingElement& x) const {
  if (x.n() != n_) throw SizeMismatch("coordinates: element of a different n");
  std::vector<Coeff> out(dimension(), 0);
  for (const auto& [v, c] : x.terms()) out[index_of(v)] = c;
  return out;
}

RingElement ArcRing::from_coordinates(std::span<const Coeff> coords) const {
  if (coords.size() != dimension()) throw SizeMismatch("from_coordinates: wrong length");
  RingElement x(n_);
  for (std::size_t i = 0; i < coords.size(); ++i) x.add(basis_[i], coords[i]);
  return x;
}

ArcRing build_ring(int n) { return ArcRing(n); }

std::size_t expected_dimension(const MatchingSet& set) {
  std::size_t total = 0;
  for (int a = 0; a < set.size(); ++a)
    for (int b = 0; b < set.size(); ++b)
      total += std::size_t{1} << (set.n() - set.distance(a, b));
  return total;
}

std::size_t commutator_quotient_rank(const ArcRing& ring) {
  const std::size_t dim = ring.dimension();
  RowLattice commutators(dim);
  std::set<std::vector<Coeff>> seen;
  for (const auto& x : ring.basis()) {
    for (const auto& y : ring.basis()) {
      if (x.col != y.row && y.col != x.row) continue;
      const RingElement c = ring.multiply(x, y) - ring.multiply(y, x);
      if (c.is_zero()) continue;
      auto coords = ring.coordinates(c);
      if (!seen.insert(coords).second) continue;
      commutators.insert(to_int_vector(coords));
    }
  }
  return dim - commutators.rank();
}

}  // namespace arcring
