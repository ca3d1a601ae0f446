#include "arcring/braid_homotopy.hpp"

#include <algorithm>

#include "arcring/center.hpp"

namespace arcring {

namespace {

// One layer of a stacked diagram: top points carry the arcs of the row
// matching, bottom points the arcs of the col matching.  Between them run
// vertical strands, or for U_i a cup on the top points i,i+1, a cap on the
// bottom points i,i+1 and verticals elsewhere.
struct Piece {
  std::vector<int> top;          // vertex of top point e at e - 1
  std::vector<int> bottom;
  std::vector<int> top_arcs;     // edge per arc of the row matching
  std::vector<int> bottom_arcs;  // edge per arc of the col matching
  std::vector<int> verticals;    // edge per point, -1 where absent
  int cup = -1;
  int cap = -1;
};

Piece add_piece(surgery::StrandGraph& g, int offset, const Matching& row,
                const Matching& col, int ui) {
  const int points = row.point_count();
  Piece p;
  for (int e = 0; e < points; ++e) {
    p.top.push_back(offset + e);
    p.bottom.push_back(offset + points + e);
  }
  for (auto [i, j] : row.pairs()) p.top_arcs.push_back(g.add_edge(p.top[i - 1], p.top[j - 1]));
  p.verticals.assign(points, -1);
  for (int e = 1; e <= points; ++e)
    if (ui == 0 || (e != ui && e != ui + 1))
      p.verticals[e - 1] = g.add_edge(p.top[e - 1], p.bottom[e - 1]);
  if (ui != 0) {
    p.cup = g.add_edge(p.top[ui - 1], p.top[ui]);
    p.cap = g.add_edge(p.bottom[ui - 1], p.bottom[ui]);
  }
  for (auto [i, j] : col.pairs())
    p.bottom_arcs.push_back(g.add_edge(p.bottom[i - 1], p.bottom[j - 1]));
  return p;
}

std::vector<int> circle_representatives(const ClosedDiagram& d, const Piece& p) {
  std::vector<int> rep;
  for (const auto& circle : d.circles) rep.push_back(p.top[circle.front() - 1]);
  return rep;
}

// Contraction saddles joining the bottom arcs of `upper` to the equal top
// arcs of `lower`.
std::vector<surgery::Saddle> contraction(const Matching& middle, const Piece& upper,
                                         const Piece& lower) {
  std::vector<surgery::Saddle> out;
  const auto arcs = middle.pairs();
  for (std::size_t t = 0; t < arcs.size(); ++t) {
    const auto [i, j] = arcs[t];
    out.push_back({upper.bottom_arcs[t], lower.top_arcs[t],
                   {upper.bottom[i - 1], lower.top[i - 1]},
                   {upper.bottom[j - 1], lower.top[j - 1]}});
  }
  return out;
}

// Places the labels, runs the saddles and reads the result.  Returns the
// final label states keyed by result mask.
surgery::LabelState run(surgery::StrandGraph& g,
                        const std::vector<std::pair<LabelMask, std::vector<int>>>& inputs,
                        const std::vector<surgery::Saddle>& saddles,
                        const std::vector<int>& result_rep) {
  int count = 0;
  auto comp = g.components(count);
  LabelMask start = 0;
  for (const auto& [labels, rep] : inputs) surgery::place_labels(start, comp, labels, rep);
  surgery::LabelState state{{start, 1}};
  for (const auto& s : saddles) {
    state = surgery::apply_saddle(g, state, s);
    if (state.empty()) return state;
  }
  comp = g.components(count);
  if (count != static_cast<int>(result_rep.size()))
    throw InvariantFailure("bimodule surgery: result circles differ from the target diagram");
  surgery::LabelState out;
  for (const auto& [mask, c] : state) {
    const LabelMask m = surgery::read_labels(comp, mask, result_rep);
    out[m] += c;
  }
  return out;
}

}  // namespace

FlatComposite compose_ui(int i, const Matching& a) {
  if (i < 1 || i >= a.point_count())
    throw std::out_of_range("compose_ui: i outside [1,2n-1]");
  if (a.pairs_with(i, i + 1)) return {a, 1};
  const int p = a.partner(i);
  const int q = a.partner(i + 1);
  std::vector<ArcPair> pairs{{i, i + 1}, {std::min(p, q), std::max(p, q)}};
  for (auto arc : a.pairs())
    if (arc.first != i && arc.first != i + 1 && arc.second != i && arc.second != i + 1)
      pairs.push_back(arc);
  std::sort(pairs.begin(), pairs.end());
  return {Matching::from_pairs(pairs), 0};
}

UiBimodule::UiBimodule(const ArcRing& ring, int i) : ring_(ring), i_(i) {
  if (i < 1 || i >= 2 * ring.n()) throw std::out_of_range("UiBimodule: i outside [1,2n-1]");
  const int size = ring.matchings().size();
  for (int a = 0; a < size; ++a) composites_.push_back(compose_ui(i, ring.matching(a)));
  for (int row = 0; row < size; ++row)
    for (int col = 0; col < size; ++col)
      diagrams_.push_back(glue(composites_[col].result, ring.matching(row)));
  for (int row : ring.order()) {
    for (int col : ring.order()) {
      block_offset_[{row, col}] = basis_.size();
      const int k = circle_count(row, col);
      for (LabelMask m = 0; m < (LabelMask{1} << k); ++m) basis_.push_back({row, col, m});
    }
  }
}

int UiBimodule::circle_count(int row, int col) const {
  return diagram(row, col).circle_count() + composites_[col].closed_circles;
}

std::size_t UiBimodule::index_of(const UiVector& v) const {
  auto it = block_offset_.find({v.row, v.col});
  if (it == block_offset_.end()) throw std::out_of_range("UiBimodule: block out of range");
  if (v.labels >> circle_count(v.row, v.col))
    throw std::out_of_range("UiBimodule: labeling has too many circles");
  return it->second + v.labels;
}

int UiBimodule::degree(const UiVector& v) const {
  return 2 * __builtin_popcount(v.labels) + n() - circle_count(v.row, v.col);
}

UiElement UiBimodule::element(const UiVector& v, Coeff c) const {
  index_of(v);
  UiElement x(n());
  x.add(v, c);
  return x;
}

UiElement UiBimodule::left(const BasisVector& x, const UiVector& m) const {
  UiElement out(n());
  if (x.col != m.row) return out;
  const int points = 2 * n();
  surgery::StrandGraph g(4 * points);
  const Piece upper = add_piece(g, 0, ring_.matching(x.row), ring_.matching(x.col), 0);
  const Piece lower = add_piece(g, 2 * points, ring_.matching(m.row), ring_.matching(m.col), i_);
  auto rep_m = circle_representatives(
      diagram(m.row, m.col), lower);
  if (composites_[m.col].closed_circles) rep_m.push_back(lower.bottom[i_ - 1]);

  auto rep_out = circle_representatives(
      diagram(x.row, m.col), upper);
  if (composites_[m.col].closed_circles) rep_out.push_back(lower.bottom[i_ - 1]);

  const auto state =
      run(g, {{x.labels, circle_representatives(ring_.diagram(x.row, x.col), upper)},
              {m.labels, rep_m}},
          contraction(ring_.matching(x.col), upper, lower), rep_out);
  for (const auto& [mask, c] : state) out.add({x.row, m.col, mask}, c);
  return out;
}

UiElement UiBimodule::right(const UiVector& m, const BasisVector& y) const {
  UiElement out(n());
  if (m.col != y.row) return out;
  const int points = 2 * n();
  surgery::StrandGraph g(4 * points);
  const Piece upper = add_piece(g, 0, ring_.matching(m.row), ring_.matching(m.col), i_);
  const Piece lower = add_piece(g, 2 * points, ring_.matching(y.row), ring_.matching(y.col), 0);
  auto rep_m = circle_representatives(
      diagram(m.row, m.col), upper);
  if (composites_[m.col].closed_circles) rep_m.push_back(upper.bottom[i_ - 1]);

  auto rep_out = circle_representatives(
      diagram(m.row, y.col), upper);
  if (composites_[y.col].closed_circles) rep_out.push_back(upper.bottom[i_ - 1]);

  const auto state =
      run(g, {{m.labels, rep_m},
              {y.labels, circle_representatives(ring_.diagram(y.row, y.col), lower)}},
          contraction(ring_.matching(m.col), upper, lower), rep_out);
  for (const auto& [mask, c] : state) out.add({m.row, y.col, mask}, c);
  return out;
}

UiElement UiBimodule::left(const RingElement& x, const UiElement& m) const {
  if (x.n() != n() || m.n() != n()) throw SizeMismatch("left action: different n");
  UiElement out(n());
  for (const auto& [xv, xc] : x.terms())
    for (const auto& [mv, mc] : m.terms()) {
      if (xv.col != mv.row) continue;
      const UiElement p = left(xv, mv);
      for (const auto& [v, c] : p.terms()) out.add(v, xc * mc * c);
    }
  return out;
}

UiElement UiBimodule::right(const UiElement& m, const RingElement& y) const {
  if (y.n() != n() || m.n() != n()) throw SizeMismatch("right action: different n");
  UiElement out(n());
  for (const auto& [mv, mc] : m.terms())
    for (const auto& [yv, yc] : y.terms()) {
      if (mv.col != yv.row) continue;
      const UiElement p = right(mv, yv);
      for (const auto& [v, c] : p.terms()) out.add(v, mc * yc * c);
    }
  return out;
}

RingElement UiBimodule::alpha(const UiVector& m) const {
  const int points = 2 * n();
  surgery::StrandGraph g(2 * points);
  const Piece p = add_piece(g, 0, ring_.matching(m.row), ring_.matching(m.col), i_);
  auto rep_m = circle_representatives(
      diagram(m.row, m.col), p);
  if (composites_[m.col].closed_circles) rep_m.push_back(p.bottom[i_ - 1]);

  const surgery::Saddle s{p.cup, p.cap, {p.top[i_ - 1], p.bottom[i_ - 1]},
                          {p.top[i_], p.bottom[i_]}};
  const auto state = run(g, {{m.labels, rep_m}}, {s},
                         circle_representatives(ring_.diagram(m.row, m.col), p));
  RingElement out(n());
  for (const auto& [mask, c] : state) out.add({m.row, m.col, mask}, c);
  return out;
}

RingElement UiBimodule::alpha(const UiElement& m) const {
  RingElement out(n());
  for (const auto& [v, c] : m.terms()) out += c * alpha(v);
  return out;
}

UiElement UiBimodule::beta(const BasisVector& x) const {
  const int points = 2 * n();
  surgery::StrandGraph g(2 * points);
  const Piece p = add_piece(g, 0, ring_.matching(x.row), ring_.matching(x.col), 0);
  auto rep_out = circle_representatives(
      diagram(x.row, x.col), p);
  if (composites_[x.col].closed_circles) rep_out.push_back(p.bottom[i_ - 1]);

  const surgery::Saddle s{p.verticals[i_ - 1], p.verticals[i_],
                          {p.top[i_ - 1], p.top[i_]}, {p.bottom[i_ - 1], p.bottom[i_]}};
  const auto state = run(
      g, {{x.labels, circle_representatives(ring_.diagram(x.row, x.col), p)}}, {s}, rep_out);
  UiElement out(n());
  for (const auto& [mask, c] : state) out.add({x.row, x.col, mask}, c);
  return out;
}

UiElement UiBimodule::beta(const RingElement& x) const {
  UiElement out(n());
  for (const auto& [v, c] : x.terms()) out += c * beta(v);
  return out;
}

bool HomotopyReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

HomotopyReport verify_null_homotopy(const ArcRing& ring, int i) {
  const UiBimodule F(ring, i);
  HomotopyReport report;
  report.n = ring.n();
  report.i = i;

  struct Endomorphism {
    int left;
    int right;
  };
  for (const Endomorphism e : {Endomorphism{i, i + 1}, Endomorphism{i + 1, i}}) {
    HomotopyCheck check;
    check.name = "l_X" + std::to_string(e.left) + " - r_X" + std::to_string(e.right);
    const RingElement xl = central_X(ring, e.left);
    const RingElement xr = central_X(ring, e.right);
    auto phi_h = [&](const RingElement& v) {
      return ring.multiply(xl, v) - ring.multiply(v, xr);
    };
    auto phi_f = [&](const UiElement& m) { return F.left(xl, m) - F.right(m, xr); };

    check.chain_map = true;
    for (const auto& m : F.basis()) {
      const UiElement em = F.element(m);
      if (F.alpha(phi_f(em)) != phi_h(F.alpha(em))) {
        check.chain_map = false;
        check.counterexample = "alpha∘phi != phi∘alpha";
        break;
      }
    }

    for (const int s : {1, -1}) {
      bool ok = true;
      std::size_t checked = 0;
      for (const auto& v : ring.basis()) {
        const RingElement ev = ring.element(v);
        ++checked;
        if (phi_h(ev) != s * F.alpha(F.beta(ev))) {
          ok = false;
          break;
        }
      }
      for (std::size_t t = 0; ok && t < F.dimension(); ++t) {
        const UiElement em = F.element(F.basis()[t]);
        ++checked;
        if (phi_f(em) != s * F.beta(F.alpha(em))) ok = false;
      }
      check.checked_vectors = std::max(check.checked_vectors, checked);
      if (ok) {
        check.sign = s;
        break;
      }
    }
    if (check.sign == 0 && check.counterexample.empty())
      check.counterexample = "no sign s makes phi = s(alpha beta + beta alpha)";
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace arcring
