#include "arcring/surgery.hpp"

#include <numeric>

#include "arcring/combinatorics.hpp"
#include "arcring/frobenius.hpp"

namespace arcring::surgery {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

Label bit_label(Mask m, int bit) {
  return (m >> bit) & 1u ? Label::X : Label::One;
}

Mask with_bit(Mask m, int bit, Label l) {
  return l == Label::X ? (m | (Mask{1} << bit)) : (m & ~(Mask{1} << bit));
}

void accumulate(LabelState& state, Mask m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = state.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) state.erase(it);
  }
}

}  // namespace

int StrandGraph::add_edge(int u, int v) {
  edges_.push_back({u, v});
  return static_cast<int>(edges_.size()) - 1;
}

std::vector<int> StrandGraph::components(int& count) const {
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : edges_) {
    const int a = find_root(parent, e.u);
    const int b = find_root(parent, e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> label(vertex_count_, -1);
  count = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    const int r = find_root(parent, v);
    if (label[r] < 0) label[r] = count++;
    label[v] = label[r];
  }
  return label;
}

LabelState apply_saddle(StrandGraph& graph, const LabelState& state,
                        const Saddle& saddle) {
  int before_count = 0;
  const auto before = graph.components(before_count);
  const int c1 = before[graph.edge(saddle.edge1).u];
  const int c2 = before[graph.edge(saddle.edge2).u];

  graph.replace_edge(saddle.edge1, saddle.replacement1);
  graph.replace_edge(saddle.edge2, saddle.replacement2);
  int after_count = 0;
  const auto after = graph.components(after_count);

  const bool merging = c1 != c2;
  if (after_count != before_count + (merging ? -1 : 1))
    throw InvariantFailure("saddle changed the circle count by other than one");

  // Old component feeding each new one; the touched components are
  // handled separately below.
  std::vector<int> source(after_count, -1);
  for (int v = 0; v < graph.vertex_count(); ++v) source[after[v]] = before[v];

  const int d1 = after[saddle.replacement1.u];
  const int d2 = after[saddle.replacement2.u];
  if (!merging && d1 == d2)
    throw InvariantFailure("split did not separate the new edges");

  LabelState out;
  for (const auto& [mask, coeff] : state) {
    Mask base = 0;
    for (int d = 0; d < after_count; ++d) {
      if (d == d1 || d == d2) continue;
      base = with_bit(base, d, bit_label(mask, source[d]));
    }
    if (merging) {
      const auto merged = merge(bit_label(mask, c1), bit_label(mask, c2));
      for (const auto& [w, c] : merged.terms())
        accumulate(out, with_bit(base, d1, w[0]), coeff * c);
    } else {
      const auto pieces = split(bit_label(mask, c1));
      for (const auto& [w, c] : pieces.terms())
        accumulate(out, with_bit(with_bit(base, d1, w[0]), d2, w[1]),
                   coeff * c);
    }
  }
  return out;
}

void place_labels(Mask& into, std::span<const int> component_of_vertex,
                  Mask labels, std::span<const int> representative) {
  for (std::size_t t = 0; t < representative.size(); ++t)
    if ((labels >> t) & 1u)
      into |= Mask{1} << component_of_vertex[representative[t]];
}

Mask read_labels(std::span<const int> component_of_vertex, Mask state,
                 std::span<const int> representative) {
  Mask out = 0;
  for (std::size_t t = 0; t < representative.size(); ++t)
    if ((state >> component_of_vertex[representative[t]]) & 1u)
      out |= Mask{1} << t;
  return out;
}

}  // namespace arcring::surgery
