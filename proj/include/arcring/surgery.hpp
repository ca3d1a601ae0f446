#pragma once

// Saddle surgery on labeled planar 1-manifolds.
//
// A diagram is a graph in which every vertex has degree two, so its
// connected components are circles.  A state is a linear combination of
// labelings of those circles by {1, X}, stored as bitmasks where bit c is
// set when component c carries X.  Components are numbered by smallest
// vertex.  A saddle replaces two edges by two new ones; when the removed
// edges lie on different circles the circles merge, otherwise the circle
// splits, and labels transform by the Frobenius multiplication or
// comultiplication.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace arcring::surgery {

using Mask = std::uint32_t;
using Coeff = long long;
using LabelState = std::map<Mask, Coeff>;

struct Edge {
  int u;
  int v;
};

class StrandGraph {
 public:
  explicit StrandGraph(int vertex_count) : vertex_count_(vertex_count) {}

  int vertex_count() const { return vertex_count_; }
  int add_edge(int u, int v);
  const Edge& edge(int id) const { return edges_[id]; }
  void replace_edge(int id, Edge e) { edges_[id] = e; }

  /// Component index of every vertex, components numbered by smallest
  /// vertex.  Writes the component count to `count`.
  std::vector<int> components(int& count) const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
};

struct Saddle {
  int edge1;
  int edge2;
  Edge replacement1;
  Edge replacement2;
};

/// Applies one saddle to `graph` and transforms `state` accordingly.
LabelState apply_saddle(StrandGraph& graph, const LabelState& state,
                        const Saddle& saddle);

/// Moves the bits of a source labeling onto components: for each source
/// circle t, the component containing representative[t] receives bit t of
/// `labels`.
void place_labels(Mask& into, std::span<const int> component_of_vertex,
                  Mask labels, std::span<const int> representative);

/// Reads a labeling back off components: bit t of the result is the bit of
/// the component containing representative[t].
Mask read_labels(std::span<const int> component_of_vertex, Mask state,
                 std::span<const int> representative);

}  // namespace arcring::surgery
