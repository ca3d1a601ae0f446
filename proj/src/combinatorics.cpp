#include "arcring/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace arcring {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<int> partners_from_pairs(const std::vector<ArcPair>& pairs) {
  const int points = static_cast<int>(pairs.size()) * 2;
  std::vector<int> partner(points, -1);
  for (auto [i, j] : pairs) {
    require(i >= 1 && i <= points && j >= 1 && j <= points && i != j,
            "matching: endpoint out of range");
    require(partner[i - 1] < 0 && partner[j - 1] < 0,
            "matching: endpoint used twice");
    partner[i - 1] = j - 1;
    partner[j - 1] = i - 1;
  }
  return partner;
}

// Disjoint-set forest over endpoints.
class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<int> parent_;
};

// All crossingless pairings of `points` (sorted), as arc lists.
std::vector<std::vector<ArcPair>> pairings_of(const std::vector<int>& points) {
  if (points.empty()) return {{}};
  // The leftmost point pairs with a point leaving an even number of points
  // strictly between them; inside and outside are then independent.
  std::vector<std::vector<ArcPair>> out;
  for (std::size_t k = 1; k < points.size(); k += 2) {
    const std::vector<int> inside(points.begin() + 1, points.begin() + k);
    const std::vector<int> outside(points.begin() + k + 1, points.end());
    const auto inner = pairings_of(inside);
    const auto outer = pairings_of(outside);
    for (const auto& in : inner) {
      for (const auto& o : outer) {
        std::vector<ArcPair> arcs{{points.front(), points[k]}};
        arcs.insert(arcs.end(), in.begin(), in.end());
        arcs.insert(arcs.end(), o.begin(), o.end());
        out.push_back(std::move(arcs));
      }
    }
  }
  return out;
}

}  // namespace

Matching Matching::from_pairs(const std::vector<ArcPair>& pairs) {
  Matching m(partners_from_pairs(pairs));
  require(m.is_crossingless(), "matching: arcs cross");
  return m;
}

Matching Matching::from_pairs_unchecked(const std::vector<ArcPair>& pairs) {
  return Matching(partners_from_pairs(pairs));
}

std::vector<ArcPair> Matching::pairs() const {
  std::vector<ArcPair> out;
  out.reserve(n());
  for (int i = 0; i < point_count(); ++i)
    if (partner_[i] > i) out.emplace_back(i + 1, partner_[i] + 1);
  return out;
}

bool Matching::is_crossingless() const {
  const auto arcs = pairs();
  for (auto [i, k] : arcs)
    for (auto [j, l] : arcs)
      if (i < j && j < k && k < l) return false;
  return true;
}

std::string Matching::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [i, j] : pairs()) {
    if (!first) os << ',';
    first = false;
    os << '(' << i << ',' << j << ')';
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
  const auto pa = a.pairs();
  const auto pb = b.pairs();
  return std::lexicographical_compare_three_way(pa.begin(), pa.end(),
                                                pb.begin(), pb.end());
}

std::vector<Matching> enumerate_matchings(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_matchings: n < 0");
  std::vector<int> points(2 * n);
  std::iota(points.begin(), points.end(), 1);
  std::vector<Matching> out;
  for (const auto& arcs : pairings_of(points))
    out.push_back(Matching::from_pairs(arcs));
  std::sort(out.begin(), out.end());
  return out;
}

ClosedDiagram glue(const Matching& lower, const Matching& upper) {
  if (lower.n() != upper.n())
    throw SizeMismatch("glue: matchings have different n");
  const int points = lower.point_count();

  UnionFind uf(points);
  for (int e = 1; e <= points; ++e) {
    uf.unite(e - 1, lower.partner(e) - 1);
    uf.unite(e - 1, upper.partner(e) - 1);
  }

  ClosedDiagram d;
  d.endpoint_to_circle.assign(points, -1);
  // Roots are the minimal endpoints of their class, so scanning left to
  // right meets circles in order of smallest endpoint.
  for (int e = 1; e <= points; ++e) {
    if (uf.find(e - 1) != e - 1) continue;
    const int id = d.circle_count();
    std::vector<int> cycle;
    int at = e;
    do {
      cycle.push_back(at);
      const int across = lower.partner(at);
      cycle.push_back(across);
      at = upper.partner(across);
    } while (at != e);
    for (int p : cycle) d.endpoint_to_circle[p - 1] = id;
    d.circles.push_back(std::move(cycle));
  }
  return d;
}

int distance(const Matching& a, const Matching& b) {
  return a.n() - glue(a, b).circle_count();
}

bool is_arrow(const Matching& a, const Matching& b) {
  if (a.n() != b.n()) throw SizeMismatch("is_arrow: matchings have different n");
  std::vector<ArcPair> only_a, only_b;
  const auto pa = a.pairs();
  const auto pb = b.pairs();
  std::set_difference(pa.begin(), pa.end(), pb.begin(), pb.end(),
                      std::back_inserter(only_a));
  std::set_difference(pb.begin(), pb.end(), pa.begin(), pa.end(),
                      std::back_inserter(only_b));
  if (only_a.size() != 2 || only_b.size() != 2) return false;
  const auto [i, j] = only_a[0];
  const auto [k, l] = only_a[1];
  if (!(j < k)) return false;
  return only_b[0] == ArcPair{i, l} && only_b[1] == ArcPair{j, k};
}

namespace {

// Matchings b with a -> b.
std::vector<Matching> arrow_targets(const Matching& a) {
  std::vector<Matching> out;
  const auto arcs = a.pairs();
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = 0; y < arcs.size(); ++y) {
      const auto [i, j] = arcs[x];
      const auto [k, l] = arcs[y];
      if (!(j < k)) continue;
      std::vector<ArcPair> next;
      for (std::size_t z = 0; z < arcs.size(); ++z)
        if (z != x && z != y) next.push_back(arcs[z]);
      next.emplace_back(i, l);
      next.emplace_back(j, k);
      auto b = Matching::from_pairs_unchecked(next);
      if (b.is_crossingless()) out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace

namespace {

std::vector<Matching> checked_enumeration(int n) {
  if (n > 7) throw CapacityError("MatchingSet: n > 7 not supported");
  return enumerate_matchings(n);
}

}  // namespace

MatchingSet::MatchingSet(int n) : n_(n), matchings_(checked_enumeration(n)) {
  const int size = this->size();
  for (int a = 0; a < size; ++a)
    for (const auto& b : arrow_targets(matchings_[a]))
      arrows_.emplace_back(a, index_of(b));
  std::sort(arrows_.begin(), arrows_.end());

  reach_.assign(size, std::vector<bool>(size, false));
  std::vector<std::vector<int>> succ(size);
  for (auto [a, b] : arrows_) succ[a].push_back(b);
  for (int s = 0; s < size; ++s) {
    std::vector<int> stack{s};
    reach_[s][s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : succ[v])
        if (!reach_[s][w]) {
          reach_[s][w] = true;
          stack.push_back(w);
        }
    }
  }

  distance_.assign(size, std::vector<int>(size, 0));
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      distance_[a][b] = distance_[b][a] =
          arcring::distance(matchings_[a], matchings_[b]);
}

int MatchingSet::index_of(const Matching& m) const {
  auto it = std::lower_bound(matchings_.begin(), matchings_.end(), m);
  if (it == matchings_.end() || *it != m)
    throw std::invalid_argument("MatchingSet: matching not in B^n");
  return static_cast<int>(it - matchings_.begin());
}

std::vector<int> MatchingSet::total_order() const {
  const int size = this->size();
  std::vector<int> indegree(size, 0);
  std::vector<std::vector<int>> succ(size);
  for (auto [a, b] : arrows_) {
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < size; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : succ[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != size)
    throw InvariantFailure("total_order: cycle in the arrow relation");
  return order;
}

bool MatchingSet::is_linear_extension(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != size()) return false;
  std::vector<int> position(size(), -1);
  for (int p = 0; p < size(); ++p) {
    const int v = order[p];
    if (v < 0 || v >= size() || position[v] >= 0) return false;
    position[v] = p;
  }
  return std::all_of(arrows_.begin(), arrows_.end(), [&](auto arrow) {
    return position[arrow.first] < position[arrow.second];
  });
}

std::vector<std::vector<int>> MatchingSet::linear_extensions(
    std::size_t limit) const {
  const int size = this->size();
  std::vector<int> indegree(size, 0);
  std::vector<std::vector<int>> succ(size);
  for (auto [a, b] : arrows_) {
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  std::vector<bool> used(size, false);

  auto extend = [&](auto& self) -> void {
    if (out.size() >= limit) return;
    if (static_cast<int>(prefix.size()) == size) {
      out.push_back(prefix);
      return;
    }
    for (int v = 0; v < size; ++v) {
      if (used[v] || indegree[v] != 0) continue;
      used[v] = true;
      prefix.push_back(v);
      for (int w : succ[v]) --indegree[w];
      self(self);
      for (int w : succ[v]) ++indegree[w];
      prefix.pop_back();
      used[v] = false;
    }
  };
  extend(extend);
  return out;
}

std::vector<std::pair<Matching, Matching>> arrows(int n) {
  MatchingSet set(n);
  std::vector<std::pair<Matching, Matching>> out;
  for (auto [a, b] : set.arrows()) out.emplace_back(set[a], set[b]);
  return out;
}

std::vector<Matching> total_order(int n) {
  MatchingSet set(n);
  std::vector<Matching> out;
  for (int v : set.total_order()) out.push_back(set[v]);
  return out;
}

bool MatchingGraph::is_forest() const {
  UnionFind uf(static_cast<int>(vertices.size()));
  for (auto [x, y] : edges) {
    if (uf.find(x) == uf.find(y)) return false;
    uf.unite(x, y);
  }
  return true;
}

MatchingGraph matching_graph(const Matching& a) {
  MatchingGraph g;
  g.vertices = a.pairs();
  const int count = static_cast<int>(g.vertices.size());
  for (int y = 0; y < count; ++y) {
    for (int z = 0; z < count; ++z) {
      const auto [i, l] = g.vertices[y];
      const auto [j, k] = g.vertices[z];
      if (!(i < j && k < l)) continue;
      // Un-nest (i,l),(j,k) into (i,j),(k,l); the edge exists when the
      // result is again crossingless.
      std::vector<ArcPair> next;
      for (int w = 0; w < count; ++w)
        if (w != y && w != z) next.push_back(g.vertices[w]);
      next.emplace_back(i, j);
      next.emplace_back(k, l);
      if (Matching::from_pairs_unchecked(next).is_crossingless())
        g.edges.emplace_back(std::min(y, z), std::max(y, z));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());

  UnionFind uf(count);
  for (auto [x, y] : g.edges) uf.unite(x, y);
  for (int v = 0; v < count; ++v)
    if (uf.find(v) == v) g.marks.push_back(v);
  return g;
}

int bottom_arc_count(const Matching& a) {
  int count = 0;
  // Walking left to right, an arc is outermost iff it starts at depth 0.
  int depth = 0;
  for (int e = 1; e <= a.point_count(); ++e) {
    if (a.partner(e) > e) {
      if (depth == 0) ++count;
      ++depth;
    } else {
      --depth;
    }
  }
  return count;
}

std::vector<int> subset_elements(SubsetMask s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i + 1);
  return out;
}

SubsetMask subset_from_elements(const std::vector<int>& elements) {
  SubsetMask s = 0;
  for (int e : elements) {
    if (e < 1 || e > 32) throw std::invalid_argument("subset element out of range");
    s |= SubsetMask{1} << (e - 1);
  }
  return s;
}

bool is_admissible(SubsetMask s, int n) {
  int inside = 0;
  for (int m = 1; m <= 2 * n; ++m) {
    if (s & (SubsetMask{1} << (m - 1))) ++inside;
    if (2 * inside > m) return false;
  }
  return true;
}

std::vector<SubsetMask> admissible_subsets(int n) {
  if (n < 0 || n > 15) throw CapacityError("admissible_subsets: n out of range");
  std::vector<SubsetMask> out;
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t s = 0; s < total; ++s)
    if (is_admissible(static_cast<SubsetMask>(s), n))
      out.push_back(static_cast<SubsetMask>(s));
  std::sort(out.begin(), out.end(), [](SubsetMask x, SubsetMask y) {
    if (subset_size(x) != subset_size(y)) return subset_size(x) < subset_size(y);
    return subset_elements(x) < subset_elements(y);
  });
  return out;
}

int find_sink(const MatchingSet& set, int a, int b) {
  const int target = set.distance(a, b);
  for (int c = 0; c < set.size(); ++c) {
    if (set.distance(a, c) + set.distance(c, b) == target &&
        set.precedes_or_equal(c, a) && set.precedes_or_equal(c, b))
      return c;
  }
  throw InvariantFailure("find_sink: no common lower geodesic point");
}

Matching find_sink(const Matching& a, const Matching& b) {
  if (a.n() != b.n()) throw SizeMismatch("find_sink: matchings have different n");
  MatchingSet set(a.n());
  return set[find_sink(set, set.index_of(a), set.index_of(b))];
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

std::uint64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace arcring
