#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "arcring/center.hpp"

using namespace arcring;

namespace {

constexpr long long kPrime = 1'000'000'007;

long long pmod(long long a) { return ((a % kPrime) + kPrime) % kPrime; }

long long inverse(long long a) {
  long long r = 1, b = pmod(a);
  for (long long e = kPrime - 2; e; e >>= 1, b = b * b % kPrime)
    if (e & 1) r = r * b % kPrime;
  return r;
}

std::size_t rank_mod_p(std::vector<std::vector<long long>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && pmod(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const long long inv = inverse(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (pmod(rows[r][c]) == 0) continue;
      const long long f = pmod(rows[r][c]) * inv % kPrime;
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = pmod(rows[r][k] - f * pmod(rows[rank][k]) % kPrime);
    }
    ++rank;
  }
  return rank;
}

// Dimension of the center over F_p from the full commutator map, with no
// assumption about where central elements live.
std::size_t center_dimension_oracle(const ArcRing& ring) {
  const std::size_t dim = ring.dimension();
  // Row (y, k) of the system: coefficient k of [u, y] for unknown u.
  std::vector<std::vector<long long>> rows(dim * dim, std::vector<long long>(dim));
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t y = 0; y < dim; ++y) {
      const RingElement c = ring.multiply(ring.basis()[u], ring.basis()[y]);
      const RingElement d = ring.multiply(ring.basis()[y], ring.basis()[u]);
      for (const auto& [v, k] : c.terms()) rows[y * dim + ring.index_of(v)][u] += k;
      for (const auto& [v, k] : d.terms()) rows[y * dim + ring.index_of(v)][u] -= k;
    }
  std::erase_if(rows, [](const auto& r) {
    return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
  });
  return dim - rank_mod_p(std::move(rows), dim);
}

const ArcRing& ring_for(int n) {
  static std::map<int, ArcRing> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, ArcRing(n)).first;
  return it->second;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int size) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

IntVector random_coords(std::mt19937_64& rng, std::size_t size) {
  IntVector v(size);
  for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
  return v;
}

}  // namespace

TEST_CASE("center ranks") {
  const std::size_t ranks[] = {0, 2, 6, 20};
  for (int n = 1; n <= 3; ++n) {
    const CenterBasis c = center_basis(ring_for(n));
    CHECK(c.rank() == ranks[n]);
    CHECK(c.rank() == center_dimension_oracle(ring_for(n)));
    CHECK(c.graded_ranks == admissible_counts_by_degree(n));
  }
  CHECK(center_basis(ring_for(2)).graded_ranks == std::vector<std::size_t>{1, 3, 2, 0, 0});
  CHECK(center_basis(ring_for(3)).graded_ranks ==
        std::vector<std::size_t>{1, 5, 9, 5, 0, 0, 0});
}

TEST_CASE("center basis elements are central and homogeneous") {
  for (int n = 1; n <= 3; ++n) {
    const ArcRing& ring = ring_for(n);
    const CenterBasis c = center_basis(ring);
    for (std::size_t k = 0; k < c.rank(); ++k) {
      CHECK(is_central(ring, c.elements[k]));
      CHECK(ring.degree(c.elements[k]) == 2 * c.label_degree[k]);
      for (const auto& [v, coeff] : c.elements[k].terms()) CHECK(v.row == v.col);
    }
  }
  CHECK_FALSE(is_central(ring_for(2), ring_for(2).idempotent(0)));
}

TEST_CASE("central X at n = 1") {
  const ArcRing& ring = ring_for(1);
  const RingElement x = ring.element({0, 0, 1});
  CHECK(central_X(ring, 1) == (-1) * x);
  CHECK(central_X(ring, 2) == x);
  CHECK((central_X(ring, 1) + central_X(ring, 2)).is_zero());
}

TEST_CASE("central X relations") {
  for (int n = 1; n <= 3; ++n) {
    const ArcRing& ring = ring_for(n);
    RingElement sum = ring.zero();
    for (int i = 1; i <= 2 * n; ++i) {
      const RingElement x = central_X(ring, i);
      CHECK(is_central(ring, x));
      CHECK(ring.multiply(x, x).is_zero());
      sum += x;
    }
    CHECK(sum.is_zero());
    CHECK(central_monomial(ring, 0) == ring.unit());
  }
  // Top elementary symmetric function vanishes at n = 2.
  const ArcRing& ring = ring_for(2);
  CHECK(central_monomial(ring, subset_from_elements({1, 2, 3})).is_zero());
}

TEST_CASE("center coordinates") {
  const ArcRing& ring = ring_for(2);
  const CenterBasis c = center_basis(ring);
  for (std::size_t k = 0; k < c.rank(); ++k) {
    IntVector e(c.rank());
    e[k] = 1;
    const auto coords = center_coordinates(c, ring, c.elements[k]);
    REQUIRE(coords.has_value());
    CHECK(*coords == e);
    CHECK(center_element(c, e) == c.elements[k]);
  }
  CHECK_FALSE(center_coordinates(c, ring, ring.idempotent(0)).has_value());
}

TEST_CASE("presentation isomorphism") {
  for (int n = 1; n <= 3; ++n) {
    const ArcRing& ring = ring_for(n);
    const PresentationReport r = verify_presentation_iso(ring, center_basis(ring));
    CHECK(r.relations_hold());
    CHECK(r.ranks_match());
    CHECK(r.images_in_center);
    CHECK(r.unimodular);
    CHECK(r.quotient_torsion_free);
    CHECK(r.multiplicative());
    CHECK(r.passed());
    for (const auto& m : r.matrices) CHECK(abs(determinant(m)) == 1);
  }
}

TEST_CASE("symmetric action at n = 1") {
  const SymmetricAction action(ring_for(1));
  const IntVector x1 = action.from_polynomial(SquareFreePoly::variable(1, 1));
  const IntVector x2 = action.from_polynomial(SquareFreePoly::variable(1, 2));
  CHECK(action.act({2, 1}, x1) == x2);
  CHECK(action.act({1, 2}, x1) == x1);
  IntVector neg = x1;
  for (auto& v : neg) v = -v;
  CHECK(x2 == neg);
}

TEST_CASE("symmetric action is a group action by ring automorphisms") {
  for (int n = 1; n <= 3; ++n) {
    const ArcRing& ring = ring_for(n);
    const SymmetricAction action(ring);
    const std::size_t rank = action.center().rank();
    std::vector<int> identity(2 * n);
    std::iota(identity.begin(), identity.end(), 1);
    std::mt19937_64 rng(100 + n);
    for (int t = 0; t < 20; ++t) {
      const auto sigma = random_permutation(rng, 2 * n), tau = random_permutation(rng, 2 * n);
      const IntVector z = random_coords(rng, rank), w = random_coords(rng, rank);
      CHECK(action.act(identity, z) == z);
      CHECK(action.act(sigma, action.act(tau, z)) == action.act(compose_permutations(sigma, tau), z));
      if (n <= 2) {
        const RingElement zw =
            ring.multiply(center_element(action.center(), z), center_element(action.center(), w));
        const auto zw_coords = center_coordinates(action.center(), ring, zw);
        REQUIRE(zw_coords.has_value());
        const RingElement lhs = center_element(action.center(), action.act(sigma, *zw_coords));
        const RingElement rhs =
            ring.multiply(center_element(action.center(), action.act(sigma, z)),
                          center_element(action.center(), action.act(sigma, w)));
        CHECK(lhs == rhs);
      }
    }
    for (int i = 1; i <= 2 * n; ++i) {
      std::vector<int> sigma = random_permutation(rng, 2 * n);
      const IntVector xi = action.from_polynomial(SquareFreePoly::variable(n, i));
      CHECK(action.act(sigma, xi) ==
            action.from_polynomial(SquareFreePoly::variable(n, sigma[i - 1])));
    }
  }
  CHECK(compose_permutations({2, 1, 3}, {1, 3, 2}) == std::vector<int>{2, 3, 1});
}

TEST_CASE("polynomial round trip") {
  const SymmetricAction action(ring_for(2));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const IntVector z = random_coords(rng, action.center().rank());
    CHECK(action.from_polynomial(action.to_polynomial(z)) == z);
  }
}

TEST_CASE("center lattice does not depend on the total order") {
  CHECK(total_order_independence(2));
  CHECK(total_order_independence(3));
  const MatchingSet set(3);
  const auto orders = set.linear_extensions(10);
  CHECK(orders.size() == 2);
  CHECK(total_order_independence(3, orders));
}
