#include <doctest.h>

#include <bit>
#include <random>

#include "arcring/presentations.hpp"

using namespace arcring;

namespace {

constexpr long long kPrime = 1'000'000'007;

long long pmod(long long a) { return ((a % kPrime) + kPrime) % kPrime; }

long long pow_mod(long long b, long long e) {
  long long r = 1;
  b = pmod(b);
  for (; e; e >>= 1, b = b * b % kPrime)
    if (e & 1) r = r * b % kPrime;
  return r;
}

std::size_t rank_mod_p(std::vector<std::vector<long long>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && pmod(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const long long inv = pow_mod(rows[rank][c], kPrime - 2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || pmod(rows[r][c]) == 0) continue;
      const long long f = pmod(rows[r][c]) * inv % kPrime;
      for (std::size_t k = 0; k < cols; ++k)
        rows[r][k] = pmod(rows[r][k] - f * pmod(rows[rank][k]) % kPrime);
    }
    ++rank;
  }
  return rank;
}

// Quotient ranks over F_p, spanning each degree by monomial multiples of the
// generators' homogeneous components.
std::vector<std::size_t> quotient_ranks_oracle(int n, const std::vector<SquareFreePoly>& gens) {
  const int vars = 2 * n;
  std::vector<std::size_t> out;
  for (int d = 0; d <= vars; ++d) {
    std::vector<SubsetMask> basis;
    for (SubsetMask s = 0; s < (SubsetMask{1} << vars); ++s)
      if (std::popcount(s) == d) basis.push_back(s);
    std::map<SubsetMask, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    std::vector<std::vector<long long>> rows;
    for (const auto& g : gens)
      for (int gd = 0; gd <= d; ++gd) {
        const SquareFreePoly part = g.component(gd);
        if (part.is_zero()) continue;
        for (SubsetMask j = 0; j < (SubsetMask{1} << vars); ++j) {
          if (std::popcount(j) != d - gd) continue;
          std::vector<long long> row(basis.size());
          bool any = false;
          for (const auto& [s, c] : part.terms()) {
            if (s & j) continue;
            row[index.at(s | j)] += c;
            any = true;
          }
          if (any) rows.push_back(std::move(row));
        }
      }
    out.push_back(basis.size() - rank_mod_p(rows));
  }
  return out;
}

SquareFreePoly random_poly(std::mt19937_64& rng, int n, int terms) {
  SquareFreePoly p(n);
  for (int t = 0; t < terms; ++t) {
    const SubsetMask s = static_cast<SubsetMask>(rng() % (SubsetMask{1} << (2 * n)));
    p.add(s, static_cast<long long>(rng() % 11) - 5);
  }
  return p;
}

bool admissibly_supported(const SquareFreePoly& p) {
  for (const auto& [s, c] : p.terms())
    if (!is_admissible(s, p.n())) return false;
  return true;
}

SquareFreePoly X(int n, std::initializer_list<int> idx) {
  return SquareFreePoly::monomial(n, subset_from_elements(std::vector<int>(idx)));
}

}  // namespace

TEST_CASE("square-free arithmetic") {
  const int n = 2;
  const SquareFreePoly x1 = SquareFreePoly::variable(n, 1), x2 = SquareFreePoly::variable(n, 2);
  CHECK((x1 * x1).is_zero());
  CHECK((x1 * x2) == X(n, {1, 2}));
  CHECK((x1 + x2) * (x1 + x2) == 2 * X(n, {1, 2}));
  CHECK(((x1 + x2) * (x1 - x2)).is_zero());
  CHECK((x1 - x1).is_zero());
  CHECK((SquareFreePoly::constant(n, 3) * x2) == 3 * x2);
  CHECK((X(n, {3, 4}) - x2).to_string() == "X3X4 - X2");
  CHECK(SquareFreePoly(n).to_string() == "0");
  CHECK_FALSE((x1 + X(n, {1, 2})).is_homogeneous());
  CHECK((x1 + X(n, {1, 2})).component(2) == X(n, {1, 2}));
  CHECK(X(n, {1, 3}).permuted({2, 1, 4, 3}) == X(n, {2, 4}));
}

TEST_CASE("elementary symmetric functions") {
  const int n = 2;
  CHECK(elem_sym(0, interval(1, 4), n) == SquareFreePoly::constant(n, 1));
  CHECK(elem_sym(1, interval(1, 3), n) ==
        SquareFreePoly::variable(n, 1) + SquareFreePoly::variable(n, 2) +
            SquareFreePoly::variable(n, 3));
  CHECK(elem_sym(2, interval(2, 3), n) == X(n, {2, 3}));
  CHECK(elem_sym(3, interval(2, 3), n).is_zero());
  CHECK(elem_sym(-1, interval(1, 4), n).is_zero());
  CHECK(elem_sym(4, interval(1, 4), n) == X(n, {1, 2, 3, 4}));
  CHECK(elem_sym(2, interval(1, 4), n).terms().size() == 6);
  CHECK(interval(3, 2) == 0);
}

TEST_CASE("monomial bases") {
  CHECK(monomials_of_degree(2, 2).size() == 6);
  CHECK(monomials_of_degree(2, 2).front() == subset_from_elements({1, 2}));
  CHECK(monomials_of_degree(2, 2).back() == subset_from_elements({3, 4}));
  CHECK(monomial_coordinates(X(2, {1, 3}) + 2 * X(2, {1}), 2) ==
        IntVector{0, 1, 0, 0, 0, 0});
}

TEST_CASE("R1 at n = 1") {
  const GradedIdealSpan r1 = ideal_R1(1);
  CHECK(r1.rank(0) == 0);
  CHECK(r1.rank(1) == 1);
  CHECK(r1.rank(2) == 1);
  CHECK(r1.contains(SquareFreePoly::variable(1, 1) + SquareFreePoly::variable(1, 2)));
  CHECK_FALSE(r1.contains(SquareFreePoly::variable(1, 1)));
  CHECK(r1.contains(X(1, {1, 2})));
}

TEST_CASE("quotient ranks") {
  CHECK(quotient_graded_ranks(ideal_R1(1)).ranks == std::vector<std::size_t>{1, 1, 0});
  CHECK(quotient_graded_ranks(ideal_R1(2)).ranks == std::vector<std::size_t>{1, 3, 2, 0, 0});
  const QuotientRanks q3 = quotient_graded_ranks(ideal_R1(3));
  CHECK(q3.total() == 20);
  CHECK(q3.torsion_free());
  for (int n = 1; n <= 3; ++n) {
    const QuotientRanks q = quotient_graded_ranks(ideal_R1(n));
    CHECK(q.ranks == quotient_ranks_oracle(n, r1_generators(n)));
    CHECK(q.ranks == admissible_counts_by_degree(n));
    CHECK(quotient_graded_ranks(ideal_R2(n)).ranks == quotient_ranks_oracle(n, r2_generators(n)));
  }
  const std::size_t totals[] = {0, 2, 6, 20, 70};
  for (int n = 1; n <= 4; ++n) CHECK(quotient_graded_ranks(ideal_R1(n)).total() == totals[n]);
}

TEST_CASE("the two ideals agree") {
  for (int n = 1; n <= 3; ++n) {
    const GradedIdealSpan r1 = ideal_R1(n), r2 = ideal_R2(n);
    CHECK(lattice_equal(r1, r2));
    for (const auto& g : r2_generators(n)) CHECK(r1.contains(g));
    for (const auto& g : r1_generators(n)) CHECK(r2.contains(g));
  }
}

TEST_CASE("reduction identities") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(prefix_identity_residual(n, k).is_zero());
    CHECK(top_monomial_identity_residual(n).is_zero());
  }
}

TEST_CASE("admissible normal form examples") {
  CHECK(reduce_to_admissible(SquareFreePoly::variable(1, 1)) == -1 * SquareFreePoly::variable(1, 2));
  const SquareFreePoly r = reduce_to_admissible(X(2, {1, 2}));
  CHECK(r == X(2, {3, 4}));
  CHECK(ideal_R1(2).contains(X(2, {1, 2}) - X(2, {3, 4})));
  CHECK(reduce_to_admissible(SquareFreePoly::constant(2, 5)) == SquareFreePoly::constant(2, 5));
}

TEST_CASE("admissible normal form properties") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 3; ++n) {
    const GradedIdealSpan r1 = ideal_R1(n);
    for (int t = 0; t < 60; ++t) {
      const SquareFreePoly p = random_poly(rng, n, 1 + static_cast<int>(rng() % 6));
      const SquareFreePoly r = reduce_to_admissible(p);
      CHECK(admissibly_supported(r));
      CHECK(r1.contains(p - r));
      CHECK(reduce_to_admissible(r) == r);
    }
  }
}

TEST_CASE("ideals are stable under the symmetric group") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(stable_under_transpositions(ideal_R1(n), r1_generators(n)));
    CHECK(stable_under_transpositions(ideal_R2(n), r2_generators(n)));
  }
  CHECK(adjacent_transposition(2, 2) == std::vector<int>{1, 3, 2, 4});
  // A non-symmetric ideal is not stable.
  const std::vector<SquareFreePoly> gens{SquareFreePoly::variable(1, 1)};
  CHECK_FALSE(stable_under_transpositions(GradedIdealSpan(1, gens), gens));
}
