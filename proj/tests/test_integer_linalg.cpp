#include <doctest.h>

#include <random>

#include "arcring/integer_linalg.hpp"

using namespace arcring;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

IntVector vec(std::vector<long> v) { return IntVector(v.begin(), v.end()); }

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

// Cofactor expansion, only for tiny matrices.
Integer laplace(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Integer term = m(0, c) * laplace(minor);
    total += (c % 2 ? -term : term);
  }
  return total;
}

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c && d(r, c) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(mat({{2, 0}, {0, 3}})).invariant_factors() == vec({1, 6}));
  CHECK(smith_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).invariant_factors() ==
        vec({2, 6, 12}));
  CHECK(smith_normal_form(IntMatrix(2, 3)).invariant_factors().empty());
  CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
}

TEST_CASE("Smith normal form invariants on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, rows, cols, 6);
    const SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_diagonal(s.D));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    const IntVector f = s.invariant_factors();
    for (std::size_t k = 0; k < f.size(); ++k) {
      CHECK(f[k] > 0);
      if (k) CHECK(f[k] % f[k - 1] == 0);
    }
    CHECK(f.size() == rank(m));
    CHECK(invariant_factors(m) == f);
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(mat({{1, 1}})) == std::vector<IntVector>{vec({1, -1})});
  CHECK(kernel_basis(mat({{2, 4}})) == std::vector<IntVector>{vec({2, -1})});
  CHECK(kernel_basis(mat({{1, 2}, {3, 4}})).empty());
  CHECK(kernel_basis(IntMatrix(0, 2)).size() == 2);
}

TEST_CASE("kernels are annihilated, full and saturated") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 6;
    // Low rank products make nontrivial kernels more likely.
    const std::size_t inner = 1 + rng() % 3;
    const IntMatrix m = random_matrix(rng, rows, inner, 3) * random_matrix(rng, inner, cols, 3);
    const auto k = kernel_basis(m);
    for (const auto& v : k) CHECK((m * v) == IntVector(rows));
    CHECK(k.size() + rank(m) == cols);
    if (!k.empty()) {
      const IntMatrix km = IntMatrix::from_columns(k, cols);
      for (const auto& f : invariant_factors(km)) CHECK(f == 1);
    }
  }
}

TEST_CASE("Hermite normal form and lattice equality") {
  const IntMatrix a = mat({{1}, {0}});
  CHECK(lattice_equal(a, a));
  CHECK_FALSE(lattice_equal(a, mat({{2}, {0}})));
  CHECK(lattice_equal(mat({{1, 0}, {0, 1}}), mat({{0, 1}, {1, 0}})));
  CHECK(lattice_equal(mat({{2, 3}}), mat({{1}})));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix m = random_matrix(rng, 3, 4, 5);
    IntMatrix shuffled = m;
    shuffled.add_column_multiple(0, 1, 3);
    shuffled.swap_columns(2, 3);
    shuffled.add_column_multiple(3, 0, -2);
    CHECK(lattice_equal(m, shuffled));
    CHECK(hermite_normal_form(m.transpose()) == hermite_normal_form(shuffled.transpose()));
  }
}

TEST_CASE("row lattice") {
  RowLattice l(3);
  l.insert(vec({2, 0, 0}));
  l.insert(vec({0, 3, 0}));
  CHECK(l.rank() == 2);
  CHECK(l.contains(vec({4, -3, 0})));
  CHECK_FALSE(l.contains(vec({1, 0, 0})));
  l.insert(vec({1, 0, 0}));
  CHECK(l.contains(vec({1, 0, 0})));
  CHECK(l.rank() == 2);
  CHECK(l.basis() == mat({{1, 0, 0}, {0, 3, 0}}));
}

TEST_CASE("solving in a column span") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix a = random_matrix(rng, 4, 3, 4);
    IntVector x = IntVector{Integer(long(rng() % 7) - 3), Integer(long(rng() % 7) - 3),
                            Integer(long(rng() % 7) - 3)};
    const IntVector v = a * x;
    const auto y = solve_in_column_span(a, v);
    REQUIRE(y.has_value());
    CHECK(a * *y == v);
  }
  CHECK_FALSE(solve_in_column_span(mat({{2}}), vec({1})).has_value());
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, n, n, 9);
    CHECK(determinant(m) == laplace(m));
  }
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("conversions") {
  const long long big = 1LL << 62;
  CHECK(to_int64(Integer(static_cast<long>(big))) == big);
  Integer huge = static_cast<long>(big);
  huge *= 8;
  CHECK_THROWS_AS(to_int64(huge), std::overflow_error);
  const std::vector<long long> raw{1, -2, 3};
  CHECK(to_int_vector(raw) == vec({1, -2, 3}));
}
