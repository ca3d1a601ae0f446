#include "arcring/integer_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace arcring {

IntVector to_int_vector(std::span<const long long> v) {
  IntVector out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

long long to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return x.get_si();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(src, c);
    if (s != 0) (*this)(dst, c) += factor * s;
  }
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src,
                                    const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, src);
    if (s != 0) (*this)(r, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector: shape mismatch");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

namespace {

std::optional<std::size_t> leading_column(const IntVector& v) {
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) return c;
  return std::nullopt;
}

// v[from..] += factor * w[from..]
void axpy(IntVector& v, const Integer& factor, const IntVector& w, std::size_t from) {
  for (std::size_t c = from; c < v.size(); ++c)
    if (w[c] != 0) v[c] += factor * w[c];
}

// Brings m to row echelon form by unimodular row operations, mirroring each
// operation on `companion`.  Pivots are positive.  Returns the rank; the
// nonzero rows come first.
std::size_t echelon_with_transform(IntMatrix& m, IntMatrix& companion) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    bool has_pivot = false;
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t i = rank; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        if (best == m.rows() || abs(m(i, c)) < abs(m(best, c))) best = i;
      }
      if (best == m.rows()) break;
      has_pivot = true;
      m.swap_rows(rank, best);
      companion.swap_rows(rank, best);
      bool clean = true;
      for (std::size_t i = rank + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(rank, c).get_mpz_t());
        Integer minus_q = -q;
        m.add_row_multiple(i, rank, minus_q);
        companion.add_row_multiple(i, rank, minus_q);
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (has_pivot) {
      if (m(rank, c) < 0) {
        m.negate_row(rank);
        companion.negate_row(rank);
      }
      ++rank;
    }
  }
  return rank;
}

}  // namespace

void RowLattice::insert(IntVector v) {
  if (v.size() != cols_) throw std::invalid_argument("RowLattice: wrong vector length");
  while (auto lead = leading_column(v)) {
    const std::size_t p = *lead;
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      if (v[p] < 0)
        for (auto& x : v) x = -x;
      rows_.emplace(p, std::move(v));
      return;
    }
    IntVector& row = it->second;
    if (mpz_divisible_p(v[p].get_mpz_t(), row[p].get_mpz_t())) {
      Integer q = v[p] / row[p];
      axpy(v, -q, row, p);
      continue;
    }
    // Replace (row, v) by (s*row + t*v, (row[p]/g)*v - (v[p]/g)*row), a
    // unimodular change that puts gcd(row[p], v[p]) on the pivot.
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[p].get_mpz_t(),
               v[p].get_mpz_t());
    const Integer a = row[p] / g;
    const Integer b = v[p] / g;
    IntVector new_row(cols_);
    IntVector new_v(cols_);
    for (std::size_t c = p; c < cols_; ++c) {
      new_row[c] = s * row[c] + t * v[c];
      new_v[c] = a * v[c] - b * row[c];
    }
    if (new_row[p] < 0)
      for (auto& x : new_row) x = -x;
    row = std::move(new_row);
    v = std::move(new_v);
  }
}

IntVector RowLattice::reduce(IntVector v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowLattice: wrong vector length");
  for (const auto& [p, row] : rows_) {
    if (v[p] == 0) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), row[p].get_mpz_t());
    axpy(v, -q, row, p);
  }
  return v;
}

bool RowLattice::contains(const IntVector& v) const {
  for (const auto& x : reduce(v))
    if (x != 0) return false;
  return true;
}

IntMatrix RowLattice::basis() const {
  std::vector<std::size_t> pivots;
  std::vector<IntVector> rows;
  for (const auto& [p, row] : rows_) {
    pivots.push_back(p);
    rows.push_back(row);
  }
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const std::size_t p = pivots[j];
    for (std::size_t i = 0; i < j; ++i) {
      if (rows[i][p] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][p].get_mpz_t(), rows[j][p].get_mpz_t());
      axpy(rows[i], -q, rows[j], p);
    }
  }
  return IntMatrix::from_rows(rows, cols_);
}

IntVector SmithForm::invariant_factors() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& D = f.D;
  const std::size_t limit = std::min(D.rows(), D.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto place_pivot = [&]() -> bool {
      std::size_t br = D.rows(), bc = D.cols();
      for (std::size_t i = t; i < D.rows(); ++i)
        for (std::size_t j = t; j < D.cols(); ++j) {
          if (D(i, j) == 0) continue;
          if (br == D.rows() || abs(D(i, j)) < abs(D(br, bc))) {
            br = i;
            bc = j;
          }
        }
      if (br == D.rows()) return false;
      D.swap_rows(t, br);
      f.U.swap_rows(t, br);
      D.swap_columns(t, bc);
      f.V.swap_columns(t, bc);
      return true;
    };
    if (!place_pivot()) break;

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        Integer minus_q = -q;
        D.add_row_multiple(i, t, minus_q);
        f.U.add_row_multiple(i, t, minus_q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        Integer minus_q = -q;
        D.add_column_multiple(j, t, minus_q);
        f.V.add_column_multiple(j, t, minus_q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        place_pivot();
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = D.rows();
      for (std::size_t i = t + 1; i < D.rows() && bad == D.rows(); ++i)
        for (std::size_t j = t + 1; j < D.cols(); ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == D.rows()) break;
      D.add_row_multiple(t, bad, 1);
      f.U.add_row_multiple(t, bad, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

IntVector invariant_factors(const IntMatrix& m) {
  return smith_normal_form(hermite_normal_form(m)).invariant_factors();
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  RowLattice lattice(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) lattice.insert(m.row(r));
  return lattice.basis();
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rows(); }

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  // Same row lattice, hence the same kernel, but at most cols rows.
  IntMatrix h = hermite_normal_form(m);
  IntMatrix t = h.transpose();
  IntMatrix u = IntMatrix::identity(m.cols());
  const std::size_t r = echelon_with_transform(t, u);

  RowLattice kernel(m.cols());
  for (std::size_t i = r; i < u.rows(); ++i) kernel.insert(u.row(i));
  IntMatrix k = kernel.basis();
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(k.row(i));
  return out;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("lattice_equal: row counts differ");
  return hermite_normal_form(a.transpose()) == hermite_normal_form(b.transpose());
}

std::optional<IntVector> solve_in_column_span(const IntMatrix& a, const IntVector& v) {
  if (v.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  IntMatrix t = a.transpose();
  IntMatrix u = IntMatrix::identity(a.cols());
  const std::size_t r = echelon_with_transform(t, u);

  IntVector rest = v;
  IntVector x(a.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const IntVector row = t.row(i);
    const std::size_t p = *leading_column(row);
    if (rest[p] == 0) continue;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), row[p].get_mpz_t())) return std::nullopt;
    const Integer q = rest[p] / row[p];
    axpy(rest, -q, row, p);
    for (std::size_t c = 0; c < x.size(); ++c)
      if (u(i, c) != 0) x[c] += q * u(i, c);
  }
  for (const auto& e : rest)
    if (e != 0) return std::nullopt;
  return x;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace arcring
