#pragma once

// Exact linear algebra over the integers: Hermite and Smith normal forms,
// saturated kernel bases, ranks and lattice comparisons.  Entries are GMP
// integers so intermediate growth never overflows.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace arcring {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector to_int_vector(std::span<const long long> v);
/// Throws std::overflow_error when x does not fit in a long long.
long long to_int64(const Integer& x);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns,
                                std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  IntVector operator*(const IntVector& v) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row lattice in Hermite normal form, grown one vector at a time.  Rows
/// are kept in echelon form keyed by pivot column; pivots are positive.
class RowLattice {
 public:
  explicit RowLattice(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  void insert(IntVector v);
  /// Remainder of v after reduction by the echelon rows; zero iff v lies
  /// in the lattice.
  IntVector reduce(IntVector v) const;
  bool contains(const IntVector& v) const;

  /// Reduced Hermite normal form: rows sorted by pivot, entries above each
  /// pivot reduced into [0, pivot).  Canonical for the lattice.
  IntMatrix basis() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, IntVector> rows_;  // pivot column -> row
};

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // U * M * V, diagonal with d1 | d2 | ...
  IntMatrix V;  // unimodular, cols x cols

  /// Nonzero diagonal entries of D.
  IntVector invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero invariant factors of m, computed on the Hermite form of its row
/// lattice without tracking transforms.
IntVector invariant_factors(const IntMatrix& m);

/// Nonzero rows of the reduced row Hermite normal form of m.
IntMatrix hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Basis of the lattice {v : m v = 0}, in Hermite normal form.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// True iff the column spans of a and b over Z coincide.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

/// Some integer x with a x = v, if one exists.
std::optional<IntVector> solve_in_column_span(const IntMatrix& a, const IntVector& v);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

}  // namespace arcring
