#pragma once

// Exact integer linear algebra over arbitrary-precision integers: row Hermite
// normal form, Smith normal form with unimodular transforms, and lattice
// membership.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grk {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// A matrix with zero rows is legal and, read as a list of lattice
/// generators, denotes the zero lattice in Z^cols.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix from row vectors, each of which must have `cols` entries.
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  IntVector row_vector(std::size_t r) const;
  std::vector<IntVector> row_list() const;
  const std::vector<Integer>& entries() const noexcept { return data_; }

  void append_row(std::span<const Integer> values);
  /// Rows of `other` appended below this matrix; column counts must agree.
  void append_rows(const IntMatrix& other);
  /// First `count` rows.
  IntMatrix top_rows(std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Row vector times matrix.
IntVector operator*(std::span<const Integer> v, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// Lexicographic comparison of two matrices: shape first, then entries row-major.
bool lex_less(const IntMatrix& a, const IntMatrix& b);

std::string to_string(const IntMatrix& m);
std::string to_string(std::span<const Integer> v);

/// Floor division and the matching nonnegative remainder for positive divisors.
Integer floor_div(const Integer& a, const Integer& b);

struct HermiteForm {
  IntMatrix H;  ///< row echelon form of the input
  IntMatrix U;  ///< unimodular, U * A == H
  std::size_t rank = 0;
  /// Column of the leading entry of each nonzero row of H.
  std::vector<std::size_t> pivot_cols;
};

/// Canonical row Hermite normal form.
///
/// Pivots are positive, entries above a pivot lie in [0, pivot), zero rows
/// come last. Two matrices have the same H (after dropping zero rows) iff
/// their row lattices agree.
HermiteForm hnf(const IntMatrix& a);

/// Nonzero rows of the Hermite form: the canonical basis of the row lattice.
IntMatrix canonical_basis(const IntMatrix& a);

struct SmithForm {
  IntMatrix S;  ///< diagonal, U * A * V == S
  IntMatrix U;
  IntMatrix V;
  /// The diagonal of S: the nonzero entries (a divisibility chain) then the zeros.
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
};

SmithForm snf(const IntMatrix& a);

/// True iff `v` is an integer combination of the rows of `basis`.
///
/// Throws DimensionMismatch when v.size() != basis.cols().
bool lattice_member(const IntMatrix& basis, std::span<const Integer> v);

/// Reduces `v` modulo the lattice whose canonical Hermite basis is `h`.
///
/// `h` must already be canonical (see canonical_basis). Pivot coordinates of
/// the result land in [0, pivot); two vectors reduce to the same result iff
/// they differ by a lattice vector.
IntVector reduce_modulo(const IntMatrix& h, std::span<const Integer> v);

/// Inverse of a unimodular matrix; std::nullopt when the matrix is not unimodular.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

}  // namespace grk
