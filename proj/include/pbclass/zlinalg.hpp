#pragma once

// Exact integer matrix algebra over arbitrary-precision integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbclass::zlinalg {

using Integer = mpz_class;
using Vector = std::vector<Integer>;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows,
                                std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  IntMatrix transpose() const;

  // Elementary operations used by the reductions.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
Vector operator*(const IntMatrix& a, const Vector& v);

/// Horizontal concatenation [a | b]; row counts must agree.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal sum of `copies` copies of `block`.
IntMatrix block_diagonal(const IntMatrix& block, std::size_t copies);
/// Submatrix made of the listed rows (resp. columns), in order.
IntMatrix select_rows(const IntMatrix& m, std::span<const std::size_t> rows);
IntMatrix select_cols(const IntMatrix& m, std::span<const std::size_t> cols);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// D = U * M * V with U, V unimodular and D diagonal with d1 | d2 | ... and
/// trailing zeros. The inverses of U and V are tracked alongside.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;

  std::size_t rank() const;
  /// Diagonal entries d_1..d_min(r,c), nonnegative.
  Vector diagonal() const;
};

/// Smith normal form. Pivot: minimal nonzero absolute value, ties broken by
/// lowest row then lowest column.
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Z^r / column-span(M) in canonical form.
///
/// `torsion` holds the invariant factors > 1 in divisibility order and
/// `free_rank` the rank of the free part. `projection` maps ambient
/// coordinates to canonical coordinates (torsion first, then free; torsion
/// coordinates must still be reduced modulo their factor). `lift` is a right
/// inverse: projection * lift = identity.
struct Cokernel {
  Vector torsion;
  std::size_t free_rank = 0;
  IntMatrix projection;
  IntMatrix lift;
};

Cokernel cokernel(const IntMatrix& m);

/// Columns form a Z-basis of {v : M v = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Whether v lies in the Z-span of the columns of M.
bool in_column_span(const IntMatrix& m, const Vector& v);

/// Some integer x with M x = v, if one exists.
std::optional<Vector> solve(const IntMatrix& m, const Vector& v);

/// The group generated by the columns of `gens` modulo the column span of
/// `relations`, both sitting in the same Z^r. The result is a cokernel in the
/// coordinates of the generators (projection has gens.cols() columns).
Cokernel subquotient(const IntMatrix& gens, const IntMatrix& relations);

/// Mathematical (nonnegative) remainder.
Integer mod(const Integer& a, const Integer& m);

} // namespace pbclass::zlinalg
