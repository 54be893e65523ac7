#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "ihara/integer.hpp"

namespace ihara {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix transpose() const;
  // Copy with row `r` and column `c` removed.
  IntMatrix minor_matrix(std::size_t r, std::size_t c) const;
  IntVector column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(std::span<const Integer> v) const;
  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Smith normal form U·M·V = diag(d_1, ..., d_k, 0, ...), k = rank, with
/// d_1 | d_2 | ... | d_k, all d_i > 0, and U, V unimodular. `diagonal` has
/// length min(rows, cols); trailing entries past the rank are zero.
struct SmithForm {
  IntVector diagonal;
  IntMatrix U;
  IntMatrix V;

  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Exact determinant by Bareiss fraction-free elimination.
/// Throws DimensionError for non-square input.
Integer int_det(const IntMatrix& m);

/// Classical adjugate, adj(M)·M = det(M)·I. Cofactor route, O(n^5); for
/// small matrices only.
IntMatrix adjugate(const IntMatrix& m);

/// The subgroup of Z^rows spanned by the columns of a generator matrix.
/// Reduces once with a Smith form, then answers membership and index
/// queries exactly.
class IntegerLattice {
 public:
  explicit IntegerLattice(const IntMatrix& generators);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t rank() const { return rank_; }
  const IntVector& invariant_factors() const { return factors_; }

  bool contains(std::span<const Integer> v) const;

  // Order of the torsion part of Z^ambient / lattice, i.e. the product of the
  // nonzero invariant factors.
  Integer torsion_order() const;

 private:
  std::size_t ambient_;
  std::size_t rank_;
  IntVector factors_;
  IntMatrix left_;
};

/// True iff `b` lies in the integer column span of `m`.
/// Throws DimensionError if b.size() != m.rows().
bool lattice_contains(const IntMatrix& m, std::span<const Integer> b);

}  // namespace ihara
