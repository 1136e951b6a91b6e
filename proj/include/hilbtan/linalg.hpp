#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hilbtan/field.hpp"

namespace hilbtan {

/// Row space of a matrix over a field, kept in reduced row echelon form while
/// rows are inserted one at a time. Over F_p rows are dense residue vectors
/// handled by the SIMD kernels; over QQ rows are primitive integer vectors
/// reduced fraction-free.
class RowEchelon {
 public:
  RowEchelon(const FieldSpec& field, std::size_t ncols);
  ~RowEchelon();
  RowEchelon(RowEchelon&&) noexcept;
  RowEchelon& operator=(RowEchelon&&) noexcept;

  std::size_t ncols() const;
  std::size_t rank() const;
  const FieldSpec& field() const { return field_; }

  /// Returns true when the row was independent of the rows seen so far.
  bool insert(const std::vector<Scalar>& row);
  /// F_p fast path: entries must already be reduced residues.
  bool insert_residues(std::vector<std::uint32_t> row);
  bool contains(const std::vector<Scalar>& row) const;

  /// Column index of each pivot, ascending.
  std::vector<std::size_t> pivot_columns() const;
  /// Basis of {v : M v = 0}, one vector per non-pivot column c, with v[c] = 1
  /// and zeros in the other non-pivot columns. Ordered by c.
  std::vector<std::vector<Scalar>> nullspace() const;
  /// Rows of the reduced echelon form, pivots normalized to 1, sorted by pivot.
  std::vector<std::vector<Scalar>> rows() const;

 private:
  struct Impl;
  FieldSpec field_;
  std::unique_ptr<Impl> impl_;
};

/// Kernel of a sparse matrix given row by row. Light rows are eliminated
/// first with a Markowitz-style pivot choice; whatever is left is handed to
/// the dense RowEchelon.
class SparseLinearSystem {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseLinearSystem(const FieldSpec& field, std::size_t ncols);
  ~SparseLinearSystem();
  SparseLinearSystem(SparseLinearSystem&&) noexcept;

  std::size_t ncols() const;
  std::size_t nrows() const;
  /// Duplicate columns are summed.
  void add_row(std::vector<Entry> row);

  struct Solution {
    std::size_t rank = 0;
    std::size_t kernel_dimension = 0;
    /// Present when requested: the reduced row echelon basis of the kernel,
    /// which does not depend on the elimination order.
    std::vector<std::vector<Scalar>> kernel;
    std::size_t sparse_pivots = 0;
    std::size_t dense_rows = 0;
    std::size_t dense_cols = 0;
  };
  /// Row weight above which elimination switches to the dense phase.
  Solution solve(bool want_kernel, std::size_t max_sparse_weight = 48) const;

 private:
  struct Impl;
  FieldSpec field_;
  std::unique_ptr<Impl> impl_;
};

/// Rank of a dense matrix.
std::size_t matrix_rank(const FieldSpec& field, const std::vector<std::vector<Scalar>>& m, std::size_t ncols);

}  // namespace hilbtan
