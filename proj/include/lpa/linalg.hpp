#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lpa/scalar.hpp"

namespace lpa {

using DenseMatrix = std::vector<std::vector<Scalar>>;

/// Kernel basis of A (rows x cols) by Gauss-Jordan elimination. Pivots are
/// taken column by column, using the first row with a nonzero entry. One
/// basis vector per free column f: 1 at f, minus the reduced column at the
/// pivots.
std::vector<std::vector<Scalar>> rational_nullspace(const DenseMatrix& a, std::size_t cols);
std::size_t rank(const DenseMatrix& a, std::size_t cols);

using SparseRow = std::map<std::uint32_t, Scalar>;

/// Row echelon form built one row at a time. Every stored row has leading
/// coefficient 1 and no other stored row shares its leading column.
class SparseEchelon {
 public:
  explicit SparseEchelon(Field field = Field::rational()) : field_(field) {}

  /// Reduces `row` against the stored rows. Returns true if it was
  /// independent (and stores the normalized remainder).
  bool insert(SparseRow row);
  /// Remainder of `row` after reduction; empty iff it lies in the span.
  SparseRow reduce(SparseRow row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::uint32_t, SparseRow>& rows() const { return rows_; }

  /// Kernel of the stored rows over columns [0, cols), one vector per free
  /// column, from the fully reduced form.
  std::vector<SparseRow> kernel(std::uint32_t cols) const;

 private:
  Field field_;
  std::map<std::uint32_t, SparseRow> rows_;  // keyed by leading column
};

/// row += k * other, dropping zeros.
void axpy(SparseRow& row, const Scalar& k, const SparseRow& other);

}  // namespace lpa
