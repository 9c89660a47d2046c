#pragma once

// Exact incremental column echelon form over the rationals.

#include <map>
#include <optional>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

/// Sparse column vector: row index -> nonzero value.
using SparseVec = std::map<int, Rational>;

class ExactColumnSolver {
 public:
  /// Appends a column; returns true iff it raised the rank.
  bool add_column(const SparseVec& column);

  int columns() const noexcept { return columns_; }
  int rank() const noexcept { return static_cast<int>(pivots_.size()); }

  /// Coefficients c with Σ c_k column_k = target, or nullopt if target is outside the span.
  /// Dependent columns receive coefficient 0.
  std::optional<std::vector<Rational>> solve(const SparseVec& target) const;

 private:
  struct Reduced {
    int pivot;
    SparseVec vec;      // vec[pivot] == 1
    SparseVec combo;    // vec = Σ combo[k] column_k
  };

  void reduce(SparseVec& v, SparseVec& combo, const Rational& combo_sign) const;

  std::vector<Reduced> pivots_;
  int columns_ = 0;
};

/// Rank of a set of sparse columns.
int exact_rank(const std::vector<SparseVec>& columns);

}  // namespace capelli
