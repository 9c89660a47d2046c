#pragma once

// Partitions, permutations and Young tableaux.
//
// Tableau cells are indexed row-major: the first row holds cells 0..λ1-1, the
// second row the next λ2 cells, and so on. Entries are symbols from an
// alphabet {1..n}. Enumerations are returned in lexicographic order of the
// concatenated row words.

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace capelli {

class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }
  /// λ_1, or 0 for the empty partition.
  int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](int k) const { return parts_.at(static_cast<std::size_t>(k)); }

  Partition conjugate() const;
  /// Product of all hook lengths.
  std::uint64_t hook_number() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of h, lexicographically decreasing: (h), (h-1,1), ..., (1^h).
std::vector<Partition> partitions_of(int h);

/// A bijection of {0..h-1}; stored as images, 0-based.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection of {0..h-1}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int h);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  int inversions() const;
  /// +1 or -1.
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  Partition cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All h! permutations in lexicographic order of their image sequences.
std::vector<Permutation> permutations_of(int h);

class YoungTableau {
 public:
  YoungTableau() = default;
  /// Throws std::invalid_argument if entries.size() != shape.weight().
  YoungTableau(Partition shape, std::vector<int> entries);
  /// Throws std::invalid_argument unless row lengths form a partition.
  static YoungTableau from_rows(const std::vector<std::vector<int>>& rows);
  /// Single-column tableau with the given entries top to bottom.
  static YoungTableau column(std::vector<int> entries);

  const Partition& shape() const noexcept { return shape_; }
  /// Row-major cell contents (the tableau word).
  const std::vector<int>& word() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }

  int at(int row, int col) const;
  std::span<const int> row(int r) const;
  std::vector<std::vector<int>> rows() const;
  std::vector<int> column_entries(int c) const;
  /// Row-major index of cell (row, col).
  int cell_index(int row, int col) const;
  /// Row of every cell, row-major.
  std::vector<int> row_of_cell() const;
  /// Column of every cell, row-major.
  std::vector<int> column_of_cell() const;

  /// c_T(a) for a = 1..alphabet_size, stored at index a-1.
  std::vector<int> content(int alphabet_size) const;
  int max_entry() const;

  /// Rows strictly increasing and columns weakly increasing.
  bool is_standard() const;
  bool is_row_strict() const;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
  /// Shape first, then word.
  friend std::strong_ordering operator<=>(const YoungTableau& a, const YoungTableau& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  Partition shape_;
  std::vector<int> entries_;
};

/// Tableaux of shape λ over {1..n} with strictly increasing rows and weakly increasing columns.
std::vector<YoungTableau> enumerate_standard(const Partition& shape, int n);

/// Tableaux of shape λ over {1..n} with strictly increasing rows.
std::vector<YoungTableau> enumerate_row_strict(const Partition& shape, int n);

/// Every independent permutation of every column, duplicates kept; size ∏ (column length)!.
std::vector<YoungTableau> column_permuted_family(const YoungTableau& t);

/// Every independent permutation of every row, paired with the product of row-permutation signs.
std::vector<std::pair<int, YoungTableau>> row_permuted_family(const YoungTableau& t);

/// Weak compositions (h_1..h_n) of h, lexicographically increasing.
std::vector<std::vector<int>> enumerate_compositions(int h, int n);

/// The non-decreasing sequence 1^{h_1} 2^{h_2} ... n^{h_n}.
std::vector<int> diagonal_sequence(std::span<const int> composition);

/// Multilinear tableau with entries 1..h in row-major order.
YoungTableau identity_tableau(const Partition& shape);

/// Permutations of {0..h-1} preserving the value sets of each row (resp. column)
/// of a multilinear tableau with entries 1..h.
std::vector<Permutation> row_group(const YoungTableau& multilinear);
std::vector<Permutation> column_group(const YoungTableau& multilinear);

/// C(k, 2) parity as a sign: (-1)^{k(k-1)/2}.
inline int binomial2_sign(int k) { return ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1; }

}  // namespace capelli
