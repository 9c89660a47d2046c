#include "capelli/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace capelli {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(first()), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

std::uint64_t Partition::hook_number() const {
  const Partition conj = conjugate();
  std::uint64_t product = 1;
  for (int r = 0; r < length(); ++r)
    for (int c = 0; c < parts_[static_cast<std::size_t>(r)]; ++c)
      product *= static_cast<std::uint64_t>((parts_[static_cast<std::size_t>(r)] - c - 1) +
                                            (conj[c] - r - 1) + 1);
  return product;
}

std::vector<Partition> partitions_of(int h) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(h, h);
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int h) {
  std::vector<int> id(static_cast<std::size_t>(h));
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.degree() != degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[static_cast<std::size_t>(other.images_[i])];
  return Permutation(std::move(out));
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i])) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

std::vector<Permutation> permutations_of(int h) {
  std::vector<int> images(static_cast<std::size_t>(h));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

YoungTableau::YoungTableau(Partition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.weight())
    throw std::invalid_argument("tableau entry count does not match shape weight");
}

YoungTableau YoungTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  std::vector<int> entries;
  for (const auto& r : rows) {
    if (r.empty()) throw std::invalid_argument("tableau rows must be nonempty");
    parts.push_back(static_cast<int>(r.size()));
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return YoungTableau(Partition(std::move(parts)), std::move(entries));
}

YoungTableau YoungTableau::column(std::vector<int> entries) {
  std::vector<int> parts(entries.size(), 1);
  return YoungTableau(Partition(std::move(parts)), std::move(entries));
}

int YoungTableau::cell_index(int row, int col) const {
  if (row < 0 || row >= shape_.length() || col < 0 || col >= shape_[row])
    throw std::out_of_range("tableau cell out of range");
  int offset = 0;
  for (int r = 0; r < row; ++r) offset += shape_[r];
  return offset + col;
}

int YoungTableau::at(int row, int col) const {
  return entries_[static_cast<std::size_t>(cell_index(row, col))];
}

std::span<const int> YoungTableau::row(int r) const {
  const int start = cell_index(r, 0);
  return std::span<const int>(entries_).subspan(static_cast<std::size_t>(start),
                                                static_cast<std::size_t>(shape_[r]));
}

std::vector<std::vector<int>> YoungTableau::rows() const {
  std::vector<std::vector<int>> out;
  for (int r = 0; r < shape_.length(); ++r) {
    auto rw = row(r);
    out.emplace_back(rw.begin(), rw.end());
  }
  return out;
}

std::vector<int> YoungTableau::column_entries(int c) const {
  std::vector<int> out;
  for (int r = 0; r < shape_.length() && shape_[r] > c; ++r) out.push_back(at(r, c));
  return out;
}

std::vector<int> YoungTableau::row_of_cell() const {
  std::vector<int> out;
  for (int r = 0; r < shape_.length(); ++r) out.insert(out.end(), static_cast<std::size_t>(shape_[r]), r);
  return out;
}

std::vector<int> YoungTableau::column_of_cell() const {
  std::vector<int> out;
  for (int r = 0; r < shape_.length(); ++r)
    for (int c = 0; c < shape_[r]; ++c) out.push_back(c);
  return out;
}

std::vector<int> YoungTableau::content(int alphabet_size) const {
  std::vector<int> out(static_cast<std::size_t>(alphabet_size), 0);
  for (int a : entries_) {
    if (a < 1 || a > alphabet_size) throw std::out_of_range("tableau entry outside alphabet");
    ++out[static_cast<std::size_t>(a - 1)];
  }
  return out;
}

int YoungTableau::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool YoungTableau::is_row_strict() const {
  for (int r = 0; r < shape_.length(); ++r)
    for (int c = 1; c < shape_[r]; ++c)
      if (at(r, c - 1) >= at(r, c)) return false;
  return true;
}

bool YoungTableau::is_standard() const {
  if (!is_row_strict()) return false;
  for (int r = 1; r < shape_.length(); ++r)
    for (int c = 0; c < shape_[r]; ++c)
      if (at(r - 1, c) > at(r, c)) return false;
  return true;
}

namespace {

// Fills cells row-major with ascending values, so the output is ordered by word.
std::vector<YoungTableau> fill_tableaux(const Partition& shape, int n, bool weak_columns) {
  std::vector<YoungTableau> out;
  const int h = shape.weight();
  std::vector<int> entries(static_cast<std::size_t>(h), 0);
  std::vector<int> row_start;
  for (int r = 0, off = 0; r < shape.length(); off += shape[r], ++r) row_start.push_back(off);

  std::function<void(int, int, int)> rec = [&](int cell, int r, int c) {
    if (cell == h) {
      out.emplace_back(shape, entries);
      return;
    }
    int lo = 1;
    if (c > 0) lo = entries[static_cast<std::size_t>(cell - 1)] + 1;
    if (weak_columns && r > 0)
      lo = std::max(lo, entries[static_cast<std::size_t>(row_start[static_cast<std::size_t>(r - 1)] + c)]);
    const int next_r = (c + 1 == shape[r]) ? r + 1 : r;
    const int next_c = (c + 1 == shape[r]) ? 0 : c + 1;
    for (int v = lo; v <= n; ++v) {
      entries[static_cast<std::size_t>(cell)] = v;
      rec(cell + 1, next_r, next_c);
    }
  };
  rec(0, 0, 0);
  return out;
}

}  // namespace

std::vector<YoungTableau> enumerate_standard(const Partition& shape, int n) {
  return fill_tableaux(shape, n, true);
}

std::vector<YoungTableau> enumerate_row_strict(const Partition& shape, int n) {
  return fill_tableaux(shape, n, false);
}

namespace {

// Cartesian product over groups of cell positions, each group permuted in all ways.
template <typename Visit>
void permute_groups(const std::vector<std::vector<int>>& groups, Visit&& visit) {
  std::vector<std::vector<int>> perms;
  for (const auto& g : groups) {
    std::vector<int> idx(g.size());
    std::iota(idx.begin(), idx.end(), 0);
    perms.push_back(idx);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == groups.size()) {
      visit(perms);
      return;
    }
    std::sort(perms[k].begin(), perms[k].end());
    do {
      rec(k + 1);
    } while (std::next_permutation(perms[k].begin(), perms[k].end()));
  };
  rec(0);
}

int sign_of(const std::vector<int>& images) {
  return Permutation(images).sign();
}

}  // namespace

std::vector<YoungTableau> column_permuted_family(const YoungTableau& t) {
  std::vector<std::vector<int>> columns;
  for (int c = 0; c < t.shape().first(); ++c) {
    std::vector<int> cells;
    for (int r = 0; r < t.shape().length() && t.shape()[r] > c; ++r) cells.push_back(t.cell_index(r, c));
    columns.push_back(std::move(cells));
  }
  std::vector<YoungTableau> out;
  permute_groups(columns, [&](const std::vector<std::vector<int>>& perms) {
    std::vector<int> entries = t.word();
    for (std::size_t k = 0; k < columns.size(); ++k)
      for (std::size_t p = 0; p < columns[k].size(); ++p)
        entries[static_cast<std::size_t>(columns[k][p])] =
            t.word()[static_cast<std::size_t>(columns[k][static_cast<std::size_t>(perms[k][p])])];
    out.emplace_back(t.shape(), std::move(entries));
  });
  return out;
}

std::vector<std::pair<int, YoungTableau>> row_permuted_family(const YoungTableau& t) {
  std::vector<std::vector<int>> row_cells;
  for (int r = 0; r < t.shape().length(); ++r) {
    std::vector<int> cells;
    for (int c = 0; c < t.shape()[r]; ++c) cells.push_back(t.cell_index(r, c));
    row_cells.push_back(std::move(cells));
  }
  std::vector<std::pair<int, YoungTableau>> out;
  permute_groups(row_cells, [&](const std::vector<std::vector<int>>& perms) {
    std::vector<int> entries = t.word();
    int sign = 1;
    for (std::size_t k = 0; k < row_cells.size(); ++k) {
      sign *= sign_of(perms[k]);
      for (std::size_t p = 0; p < row_cells[k].size(); ++p)
        entries[static_cast<std::size_t>(row_cells[k][p])] =
            t.word()[static_cast<std::size_t>(row_cells[k][static_cast<std::size_t>(perms[k][p])])];
    }
    out.emplace_back(sign, YoungTableau(t.shape(), std::move(entries)));
  });
  return out;
}

std::vector<std::vector<int>> enumerate_compositions(int h, int n) {
  if (h < 0 || n < 1) throw std::invalid_argument("compositions need h >= 0 and n >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n - 1) {
      current[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, h);
  return out;
}

std::vector<int> diagonal_sequence(std::span<const int> composition) {
  std::vector<int> out;
  for (std::size_t p = 0; p < composition.size(); ++p)
    out.insert(out.end(), static_cast<std::size_t>(composition[p]), static_cast<int>(p) + 1);
  return out;
}

YoungTableau identity_tableau(const Partition& shape) {
  std::vector<int> entries(static_cast<std::size_t>(shape.weight()));
  std::iota(entries.begin(), entries.end(), 1);
  return YoungTableau(shape, std::move(entries));
}

namespace {

std::vector<Permutation> stabilizer(const YoungTableau& t, const std::vector<std::vector<int>>& blocks) {
  // blocks hold cell indices; the group acts on values t(cell) - 1.
  std::vector<std::vector<int>> value_blocks;
  for (const auto& b : blocks) {
    std::vector<int> vals;
    for (int cell : b) vals.push_back(t.word()[static_cast<std::size_t>(cell)] - 1);
    value_blocks.push_back(std::move(vals));
  }
  std::vector<Permutation> out;
  permute_groups(value_blocks, [&](const std::vector<std::vector<int>>& perms) {
    std::vector<int> images(static_cast<std::size_t>(t.size()));
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t k = 0; k < value_blocks.size(); ++k)
      for (std::size_t p = 0; p < value_blocks[k].size(); ++p)
        images[static_cast<std::size_t>(value_blocks[k][p])] =
            value_blocks[k][static_cast<std::size_t>(perms[k][p])];
    out.emplace_back(std::move(images));
  });
  return out;
}

void require_multilinear(const YoungTableau& t) {
  std::vector<int> sorted = t.word();
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("tableau is not multilinear");
}

}  // namespace

std::vector<Permutation> row_group(const YoungTableau& multilinear) {
  require_multilinear(multilinear);
  std::vector<std::vector<int>> blocks;
  for (int r = 0; r < multilinear.shape().length(); ++r) {
    std::vector<int> cells;
    for (int c = 0; c < multilinear.shape()[r]; ++c) cells.push_back(multilinear.cell_index(r, c));
    blocks.push_back(std::move(cells));
  }
  return stabilizer(multilinear, blocks);
}

std::vector<Permutation> column_group(const YoungTableau& multilinear) {
  require_multilinear(multilinear);
  std::vector<std::vector<int>> blocks;
  for (int c = 0; c < multilinear.shape().first(); ++c) {
    std::vector<int> cells;
    for (int r = 0; r < multilinear.shape().length() && multilinear.shape()[r] > c; ++r)
      cells.push_back(multilinear.cell_index(r, c));
    blocks.push_back(std::move(cells));
  }
  return stabilizer(multilinear, blocks);
}

}  // namespace capelli
