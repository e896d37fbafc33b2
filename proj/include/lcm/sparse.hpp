#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lcm {

// Square integer matrix stored as sorted (row, col, value) triplets with no
// zero entries. Columns flagged in `boundary` come from a truncation window
// and carry no exact information; comparisons skip them.
class SparseOp {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
    bool operator==(Entry const&) const = default;
  };

  SparseOp() = default;
  explicit SparseOp(std::size_t dim) : _dim(dim), _boundary(dim, false) {}

  static SparseOp identity(std::size_t dim);
  // entries may be unsorted and repeated; repeats are summed
  static SparseOp from_entries(std::size_t dim, std::vector<Entry> entries);

  std::size_t dim() const noexcept { return _dim; }
  std::vector<Entry> const& entries() const noexcept { return _entries; }
  std::size_t nnz() const noexcept { return _entries.size(); }
  std::int64_t at(std::size_t row, std::size_t col) const;

  bool is_boundary(std::size_t col) const { return _boundary[col]; }
  void mark_boundary(std::size_t col) { _boundary[col] = true; }
  bool has_boundary() const;

  // Exact for boundary-free operators; otherwise every column is boundary.
  SparseOp transpose() const;
  SparseOp diagonal() const;

  // Column j of the product is boundary when column j of `b` is, or when it
  // reaches a boundary column of `a`.
  friend SparseOp operator*(SparseOp const& a, SparseOp const& b);

  // Exact equality, boundary flags included.
  friend bool operator==(SparseOp const&, SparseOp const&) = default;

  // Equality on columns that are interior in both operands.
  bool equal_on_interior(SparseOp const& other) const;

  std::vector<std::vector<std::int64_t>> dense() const;

 private:
  std::size_t _dim = 0;
  std::vector<Entry> _entries;
  std::vector<bool> _boundary;
};

}  // namespace lcm
