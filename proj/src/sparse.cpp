#include "lcm/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace lcm {

SparseOp SparseOp::identity(std::size_t dim) {
  SparseOp op(dim);
  op._entries.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    op._entries.push_back({i, i, 1});
  }
  return op;
}

SparseOp SparseOp::from_entries(std::size_t dim, std::vector<Entry> entries) {
  SparseOp op(dim);
  std::sort(entries.begin(), entries.end(), [](Entry const& a, Entry const& b) {
    return std::pair(a.row, a.col) < std::pair(b.row, b.col);
  });
  for (auto const& e : entries) {
    if (e.row >= dim || e.col >= dim) {
      throw std::out_of_range("SparseOp entry outside the dimension");
    }
    if (!op._entries.empty() && op._entries.back().row == e.row
        && op._entries.back().col == e.col) {
      op._entries.back().value += e.value;
    } else {
      op._entries.push_back(e);
    }
  }
  std::erase_if(op._entries, [](Entry const& e) { return e.value == 0; });
  return op;
}

std::int64_t SparseOp::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(_entries.begin(), _entries.end(), std::pair(row, col),
                             [](Entry const& e, std::pair<std::size_t, std::size_t> key) {
                               return std::pair(e.row, e.col) < key;
                             });
  if (it != _entries.end() && it->row == row && it->col == col) {
    return it->value;
  }
  return 0;
}

bool SparseOp::has_boundary() const {
  return std::find(_boundary.begin(), _boundary.end(), true) != _boundary.end();
}

SparseOp SparseOp::transpose() const {
  std::vector<Entry> t;
  t.reserve(_entries.size());
  for (auto const& e : _entries) {
    t.push_back({e.col, e.row, e.value});
  }
  SparseOp out = from_entries(_dim, std::move(t));
  // rows of a windowed operator are not tracked, so nothing survives
  if (has_boundary()) {
    out._boundary.assign(_dim, true);
  }
  return out;
}

SparseOp SparseOp::diagonal() const {
  SparseOp out(_dim);
  for (auto const& e : _entries) {
    if (e.row == e.col) {
      out._entries.push_back(e);
    }
  }
  out._boundary = _boundary;
  return out;
}

SparseOp operator*(SparseOp const& a, SparseOp const& b) {
  if (a._dim != b._dim) {
    throw std::invalid_argument("SparseOp dimension mismatch");
  }
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> cols_of_a(a._dim);
  for (auto const& e : a._entries) {
    cols_of_a[e.col].push_back({e.row, e.value});
  }
  std::vector<SparseOp::Entry> out;
  SparseOp result(a._dim);
  for (auto const& e : b._entries) {
    // (A B)(i, j) += A(i, k) B(k, j) with k = e.row, j = e.col
    for (auto const& [i, v] : cols_of_a[e.row]) {
      out.push_back({i, e.col, v * e.value});
    }
    if (a._boundary[e.row]) {
      result._boundary[e.col] = true;
    }
  }
  SparseOp prod = SparseOp::from_entries(a._dim, std::move(out));
  prod._boundary = std::move(result._boundary);
  for (std::size_t c = 0; c < b._dim; ++c) {
    if (b._boundary[c]) {
      prod._boundary[c] = true;
    }
  }
  return prod;
}

bool SparseOp::equal_on_interior(SparseOp const& other) const {
  if (_dim != other._dim) {
    return false;
  }
  auto interior = [&](std::size_t c) { return !_boundary[c] && !other._boundary[c]; };
  std::vector<Entry> mine;
  std::vector<Entry> theirs;
  for (auto const& e : _entries) {
    if (interior(e.col)) {
      mine.push_back(e);
    }
  }
  for (auto const& e : other._entries) {
    if (interior(e.col)) {
      theirs.push_back(e);
    }
  }
  return mine == theirs;
}

std::vector<std::vector<std::int64_t>> SparseOp::dense() const {
  std::vector<std::vector<std::int64_t>> out(_dim, std::vector<std::int64_t>(_dim, 0));
  for (auto const& e : _entries) {
    out[e.row][e.col] = e.value;
  }
  return out;
}

}  // namespace lcm
