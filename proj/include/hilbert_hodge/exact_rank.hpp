#ifndef HILBERT_HODGE_EXACT_RANK_HPP
#define HILBERT_HODGE_EXACT_RANK_HPP

#include <cstddef>
#include <vector>

#include "hilbert_hodge/model.hpp"

namespace hilbert_hodge {

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  long value;
};

/// Integer matrix in coordinate form. Entries are unique per (row, col) and
/// never zero.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseEntry> entries;
};

/// Dense row-major integer matrix used as elimination workspace.
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Every intermediate
/// division is exact.
std::size_t bareiss_rank(IntegerMatrix matrix);

}  // namespace hilbert_hodge

#endif  // HILBERT_HODGE_EXACT_RANK_HPP
