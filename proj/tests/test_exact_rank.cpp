#include <random>

#include "doctest.h"
#include "hilbert_hodge/exact_rank.hpp"

using namespace hilbert_hodge;

namespace {

// Plain Gauss-Jordan over Q, kept independent of the Bareiss path.
std::size_t rational_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

TEST_CASE("bareiss rank on small matrices") {
  CHECK(bareiss_rank(from_rows({{1}})) == 1);
  CHECK(bareiss_rank(from_rows({{0, 1}})) == 1);
  CHECK(bareiss_rank(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(bareiss_rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(bareiss_rank(from_rows({{0, 2, 4}, {0, 1, 2}, {3, 0, 1}})) == 2);
  CHECK(bareiss_rank(IntegerMatrix(0, 3)) == 0);
  CHECK(bareiss_rank(IntegerMatrix(3, 0)) == 0);
}

TEST_CASE("bareiss rank agrees with rational elimination") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 7);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution sparse(0.5);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng));
    const std::size_t cols = static_cast<std::size_t>(dim(rng));
    IntegerMatrix m(rows, cols);
    std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
    // Low-rank products exercise the column-skipping branch.
    const bool low_rank = trial % 3 == 0;
    std::vector<std::vector<long>> left(rows, std::vector<long>(2)),
        right(2, std::vector<long>(cols));
    for (auto& row : left)
      for (auto& v : row) v = entry(rng);
    for (auto& row : right)
      for (auto& v : row) v = entry(rng);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        long v = low_rank ? left[r][0] * right[0][c] + left[r][1] * right[1][c]
                          : (sparse(rng) ? 0 : entry(rng));
        m(r, c) = v;
        q[r][c] = v;
      }
    }
    CHECK(bareiss_rank(m) == rational_rank(q));
  }
}
