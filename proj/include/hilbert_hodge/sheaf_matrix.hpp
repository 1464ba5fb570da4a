#ifndef HILBERT_HODGE_SHEAF_MATRIX_HPP
#define HILBERT_HODGE_SHEAF_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "hilbert_hodge/model.hpp"

namespace hilbert_hodge {

/// Position (P, l): Hodge index of the graded subcomplex and form degree.
struct HodgeCell {
  int P;
  int l;

  auto operator<=>(const HodgeCell&) const = default;
};

/// Direct sum of line-bundle monomials; the map order gives the canonical
/// (lexicographic) listing. Multiplicities are always positive.
using MonomialMultiset = std::map<LineBundleMonomial, std::size_t>;

/// Cohomology sheaves C^{P,l} as a table of monomial multisets. Empty cells
/// are never stored.
struct SheafMatrix {
  std::vector<int> m;
  std::map<HodgeCell, MonomialMultiset> cells;

  int n() const { return static_cast<int>(m.size()); }

  void insert(HodgeCell cell, const LineBundleMonomial& monomial, std::size_t count = 1);

  /// Total number of monomials, counted with multiplicity.
  std::size_t total() const;

  bool operator==(const SheafMatrix&) const = default;
};

}  // namespace hilbert_hodge

#endif  // HILBERT_HODGE_SHEAF_MATRIX_HPP
