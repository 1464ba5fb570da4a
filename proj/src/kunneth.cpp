#include "hilbert_hodge/kunneth.hpp"

#include <bit>

namespace hilbert_hodge {

void SheafMatrix::insert(HodgeCell cell, const LineBundleMonomial& monomial, std::size_t count) {
  if (count == 0) return;
  cells[cell][monomial] += count;
}

std::size_t SheafMatrix::total() const {
  std::size_t sum = 0;
  for (const auto& [cell, multiset] : cells) {
    for (const auto& [monomial, count] : multiset) sum += count;
  }
  return sum;
}

LineBundleMonomial sheaf_monomial(const std::vector<int>& m, SubsetMask subset) {
  LineBundleMonomial out = LineBundleMonomial::identity(static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    out.exponents[i] = (subset >> i & 1U) ? m[i] + 2 : -m[i];
  }
  return out;
}

SheafMatrix cohomology_sheaf_closed_form(const LocalSystemSpec& spec) {
  SheafMatrix out{spec.m(), {}};
  const SubsetMask full = (SubsetMask{1} << spec.n()) - 1;
  for (SubsetMask subset = 0;; ++subset) {
    const HodgeCell cell{static_cast<int>(spec.subset_hodge_index(subset)), std::popcount(subset)};
    out.insert(cell, sheaf_monomial(spec.m(), subset));
    if (subset == full) break;
  }
  return out;
}

SheafMatrix trivial_sheaf_matrix() {
  SheafMatrix out;
  out.insert({0, 0}, LineBundleMonomial{});
  return out;
}

SheafMatrix kunneth_product(const SheafMatrix& a, const SheafMatrix& b) {
  SheafMatrix out{a.m, {}};
  out.m.insert(out.m.end(), b.m.begin(), b.m.end());
  for (const auto& [cell_a, set_a] : a.cells) {
    for (const auto& [cell_b, set_b] : b.cells) {
      const HodgeCell cell{cell_a.P + cell_b.P, cell_a.l + cell_b.l};
      for (const auto& [mono_a, count_a] : set_a) {
        for (const auto& [mono_b, count_b] : set_b) {
          if (mono_a.minus_S || mono_b.minus_S) {
            throw Error(ErrorCode::DoubleTwist, "sheaf matrices hold untwisted monomials only");
          }
          LineBundleMonomial joined{mono_a.exponents, false};
          joined.exponents.insert(joined.exponents.end(), mono_b.exponents.begin(),
                                  mono_b.exponents.end());
          out.insert(cell, joined, count_a * count_b);
        }
      }
    }
  }
  return out;
}

namespace {

constexpr std::size_t kEnumerationLimit = 30;

void count_subsets(const std::vector<int>& m, const std::vector<long>& suffix_max, std::size_t i,
                   long remaining, Integer& count) {
  if (remaining < 0 || remaining > suffix_max[i]) return;
  if (i == m.size()) {
    ++count;
    return;
  }
  count_subsets(m, suffix_max, i + 1, remaining, count);
  count_subsets(m, suffix_max, i + 1, remaining - (m[i] + 1), count);
}

}  // namespace

Integer count_N(const std::vector<int>& m, long P) {
  if (m.size() > kEnumerationLimit) {
    // The pruned walk visits every counted subset; past this size it is the
    // generating function or nothing.
    const auto coefficients = count_N_generating(m);
    if (P < 0 || P >= static_cast<long>(coefficients.size())) return 0;
    return coefficients[static_cast<std::size_t>(P)];
  }
  std::vector<long> suffix_max(m.size() + 1, 0);
  for (std::size_t i = m.size(); i-- > 0;) suffix_max[i] = suffix_max[i + 1] + m[i] + 1;
  Integer count = 0;
  count_subsets(m, suffix_max, 0, P, count);
  return count;
}

std::vector<Integer> count_N_generating(const std::vector<int>& m) {
  std::vector<Integer> poly{1};
  for (int v : m) {
    const std::size_t shift = static_cast<std::size_t>(v) + 1;
    std::vector<Integer> next(poly.size() + shift, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + shift] += poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace hilbert_hodge
