#ifndef HILBERT_HODGE_HIGGS_ORACLE_HPP
#define HILBERT_HODGE_HIGGS_ORACLE_HPP

// Brute-force route to the cohomology sheaves of the logarithmic Higgs
// complex: the complex is written out over an explicit monomial basis and its
// homology is taken by exact rank computations, one monomial block at a time.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbert_hodge/exact_rank.hpp"
#include "hilbert_hodge/model.hpp"
#include "hilbert_hodge/sheaf_matrix.hpp"

namespace hilbert_hodge {

inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

/// Default basis cap, overridden by HILBERT_HODGE_ORACLE_CAP when it holds a
/// positive integer.
std::size_t default_oracle_cap();

/// Basis vector of Sym^{m_1} x ... x Sym^{m_n}: t_i counts the lowered factors
/// in slot i, so the Hodge bigrading is (sum(m_i - t_i), sum t_i).
struct HiggsBundleElement {
  std::vector<int> t;
  long p;
  long q;
  LineBundleMonomial monomial;

  bool operator==(const HiggsBundleElement&) const = default;
};

/// The Higgs bundle E_m as a list of line bundles, one per weight vector t in
/// lexicographic order. Size is rank(V_m).
std::vector<HiggsBundleElement> build_higgs_bundle(const LocalSystemSpec& spec);

/// Element t (x) omega_I of E_m (x) Omega^{|I|}(log S), where
/// Omega^1(log S) = sum of L_i^2.
struct HiggsBasisElement {
  std::vector<int> t;
  SubsetMask forms = 0;

  int form_degree() const;
  LineBundleMonomial monomial(const LocalSystemSpec& spec) const;
  long hodge_index(const LocalSystemSpec& spec) const;

  auto operator<=>(const HiggsBasisElement&) const = default;
};

/// The P-th graded piece of the logarithmic Higgs complex.
struct HiggsChainComplex {
  LocalSystemSpec spec;
  int P;
  /// terms[l] is the basis in form degree l, l = 0..n.
  std::vector<std::vector<HiggsBasisElement>> terms;
  /// differentials[l]: terms[l] -> terms[l+1]; rows index the target.
  std::vector<SparseIntMatrix> differentials;

  std::size_t basis_size() const;
};

/// Builds the P-th subcomplex with differential
///   d(t, I) = sum_{i not in I} (-1)^{#{j in I : j < i}} (m_i - t_i) (t + e_i, I + {i}).
/// Throws BadHodgeIndex unless 0 <= P <= |m| + n and OracleSizeExceeded when
/// the basis would exceed `cap` elements.
HiggsChainComplex build_log_higgs_complex(const LocalSystemSpec& spec, int P,
                                          std::size_t cap = default_oracle_cap());

/// Diagnostic for the structural checks below; empty when the property holds.
using StructureViolation = std::optional<std::string>;

/// d_{l+1} * d_l == 0 for every l, computed exactly.
StructureViolation check_d_squared_zero(const HiggsChainComplex& complex);

/// Every nonzero differential entry joins two basis elements with the same
/// monomial.
StructureViolation check_grading_preserved(const HiggsChainComplex& complex);

struct HomologyResult {
  std::map<HodgeCell, MonomialMultiset> cells;
};

/// Per monomial block, dim H^l = dim term_l - rank d_l - rank d_{l-1}.
/// Throws OracleSizeExceeded when the complex exceeds `cap`.
HomologyResult homology(const HiggsChainComplex& complex, std::size_t cap = default_oracle_cap());

/// Homology of every graded piece P = 0..|m|+n, assembled into a sheaf matrix.
SheafMatrix oracle_sheaf_matrix(const LocalSystemSpec& spec,
                                std::size_t cap = default_oracle_cap());

}  // namespace hilbert_hodge

#endif  // HILBERT_HODGE_HIGGS_ORACLE_HPP
