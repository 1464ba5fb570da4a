#ifndef HILBERT_HODGE_COHOMOLOGY_TABLES_HPP
#define HILBERT_HODGE_COHOMOLOGY_TABLES_HPP

// Assembly of the mixed Hodge structure on H^k(X, V_m) for a Hilbert modular
// variety X of dimension n with h cusps and geometric genus g.
//
// Notation used throughout: W = |m| + n is the weight of the interior part,
// D = (g + (-1)^n) prod(m_i + 1) the dimension of the L2 sections, and
// e = h if m is parallel (all m_i equal), 0 otherwise.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hilbert_hodge/model.hpp"

namespace hilbert_hodge {

/// Gr_F^P H^k as a list of coherent cohomology groups, keyed by P.
using GrFLabels = std::map<long, std::vector<SheafCohomologyLabel>>;

/// For each I with |m_I| + |I| = P, the label H^{k-|I|}(Xbar, C_I). Labels of
/// negative degree are dropped. Throws BadDegree unless 0 <= k <= 2n.
GrFLabels gr_F_labels(const LocalSystemSpec& spec, int k);

/// Dimension of a coherent cohomology group appearing in the Gr_F
/// description. Only groups whose dimension is determined by the theory are
/// answered; everything else throws DictionaryMiss.
Integer sheaf_cohomology_dim(const SheafCohomologyLabel& label, const LocalSystemSpec& spec,
                             const VarietyInvariants& inv);

/// Sum of sheaf_cohomology_dim over gr_F_labels(spec, k)[P], or nullopt if
/// any label is a dictionary miss.
std::optional<Integer> gr_F_dimension(const LocalSystemSpec& spec, const VarietyInvariants& inv,
                                      int k, long P);

/// Intersection cohomology of the Baily-Borel compactification.
struct IhTable {
  int n = 0;
  long middle_weight = 0;
  Integer l2_dim;
  /// dims[k] = dim IH^k, k = 0..2n.
  std::vector<Integer> dims;
  /// P -> dim IH^{P, W-P}; zero entries omitted.
  std::map<long, Integer> middle_hodge;

  bool operator==(const IhTable&) const = default;
};

IhTable ih_table(const LocalSystemSpec& spec, const VarietyInvariants& inv);

struct EisensteinBasisElement {
  /// a, a subset of {1..n-1} with |a| = k - n, 1-based and increasing.
  std::vector<int> subset;
  /// Exponents of (c z_i + d)^{-alpha_i} (c zbar_i + d)^{-beta_i} in the
  /// Eisenstein series attached to omega_a.
  std::vector<long> alpha;
  std::vector<long> beta;

  bool operator==(const EisensteinBasisElement&) const = default;
};

/// Eisenstein cohomology in degree k. `basis` is the basis at one cusp; every
/// cusp contributes an identical copy, so dim = |basis| * cusps.
struct EisensteinDatum {
  int k = 0;
  Integer cusps;
  std::vector<EisensteinBasisElement> basis;
  Integer dim;

  bool operator==(const EisensteinDatum&) const = default;
};

/// Throws BadDegree unless 0 <= k <= 2n. Empty unless m is parallel and
/// n <= k <= 2n - 1.
EisensteinDatum eisenstein_data(const LocalSystemSpec& spec, const VarietyInvariants& inv, int k);

struct WeightLevel {
  long weight;
  Integer dim;

  bool operator==(const WeightLevel&) const = default;
};

enum class DegreeStatus {
  /// H^k = 0 is a theorem (k < n, k = 2n, or non-parallel m above n).
  Vanishes,
  Computed,
};

enum class MhsField {
  /// All m_i equal: the MHS is defined over Q.
  Rational,
  Real,
};

struct MhsDegree {
  int k = 0;
  DegreeStatus status = DegreeStatus::Vanishes;
  Integer total_dim;
  /// Increasing weight; zero levels omitted.
  std::vector<WeightLevel> weight_levels;
  /// (P, Q) -> h^{P,Q}_k; zero entries omitted.
  std::map<std::pair<long, long>, Integer> hodge_numbers;
  Integer ih_part;
  Integer eis_part;
  GrFLabels gr_F;

  bool operator==(const MhsDegree&) const = default;
};

struct MhsTable {
  MhsField field = MhsField::Real;
  /// degrees[k] for k = 0..2n.
  std::vector<MhsDegree> degrees;

  bool operator==(const MhsTable&) const = default;
};

/// Full MHS table for k = 0..2n. Throws on a non-table spec or when
/// spec.n() != inv.n().
MhsTable mhs_table(const LocalSystemSpec& spec, const VarietyInvariants& inv);

}  // namespace hilbert_hodge

#endif  // HILBERT_HODGE_COHOMOLOGY_TABLES_HPP
