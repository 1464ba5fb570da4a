#ifndef HILBERT_HODGE_CONSISTENCY_HPP
#define HILBERT_HODGE_CONSISTENCY_HPP

// Cross-checks that tie independently derived formulas together. Checks
// never throw on a mismatch: every outcome is recorded in a CheckReport.

#include <cstddef>
#include <string>
#include <vector>

#include "hilbert_hodge/higgs_oracle.hpp"
#include "hilbert_hodge/model.hpp"

namespace hilbert_hodge {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status);

struct CheckEntry {
  std::string name;
  std::string parameters;
  CheckStatus status = CheckStatus::Pass;
  std::string lhs;
  std::string rhs;

  bool operator==(const CheckEntry&) const = default;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  void add(CheckEntry entry) { entries.push_back(std::move(entry)); }
  void append(const CheckReport& other);
  /// Sorts by (name, parameters) for deterministic output.
  void sort();

  std::size_t count(CheckStatus status) const;
  bool all_passed() const { return count(CheckStatus::Fail) == 0; }

  bool operator==(const CheckReport&) const = default;
};

/// Bounds of the chain-complex sweep: every n in [min_n, max_n] and every m
/// with 0 <= m_i <= max_m, the trivial system included.
struct OracleSweep {
  int min_n = 1;
  int max_n = 3;
  int max_m = 2;
  std::size_t cap = default_oracle_cap();
};

/// For one spec: homology of the Higgs complex equals the closed-form sheaf
/// matrix for every P, d o d = 0, the differential preserves monomials, and
/// the alternating term count vanishes. Oversized complexes are skipped.
CheckReport check_oracle_equivalence(const LocalSystemSpec& spec,
                                     std::size_t cap = default_oracle_cap());

/// The single-spec check for every (n, m) in the sweep.
CheckReport check_oracle_equivalence(const OracleSweep& bounds);

/// Per (n, m) in the same range: the closed form equals the Künneth product
/// of its single-factor matrices, and N(m, .) sums to 2^n, is symmetric under
/// P -> |m| + n - P and agrees with the generating function.
CheckReport check_kunneth_and_counts(const OracleSweep& bounds);

/// dim IH^i(X*, C) for i = 0..2n, the constant-coefficient reference values.
std::vector<Integer> constant_ih_dims(const VarietyInvariants& inv);

/// sum (-1)^i dim IH^i(V_m) == rank(V_m) * sum (-1)^i dim IH^i(C).
CheckReport check_euler_ih(const LocalSystemSpec& spec, const VarietyInvariants& inv);

/// Riemann-Roch route to dim H^n(Xbar, (x) L_i^{-m_i}) against the L2 count:
/// (-1)^n [(prod(m_i+1) - 1) chi(O) + chi(O)] == l2_dim. Skipped for m = 0.
CheckReport check_hrr(const LocalSystemSpec& spec, const VarietyInvariants& inv);

/// Totals, splitting, Hodge symmetry, weight shape, Gr_F cross-check and the
/// boundary count for one table.
CheckReport check_table_identities(const LocalSystemSpec& spec, const VarietyInvariants& inv);

struct TableSweep {
  std::vector<int> ns{2, 3, 4};
  int max_m = 3;
  long max_genus = 3;
  std::vector<long> cusps{1, 2, 5};
};

/// Runs the three table checks over every non-trivial m with m_i <= max_m.
/// Inconsistent (n, g) pairs are recorded as skipped.
CheckReport run_table_sweep(const TableSweep& sweep);

/// Oracle, Künneth and table checks together, sorted.
CheckReport run_verify(const OracleSweep& oracle, const TableSweep& tables);

}  // namespace hilbert_hodge

#endif  // HILBERT_HODGE_CONSISTENCY_HPP
