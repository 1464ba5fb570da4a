#ifndef HILBERT_HODGE_MODEL_HPP
#define HILBERT_HODGE_MODEL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hilbert_hodge/error.hpp"

namespace hilbert_hodge {

/// Arbitrary-precision integer used for every dimension, binomial and count.
using Integer = mpz_class;

/// Subset of {1..n} stored as a bit mask; bit i-1 stands for index i.
using SubsetMask = std::uint64_t;

/// Largest number of upper half-plane factors a subset mask can address.
inline constexpr int kMaxFactors = 63;

Integer binomial(long n, long k);

enum class SpecMode {
  /// Single factors and the trivial system are allowed (chain-complex work).
  Engine,
  /// n >= 2 and m != 0 are required (table assembly).
  Table,
};

/// The multi-weight m = (m_1, ..., m_n) of the local system V_m.
class LocalSystemSpec {
 public:
  /// Validates (n, m). Throws BadDegree on n < 1, n > kMaxFactors, a length
  /// mismatch or a negative m_i. In Table mode also throws BadDegree on n < 2
  /// and TrivialSystem on m = 0.
  static LocalSystemSpec validate(int n, std::vector<int> m, SpecMode mode = SpecMode::Table);

  int n() const { return static_cast<int>(m_.size()); }
  const std::vector<int>& m() const { return m_; }

  /// rank(V_m) = prod (m_i + 1).
  Integer rank() const;
  /// |m| = sum m_i.
  long weight() const;
  bool is_parallel() const;
  bool is_trivial() const;
  /// Set when n = 1: usable by the oracle, rejected by table assembly.
  bool engine_only() const { return n() < 2; }

  /// |m_I| + |I| for the subset I.
  long subset_hodge_index(SubsetMask subset) const;

  friend bool operator==(const LocalSystemSpec&, const LocalSystemSpec&) = default;

 private:
  explicit LocalSystemSpec(std::vector<int> m) : m_(std::move(m)) {}

  std::vector<int> m_;
};

inline LocalSystemSpec validate_spec(int n, std::vector<int> m, SpecMode mode = SpecMode::Table) {
  return LocalSystemSpec::validate(n, std::move(m), mode);
}

/// Numerical invariants of the compactified variety: n, cusp count h and
/// geometric genus g = h^{n,0}.
class VarietyInvariants {
 public:
  /// Throws BadDegree for n < 2, InconsistentInvariants for h < 1, g < 0 or
  /// g + (-1)^n < 0.
  static VarietyInvariants validate(int n, Integer cusps, Integer genus);

  int n() const { return n_; }
  const Integer& cusps() const { return cusps_; }
  const Integer& genus() const { return genus_; }

  /// chi(O) = 1 + (-1)^n g.
  Integer chi_O() const;
  /// g + (-1)^n.
  Integer genus_shift() const;
  /// dim of L2 sections: (g + (-1)^n) * prod(m_i + 1).
  Integer l2_dim(const LocalSystemSpec& spec) const;

  friend bool operator==(const VarietyInvariants&, const VarietyInvariants&) = default;

 private:
  VarietyInvariants(int n, Integer cusps, Integer genus)
      : n_(n), cusps_(std::move(cusps)), genus_(std::move(genus)) {}

  int n_;
  Integer cusps_;
  Integer genus_;
};

/// Formal tensor product of powers of the line bundles L_i, optionally
/// twisted by O(-S).
struct LineBundleMonomial {
  std::vector<int> exponents;
  bool minus_S = false;

  static LineBundleMonomial identity(int n) {
    return {std::vector<int>(static_cast<std::size_t>(n), 0), false};
  }

  int n() const { return static_cast<int>(exponents.size()); }

  auto operator<=>(const LineBundleMonomial&) const = default;
  bool operator==(const LineBundleMonomial&) const = default;
};

/// Componentwise sum of exponents. Throws IncompatibleRank on a length
/// mismatch and DoubleTwist when both factors carry O(-S).
LineBundleMonomial monomial_mul(const LineBundleMonomial& a, const LineBundleMonomial& b);

/// "L_1^3 L_2^-1", "O(-S) L_1^3", or "O" for the identity.
std::string to_string(const LineBundleMonomial& monomial);

/// H^degree(Xbar, monomial), or H^degree(S, monomial|_S) when restricted.
class SheafCohomologyLabel {
 public:
  /// Throws BadDegree on a negative degree and DoubleTwist when the monomial
  /// is twisted by O(-S) and also restricted to S.
  SheafCohomologyLabel(int degree, LineBundleMonomial monomial, bool restricted_to_S = false);

  int degree() const { return degree_; }
  const LineBundleMonomial& monomial() const { return monomial_; }
  bool restricted_to_S() const { return restricted_to_S_; }

  auto operator<=>(const SheafCohomologyLabel&) const = default;
  bool operator==(const SheafCohomologyLabel&) const = default;

 private:
  int degree_;
  LineBundleMonomial monomial_;
  bool restricted_to_S_;
};

std::string to_string(const SheafCohomologyLabel& label);

}  // namespace hilbert_hodge

#endif  // HILBERT_HODGE_MODEL_HPP
