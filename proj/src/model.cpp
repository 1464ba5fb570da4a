#include "hilbert_hodge/model.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace hilbert_hodge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TrivialSystem:
      return "TrivialSystem";
    case ErrorCode::BadDegree:
      return "BadDegree";
    case ErrorCode::IncompatibleRank:
      return "IncompatibleRank";
    case ErrorCode::DoubleTwist:
      return "DoubleTwist";
    case ErrorCode::BadHodgeIndex:
      return "BadHodgeIndex";
    case ErrorCode::OracleSizeExceeded:
      return "OracleSizeExceeded";
    case ErrorCode::DictionaryMiss:
      return "DictionaryMiss";
    case ErrorCode::InconsistentInvariants:
      return "InconsistentInvariants";
    case ErrorCode::ConfigError:
      return "ConfigError";
  }
  return "Unknown";
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

LocalSystemSpec LocalSystemSpec::validate(int n, std::vector<int> m, SpecMode mode) {
  if (n < 1 || n > kMaxFactors) {
    throw Error(ErrorCode::BadDegree, "number of factors n = " + std::to_string(n) +
                                          " must lie in [1, " + std::to_string(kMaxFactors) + "]");
  }
  if (static_cast<int>(m.size()) != n) {
    throw Error(ErrorCode::BadDegree, "weight vector m has length " + std::to_string(m.size()) +
                                          ", expected n = " + std::to_string(n));
  }
  if (std::any_of(m.begin(), m.end(), [](int v) { return v < 0; })) {
    throw Error(ErrorCode::BadDegree, "weights m_i must be non-negative");
  }
  LocalSystemSpec spec(std::move(m));
  if (mode == SpecMode::Table) {
    if (n < 2) {
      throw Error(ErrorCode::BadDegree,
                  "Hilbert modular varieties need n >= 2 (the field has degree n >= 2); "
                  "n = 1 is only accepted by the chain-complex engine");
    }
    if (spec.is_trivial()) {
      throw Error(ErrorCode::TrivialSystem,
                  "trivial local system: the tables assume V_m non-trivial "
                  "(constant coefficients are Freitag's theory, not handled here)");
    }
  }
  return spec;
}

Integer LocalSystemSpec::rank() const {
  Integer result = 1;
  for (int v : m_) result *= v + 1;
  return result;
}

long LocalSystemSpec::weight() const {
  long total = 0;
  for (int v : m_) total += v;
  return total;
}

bool LocalSystemSpec::is_parallel() const {
  return std::adjacent_find(m_.begin(), m_.end(), std::not_equal_to<>()) == m_.end();
}

bool LocalSystemSpec::is_trivial() const {
  return std::all_of(m_.begin(), m_.end(), [](int v) { return v == 0; });
}

long LocalSystemSpec::subset_hodge_index(SubsetMask subset) const {
  long total = std::popcount(subset);
  for (int i = 0; i < n(); ++i) {
    if (subset >> i & 1U) total += m_[static_cast<std::size_t>(i)];
  }
  return total;
}

VarietyInvariants VarietyInvariants::validate(int n, Integer cusps, Integer genus) {
  if (n < 2 || n > kMaxFactors) {
    throw Error(ErrorCode::BadDegree, "variety dimension n = " + std::to_string(n) +
                                          " must lie in [2, " + std::to_string(kMaxFactors) + "]");
  }
  if (cusps < 1) {
    throw Error(ErrorCode::InconsistentInvariants,
                "a non-compact Hilbert modular variety has at least one cusp (h >= 1)");
  }
  if (genus < 0) {
    throw Error(ErrorCode::InconsistentInvariants, "genus g = h^{n,0} must be >= 0");
  }
  VarietyInvariants inv(n, std::move(cusps), std::move(genus));
  if (inv.genus_shift() < 0) {
    throw Error(ErrorCode::InconsistentInvariants,
                "g + (-1)^n = " + inv.genus_shift().get_str() +
                    " < 0: the L2 section count (g + (-1)^n) * rank(V_m) would be "
                    "negative, so (n, g) cannot come from a Hilbert modular variety");
  }
  return inv;
}

Integer VarietyInvariants::chi_O() const {
  return n_ % 2 == 0 ? Integer(1 + genus_) : Integer(1 - genus_);
}

Integer VarietyInvariants::genus_shift() const {
  return n_ % 2 == 0 ? Integer(genus_ + 1) : Integer(genus_ - 1);
}

Integer VarietyInvariants::l2_dim(const LocalSystemSpec& spec) const {
  return genus_shift() * spec.rank();
}

LineBundleMonomial monomial_mul(const LineBundleMonomial& a, const LineBundleMonomial& b) {
  if (a.exponents.size() != b.exponents.size()) {
    throw Error(ErrorCode::IncompatibleRank, "cannot multiply monomials in " +
                                                 std::to_string(a.n()) + " and " +
                                                 std::to_string(b.n()) + " line bundles");
  }
  if (a.minus_S && b.minus_S) {
    throw Error(ErrorCode::DoubleTwist, "O(-S) twist applied twice");
  }
  LineBundleMonomial out{a.exponents, a.minus_S || b.minus_S};
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += b.exponents[i];
  return out;
}

std::string to_string(const LineBundleMonomial& monomial) {
  std::ostringstream os;
  bool first = true;
  if (monomial.minus_S) {
    os << "O(-S)";
    first = false;
  }
  for (std::size_t i = 0; i < monomial.exponents.size(); ++i) {
    const int e = monomial.exponents[i];
    if (e == 0) continue;
    if (!first) os << ' ';
    os << "L_" << i + 1;
    if (e != 1) os << '^' << e;
    first = false;
  }
  if (first) os << 'O';
  return os.str();
}

SheafCohomologyLabel::SheafCohomologyLabel(int degree, LineBundleMonomial monomial,
                                           bool restricted_to_S)
    : degree_(degree), monomial_(std::move(monomial)), restricted_to_S_(restricted_to_S) {
  if (degree_ < 0) {
    throw Error(ErrorCode::BadDegree, "cohomological degree must be >= 0");
  }
  if (restricted_to_S_ && monomial_.minus_S) {
    throw Error(ErrorCode::DoubleTwist, "a label restricted to S cannot carry O(-S)");
  }
}

std::string to_string(const SheafCohomologyLabel& label) {
  std::ostringstream os;
  os << "H^" << label.degree() << '(' << (label.restricted_to_S() ? "S" : "Xbar") << ", "
     << to_string(label.monomial()) << (label.restricted_to_S() ? "|_S" : "") << ')';
  return os.str();
}

}  // namespace hilbert_hodge
