#include "hilbert_hodge/cohomology_tables.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hilbert_hodge/kunneth.hpp"

namespace hilbert_hodge {

namespace {

void require_degree(const LocalSystemSpec& spec, int k) {
  if (k < 0 || k > 2 * spec.n()) {
    throw Error(ErrorCode::BadDegree, "cohomological degree k = " + std::to_string(k) +
                                          " outside [0, 2n] = [0, " + std::to_string(2 * spec.n()) +
                                          "]");
  }
}

void require_table_inputs(const LocalSystemSpec& spec, const VarietyInvariants& inv) {
  // Re-run table validation: an engine-mode spec may have slipped through.
  LocalSystemSpec::validate(spec.n(), spec.m(), SpecMode::Table);
  if (spec.n() != inv.n()) {
    throw Error(ErrorCode::IncompatibleRank, "local system has n = " + std::to_string(spec.n()) +
                                                 " factors but the variety has dimension " +
                                                 std::to_string(inv.n()));
  }
}

Integer eisenstein_share(const LocalSystemSpec& spec, const VarietyInvariants& inv) {
  return spec.is_parallel() ? inv.cusps() : Integer(0);
}

[[noreturn]] void dictionary_miss(const SheafCohomologyLabel& label) {
  throw Error(ErrorCode::DictionaryMiss,
              to_string(label) + " is not determined by the Hodge-theoretic description");
}

}  // namespace

GrFLabels gr_F_labels(const LocalSystemSpec& spec, int k) {
  require_degree(spec, k);
  GrFLabels out;
  const SubsetMask full = (SubsetMask{1} << spec.n()) - 1;
  for (SubsetMask subset = 0;; ++subset) {
    const int degree = k - std::popcount(subset);
    if (degree >= 0) {
      out[spec.subset_hodge_index(subset)].emplace_back(degree, sheaf_monomial(spec.m(), subset));
    }
    if (subset == full) break;
  }
  for (auto& [P, labels] : out) std::sort(labels.begin(), labels.end());
  return out;
}

Integer sheaf_cohomology_dim(const SheafCohomologyLabel& label, const LocalSystemSpec& spec,
                             const VarietyInvariants& inv) {
  const int n = spec.n();
  const auto& m = spec.m();
  const auto& exponents = label.monomial().exponents;
  if (static_cast<int>(exponents.size()) != n) {
    throw Error(ErrorCode::IncompatibleRank, "label " + to_string(label) + " has " +
                                                 std::to_string(exponents.size()) +
                                                 " exponents, expected " + std::to_string(n));
  }
  const Integer l2 = inv.l2_dim(spec);
  const Integer e = eisenstein_share(spec, inv);
  const LineBundleMonomial top = sheaf_monomial(m, (SubsetMask{1} << n) - 1);

  // H^0(S, (x) L_i^{m_i+2}|_S) and H^0(Xbar, O(-S) (x) L_i^{m_i+2}).
  if (label.restricted_to_S() || label.monomial().minus_S) {
    if (label.degree() != 0 || exponents != top.exponents) dictionary_miss(label);
    return label.restricted_to_S() ? e : l2;
  }
  // Coherent cohomology on the n-dimensional Xbar vanishes above degree n.
  if (label.degree() > n) return 0;

  SubsetMask subset = 0;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (exponents[k] == m[k] + 2) {
      subset |= SubsetMask{1} << i;
    } else if (exponents[k] != -m[k]) {
      dictionary_miss(label);
    }
  }
  const int size = std::popcount(subset);
  if (size == n) {
    if (label.degree() == 0) return l2 + e;
    if (label.degree() <= n - 1) return binomial(n - 1, label.degree()) * e;
    dictionary_miss(label);
  }
  if (label.degree() == n - size) return l2;
  if (size == 0 && label.degree() < n) return 0;
  dictionary_miss(label);
}

std::optional<Integer> gr_F_dimension(const LocalSystemSpec& spec, const VarietyInvariants& inv,
                                      int k, long P) {
  const GrFLabels labels = gr_F_labels(spec, k);
  Integer total = 0;
  const auto it = labels.find(P);
  if (it == labels.end()) return total;
  for (const SheafCohomologyLabel& label : it->second) {
    try {
      total += sheaf_cohomology_dim(label, spec, inv);
    } catch (const Error& error) {
      if (error.code() == ErrorCode::DictionaryMiss) return std::nullopt;
      throw;
    }
  }
  return total;
}

IhTable ih_table(const LocalSystemSpec& spec, const VarietyInvariants& inv) {
  require_table_inputs(spec, inv);
  const int n = spec.n();
  IhTable out;
  out.n = n;
  out.middle_weight = spec.weight() + n;
  out.l2_dim = inv.l2_dim(spec);
  out.dims.assign(static_cast<std::size_t>(2 * n + 1), 0);
  Integer middle = 0;
  for (long P = 0; P <= out.middle_weight; ++P) {
    const Integer dim = count_N(spec.m(), P) * out.l2_dim;
    if (dim != 0) out.middle_hodge.emplace(P, dim);
    middle += dim;
  }
  out.dims[static_cast<std::size_t>(n)] = middle;
  return out;
}

EisensteinDatum eisenstein_data(const LocalSystemSpec& spec, const VarietyInvariants& inv, int k) {
  require_table_inputs(spec, inv);
  require_degree(spec, k);
  const int n = spec.n();
  EisensteinDatum out{k, inv.cusps(), {}, 0};
  if (!spec.is_parallel() || k < n || k > 2 * n - 1) return out;

  const long m1 = spec.m().front();
  const int size = k - n;
  // Subsets of {1..n-1} of the given size, in lexicographic order.
  std::vector<int> subset(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    EisensteinBasisElement element{subset, std::vector<long>(n, m1 + 2), std::vector<long>(n, 0)};
    for (int i : subset) {
      element.alpha[static_cast<std::size_t>(i - 1)] = m1 + 1;
      element.beta[static_cast<std::size_t>(i - 1)] = 1;
    }
    out.basis.push_back(std::move(element));

    int pos = size - 1;
    while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - 1 - (size - 1 - pos)) --pos;
    if (pos < 0) break;
    ++subset[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < size; ++j) {
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  out.dim = Integer(static_cast<unsigned long>(out.basis.size())) * inv.cusps();
  return out;
}

MhsTable mhs_table(const LocalSystemSpec& spec, const VarietyInvariants& inv) {
  const IhTable ih = ih_table(spec, inv);
  const int n = spec.n();
  const long W = ih.middle_weight;

  MhsTable out;
  out.field = spec.is_parallel() ? MhsField::Rational : MhsField::Real;
  for (int k = 0; k <= 2 * n; ++k) {
    MhsDegree degree;
    degree.k = k;
    degree.total_dim = 0;
    degree.ih_part = 0;
    degree.eis_part = 0;
    degree.gr_F = gr_F_labels(spec, k);

    if (k == n) {
      degree.status = DegreeStatus::Computed;
      degree.ih_part = ih.dims[static_cast<std::size_t>(n)];
      degree.eis_part = eisenstein_data(spec, inv, k).dim;
      for (const auto& [P, dim] : ih.middle_hodge) degree.hodge_numbers[{P, W - P}] += dim;
      if (degree.eis_part != 0) degree.hodge_numbers[{W, W}] += degree.eis_part;
      if (degree.ih_part != 0) degree.weight_levels.push_back({W, degree.ih_part});
      if (degree.eis_part != 0) degree.weight_levels.push_back({2 * W, degree.eis_part});
    } else if (k > n && k < 2 * n && spec.is_parallel()) {
      degree.status = DegreeStatus::Computed;
      degree.eis_part = eisenstein_data(spec, inv, k).dim;
      degree.hodge_numbers[{W, W}] = degree.eis_part;
      degree.weight_levels.push_back({2 * W, degree.eis_part});
    }
    degree.total_dim = degree.ih_part + degree.eis_part;
    out.degrees.push_back(std::move(degree));
  }
  return out;
}

}  // namespace hilbert_hodge
