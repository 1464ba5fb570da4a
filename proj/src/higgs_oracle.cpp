#include "hilbert_hodge/higgs_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <utility>

namespace hilbert_hodge {

std::size_t default_oracle_cap() {
  if (const char* env = std::getenv("HILBERT_HODGE_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultOracleCap;
}

namespace {

// Calls visit(t) for every t with 0 <= t_i <= m_i and sum t_i = total, in
// lexicographic order.
void for_each_weight(const std::vector<int>& m, long total,
                     const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t n = m.size();
  std::vector<long> suffix_max(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix_max[i] = suffix_max[i + 1] + m[i];
  if (total < 0 || total > suffix_max[0]) return;

  std::vector<int> t(n, 0);
  std::function<void(std::size_t, long)> recurse = [&](std::size_t i, long remaining) {
    if (i == n) {
      if (remaining == 0) visit(t);
      return;
    }
    const long lo = std::max(0L, remaining - suffix_max[i + 1]);
    const long hi = std::min<long>(m[i], remaining);
    for (long v = lo; v <= hi; ++v) {
      t[i] = static_cast<int>(v);
      recurse(i + 1, remaining - v);
    }
    t[i] = 0;
  };
  recurse(0, total);
}

std::string describe(const HiggsBasisElement& e) {
  std::ostringstream os;
  os << "(t=(";
  for (std::size_t i = 0; i < e.t.size(); ++i) os << (i ? "," : "") << e.t[i];
  os << "), I={";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (e.forms >> i & 1U) {
      os << (first ? "" : ",") << i + 1;
      first = false;
    }
  }
  os << "})";
  return os.str();
}

[[noreturn]] void throw_oversize(std::size_t cap) {
  throw Error(ErrorCode::OracleSizeExceeded,
              "Higgs complex basis exceeds the oracle cap of " + std::to_string(cap) +
                  " elements (raise --oracle-cap or HILBERT_HODGE_ORACLE_CAP)");
}

}  // namespace

std::vector<HiggsBundleElement> build_higgs_bundle(const LocalSystemSpec& spec) {
  std::vector<HiggsBundleElement> out;
  const long weight = spec.weight();
  for (long q = 0; q <= weight; ++q) {
    for_each_weight(spec.m(), q, [&](const std::vector<int>& t) {
      HiggsBundleElement e{t, weight - q, q, LineBundleMonomial::identity(spec.n())};
      for (int i = 0; i < spec.n(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        e.monomial.exponents[k] = spec.m()[k] - 2 * t[k];
      }
      out.push_back(std::move(e));
    });
  }
  std::sort(out.begin(), out.end(),
            [](const HiggsBundleElement& a, const HiggsBundleElement& b) { return a.t < b.t; });
  return out;
}

int HiggsBasisElement::form_degree() const { return std::popcount(forms); }

LineBundleMonomial HiggsBasisElement::monomial(const LocalSystemSpec& spec) const {
  LineBundleMonomial out = LineBundleMonomial::identity(spec.n());
  for (int i = 0; i < spec.n(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.exponents[k] = spec.m()[k] - 2 * t[k] + ((forms >> i & 1U) ? 2 : 0);
  }
  return out;
}

long HiggsBasisElement::hodge_index(const LocalSystemSpec& spec) const {
  long p = form_degree();
  for (std::size_t i = 0; i < t.size(); ++i) p += spec.m()[i] - t[i];
  return p;
}

std::size_t HiggsChainComplex::basis_size() const {
  std::size_t total = 0;
  for (const auto& term : terms) total += term.size();
  return total;
}

HiggsChainComplex build_log_higgs_complex(const LocalSystemSpec& spec, int P, std::size_t cap) {
  const int n = spec.n();
  const long weight = spec.weight();
  if (P < 0 || P > weight + n) {
    throw Error(ErrorCode::BadHodgeIndex, "Hodge index P = " + std::to_string(P) +
                                              " outside [0, |m| + n] = [0, " +
                                              std::to_string(weight + n) + "]");
  }

  // Every form mask is visited once, whether or not it contributes.
  if (n >= 40 || (SubsetMask{1} << n) / 64 > cap) throw_oversize(cap);

  HiggsChainComplex complex{spec, P, std::vector<std::vector<HiggsBasisElement>>(n + 1), {}};
  std::size_t count = 0;
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  for (SubsetMask forms = 0;; ++forms) {
    const int l = std::popcount(forms);
    // sum (m_i - t_i) = P - l  <=>  sum t_i = |m| - P + l
    for_each_weight(spec.m(), weight - P + l, [&](const std::vector<int>& t) {
      if (++count > cap) throw_oversize(cap);
      complex.terms[static_cast<std::size_t>(l)].push_back({t, forms});
    });
    if (forms == full) break;
  }
  for (auto& term : complex.terms) std::sort(term.begin(), term.end());

  for (int l = 0; l < n; ++l) {
    const auto& source = complex.terms[static_cast<std::size_t>(l)];
    const auto& target = complex.terms[static_cast<std::size_t>(l + 1)];
    SparseIntMatrix d{target.size(), source.size(), {}};
    for (std::size_t col = 0; col < source.size(); ++col) {
      const HiggsBasisElement& e = source[col];
      for (int i = 0; i < n; ++i) {
        const SubsetMask bit = SubsetMask{1} << i;
        if (e.forms & bit) continue;
        const auto k = static_cast<std::size_t>(i);
        const long coefficient = spec.m()[k] - e.t[k];
        if (coefficient == 0) continue;
        const int sign = std::popcount(e.forms & (bit - 1)) % 2 == 0 ? 1 : -1;
        HiggsBasisElement image{e.t, e.forms | bit};
        ++image.t[k];
        const auto it = std::lower_bound(target.begin(), target.end(), image);
        d.entries.push_back(
            {static_cast<std::size_t>(it - target.begin()), col, sign * coefficient});
      }
    }
    complex.differentials.push_back(std::move(d));
  }

#ifndef NDEBUG
  if (auto violation = check_d_squared_zero(complex)) {
    throw std::logic_error("Higgs complex is not a complex: " + *violation);
  }
#endif
  return complex;
}

StructureViolation check_d_squared_zero(const HiggsChainComplex& complex) {
  for (std::size_t l = 0; l + 1 < complex.differentials.size(); ++l) {
    const SparseIntMatrix& first = complex.differentials[l];
    const SparseIntMatrix& second = complex.differentials[l + 1];
    std::vector<std::vector<std::pair<std::size_t, long>>> second_by_col(second.cols);
    for (const SparseEntry& e : second.entries) second_by_col[e.col].push_back({e.row, e.value});

    std::map<std::pair<std::size_t, std::size_t>, Integer> product;
    for (const SparseEntry& a : first.entries) {
      for (const auto& [row, value] : second_by_col[a.row]) {
        product[{row, a.col}] += Integer(value) * a.value;
      }
    }
    for (const auto& [pos, value] : product) {
      if (value != 0) {
        std::ostringstream os;
        os << "d_" << l + 1 << " * d_" << l << " has entry " << value.get_str() << " from "
           << describe(complex.terms[l][pos.second]) << " to "
           << describe(complex.terms[l + 2][pos.first]);
        return os.str();
      }
    }
  }
  return std::nullopt;
}

StructureViolation check_grading_preserved(const HiggsChainComplex& complex) {
  for (std::size_t l = 0; l < complex.differentials.size(); ++l) {
    for (const SparseEntry& e : complex.differentials[l].entries) {
      const auto& source = complex.terms[l][e.col];
      const auto& target = complex.terms[l + 1][e.row];
      if (source.monomial(complex.spec) != target.monomial(complex.spec)) {
        return "d_" + std::to_string(l) + " joins " + describe(source) + " [" +
               to_string(source.monomial(complex.spec)) + "] to " + describe(target) + " [" +
               to_string(target.monomial(complex.spec)) + "]";
      }
    }
  }
  return std::nullopt;
}

HomologyResult homology(const HiggsChainComplex& complex, std::size_t cap) {
  if (complex.basis_size() > cap) throw_oversize(cap);
  const std::size_t degrees = complex.terms.size();

  // Local index of every basis element inside its monomial block.
  std::map<LineBundleMonomial, std::vector<std::size_t>> block_dims;
  std::vector<std::vector<std::pair<const LineBundleMonomial*, std::size_t>>> where(degrees);
  for (std::size_t l = 0; l < degrees; ++l) {
    for (const HiggsBasisElement& e : complex.terms[l]) {
      auto it = block_dims.try_emplace(e.monomial(complex.spec), degrees, 0).first;
      where[l].push_back({&it->first, it->second[l]++});
    }
  }

  std::map<LineBundleMonomial, std::vector<std::size_t>> block_ranks;
  for (const auto& [monomial, dims] : block_dims)
    block_ranks.emplace(monomial, std::vector<std::size_t>(degrees, 0));

  for (std::size_t l = 0; l < complex.differentials.size(); ++l) {
    std::map<const LineBundleMonomial*, std::vector<const SparseEntry*>> entries;
    for (const SparseEntry& e : complex.differentials[l].entries) {
      entries[where[l][e.col].first].push_back(&e);
    }
    for (const auto& [monomial, block] : entries) {
      const auto& dims = block_dims.at(*monomial);
      IntegerMatrix dense(dims[l + 1], dims[l]);
      for (const SparseEntry* e : block) {
        dense(where[l + 1][e->row].second, where[l][e->col].second) = e->value;
      }
      block_ranks.at(*monomial)[l] = bareiss_rank(std::move(dense));
    }
  }

  HomologyResult result;
  for (const auto& [monomial, dims] : block_dims) {
    const auto& ranks = block_ranks.at(monomial);
    for (std::size_t l = 0; l < degrees; ++l) {
      const std::size_t outgoing = l < complex.differentials.size() ? ranks[l] : 0;
      const std::size_t incoming = l > 0 ? ranks[l - 1] : 0;
      if (outgoing + incoming > dims[l]) {
        throw std::logic_error("negative homology in block " + to_string(monomial) +
                               ": differentials do not compose to zero");
      }
      const std::size_t dim = dims[l] - outgoing - incoming;
      if (dim > 0) result.cells[{complex.P, static_cast<int>(l)}][monomial] = dim;
    }
  }
  return result;
}

SheafMatrix oracle_sheaf_matrix(const LocalSystemSpec& spec, std::size_t cap) {
  SheafMatrix out{spec.m(), {}};
  const long top = spec.weight() + spec.n();
  for (long P = 0; P <= top; ++P) {
    HomologyResult h = homology(build_log_higgs_complex(spec, static_cast<int>(P), cap), cap);
    for (auto& [cell, multiset] : h.cells) out.cells[cell] = std::move(multiset);
  }
  return out;
}

}  // namespace hilbert_hodge
