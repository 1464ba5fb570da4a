#include "hilbert_hodge/consistency.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "hilbert_hodge/cohomology_tables.hpp"
#include "hilbert_hodge/kunneth.hpp"

namespace hilbert_hodge {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

void CheckReport::append(const CheckReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

void CheckReport::sort() {
  std::stable_sort(entries.begin(), entries.end(), [](const CheckEntry& a, const CheckEntry& b) {
    return std::tie(a.name, a.parameters) < std::tie(b.name, b.parameters);
  });
}

std::size_t CheckReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [status](const CheckEntry& e) { return e.status == status; }));
}

namespace {

std::string format_m(const std::vector<int>& m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ')';
  return os.str();
}

std::string spec_params(const std::vector<int>& m) {
  return "n=" + std::to_string(m.size()) + " m=" + format_m(m);
}

std::string table_params(const LocalSystemSpec& spec, const VarietyInvariants& inv,
                         bool with_cusps) {
  std::string out = spec_params(spec.m()) + " g=" + inv.genus().get_str();
  if (with_cusps) out += " h=" + inv.cusps().get_str();
  return out;
}

CheckEntry compare(std::string name, std::string params, const Integer& lhs, const Integer& rhs) {
  return {std::move(name), std::move(params), lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail,
          lhs.get_str(), rhs.get_str()};
}

void for_each_m(int n, int max_m, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(m);
    std::size_t i = 0;
    while (i < m.size() && m[i] == max_m) m[i++] = 0;
    if (i == m.size()) return;
    ++m[i];
  }
}

std::string describe_cell(const SheafMatrix& matrix, HodgeCell cell) {
  std::ostringstream os;
  os << "C^{" << cell.P << ',' << cell.l << "}={";
  const auto it = matrix.cells.find(cell);
  if (it != matrix.cells.end()) {
    bool first = true;
    for (const auto& [monomial, count] : it->second) {
      os << (first ? "" : ", ") << to_string(monomial);
      if (count != 1) os << " x" << count;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

// Reports the first cell where the two matrices differ.
std::pair<std::string, std::string> first_difference(const SheafMatrix& a, const SheafMatrix& b) {
  std::vector<HodgeCell> cells;
  for (const auto& [cell, set] : a.cells) cells.push_back(cell);
  for (const auto& [cell, set] : b.cells) cells.push_back(cell);
  std::sort(cells.begin(), cells.end());
  for (HodgeCell cell : cells) {
    const auto ia = a.cells.find(cell);
    const auto ib = b.cells.find(cell);
    const bool same = (ia == a.cells.end()) == (ib == b.cells.end()) &&
                      (ia == a.cells.end() || ia->second == ib->second);
    if (!same) return {describe_cell(a, cell), describe_cell(b, cell)};
  }
  return {"matrices agree cell-wise", "m differs: " + format_m(a.m) + " vs " + format_m(b.m)};
}

std::string summary(const SheafMatrix& matrix) {
  return std::to_string(matrix.total()) + " monomials in " + std::to_string(matrix.cells.size()) +
         " cells";
}

}  // namespace

CheckReport check_oracle_equivalence(const LocalSystemSpec& spec, std::size_t cap) {
  CheckReport report;
  const int n = spec.n();
  const std::vector<int>& m = spec.m();
  const std::string params = spec_params(m);
  const SheafMatrix closed = cohomology_sheaf_closed_form(spec);

  SheafMatrix oracle{m, {}};
  std::optional<std::string> d_squared;
  std::optional<std::string> grading;
  Integer euler = 0;
  try {
    for (long P = 0; P <= spec.weight() + n; ++P) {
      const HiggsChainComplex complex = build_log_higgs_complex(spec, static_cast<int>(P), cap);
      if (!d_squared) {
        if (auto v = check_d_squared_zero(complex))
          d_squared = "P=" + std::to_string(P) + ": " + *v;
      }
      if (!grading) {
        if (auto v = check_grading_preserved(complex))
          grading = "P=" + std::to_string(P) + ": " + *v;
      }
      for (std::size_t l = 0; l < complex.terms.size(); ++l) {
        const Integer size(static_cast<unsigned long>(complex.terms[l].size()));
        euler += l % 2 == 0 ? size : Integer(-size);
      }
      for (auto& [cell, set] : homology(complex, cap).cells) oracle.cells[cell] = set;
    }
  } catch (const Error& error) {
    if (error.code() != ErrorCode::OracleSizeExceeded) throw;
    for (const char* name :
         {"d_squared_zero", "euler_bookkeeping", "grading_preserved", "oracle_equivalence"}) {
      report.add({name, params, CheckStatus::Skipped, error.what(), ""});
    }
    return report;
  }

  report.add({"d_squared_zero", params, d_squared ? CheckStatus::Fail : CheckStatus::Pass,
              d_squared.value_or("d o d = 0"), "0"});
  report.add({"grading_preserved", params, grading ? CheckStatus::Fail : CheckStatus::Pass,
              grading.value_or("all entries monomial-homogeneous"), ""});
  report.add(compare("euler_bookkeeping", params, euler, 0));
  if (oracle == closed) {
    report.add({"oracle_equivalence", params, CheckStatus::Pass, summary(oracle), summary(closed)});
  } else {
    auto [lhs, rhs] = first_difference(oracle, closed);
    report.add({"oracle_equivalence", params, CheckStatus::Fail, lhs, rhs});
  }
  return report;
}

CheckReport check_oracle_equivalence(const OracleSweep& bounds) {
  CheckReport report;
  for (int n = std::max(bounds.min_n, 1); n <= bounds.max_n; ++n) {
    for_each_m(n, bounds.max_m, [&](const std::vector<int>& m) {
      report.append(check_oracle_equivalence(validate_spec(n, m, SpecMode::Engine), bounds.cap));
    });
  }
  return report;
}

CheckReport check_kunneth_and_counts(const OracleSweep& bounds) {
  CheckReport report;
  for (int n = std::max(bounds.min_n, 1); n <= bounds.max_n; ++n) {
    for_each_m(n, bounds.max_m, [&](const std::vector<int>& m) {
      const LocalSystemSpec spec = validate_spec(n, m, SpecMode::Engine);
      const std::string params = spec_params(m);

      SheafMatrix product = trivial_sheaf_matrix();
      for (int v : m) {
        product = kunneth_product(
            product, cohomology_sheaf_closed_form(validate_spec(1, {v}, SpecMode::Engine)));
      }
      const SheafMatrix closed = cohomology_sheaf_closed_form(spec);
      if (product == closed) {
        report.add({"kunneth_factorization", params, CheckStatus::Pass, summary(product),
                    summary(closed)});
      } else {
        auto [lhs, rhs] = first_difference(product, closed);
        report.add({"kunneth_factorization", params, CheckStatus::Fail, lhs, rhs});
      }

      const long top = spec.weight() + n;
      const std::vector<Integer> generating = count_N_generating(m);
      Integer sum = 0;
      std::string asymmetry;
      std::string generating_mismatch;
      for (long P = 0; P <= top; ++P) {
        const Integer count = count_N(m, P);
        sum += count;
        if (asymmetry.empty() && count != count_N(m, top - P)) {
          asymmetry = "N(" + std::to_string(P) + ")=" + count.get_str();
        }
        if (generating_mismatch.empty() && count != generating[static_cast<std::size_t>(P)]) {
          generating_mismatch = "P=" + std::to_string(P) + ": " + count.get_str() + " vs " +
                                generating[static_cast<std::size_t>(P)].get_str();
        }
      }
      Integer power = 1;
      power <<= static_cast<mp_bitcnt_t>(n);
      report.add(compare("subset_count_total", params, sum, power));
      report.add({"subset_count_symmetry", params,
                  asymmetry.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                  asymmetry.empty() ? "N(m,P) = N(m,|m|+n-P)" : asymmetry, ""});
      report.add(
          {"subset_count_generating", params,
           generating_mismatch.empty() ? CheckStatus::Pass : CheckStatus::Fail,
           generating_mismatch.empty() ? "enumeration = prod(1 + x^(m_i+1))" : generating_mismatch,
           ""});
    });
  }
  return report;
}

std::vector<Integer> constant_ih_dims(const VarietyInvariants& inv) {
  // Constant-coefficient intersection cohomology of X* (Freitag, Ch. III):
  //   binom(n, i/2)                                for even i != n,
  //   (-2)^n (chi(O) - 1)                          for i = n odd,
  //   (-2)^n (chi(O) - 1) + binom(n, n/2)          for i = n even,
  // and 0 in the remaining odd degrees.
  const int n = inv.n();
  std::vector<Integer> dims(static_cast<std::size_t>(2 * n + 1), 0);
  for (int i = 0; i <= 2 * n; i += 2) dims[static_cast<std::size_t>(i)] = binomial(n, i / 2);
  Integer power = 1;
  power <<= static_cast<mp_bitcnt_t>(n);
  if (n % 2 == 1) power = -power;
  dims[static_cast<std::size_t>(n)] =
      power * (inv.chi_O() - 1) + (n % 2 == 0 ? binomial(n, n / 2) : Integer(0));
  return dims;
}

CheckReport check_euler_ih(const LocalSystemSpec& spec, const VarietyInvariants& inv) {
  const IhTable ih = ih_table(spec, inv);
  const std::vector<Integer> constant = constant_ih_dims(inv);
  Integer lhs = 0;
  Integer rhs = 0;
  for (std::size_t i = 0; i < ih.dims.size(); ++i) {
    if (i % 2 == 0) {
      lhs += ih.dims[i];
      rhs += constant[i];
    } else {
      lhs -= ih.dims[i];
      rhs -= constant[i];
    }
  }
  rhs *= spec.rank();
  CheckReport report;
  report.add(compare("euler_ih", table_params(spec, inv, false), lhs, rhs));
  return report;
}

CheckReport check_hrr(const LocalSystemSpec& spec, const VarietyInvariants& inv) {
  CheckReport report;
  const std::string params = table_params(spec, inv, false);
  if (spec.is_trivial()) {
    report.add({"hrr", params, CheckStatus::Skipped, "needs some m_i > 0", ""});
    return report;
  }
  const Integer chi = inv.chi_O();
  Integer lhs = (spec.rank() - 1) * chi + chi;
  if (spec.n() % 2 == 1) lhs = -lhs;
  report.add(compare("hrr", params, lhs, inv.l2_dim(spec)));
  return report;
}

CheckReport check_table_identities(const LocalSystemSpec& spec, const VarietyInvariants& inv) {
  const int n = spec.n();
  const long W = spec.weight() + n;
  const Integer e = spec.is_parallel() ? inv.cusps() : Integer(0);
  const MhsTable table = mhs_table(spec, inv);
  const IhTable ih = ih_table(spec, inv);

  std::string failure_lhs;
  std::string failure_rhs;
  std::size_t identities = 0;
  auto expect = [&](bool ok, const std::string& what, const std::string& lhs,
                    const std::string& rhs) {
    ++identities;
    if (!ok && failure_lhs.empty()) {
      failure_lhs = what + ": " + lhs;
      failure_rhs = what + ": " + rhs;
    }
  };
  auto expect_equal = [&](const std::string& what, const Integer& lhs, const Integer& rhs) {
    expect(lhs == rhs, what, lhs.get_str(), rhs.get_str());
  };

  // Closed-form total of H^n, straight from the dimension theorem.
  Integer expected_middle = inv.genus_shift();
  if (spec.is_parallel()) {
    Integer base = 2 * (spec.m().front() + 1);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    expected_middle = power * expected_middle + inv.cusps();
  } else {
    Integer power = 1;
    power <<= static_cast<mp_bitcnt_t>(n);
    expected_middle = power * expected_middle * spec.rank();
  }

  Integer n_sum = 0;
  for (long P = 0; P <= W; ++P) n_sum += count_N(spec.m(), P);
  Integer subsets = 1;
  subsets <<= static_cast<mp_bitcnt_t>(n);
  expect_equal("N-sum", n_sum, subsets);

  for (const MhsDegree& degree : table.degrees) {
    const int k = degree.k;
    const std::string at = "k=" + std::to_string(k) + " ";
    Integer hodge_total = 0;
    for (const auto& [pq, dim] : degree.hodge_numbers) {
      hodge_total += dim;
      const auto mirror = degree.hodge_numbers.find({pq.second, pq.first});
      expect(mirror != degree.hodge_numbers.end() && mirror->second == dim,
             at + "hodge symmetry at (" + std::to_string(pq.first) + "," +
                 std::to_string(pq.second) + ")",
             dim.get_str(), mirror == degree.hodge_numbers.end() ? "0" : mirror->second.get_str());
      if (pq.first + pq.second == 2 * W) {
        expect(pq.first == W, at + "Eisenstein part off (W,W)", std::to_string(pq.first),
               std::to_string(W));
      }
    }
    Integer weight_total = 0;
    for (const WeightLevel& level : degree.weight_levels) weight_total += level.dim;
    expect_equal(at + "sum h^{P,Q}", hodge_total, degree.total_dim);
    expect_equal(at + "sum of weight levels", weight_total, degree.total_dim);
    expect_equal(at + "IH + Eis", degree.ih_part + degree.eis_part, degree.total_dim);

    if (k < n || k == 2 * n) {
      expect_equal(at + "vanishing", degree.total_dim, 0);
    } else if (k == n) {
      expect_equal(at + "closed-form dim H^n", degree.total_dim, expected_middle);
      expect_equal(at + "IH part", degree.ih_part, ih.dims[static_cast<std::size_t>(n)]);
      expect_equal(at + "Eis part", degree.eis_part, e);
      std::vector<WeightLevel> shape;
      if (degree.ih_part != 0) shape.push_back({W, degree.ih_part});
      if (e != 0) shape.push_back({2 * W, e});
      expect(degree.weight_levels == shape, at + "weight shape",
             std::to_string(degree.weight_levels.size()) + " levels",
             std::to_string(shape.size()) + " levels");
      Integer pure = 0;
      for (const auto& [pq, dim] : degree.hodge_numbers) {
        if (pq.first + pq.second == W) pure += dim;
      }
      expect_equal(at + "weight-W Hodge total", pure, degree.ih_part);
      const auto corner = degree.hodge_numbers.find({W, W});
      expect_equal(at + "h^{W,W}",
                   corner == degree.hodge_numbers.end() ? Integer(0) : corner->second, e);
    } else {
      const Integer boundary = binomial(n - 1, k - n) * e;
      expect_equal(at + "boundary count", degree.total_dim, boundary);
      const bool pure_tate =
          degree.hodge_numbers.size() <= 1 &&
          (degree.hodge_numbers.empty() || degree.hodge_numbers.begin()->first == std::pair{W, W});
      expect(pure_tate, at + "Hodge-Tate type",
             std::to_string(degree.hodge_numbers.size()) + " positions", "(W,W) only");
      const bool single_level =
          degree.weight_levels.size() <= 1 &&
          (degree.weight_levels.empty() || degree.weight_levels.front().weight == 2 * W);
      expect(single_level, at + "weight shape",
             std::to_string(degree.weight_levels.size()) + " levels", "2W only");
    }

    for (const auto& [P, labels] : degree.gr_F) {
      const std::optional<Integer> resolved = gr_F_dimension(spec, inv, k, P);
      if (!resolved) continue;
      Integer graded = 0;
      for (const auto& [pq, dim] : degree.hodge_numbers) {
        if (pq.first == P) graded += dim;
      }
      expect_equal(at + "Gr_F^" + std::to_string(P), *resolved, graded);
    }
  }

  for (std::size_t k = 0; k < ih.dims.size(); ++k) {
    if (static_cast<int>(k) != n)
      expect_equal("IH^" + std::to_string(k) + " vanishing", ih.dims[k], 0);
  }

  CheckReport report;
  const std::string params = table_params(spec, inv, true);
  if (failure_lhs.empty()) {
    report.add({"table_identities", params, CheckStatus::Pass,
                "dim H^n=" + table.degrees[static_cast<std::size_t>(n)].total_dim.get_str(),
                std::to_string(identities) + " identities"});
  } else {
    report.add({"table_identities", params, CheckStatus::Fail, failure_lhs, failure_rhs});
  }
  return report;
}

CheckReport run_table_sweep(const TableSweep& sweep) {
  CheckReport report;
  for (int n : sweep.ns) {
    for_each_m(n, sweep.max_m, [&](const std::vector<int>& m) {
      const LocalSystemSpec probe = validate_spec(n, m, SpecMode::Engine);
      if (probe.is_trivial()) return;
      const LocalSystemSpec spec = validate_spec(n, m, SpecMode::Table);
      for (long g = 0; g <= sweep.max_genus; ++g) {
        const std::string params = spec_params(m) + " g=" + std::to_string(g);
        try {
          VarietyInvariants::validate(n, 1, g);
        } catch (const Error& error) {
          for (const char* name : {"euler_ih", "hrr"}) {
            report.add({name, params, CheckStatus::Skipped, error.what(), ""});
          }
          for (long h : sweep.cusps) {
            report.add({"table_identities", params + " h=" + std::to_string(h),
                        CheckStatus::Skipped, error.what(), ""});
          }
          continue;
        }
        const VarietyInvariants base =
            VarietyInvariants::validate(n, sweep.cusps.empty() ? 1 : sweep.cusps.front(), g);
        report.append(check_euler_ih(spec, base));
        report.append(check_hrr(spec, base));
        for (long h : sweep.cusps) {
          report.append(check_table_identities(spec, VarietyInvariants::validate(n, h, g)));
        }
      }
    });
  }
  return report;
}

CheckReport run_verify(const OracleSweep& oracle, const TableSweep& tables) {
  CheckReport report = check_oracle_equivalence(oracle);
  report.append(check_kunneth_and_counts(oracle));
  report.append(run_table_sweep(tables));
  report.sort();
  return report;
}

}  // namespace hilbert_hodge
