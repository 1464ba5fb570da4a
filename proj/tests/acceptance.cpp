// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "hilbert_hodge/cli.hpp"
#include "hilbert_hodge/consistency.hpp"
#include "hilbert_hodge/kunneth.hpp"

using namespace hilbert_hodge;

namespace {

using Hodge = std::map<std::pair<long, long>, Integer>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

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

std::string show(const std::vector<int>& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + ")";
}

// 1 and 2 share the sweep n in {1,2,3}, m_i <= 2, every P.
Outcome oracle_sweep(bool structure) {
  Outcome out;
  std::size_t specs = 0, complexes = 0;
  for (int n = 1; n <= 3; ++n) {
    for_each_m(n, 2, [&](const std::vector<int>& m) {
      const auto spec = validate_spec(n, m, SpecMode::Engine);
      ++specs;
      SheafMatrix oracle{m, {}};
      for (int P = 0; P <= spec.weight() + n; ++P) {
        const auto complex = build_log_higgs_complex(spec, P);
        ++complexes;
        if (structure) {
          out.require(!check_d_squared_zero(complex),
                      "d o d != 0 at m=" + show(m) + " P=" + std::to_string(P));
          out.require(!check_grading_preserved(complex),
                      "grading broken at m=" + show(m) + " P=" + std::to_string(P));
        } else {
          for (auto& [cell, set] : homology(complex).cells) {
            out.require(cell.P == P, "homology cell outside its subcomplex");
            oracle.cells[cell] = set;
          }
        }
      }
      if (!structure)
        out.require(oracle == cohomology_sheaf_closed_form(spec), "mismatch at m=" + show(m));
    });
  }
  if (out.ok)
    out.detail = std::to_string(specs) + " specs, " + std::to_string(complexes) + " complexes";
  return out;
}

Outcome kunneth_factorization() {
  Outcome out;
  std::size_t specs = 0;
  for (int n = 1; n <= 6; ++n) {
    for_each_m(n, 4, [&](const std::vector<int>& m) {
      SheafMatrix product = trivial_sheaf_matrix();
      for (int v : m)
        product = kunneth_product(
            product, cohomology_sheaf_closed_form(validate_spec(1, {v}, SpecMode::Engine)));
      out.require(product == cohomology_sheaf_closed_form(validate_spec(n, m, SpecMode::Engine)),
                  "mismatch at m=" + show(m));
      ++specs;
    });
  }
  if (out.ok) out.detail = std::to_string(specs) + " specs, exhaustive";
  return out;
}

Outcome subset_counts() {
  Outcome out;
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> weight(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int& v : m) v = weight(rng);
    const long W = validate_spec(n, m, SpecMode::Engine).weight() + n;
    Integer total = 0;
    for (long P = 0; P <= W; ++P) {
      total += count_N(m, P);
      out.require(count_N(m, P) == count_N(m, W - P), "asymmetry at m=" + show(m));
    }
    out.require(total == Integer(1L << n), "sum != 2^n at m=" + show(m));
  }
  if (out.ok) out.detail = "200 random m, n <= 12";
  return out;
}

Outcome dimension_formulas() {
  Outcome out;
  {
    const auto t = mhs_table(validate_spec(2, {1, 1}), VarietyInvariants::validate(2, 1, 1));
    out.require(t.degrees[2].total_dim == 33, "n=2 m=(1,1): dim H^2 != 33");
    out.require(
        t.degrees[2].hodge_numbers == Hodge{{{0, 4}, 8}, {{2, 2}, 16}, {{4, 0}, 8}, {{4, 4}, 1}},
        "n=2 m=(1,1): Hodge numbers of H^2");
    out.require(t.degrees[3].total_dim == 1 && t.degrees[3].hodge_numbers == Hodge{{{4, 4}, 1}},
                "n=2 m=(1,1): H^3");
  }
  {
    // D = (g + 1) * 2 with N(m, .) = (1,1,1,1): 2 per P at g = 0, 4 per P at g = 1.
    const auto g0 = mhs_table(validate_spec(2, {1, 0}), VarietyInvariants::validate(2, 1, 0));
    out.require(g0.degrees[2].total_dim == 8, "n=2 m=(1,0) g=0: dim H^2 != 8");
    out.require(
        g0.degrees[2].hodge_numbers == Hodge{{{0, 3}, 2}, {{1, 2}, 2}, {{2, 1}, 2}, {{3, 0}, 2}},
        "n=2 m=(1,0) g=0: 2 per P");
    out.require(g0.degrees[3].total_dim == 0, "n=2 m=(1,0) g=0: H^3 != 0");
    const auto g1 = mhs_table(validate_spec(2, {1, 0}), VarietyInvariants::validate(2, 1, 1));
    out.require(g1.degrees[2].total_dim == 16, "n=2 m=(1,0) g=1: dim H^2 != 16");
    out.require(
        g1.degrees[2].hodge_numbers == Hodge{{{0, 3}, 4}, {{1, 2}, 4}, {{2, 1}, 4}, {{3, 0}, 4}},
        "n=2 m=(1,0) g=1: 4 per P");
    out.require(g1.degrees[3].total_dim == 0, "n=2 m=(1,0) g=1: H^3 != 0");
  }
  {
    // Hodge-Tate of type (|m|+n, |m|+n) = (8, 8), dimension binom(3,1) * 2.
    for (long g = 0; g <= 3; ++g) {
      const auto t =
          mhs_table(validate_spec(4, {1, 1, 1, 1}), VarietyInvariants::validate(4, 2, g));
      out.require(t.degrees[5].total_dim == 6 && t.degrees[5].hodge_numbers == Hodge{{{8, 8}, 6}},
                  "n=4 m=(1,1,1,1) h=2 k=5: expected 6 at (8,8)");
    }
  }
  if (out.ok) out.detail = "33 = 8+16+8+1; (1,0): 8 at g=0, 16 at g=1; 6 at (8,8)";
  return out;
}

// 6 and 7 share the sweep n in {2,3}, non-trivial m_i <= 2, g <= 3.
Outcome table_sweep(
    const std::function<CheckReport(const LocalSystemSpec&, const VarietyInvariants&)>& check) {
  Outcome out;
  std::size_t runs = 0, inconsistent = 0;
  for (int n : {2, 3}) {
    for_each_m(n, 2, [&](const std::vector<int>& m) {
      if (validate_spec(n, m, SpecMode::Engine).is_trivial()) return;
      const auto spec = validate_spec(n, m);
      for (long g = 0; g <= 3; ++g) {
        if (g + (n % 2 == 0 ? 1 : -1) < 0) {
          ++inconsistent;
          continue;
        }
        const auto report = check(spec, VarietyInvariants::validate(n, 1, g));
        out.require(
            report.count(CheckStatus::Pass) == report.entries.size() && !report.entries.empty(),
            "m=" + show(m) + " g=" + std::to_string(g) + ": " +
                (report.entries.empty()
                     ? "no entry"
                     : report.entries.front().lhs + " vs " + report.entries.front().rhs));
        ++runs;
      }
    });
  }
  if (out.ok) {
    out.detail = std::to_string(runs) + " (n,m,g); " + std::to_string(inconsistent) +
                 " with g + (-1)^n < 0 excluded";
  }
  return out;
}

Outcome mhs_shape() {
  Outcome out;
  std::size_t tables = 0;
  auto inspect = [&](const LocalSystemSpec& spec, const VarietyInvariants& inv) {
    const int n = spec.n();
    const long W = spec.weight() + n;
    const Integer e = spec.is_parallel() ? inv.cusps() : Integer(0);
    const auto t = mhs_table(spec, inv);
    const std::string at =
        "m=" + show(spec.m()) + " g=" + inv.genus().get_str() + " h=" + inv.cusps().get_str();
    for (const auto& d : t.degrees) {
      for (const auto& [pq, dim] : d.hodge_numbers) {
        const auto mirror = d.hodge_numbers.find({pq.second, pq.first});
        out.require(mirror != d.hodge_numbers.end() && mirror->second == dim,
                    at + ": Hodge symmetry");
      }
      if (d.k == n) {
        std::vector<WeightLevel> shape;
        if (d.ih_part != 0) shape.push_back({W, d.ih_part});
        if (e != 0) shape.push_back({2 * W, e});
        out.require(d.weight_levels == shape, at + ": weight levels at k=n");
        out.require(d.total_dim == ih_table(spec, inv).dims[static_cast<std::size_t>(n)] + e,
                    at + ": dim H^n != dim IH^n + e");
      } else if (d.k > n && d.k < 2 * n && e != 0) {
        out.require(d.weight_levels == std::vector<WeightLevel>{{2 * W, d.total_dim}},
                    at + ": weight 2W only");
        out.require(d.hodge_numbers == Hodge{{{W, W}, d.total_dim}}, at + ": Hodge-Tate type");
      } else {
        out.require(d.total_dim == 0 && d.weight_levels.empty(), at + ": degree should vanish");
      }
    }
    ++tables;
  };
  inspect(validate_spec(2, {1, 1}), VarietyInvariants::validate(2, 1, 1));
  inspect(validate_spec(2, {1, 0}), VarietyInvariants::validate(2, 1, 1));
  inspect(validate_spec(2, {1, 0}), VarietyInvariants::validate(2, 1, 0));
  inspect(validate_spec(4, {1, 1, 1, 1}), VarietyInvariants::validate(4, 2, 1));
  for (int n : {2, 3, 4}) {
    for_each_m(n, 3, [&](const std::vector<int>& m) {
      if (validate_spec(n, m, SpecMode::Engine).is_trivial()) return;
      for (long g = (n % 2 == 1 ? 1 : 0); g <= 3; ++g) {
        for (long h : {1, 2, 5}) inspect(validate_spec(n, m), VarietyInvariants::validate(n, h, g));
      }
    });
  }
  if (out.ok) out.detail = std::to_string(tables) + " tables";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome cli_golden() {
  Outcome out;
  const std::filesystem::path dir(HH_GOLDEN_DIR);
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"table", "--n", "2", "--m", "1,1", "--cusps", "1", "--genus", "1", "--format", "json"},
       "table_n2_m11.json"},
      {{"sheaf-matrix", "--n", "2", "--m", "1,0"}, "sheaf_matrix_n2_m10.json"},
      {{"verify", "--max-n", "3", "--max-m", "2"}, "verify_n3_m2.json"},
  };
  for (const auto& [args, file] : cases) {
    std::vector<std::string> argv{"hilbert-hodge"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::string first;
    for (int run = 0; run < 2; ++run) {
      std::ostringstream o, e;
      const int code = cli::main_entry(argv, o, e);
      out.require(code == cli::kExitOk, file + ": exit " + std::to_string(code));
      if (run == 0) first = o.str();
      out.require(o.str() == first, file + ": output differs between runs");
    }
    out.require(std::filesystem::exists(dir / file), file + ": golden file missing");
    out.require(first == read_file(dir / file), file + ": differs from golden file");
  }
  std::ostringstream o, e;
  out.require(cli::main_entry({"hilbert-hodge", "verify"}, o, e) == cli::kExitOk,
              "default verify did not exit 0");
  if (out.ok) out.detail = "3 golden files byte-identical; default verify exits 0";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence (n<=3, m_i<=2, all P)", 60, [] { return oracle_sweep(false); }},
      {2, "d o d = 0 and monomial grading (same sweep)", 60, [] { return oracle_sweep(true); }},
      {3, "Kunneth factorization (n<=6, m_i<=4)", 10, kunneth_factorization},
      {4, "subset-count sum and symmetry (n<=12)", 5, subset_counts},
      {5, "dimension formulas at hand-substituted points", 1, dimension_formulas},
      {6, "Euler characteristic of IH (n in {2,3}, m_i<=2, g<=3)", 5,
       [] { return table_sweep(check_euler_ih); }},
      {7, "Riemann-Roch identity (same sweep)", 5, [] { return table_sweep(check_hrr); }},
      {8, "MHS shape: symmetry, weights, splitting", 5, mhs_shape},
      {9, "CLI golden files and verify exit code", 60, cli_golden},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& error) {
      outcome = {false, std::string("exception: ") + error.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_seconds) {
      outcome = {false,
                 "took longer than " + std::to_string(static_cast<int>(c.budget_seconds)) + " s"};
    }
    if (!outcome.ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.3f s) -- %s\n", outcome.ok ? "PASS" : "FAIL", c.id,
                c.title, seconds, outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
