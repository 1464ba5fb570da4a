#include "doctest.h"
#include "hilbert_hodge/consistency.hpp"

using namespace hilbert_hodge;

namespace {

const CheckEntry& only(const CheckReport& report) {
  REQUIRE(report.entries.size() == 1);
  return report.entries.front();
}

}  // namespace

TEST_CASE("oracle equivalence on single specs") {
  const auto r = check_oracle_equivalence(validate_spec(2, {1, 0}));
  REQUIRE(r.entries.size() == 4);
  CHECK(r.all_passed());
  CHECK(r.count(CheckStatus::Pass) == 4);
  for (const auto& e : r.entries) {
    if (e.name == "oracle_equivalence") CHECK(e.lhs == "4 monomials in 4 cells");
  }
  CHECK(
      check_oracle_equivalence(validate_spec(1, {1}, SpecMode::Engine)).count(CheckStatus::Pass) ==
      4);
}

TEST_CASE("oracle equivalence sweep n <= 3, m_i <= 2") {
  const auto r = check_oracle_equivalence(OracleSweep{1, 3, 2});
  // 3 + 9 + 27 specs, four checks each.
  CHECK(r.entries.size() == 4 * 39);
  CHECK(r.count(CheckStatus::Pass) == r.entries.size());
}

TEST_CASE("oversized complexes are skipped, not failed") {
  const auto r = check_oracle_equivalence(validate_spec(3, {3, 3, 3}), 4);
  CHECK(r.count(CheckStatus::Skipped) == 4);
  CHECK(r.all_passed());
}

TEST_CASE("Künneth and subset counts") {
  const auto r = check_kunneth_and_counts(OracleSweep{1, 4, 3});
  CHECK(r.count(CheckStatus::Pass) == r.entries.size());
  CHECK(r.entries.size() == 4 * (4 + 16 + 64 + 256));
}

TEST_CASE("constant-coefficient intersection cohomology") {
  // Hand evaluation: n=2, g=1 gives chi(O)=2, middle 4*1 + 2.
  CHECK(constant_ih_dims(VarietyInvariants::validate(2, 1, 1)) ==
        std::vector<Integer>{1, 0, 6, 0, 1});
  CHECK(constant_ih_dims(VarietyInvariants::validate(2, 1, 0)) ==
        std::vector<Integer>{1, 0, 2, 0, 1});
  // n=3, g=2 gives chi(O)=-1, middle (-8)(-2) = 16.
  CHECK(constant_ih_dims(VarietyInvariants::validate(3, 1, 2)) ==
        std::vector<Integer>{1, 0, 3, 16, 3, 0, 1});
}

TEST_CASE("Euler characteristic of IH") {
  const auto a =
      only(check_euler_ih(validate_spec(2, {1, 1}), VarietyInvariants::validate(2, 1, 1)));
  CHECK(a.status == CheckStatus::Pass);
  CHECK(a.lhs == "32");
  CHECK(a.rhs == "32");

  const auto b =
      only(check_euler_ih(validate_spec(2, {1, 0}), VarietyInvariants::validate(2, 1, 0)));
  CHECK(b.status == CheckStatus::Pass);
  CHECK(b.lhs == "8");

  // 1 - 0 + 3 - 16 + 3 - 0 + 1 = -8, times rank 8.
  const auto c =
      only(check_euler_ih(validate_spec(3, {1, 1, 1}), VarietyInvariants::validate(3, 1, 2)));
  CHECK(c.status == CheckStatus::Pass);
  CHECK(c.lhs == "-64");
  CHECK(c.rhs == "-64");
}

TEST_CASE("Riemann-Roch against L2 sections") {
  const auto a = only(check_hrr(validate_spec(2, {1, 1}), VarietyInvariants::validate(2, 1, 1)));
  CHECK(a.status == CheckStatus::Pass);
  CHECK(a.lhs == "8");
  const auto b = only(check_hrr(validate_spec(2, {1, 0}), VarietyInvariants::validate(2, 1, 0)));
  CHECK(b.status == CheckStatus::Pass);
  CHECK(b.lhs == "2");
  const auto c = only(
      check_hrr(validate_spec(2, {0, 0}, SpecMode::Engine), VarietyInvariants::validate(2, 1, 0)));
  CHECK(c.status == CheckStatus::Skipped);
}

TEST_CASE("table identities") {
  const auto a =
      only(check_table_identities(validate_spec(2, {1, 1}), VarietyInvariants::validate(2, 1, 1)));
  CHECK(a.status == CheckStatus::Pass);
  CHECK(a.lhs == "dim H^n=33");
  const auto b =
      only(check_table_identities(validate_spec(2, {1, 0}), VarietyInvariants::validate(2, 3, 1)));
  CHECK(b.status == CheckStatus::Pass);
  CHECK(b.lhs == "dim H^n=16");
  const auto c = only(
      check_table_identities(validate_spec(4, {1, 1, 1, 1}), VarietyInvariants::validate(4, 2, 1)));
  CHECK(c.status == CheckStatus::Pass);
}

TEST_CASE("default table sweep passes") {
  const auto r = run_table_sweep(TableSweep{});
  CHECK(r.count(CheckStatus::Fail) == 0);
  CHECK(r.count(CheckStatus::Pass) > 0);
  // Only (n odd, g = 0) is inconsistent.
  for (const auto& e : r.entries) {
    if (e.status == CheckStatus::Skipped) CHECK(e.parameters.find("g=0") != std::string::npos);
  }
}

TEST_CASE("reports sort by name then parameters") {
  CheckReport r;
  r.add({"b", "x", CheckStatus::Pass, "", ""});
  r.add({"a", "y", CheckStatus::Fail, "", ""});
  r.add({"a", "x", CheckStatus::Skipped, "", ""});
  r.sort();
  CHECK(r.entries[0].parameters == "x");
  CHECK(r.entries[0].name == "a");
  CHECK(r.entries[1].parameters == "y");
  CHECK(r.entries[2].name == "b");
  CHECK_FALSE(r.all_passed());
  CHECK(to_string(CheckStatus::Skipped) == "skipped");
}
