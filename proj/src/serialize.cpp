#include "hilbert_hodge/serialize.hpp"

#include <climits>

namespace hilbert_hodge {

Json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(value.get_str());
}

Integer integer_from_json(const Json& value) {
  if (value.is_number_integer()) return Integer(value.get<long>());
  if (value.is_string()) {
    Integer out;
    const auto text = value.get<std::string>();
    if (!text.empty() && out.set_str(text, 10) == 0) return out;
  }
  throw Error(ErrorCode::ConfigError, "expected an integer, got " + value.dump());
}

namespace {

DegreeStatus status_from_string(const std::string& s) {
  if (s == "vanishes") return DegreeStatus::Vanishes;
  if (s == "computed") return DegreeStatus::Computed;
  throw Error(ErrorCode::ConfigError, "unknown degree status '" + s + "'");
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw Error(ErrorCode::ConfigError, "unknown check status '" + s + "'");
}

Json hodge_to_json(const std::map<std::pair<long, long>, Integer>& hodge) {
  Json out = Json::array();
  for (const auto& [pq, dim] : hodge) {
    out.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", integer_to_json(dim)}});
  }
  return out;
}

}  // namespace

Json to_json(const LineBundleMonomial& monomial) {
  return {{"exponents", monomial.exponents}, {"minus_S", monomial.minus_S}};
}

LineBundleMonomial monomial_from_json(const Json& value) {
  return {value.at("exponents").get<std::vector<int>>(), value.at("minus_S").get<bool>()};
}

Json to_json(const SheafCohomologyLabel& label) {
  return {{"degree", label.degree()},
          {"exponents", label.monomial().exponents},
          {"minus_S", label.monomial().minus_S},
          {"restricted_to_S", label.restricted_to_S()}};
}

SheafCohomologyLabel label_from_json(const Json& value) {
  return {value.at("degree").get<int>(), monomial_from_json(value),
          value.at("restricted_to_S").get<bool>()};
}

Json to_json(const SheafMatrix& matrix) {
  Json cells = Json::array();
  for (const auto& [cell, multiset] : matrix.cells) {
    Json monomials = Json::array();
    for (const auto& [monomial, count] : multiset) {
      monomials.push_back({{"exponents", monomial.exponents}, {"multiplicity", count}});
    }
    cells.push_back({{"p", cell.P}, {"l", cell.l}, {"monomials", std::move(monomials)}});
  }
  return {{"m", matrix.m}, {"cells", std::move(cells)}};
}

SheafMatrix sheaf_matrix_from_json(const Json& value) {
  SheafMatrix out{value.at("m").get<std::vector<int>>(), {}};
  for (const Json& cell : value.at("cells")) {
    const HodgeCell key{cell.at("p").get<int>(), cell.at("l").get<int>()};
    for (const Json& monomial : cell.at("monomials")) {
      out.insert(key, {monomial.at("exponents").get<std::vector<int>>(), false},
                 monomial.at("multiplicity").get<std::size_t>());
    }
  }
  return out;
}

Json to_json(const IhTable& table) {
  Json dims = Json::array();
  for (std::size_t k = 0; k < table.dims.size(); ++k) {
    dims.push_back({{"k", k}, {"dim", integer_to_json(table.dims[k])}});
  }
  Json hodge = Json::array();
  for (const auto& [P, dim] : table.middle_hodge) {
    hodge.push_back({{"p", P}, {"q", table.middle_weight - P}, {"dim", integer_to_json(dim)}});
  }
  return {{"n", table.n},
          {"weight", table.middle_weight},
          {"l2_dim", integer_to_json(table.l2_dim)},
          {"dims", std::move(dims)},
          {"hodge", std::move(hodge)}};
}

IhTable ih_table_from_json(const Json& value) {
  IhTable out;
  out.n = value.at("n").get<int>();
  out.middle_weight = value.at("weight").get<long>();
  out.l2_dim = integer_from_json(value.at("l2_dim"));
  for (const Json& d : value.at("dims")) out.dims.push_back(integer_from_json(d.at("dim")));
  for (const Json& h : value.at("hodge")) {
    out.middle_hodge.emplace(h.at("p").get<long>(), integer_from_json(h.at("dim")));
  }
  return out;
}

Json to_json(const EisensteinDatum& datum) {
  Json basis = Json::array();
  for (const EisensteinBasisElement& e : datum.basis) {
    basis.push_back({{"subset", e.subset}, {"alpha", e.alpha}, {"beta", e.beta}});
  }
  return {{"k", datum.k},
          {"dim", integer_to_json(datum.dim)},
          {"cusps", integer_to_json(datum.cusps)},
          {"basis", std::move(basis)}};
}

EisensteinDatum eisenstein_from_json(const Json& value) {
  EisensteinDatum out{value.at("k").get<int>(),
                      integer_from_json(value.at("cusps")),
                      {},
                      integer_from_json(value.at("dim"))};
  for (const Json& e : value.at("basis")) {
    out.basis.push_back({e.at("subset").get<std::vector<int>>(),
                         e.at("alpha").get<std::vector<long>>(),
                         e.at("beta").get<std::vector<long>>()});
  }
  return out;
}

Json to_json(const MhsTable& table) {
  Json degrees = Json::array();
  for (const MhsDegree& degree : table.degrees) {
    Json weights = Json::array();
    for (const WeightLevel& level : degree.weight_levels) {
      weights.push_back({{"weight", level.weight}, {"dim", integer_to_json(level.dim)}});
    }
    Json gr_f = Json::array();
    for (const auto& [P, labels] : degree.gr_F) {
      Json list = Json::array();
      for (const SheafCohomologyLabel& label : labels) list.push_back(to_json(label));
      gr_f.push_back({{"p", P}, {"labels", std::move(list)}});
    }
    degrees.push_back(
        {{"k", degree.k},
         {"status", degree.status == DegreeStatus::Vanishes ? "vanishes" : "computed"},
         {"dim", integer_to_json(degree.total_dim)},
         {"ih_part", integer_to_json(degree.ih_part)},
         {"eis_part", integer_to_json(degree.eis_part)},
         {"weights", std::move(weights)},
         {"hodge", hodge_to_json(degree.hodge_numbers)},
         {"grF", std::move(gr_f)}});
  }
  return degrees;
}

MhsTable mhs_table_from_json(const Json& h, const std::string& field) {
  MhsTable out;
  if (field == "Q") {
    out.field = MhsField::Rational;
  } else if (field == "R") {
    out.field = MhsField::Real;
  } else {
    throw Error(ErrorCode::ConfigError, "unknown MHS field '" + field + "'");
  }
  for (const Json& d : h) {
    MhsDegree degree;
    degree.k = d.at("k").get<int>();
    degree.status = status_from_string(d.at("status").get<std::string>());
    degree.total_dim = integer_from_json(d.at("dim"));
    degree.ih_part = integer_from_json(d.at("ih_part"));
    degree.eis_part = integer_from_json(d.at("eis_part"));
    for (const Json& w : d.at("weights")) {
      degree.weight_levels.push_back({w.at("weight").get<long>(), integer_from_json(w.at("dim"))});
    }
    for (const Json& pq : d.at("hodge")) {
      degree.hodge_numbers.emplace(std::pair{pq.at("p").get<long>(), pq.at("q").get<long>()},
                                   integer_from_json(pq.at("dim")));
    }
    for (const Json& entry : d.at("grF")) {
      auto& labels = degree.gr_F[entry.at("p").get<long>()];
      for (const Json& label : entry.at("labels")) labels.push_back(label_from_json(label));
    }
    out.degrees.push_back(std::move(degree));
  }
  return out;
}

Json to_json(const CheckReport& report) {
  Json out = Json::array();
  for (const CheckEntry& e : report.entries) {
    out.push_back({{"name", e.name},
                   {"parameters", e.parameters},
                   {"status", std::string(to_string(e.status))},
                   {"lhs", e.lhs},
                   {"rhs", e.rhs}});
  }
  return out;
}

CheckReport check_report_from_json(const Json& value) {
  CheckReport out;
  for (const Json& e : value) {
    out.add({e.at("name").get<std::string>(), e.at("parameters").get<std::string>(),
             check_status_from_string(e.at("status").get<std::string>()),
             e.at("lhs").get<std::string>(), e.at("rhs").get<std::string>()});
  }
  return out;
}

Json to_json(const Document& document) {
  Json out = Json::object();
  if (document.n > 0) out["spec"] = {{"n", document.n}, {"m", document.m}};
  if (document.cusps || document.genus) {
    Json inv = Json::object();
    if (document.cusps) inv["cusps"] = integer_to_json(*document.cusps);
    if (document.genus) inv["genus"] = integer_to_json(*document.genus);
    out["invariants"] = std::move(inv);
  }
  Json tables = Json::object();
  if (document.mhs) {
    tables["H"] = to_json(*document.mhs);
    tables["mhs_field"] = document.mhs->field == MhsField::Rational ? "Q" : "R";
  }
  if (document.ih) tables["IH"] = to_json(*document.ih);
  if (document.eisenstein) {
    Json eis = Json::array();
    for (const EisensteinDatum& datum : *document.eisenstein) eis.push_back(to_json(datum));
    tables["Eis"] = std::move(eis);
  }
  if (document.sheaves) tables["C"] = to_json(*document.sheaves);
  if (!tables.empty()) out["tables"] = std::move(tables);
  out["checks"] = to_json(document.checks);
  return out;
}

Document document_from_json(const Json& value) {
  Document out;
  if (value.contains("spec")) {
    out.n = value.at("spec").at("n").get<int>();
    out.m = value.at("spec").at("m").get<std::vector<int>>();
  }
  if (value.contains("invariants")) {
    const Json& inv = value.at("invariants");
    if (inv.contains("cusps")) out.cusps = integer_from_json(inv.at("cusps"));
    if (inv.contains("genus")) out.genus = integer_from_json(inv.at("genus"));
  }
  if (value.contains("tables")) {
    const Json& tables = value.at("tables");
    if (tables.contains("H")) {
      out.mhs = mhs_table_from_json(tables.at("H"), tables.at("mhs_field").get<std::string>());
    }
    if (tables.contains("IH")) out.ih = ih_table_from_json(tables.at("IH"));
    if (tables.contains("Eis")) {
      out.eisenstein.emplace();
      for (const Json& datum : tables.at("Eis"))
        out.eisenstein->push_back(eisenstein_from_json(datum));
    }
    if (tables.contains("C")) out.sheaves = sheaf_matrix_from_json(tables.at("C"));
  }
  if (value.contains("checks")) out.checks = check_report_from_json(value.at("checks"));
  return out;
}

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

}  // namespace hilbert_hodge
