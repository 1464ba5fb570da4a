#ifndef HILBERT_HODGE_SERIALIZE_HPP
#define HILBERT_HODGE_SERIALIZE_HPP

// JSON encoding shared by the CLI, the consistency report and the Python
// module. Objects use sorted keys; integers that fit in 64 bits are JSON
// numbers, larger ones are decimal strings.

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

#include "hilbert_hodge/cohomology_tables.hpp"
#include "hilbert_hodge/consistency.hpp"
#include "hilbert_hodge/model.hpp"
#include "hilbert_hodge/sheaf_matrix.hpp"

namespace hilbert_hodge {

using Json = nlohmann::json;

Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& value);

Json to_json(const LineBundleMonomial& monomial);
LineBundleMonomial monomial_from_json(const Json& value);

Json to_json(const SheafCohomologyLabel& label);
SheafCohomologyLabel label_from_json(const Json& value);

Json to_json(const SheafMatrix& matrix);
SheafMatrix sheaf_matrix_from_json(const Json& value);

Json to_json(const IhTable& table);
IhTable ih_table_from_json(const Json& value);

Json to_json(const EisensteinDatum& datum);
EisensteinDatum eisenstein_from_json(const Json& value);

/// The list stored under "H"; the field flag is written separately.
Json to_json(const MhsTable& table);
MhsTable mhs_table_from_json(const Json& h, const std::string& field);

Json to_json(const CheckReport& report);
CheckReport check_report_from_json(const Json& value);

/// Everything one CLI run can emit.
struct Document {
  int n = 0;
  std::vector<int> m;
  std::optional<Integer> cusps;
  std::optional<Integer> genus;
  std::optional<MhsTable> mhs;
  std::optional<IhTable> ih;
  std::optional<std::vector<EisensteinDatum>> eisenstein;
  std::optional<SheafMatrix> sheaves;
  CheckReport checks;

  bool operator==(const Document&) const = default;
};

/// {"spec":{"n","m"}, "invariants":{"cusps","genus"},
///  "tables":{"H","IH","Eis","C","mhs_field"}, "checks":[...]}
/// Absent parts are omitted.
Json to_json(const Document& document);
Document document_from_json(const Json& value);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& value);

}  // namespace hilbert_hodge

#endif  // HILBERT_HODGE_SERIALIZE_HPP
