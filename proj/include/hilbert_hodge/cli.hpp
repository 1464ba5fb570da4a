#ifndef HILBERT_HODGE_CLI_HPP
#define HILBERT_HODGE_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hilbert_hodge/model.hpp"
#include "hilbert_hodge/serialize.hpp"

namespace hilbert_hodge::cli {

enum class Mode { Table, SheafMatrix, Eisenstein, Verify };
enum class Format { Text, Json, Latex };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitCheckFailed = 2;

struct RunConfig {
  Mode mode = Mode::Table;
  std::optional<int> n;
  std::optional<std::vector<int>> m;
  std::optional<Integer> cusps;
  std::optional<Integer> genus;
  Format format = Format::Json;
  std::size_t oracle_cap = default_oracle_cap();
  int max_n = 4;
  int max_m = 3;
};

/// Reads the fields of a JSON config file ("n", "m", "cusps", "genus",
/// "format", "oracle_cap", "max_n", "max_m") into `config`. Throws ConfigError.
void apply_config_json(const Json& file, RunConfig& config);

/// Parses argv (program name first). Fields from --config are applied first,
/// then command-line flags override them. Throws ConfigError; returns nullopt
/// when help was printed to `out`.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Builds the document for a validated config. Throws hilbert_hodge::Error.
Document build_document(const RunConfig& config);

std::string render(const Document& document, Format format);

/// Writes the rendered document to `out`: 0 if every check passed, 2 and a
/// summary on `err` otherwise.
int emit(const Document& document, Format format, std::ostream& out, std::ostream& err);

/// Runs one request: 0 on success, 1 on invalid input, 2 if a consistency
/// check failed.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, with every error mapped to an exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbert_hodge::cli

#endif  // HILBERT_HODGE_CLI_HPP
