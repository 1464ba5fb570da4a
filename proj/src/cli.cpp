#include "hilbert_hodge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hilbert_hodge/consistency.hpp"
#include "hilbert_hodge/higgs_oracle.hpp"
#include "hilbert_hodge/kunneth.hpp"

namespace hilbert_hodge::cli {

namespace {

[[noreturn]] void config_error(const std::string& message) {
  throw Error(ErrorCode::ConfigError, message);
}

std::vector<int> parse_m(const std::string& text) {
  std::vector<int> m;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      m.push_back(value);
    } catch (const std::exception&) {
      config_error("--m expects a comma-separated list of integers, got '" + text + "'");
    }
  }
  if (m.empty()) config_error("--m must not be empty");
  return m;
}

Integer parse_integer(const std::string& text, const std::string& flag) {
  Integer value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    config_error(flag + " expects an integer, got '" + text + "'");
  }
  return value;
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "latex") return Format::Latex;
  config_error("--format must be one of text, json, latex; got '" + text + "'");
}

template <typename T>
T json_field(const Json& file, const char* key) {
  try {
    return file.at(key).get<T>();
  } catch (const Json::exception&) {
    config_error(std::string("config field '") + key + "' has the wrong type");
  }
}

LocalSystemSpec table_spec(const RunConfig& config) {
  if (!config.n) config_error("--n is required");
  if (!config.m) config_error("--m is required");
  return validate_spec(*config.n, *config.m, SpecMode::Table);
}

VarietyInvariants invariants(const RunConfig& config, bool need_genus) {
  if (!config.cusps) config_error("--cusps is required");
  if (need_genus && !config.genus) config_error("--genus is required");
  // Eisenstein data does not depend on g; g = 1 is admissible in every dimension.
  return VarietyInvariants::validate(*config.n, *config.cusps, config.genus.value_or(1));
}

}  // namespace

void apply_config_json(const Json& file, RunConfig& config) {
  if (!file.is_object()) config_error("config file must hold a JSON object");
  for (const auto& [key, value] : file.items()) {
    if (key == "n") {
      config.n = json_field<int>(file, "n");
    } else if (key == "m") {
      config.m = json_field<std::vector<int>>(file, "m");
    } else if (key == "cusps" || key == "genus") {
      Integer parsed;
      try {
        parsed = integer_from_json(value);
      } catch (const Error&) {
        config_error("config field '" + key + "' must be an integer");
      }
      (key == "cusps" ? config.cusps : config.genus) = parsed;
    } else if (key == "format") {
      config.format = parse_format(json_field<std::string>(file, "format"));
    } else if (key == "oracle_cap") {
      config.oracle_cap = json_field<std::size_t>(file, "oracle_cap");
    } else if (key == "max_n") {
      config.max_n = json_field<int>(file, "max_n");
    } else if (key == "max_m") {
      config.max_m = json_field<int>(file, "max_m");
    } else {
      config_error("unknown config field '" + key + "'");
    }
  }
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Hodge numbers of H^k(X, V_m) for Hilbert modular varieties", "hilbert-hodge"};
  app.require_subcommand(1);

  struct Flags {
    int n = 0;
    std::string m;
    std::string cusps;
    std::string genus;
    std::string format;
    std::string config;
    std::size_t oracle_cap = 0;
    int max_n = 0;
    int max_m = 0;
  } flags;

  std::vector<std::pair<CLI::App*, Mode>> commands;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", flags.config, "JSON config file; flags override its fields");
    sub->add_option("--format", flags.format, "text, json (default) or latex");
    sub->add_option("--oracle-cap", flags.oracle_cap, "maximum Higgs complex basis size");
  };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--n", flags.n, "number of upper half-plane factors");
    sub->add_option("--m", flags.m, "comma-separated weights m_1,...,m_n");
  };

  CLI::App* table = app.add_subcommand("table", "full MHS, IH and Eisenstein tables");
  add_spec(table);
  table->add_option("--cusps", flags.cusps, "number of cusps h");
  table->add_option("--genus", flags.genus, "geometric genus h^{n,0} of the compactification");
  add_common(table);
  commands.emplace_back(table, Mode::Table);

  CLI::App* sheaf =
      app.add_subcommand("sheaf-matrix", "cohomology sheaves C^{P,l} of the Higgs complex");
  add_spec(sheaf);
  add_common(sheaf);
  commands.emplace_back(sheaf, Mode::SheafMatrix);

  CLI::App* eis = app.add_subcommand("eisenstein", "Eisenstein cohomology bases and exponents");
  add_spec(eis);
  eis->add_option("--cusps", flags.cusps, "number of cusps h");
  eis->add_option("--genus", flags.genus, "geometric genus (not needed for the result)");
  add_common(eis);
  commands.emplace_back(eis, Mode::Eisenstein);

  CLI::App* verify = app.add_subcommand("verify", "run the consistency sweep");
  verify->add_option("--max-n", flags.max_n, "largest n in the sweep (default 4)");
  verify->add_option("--max-m", flags.max_m, "largest m_i in the sweep (default 3)");
  add_common(verify);
  commands.emplace_back(verify, Mode::Verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& error) {
    config_error(error.what());
  }

  RunConfig config;
  CLI::App* chosen = nullptr;
  for (const auto& [sub, mode] : commands) {
    if (sub->parsed()) {
      config.mode = mode;
      chosen = sub;
    }
  }
  if (!chosen->get_option("--config")->empty()) {
    std::ifstream file(flags.config);
    if (!file) config_error("cannot open config file '" + flags.config + "'");
    Json parsed;
    try {
      parsed = Json::parse(file);
    } catch (const Json::parse_error& error) {
      config_error("config file '" + flags.config + "' is not valid JSON: " + error.what());
    }
    apply_config_json(parsed, config);
  }
  auto given = [&](const char* name) {
    CLI::Option* option = chosen->get_option_no_throw(name);
    return option != nullptr && !option->empty();
  };
  if (given("--n")) config.n = flags.n;
  if (given("--m")) config.m = parse_m(flags.m);
  if (given("--cusps")) config.cusps = parse_integer(flags.cusps, "--cusps");
  if (given("--genus")) config.genus = parse_integer(flags.genus, "--genus");
  if (given("--format")) config.format = parse_format(flags.format);
  if (given("--oracle-cap")) config.oracle_cap = flags.oracle_cap;
  if (given("--max-n")) config.max_n = flags.max_n;
  if (given("--max-m")) config.max_m = flags.max_m;
  if (config.oracle_cap == 0) config_error("--oracle-cap must be positive");
  return config;
}

Document build_document(const RunConfig& config) {
  Document document;
  switch (config.mode) {
    case Mode::Table: {
      const LocalSystemSpec spec = table_spec(config);
      const VarietyInvariants inv = invariants(config, true);
      document.n = spec.n();
      document.m = spec.m();
      document.cusps = inv.cusps();
      document.genus = inv.genus();
      document.mhs = mhs_table(spec, inv);
      document.ih = ih_table(spec, inv);
      document.eisenstein.emplace();
      for (int k = spec.n(); k <= 2 * spec.n() - 1; ++k) {
        document.eisenstein->push_back(eisenstein_data(spec, inv, k));
      }
      document.checks.append(check_euler_ih(spec, inv));
      document.checks.append(check_hrr(spec, inv));
      document.checks.append(check_table_identities(spec, inv));
      break;
    }
    case Mode::SheafMatrix: {
      const LocalSystemSpec spec = table_spec(config);
      document.n = spec.n();
      document.m = spec.m();
      document.sheaves = cohomology_sheaf_closed_form(spec);
      document.checks = check_oracle_equivalence(spec, config.oracle_cap);
      break;
    }
    case Mode::Eisenstein: {
      const LocalSystemSpec spec = table_spec(config);
      const VarietyInvariants inv = invariants(config, false);
      document.n = spec.n();
      document.m = spec.m();
      document.cusps = inv.cusps();
      document.genus = config.genus;
      document.eisenstein.emplace();
      for (int k = spec.n(); k <= 2 * spec.n() - 1; ++k) {
        document.eisenstein->push_back(eisenstein_data(spec, inv, k));
      }
      break;
    }
    case Mode::Verify: {
      if (config.max_n < 1) config_error("--max-n must be at least 1");
      if (config.max_m < 0) config_error("--max-m must be non-negative");
      OracleSweep oracle{1, config.max_n, config.max_m, config.oracle_cap};
      TableSweep tables;
      tables.ns.clear();
      for (int n = 2; n <= config.max_n; ++n) tables.ns.push_back(n);
      tables.max_m = config.max_m;
      document.checks = run_verify(oracle, tables);
      break;
    }
  }
  document.checks.sort();
  return document;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Document document;
  try {
    document = build_document(config);
  } catch (const Error& error) {
    err << "error [" << to_string(error.code()) << "]: " << error.what() << '\n';
    return kExitInvalid;
  }
  return emit(document, config.format, out, err);
}

int emit(const Document& document, Format format, std::ostream& out, std::ostream& err) {
  out << render(document, format);
  if (!document.checks.all_passed()) {
    err << "error: " << document.checks.count(CheckStatus::Fail)
        << " consistency check(s) failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
  } catch (const Error& error) {
    err << "error [" << to_string(error.code()) << "]: " << error.what() << '\n';
    return kExitInvalid;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace hilbert_hodge::cli
