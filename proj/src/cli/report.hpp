#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "seshadri/bielliptic.hpp"
#include "seshadri/bounds.hpp"
#include "seshadri/cli.hpp"

namespace seshadri::cli {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool empty() const { return columns.empty(); }
};

/// Uniform result of every subcommand. JSON output always carries the seven
/// top-level keys below, plus "rows" when the report is tabular.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json exact_values = Json::object();
  Json decimal_renderings = Json::object();
  Json certificates = Json::object();
  Json paper_expectations = Json::array();
  std::string status = "pass";

  std::vector<std::string> lines;
  Table table;

  /// Records an expectation; anchored ones that fail flip status to
  /// "discrepancy".
  void expect(const std::string& check, const Json& expected, const Json& computed, bool anchored);

  int exit_code() const { return status == "pass" ? kExitOk : kExitDiscrepancy; }
};

void emit(const Report& report, const RunConfig& config, std::ostream& out);

std::string csv_escape(const std::string& field);

// Conversions shared by the commands.
Json to_json(const Rat& r);
Json to_json(const RadicalBound& r);
Json to_json(const Quadratic& q);
Json to_json(const TailWitness& w);
std::string radical_text(const RadicalBound& r);

template <typename Range>
std::string join(const Range& values, const std::string& sep) {
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += sep;
    first = false;
    if constexpr (std::is_convertible_v<decltype(v), std::string>) {
      out += v;
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

}  // namespace seshadri::cli
