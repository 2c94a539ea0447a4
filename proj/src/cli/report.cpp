#include "report.hpp"

#include <algorithm>
#include <ostream>

namespace seshadri::cli {

void Report::expect(const std::string& check, const Json& expected, const Json& computed, bool anchored) {
  const bool ok = expected == computed;
  paper_expectations.push_back(Json{{"check", check},
                                    {"kind", anchored ? "paper" : "investigation"},
                                    {"expected", expected},
                                    {"computed", computed},
                                    {"match", ok}});
  if (anchored && !ok && status == "pass") status = "discrepancy";
}

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const RadicalBound& r) {
  return Json{{"coef", r.coef().str()}, {"radicand", r.radicand().get_str()}};
}

Json to_json(const Quadratic& q) {
  return Json{{"a", q.a.get_str()}, {"b", q.b.get_str()}, {"c", q.c.get_str()}};
}

Json to_json(const TailWitness& w) {
  return Json{{"threshold", w.threshold.str()}, {"cutoff", w.cutoff}, {"polynomial", to_json(w.polynomial)}};
}

std::string radical_text(const RadicalBound& r) {
  return r.coef().str() + "*sqrt(" + r.radicand().get_str() + ")";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

void flatten(const Json& node, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array()) {
    std::string joined;
    bool scalar = std::all_of(node.begin(), node.end(), [](const Json& v) { return v.is_primitive(); });
    if (!scalar) {
      for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "." + std::to_string(i), out);
      return;
    }
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (i) joined += ' ';
      joined += node[i].is_string() ? node[i].get<std::string>() : node[i].dump();
    }
    out.emplace_back(prefix, joined);
  } else {
    out.emplace_back(prefix, node.is_string() ? node.get<std::string>() : node.dump());
  }
}

void emit_text_table(const Table& table, std::ostream& out) {
  std::vector<std::size_t> width(table.columns.size(), 0);
  for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
  for (const auto& row : table.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += std::string(width[i] - cells[i].size(), ' ') + cells[i];
    }
    out << s << "\n";
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
}

}  // namespace

void emit(const Report& report, const RunConfig& config, std::ostream& out) {
  switch (config.format) {
    case OutputFormat::json: {
      Json doc{{"command", report.command},
               {"inputs", report.inputs},
               {"exact_values", report.exact_values},
               {"decimal_renderings", report.decimal_renderings},
               {"certificates", report.certificates},
               {"paper_expectations", report.paper_expectations},
               {"status", report.status}};
      if (!report.table.empty()) {
        Json rows = Json::array();
        for (const auto& row : report.table.rows) {
          Json obj = Json::object();
          for (std::size_t i = 0; i < row.size(); ++i) obj[report.table.columns[i]] = row[i];
          rows.push_back(std::move(obj));
        }
        doc["rows"] = std::move(rows);
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv: {
      if (!report.table.empty()) {
        auto line = [&](const std::vector<std::string>& cells) {
          std::string s;
          for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_escape(cells[i]);
          out << s << "\n";
        };
        line(report.table.columns);
        for (const auto& row : report.table.rows) line(row);
        break;
      }
      std::vector<std::pair<std::string, std::string>> fields;
      flatten(report.inputs, "inputs", fields);
      flatten(report.exact_values, "exact", fields);
      flatten(report.decimal_renderings, "decimal", fields);
      fields.emplace_back("status", report.status);
      out << "field,value\n";
      for (const auto& [k, v] : fields) out << csv_escape(k) << "," << csv_escape(v) << "\n";
      break;
    }
    case OutputFormat::text: {
      for (const auto& l : report.lines) out << l << "\n";
      if (!report.table.empty()) {
        if (!report.lines.empty()) out << "\n";
        emit_text_table(report.table, out);
      }
      out << "status: " << report.status << "\n";
      break;
    }
  }
}

}  // namespace seshadri::cli
