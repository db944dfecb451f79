// Serialization of valuations, verdicts and tables: JSON (lines), CSV and
// markdown.
#pragma once

#include "sunexp/twoadic.hpp"
#include "sunexp/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sunexp::format {

using json = nlohmann::json;

inline json to_json(const Val2& v) {
  if (v.is_exact()) return v.value();
  return json{{"atLeast", v.value()}};
}

inline Val2 val2_from_json(const json& j) {
  if (j.is_number_unsigned()) return Val2::exact(j.get<unsigned>());
  if (j.is_object() && j.contains("atLeast")) return Val2::at_least(j.at("atLeast").get<unsigned>());
  throw std::invalid_argument("val2_from_json: expected a number or {\"atLeast\": N}");
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  return Int(j.get<std::int64_t>());
}

inline json to_json(const Verdict& v) {
  json params = json::object();
  for (const auto& [name, value] : v.params) params[name] = to_json(value);
  return json{{"statement", v.statement_id},
              {"params", params},
              {"expected", v.expected},
              {"computed", v.computed},
              {"pass", v.pass}};
}

/// Parameters come back in key order, which is the order the suites emit.
inline Verdict verdict_from_json(const json& j) {
  Verdict v{j.at("statement").get<std::string>(), {}, j.at("expected").get<std::string>(),
            j.at("computed").get<std::string>(), j.at("pass").get<bool>()};
  for (const auto& [name, value] : j.at("params").items()) {
    v.params.emplace_back(name, int_from_json(value));
  }
  return v;
}

inline std::string json_line(const Verdict& v) { return to_json(v).dump(); }

inline std::string params_text(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ' ';
    out += name + "=" + value.str();
  }
  return out;
}

inline std::string text_line(const Verdict& v) {
  return std::string(v.pass ? "PASS " : "FAIL ") + v.statement_id + " [" + params_text(v.params) +
         "] expected " + v.expected + ", computed " + v.computed;
}

/// RFC 4180 field quoting.
inline std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

inline std::string table_csv(const TableReport& t) {
  std::string out = csv_row({"table", t.row_header, "column", "expected", "computed", "match"});
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    for (std::size_t c = 0; c < t.column_labels.size(); ++c) {
      out += csv_row({t.id, t.row_labels[r], t.column_labels[c], t.expected[r][c],
                      t.computed[r][c], t.cell_pass[r][c] ? "yes" : "no"});
    }
  }
  return out;
}

inline json table_json(const TableReport& t) {
  json rows = json::array();
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    json match = json::array();
    for (bool ok : t.cell_pass[r]) match.push_back(ok);
    rows.push_back({{"label", t.row_labels[r]},
                    {"expected", t.expected[r]},
                    {"computed", t.computed[r]},
                    {"match", match}});
  }
  return json{{"table", t.id},
              {"rowHeader", t.row_header},
              {"columns", t.column_labels},
              {"rows", rows},
              {"pass", t.all_pass()}};
}

namespace detail {
inline std::string markdown_grid(const TableReport& t,
                                 const std::vector<std::vector<std::string>>& cells,
                                 bool mark_mismatches) {
  std::ostringstream out;
  out << "| " << t.row_header << " |";
  for (const auto& c : t.column_labels) out << ' ' << c << " |";
  out << "\n|---|";
  for (std::size_t c = 0; c < t.column_labels.size(); ++c) out << "---|";
  out << '\n';
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    out << "| " << t.row_labels[r] << " |";
    for (std::size_t c = 0; c < t.column_labels.size(); ++c) {
      out << ' ' << cells[r][c];
      if (mark_mismatches && !t.cell_pass[r][c]) out << " (mismatch)";
      out << " |";
    }
    out << '\n';
  }
  return out.str();
}
}  // namespace detail

/// Published and recomputed grids with the same row/column layout.
/// Computed cells list one value per representative k, separated by '/'.
inline std::string table_markdown(const TableReport& t) {
  std::ostringstream out;
  out << "Table " << t.id.substr(5) << " (published; *bold* = row minimum)\n\n"
      << detail::markdown_grid(t, t.expected, false) << "\nTable " << t.id.substr(5)
      << " (computed)\n\n"
      << detail::markdown_grid(t, t.computed, true);
  std::size_t failed = 0;
  for (const auto& v : t.verdicts) failed += v.pass ? 0 : 1;
  out << '\n' << (t.verdicts.size() - failed) << '/' << t.verdicts.size() << " checks pass\n";
  for (const auto& v : t.verdicts) {
    if (!v.pass) out << "- " << text_line(v) << '\n';
  }
  return out.str();
}

}  // namespace sunexp::format
