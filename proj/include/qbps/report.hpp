#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbps/errors.hpp"

namespace qbps {

struct Check {
  std::string name;
  std::string anchor;  // the statement the check reproduces
  std::string expected;
  std::string computed;
  bool pass = false;
  double ms = 0;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Ordered list of checks; passes iff every check passes.
struct RunReport {
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int exit_code() const { return pass() ? 0 : 1; }

  /// Runs `body`, which fills expected/computed/pass, and records its wall time.
  /// An exception inside `body` is recorded as a failure, as is exceeding a
  /// positive time budget.
  Check& run(const std::string& name, const std::string& anchor, const std::function<void(Check&)>& body,
             double budget_ms = 0) {
    Check c{name, anchor, "", "", false, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.computed = std::string("error: ") + e.what();
    }
    const auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    c.ms = std::round(static_cast<double>(us)) / 1000.0;
    if (budget_ms > 0 && c.ms > budget_ms) {
      c.pass = false;
      c.computed += " [over the " + std::to_string(static_cast<long long>(budget_ms)) + " ms budget]";
    }
    checks.push_back(std::move(c));
    return checks.back();
  }

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(const RunReport& r) {
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : r.checks)
    checks.push_back(OrderedJson{{"name", c.name},
                                 {"anchor", c.anchor},
                                 {"expected", c.expected},
                                 {"computed", c.computed},
                                 {"pass", c.pass},
                                 {"ms", c.ms}});
  return OrderedJson{{"checks", checks}, {"pass", r.pass()}};
}

inline std::string serialize(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

inline RunReport report_from_json(const OrderedJson& j) {
  if (!j.is_object() || !j.contains("checks") || !j.at("checks").is_array())
    throw SchemaError("report: expected {\"checks\": [...], \"pass\": bool}");
  RunReport r;
  for (const auto& c : j.at("checks")) {
    try {
      r.checks.push_back(Check{c.at("name").get<std::string>(), c.at("anchor").get<std::string>(),
                               c.at("expected").get<std::string>(), c.at("computed").get<std::string>(),
                               c.at("pass").get<bool>(), c.at("ms").get<double>()});
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("report check: ") + e.what());
    }
  }
  if (j.contains("pass") && j.at("pass") != r.pass()) throw SchemaError("report: \"pass\" disagrees with its checks");
  return r;
}

inline RunReport parse_report(const std::string& text) {
  try {
    return report_from_json(OrderedJson::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("report: invalid JSON: ") + e.what());
  }
}

/// Rectangular result rendered as an aligned table, CSV, or a JSON array of
/// objects. All three carry the same cell strings.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

enum class OutputFormat { table, json, csv };

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string render(const Table& t, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
        out += "\n";
      };
      line(t.headers);
      for (const auto& r : t.rows) line(r);
      break;
    }
    case OutputFormat::json: {
      OrderedJson arr = OrderedJson::array();
      for (const auto& r : t.rows) {
        OrderedJson obj = OrderedJson::object();
        for (std::size_t i = 0; i < t.headers.size(); ++i) obj[t.headers[i]] = i < r.size() ? r[i] : "";
        arr.push_back(obj);
      }
      out = arr.dump(2) + "\n";
      break;
    }
    case OutputFormat::table: {
      std::vector<std::size_t> width(t.headers.size());
      for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
      for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) s += "  ";
          s += cells[i];
          if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
        }
        out += s + "\n";
      };
      line(t.headers);
      for (const auto& r : t.rows) line(r);
      break;
    }
  }
  return out;
}

inline Table report_table(const RunReport& r) {
  Table t{{"name", "anchor", "expected", "computed", "pass", "ms"}, {}};
  for (const auto& c : r.checks) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", c.ms);
    t.rows.push_back({c.name, c.anchor, c.expected, c.computed, c.pass ? "PASS" : "FAIL", ms});
  }
  return t;
}

inline std::string render(const RunReport& r, OutputFormat format) {
  if (format == OutputFormat::json) return serialize(r);
  return render(report_table(r), format);
}

}  // namespace qbps
