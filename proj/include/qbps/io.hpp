#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbps/bps_dim.hpp"
#include "qbps/errors.hpp"
#include "qbps/quiver.hpp"
#include "qbps/rational.hpp"
#include "qbps/weights.hpp"

// JSON schemas:
//   quiver       {"vertices": ["v1", ...], "arrows": [[int, ...], ...]}
//   block table  {"blocks": [{"e": [int, ...], "dim": int}, ...],
//                 "monodromy": "trivial" | "nontrivial",
//                 "fallback": int (optional), "invariant_dim": int (optional)}
// Dimension vectors and central weights are given in the quiver's vertex order.

namespace qbps::io {

using Json = nlohmann::json;

namespace detail {

inline std::int64_t nonnegative_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer, got " + j.dump());
  const auto x = j.get<std::int64_t>();
  if (x < 0) throw SchemaError(where + ": expected a nonnegative integer, got " + j.dump());
  return x;
}

inline Json parse_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(what + ": invalid JSON: " + e.what());
  }
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  if (!text.empty() && text.back() == ',') out.push_back("");
  return out;
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Quiver quiver_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("quiver: expected an object with \"vertices\" and \"arrows\"");
  if (!j.contains("vertices")) throw SchemaError("quiver: missing \"vertices\"");
  if (!j.contains("arrows")) throw SchemaError("quiver: missing \"arrows\"");
  const auto& jv = j.at("vertices");
  if (!jv.is_array()) throw SchemaError("vertices: expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    if (!jv[i].is_string()) throw SchemaError("vertices[" + std::to_string(i) + "]: expected a string");
    names.push_back(jv[i].get<std::string>());
  }
  const auto& ja = j.at("arrows");
  if (!ja.is_array()) throw SchemaError("arrows: expected a square array of arrays");
  std::vector<std::vector<std::int64_t>> arrows;
  for (std::size_t a = 0; a < ja.size(); ++a) {
    if (!ja[a].is_array()) throw SchemaError("arrows[" + std::to_string(a) + "]: expected an array");
    std::vector<std::int64_t> row;
    for (std::size_t b = 0; b < ja[a].size(); ++b)
      row.push_back(detail::nonnegative_int(ja[a][b], "arrows[" + std::to_string(a) + "][" + std::to_string(b) + "]"));
    arrows.push_back(std::move(row));
  }
  return Quiver(std::move(names), std::move(arrows));
}

inline Json quiver_to_json(const Quiver& q) {
  return Json{{"vertices", q.vertices()}, {"arrows", q.arrows()}};
}

inline Quiver parse_quiver(const std::string& text) { return quiver_from_json(detail::parse_text(text, "quiver")); }

inline Quiver load_quiver(const std::string& path) { return parse_quiver(read_file(path)); }

inline BlockDimTable block_table_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("block table: expected an object with \"blocks\"");
  if (!j.contains("blocks")) throw SchemaError("block table: missing \"blocks\"");
  const auto& jb = j.at("blocks");
  if (!jb.is_array()) throw SchemaError("blocks: expected an array");
  BlockDimTable t;
  for (std::size_t k = 0; k < jb.size(); ++k) {
    const std::string where = "blocks[" + std::to_string(k) + "]";
    const auto& entry = jb[k];
    if (!entry.is_object() || !entry.contains("e") || !entry.contains("dim"))
      throw SchemaError(where + ": expected {\"e\": [...], \"dim\": int}");
    const auto& je = entry.at("e");
    if (!je.is_array() || je.empty()) throw SchemaError(where + ".e: expected a nonempty array");
    DimVector e;
    for (std::size_t i = 0; i < je.size(); ++i)
      e.entries.push_back(detail::nonnegative_int(je[i], where + ".e[" + std::to_string(i) + "]"));
    if (e.is_zero()) throw SchemaError(where + ".e: zero dimension vector");
    if (t.blocks.count(e)) throw SchemaError(where + ".e: duplicate entry " + to_string(e));
    t.blocks[e] = static_cast<std::uint64_t>(detail::nonnegative_int(entry.at("dim"), where + ".dim"));
  }
  if (j.contains("monodromy")) {
    const auto& jm = j.at("monodromy");
    if (jm == "trivial")
      t.monodromy = Monodromy::trivial;
    else if (jm == "nontrivial")
      t.monodromy = Monodromy::nontrivial;
    else
      throw SchemaError("monodromy: expected \"trivial\" or \"nontrivial\", got " + jm.dump());
  }
  if (j.contains("fallback"))
    t.fallback = static_cast<std::uint64_t>(detail::nonnegative_int(j.at("fallback"), "fallback"));
  if (j.contains("invariant_dim"))
    t.invariant_dim = static_cast<std::uint64_t>(detail::nonnegative_int(j.at("invariant_dim"), "invariant_dim"));
  return t;
}

inline Json block_table_to_json(const BlockDimTable& t) {
  Json blocks = Json::array();
  for (const auto& [e, dim] : t.blocks) blocks.push_back(Json{{"e", e.entries}, {"dim", dim}});
  Json j{{"blocks", blocks}, {"monodromy", t.monodromy == Monodromy::trivial ? "trivial" : "nontrivial"}};
  if (t.fallback) j["fallback"] = *t.fallback;
  if (t.invariant_dim) j["invariant_dim"] = *t.invariant_dim;
  return j;
}

inline BlockDimTable parse_block_table(const std::string& text) {
  return block_table_from_json(detail::parse_text(text, "block table"));
}

inline BlockDimTable load_block_table(const std::string& path) { return parse_block_table(read_file(path)); }

/// "2,1,0" -> (2,1,0).
inline DimVector parse_dim(const std::string& text) {
  DimVector d;
  const auto items = detail::split_commas(text);
  if (items.empty()) throw SchemaError("dimension vector: empty");
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& s = items[i];
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size())
      throw SchemaError("dimension vector entry " + std::to_string(i) + ": not an integer: \"" + s + "\"");
    if (x < 0) throw SchemaError("dimension vector entry " + std::to_string(i) + " is negative");
    d.entries.push_back(x);
  }
  return d;
}

/// "1/2,-1/3" -> per-vertex central weight.
inline CentralWeight parse_delta(const std::string& text) {
  CentralWeight delta;
  const auto items = detail::split_commas(text);
  if (items.empty()) throw SchemaError("delta: empty");
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      delta.per_vertex.push_back(parse_rational(items[i]));
    } catch (const std::invalid_argument&) {
      throw SchemaError("delta entry " + std::to_string(i) + ": not a rational \"p/q\": \"" + items[i] + "\"");
    }
  }
  return delta;
}

inline std::string format_delta(const CentralWeight& delta) {
  std::string s;
  for (std::size_t i = 0; i < delta.per_vertex.size(); ++i) s += (i ? "," : "") + to_string(delta.per_vertex[i]);
  return s;
}

}  // namespace qbps::io
