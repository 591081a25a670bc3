#pragma once

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orbikit/diamond.hpp"
#include "orbikit/error.hpp"
#include "orbikit/grade.hpp"
#include "orbikit/inertia.hpp"
#include "orbikit/invariants.hpp"
#include "orbikit/quotient.hpp"

// File formats. One JSON object per document, parsed strictly: unknown
// fields, floats, and wrongly typed values are parse errors. Three kinds:
//
//   orbifold   {name, dim, sectors: [{order, exponents, diamond, count?, label?}]}
//              or {name?, family: "projective_quotient" | "kummer", params: {...}}
//   diamond    {name, dim, level?, entries: [{p, q, h}]}
//   columns    {name, dim, columns: {"i": v, ...}, h01?}
//
// Every kind accepts an optional "description". Grades are integers or exact
// "a/b" strings.

namespace orbikit::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

/// Hochschild column data plus h^{0,1}; resolved to a diamond by reconstruction.
struct ColumnsFixture {
  ColumnVector columns;
  std::optional<std::int64_t> h01;
};

struct Document {
  std::string name;
  std::string description;
  std::variant<OrbifoldPresentation, HodgeDiamond, ColumnsFixture> content;

  const OrbifoldPresentation* presentation() const {
    return std::get_if<OrbifoldPresentation>(&content);
  }
};

namespace detail {

inline void expect_fields(const Json& obj, std::string_view context,
                          std::initializer_list<std::string_view> required,
                          std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) fail(ErrorKind::Parse, std::string(context) + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const auto& key = it.key();
    auto known = [&](auto list) { return std::find(list.begin(), list.end(), key) != list.end(); };
    if (!known(required) && !known(optional))
      fail(ErrorKind::Parse, std::string(context) + ": unknown field '" + key + "'");
  }
  for (auto field : required)
    if (!obj.contains(std::string(field)))
      fail(ErrorKind::Parse, std::string(context) + ": missing field '" + std::string(field) + "'");
}

inline std::int64_t get_int(const Json& v, std::string_view context) {
  if (!v.is_number_integer())
    fail(ErrorKind::Parse, std::string(context) + ": expected an integer");
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX))
      fail(ErrorKind::Parse, std::string(context) + ": integer too large");
    return static_cast<std::int64_t>(u);
  }
  return v.get<std::int64_t>();
}

inline int get_small_int(const Json& v, std::string_view context) {
  auto x = get_int(v, context);
  if (x < -1'000'000 || x > 1'000'000)
    fail(ErrorKind::Parse, std::string(context) + ": value out of range");
  return static_cast<int>(x);
}

inline std::string get_string(const Json& v, std::string_view context) {
  if (!v.is_string()) fail(ErrorKind::Parse, std::string(context) + ": expected a string");
  return v.get<std::string>();
}

inline const Json& get_array(const Json& v, std::string_view context) {
  if (!v.is_array()) fail(ErrorKind::Parse, std::string(context) + ": expected an array");
  return v;
}

inline Grade get_grade(const Json& v, std::string_view context) {
  if (v.is_number_integer()) return Grade(get_int(v, context));
  if (v.is_string()) return parse_grade(v.get<std::string>());
  fail(ErrorKind::Parse, std::string(context) + ": grade must be an integer or an \"a/b\" string");
}

inline std::vector<std::int64_t> get_int_list(const Json& v, std::string_view context) {
  std::vector<std::int64_t> out;
  for (const auto& x : get_array(v, context)) out.push_back(get_int(x, context));
  return out;
}

inline HodgeDiamond::Entries parse_entries(const Json& list, std::string_view context) {
  HodgeDiamond::Entries entries;
  std::size_t index = 0;
  for (const auto& e : get_array(list, context)) {
    const std::string where = std::string(context) + "[" + std::to_string(index++) + "]";
    expect_fields(e, where, {"p", "q", "h"});
    Bidegree key{get_grade(e["p"], where + ".p"), get_grade(e["q"], where + ".q")};
    auto h = get_int(e["h"], where + ".h");
    if (!entries.emplace(key, h).second)
      fail(ErrorKind::InvalidDiamond, where + ": duplicate entry (" + format_grade(key.first) +
                                          "," + format_grade(key.second) + ")");
  }
  return entries;
}

inline OrbifoldPresentation parse_sectors(const Json& doc, const std::string& name) {
  const int dim = get_small_int(doc["dim"], "dim");
  std::vector<InertiaComponent> sectors;
  std::size_t index = 0;
  for (const auto& s : get_array(doc["sectors"], "sectors")) {
    const std::string where = "sectors[" + std::to_string(index++) + "]";
    expect_fields(s, where, {"order", "exponents", "diamond"}, {"count", "label"});
    auto order = get_int(s["order"], where + ".order");
    auto exponents = get_int_list(s["exponents"], where + ".exponents");
    auto entries = parse_entries(s["diamond"], where + ".diamond");
    std::string label = s.contains("label") ? get_string(s["label"], where + ".label") : "";
    std::int64_t count = s.contains("count") ? get_int(s["count"], where + ".count") : 1;
    if (count < 1) fail(ErrorKind::Parse, where + ".count: must be a positive integer");
    if (count > 1'000'000) fail(ErrorKind::Parse, where + ".count: too large");
    const auto zeros = std::count(exponents.begin(), exponents.end(), std::int64_t{0});
    auto component = [&] {
      try {
        return InertiaComponent(order, std::move(exponents),
                                HodgeDiamond(static_cast<int>(zeros), std::move(entries)),
                                std::move(label));
      } catch (const Error& e) {
        fail(e.kind(), where + ": " + e.what());
      }
    }();
    for (std::int64_t i = 0; i < count; ++i) sectors.push_back(component);
  }
  return OrbifoldPresentation(dim, std::move(sectors), name);
}

inline OrbifoldPresentation parse_generator(const Json& doc, const std::string& name) {
  const auto family = get_string(doc["family"], "family");
  const auto& params = doc["params"];
  if (family == "projective_quotient") {
    expect_fields(params, "params", {"proj_dim", "cyclic_orders", "weights"}, {"max_group_order"});
    ProjectiveQuotientSpec spec;
    spec.name = name;
    spec.proj_dim = get_small_int(params["proj_dim"], "params.proj_dim");
    spec.cyclic_orders = get_int_list(params["cyclic_orders"], "params.cyclic_orders");
    for (const auto& row : get_array(params["weights"], "params.weights"))
      spec.weights.push_back(get_int_list(row, "params.weights"));
    if (params.contains("max_group_order"))
      spec.max_group_order = get_int(params["max_group_order"], "params.max_group_order");
    return build_projective_quotient(spec);
  }
  if (family == "kummer") {
    expect_fields(params, "params", {"torus_dim"});
    return build_kummer({get_small_int(params["torus_dim"], "params.torus_dim"), name});
  }
  fail(ErrorKind::Parse, "family: unknown generator '" + family + "'");
}

}  // namespace detail

/// Parses "i:v,i:v,...". When no negative index is given the columns are
/// mirrored (c_{-i} = c_i); otherwise they are taken as written.
inline ColumnVector parse_columns_spec(std::string_view text, int dim) {
  if (dim < 0) fail(ErrorKind::InvalidArgument, "negative dimension");
  std::vector<std::pair<int, std::int64_t>> pairs;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      fail(ErrorKind::Parse, "column item '" + item + "' is not of the form i:v");
    auto integer = [&](std::string_view part) {
      while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
      while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
        fail(ErrorKind::Parse, "column item '" + item + "' must be two integers i:v");
      return value;
    };
    const std::string_view view(item);
    const auto i = integer(view.substr(0, colon));
    const auto v = integer(view.substr(colon + 1));
    if (i < -dim || i > dim)
      fail(ErrorKind::Parse, "column index " + std::to_string(i) + " outside [-" +
                                 std::to_string(dim) + "," + std::to_string(dim) + "]");
    pairs.emplace_back(static_cast<int>(i), v);
  }
  if (pairs.empty()) fail(ErrorKind::Parse, "no column values given");
  ColumnVector c(dim);
  const bool mirror =
      std::none_of(pairs.begin(), pairs.end(), [](const auto& pr) { return pr.first < 0; });
  std::vector<bool> seen(2 * static_cast<std::size_t>(dim) + 1, false);
  for (auto [i, v] : pairs) {
    if (seen[static_cast<std::size_t>(i + dim)])
      fail(ErrorKind::Parse, "column index " + std::to_string(i) + " given twice");
    seen[static_cast<std::size_t>(i + dim)] = true;
    c.set(i, v);
    if (mirror) c.set(-i, v);
  }
  return c;
}

inline Document parse_document(const Json& doc) {
  if (!doc.is_object()) fail(ErrorKind::Parse, "document must be a single JSON object");
  std::string name;
  std::string description;
  if (doc.contains("description")) description = detail::get_string(doc["description"], "description");

  auto content = [&]() -> std::variant<OrbifoldPresentation, HodgeDiamond, ColumnsFixture> {
    if (doc.contains("family")) {
      detail::expect_fields(doc, "document", {"family", "params"}, {"name", "description"});
      name = doc.contains("name") ? detail::get_string(doc["name"], "name")
                                      : detail::get_string(doc["family"], "family");
      return detail::parse_generator(doc, name);
    } else if (doc.contains("sectors")) {
      detail::expect_fields(doc, "document", {"name", "dim", "sectors"}, {"description"});
      name = detail::get_string(doc["name"], "name");
      return detail::parse_sectors(doc, name);
    } else if (doc.contains("entries")) {
      detail::expect_fields(doc, "document", {"name", "dim", "entries"}, {"level", "description"});
      name = detail::get_string(doc["name"], "name");
      std::optional<std::int64_t> level;
      if (doc.contains("level")) level = detail::get_int(doc["level"], "level");
      return HodgeDiamond(detail::get_small_int(doc["dim"], "dim"),
                          detail::parse_entries(doc["entries"], "entries"), level);
    } else if (doc.contains("columns")) {
      detail::expect_fields(doc, "document", {"name", "dim", "columns"}, {"h01", "description"});
      name = detail::get_string(doc["name"], "name");
      const int dim = detail::get_small_int(doc["dim"], "dim");
      const auto& cols = doc["columns"];
      if (!cols.is_object()) fail(ErrorKind::Parse, "columns: expected an object of \"i\": v pairs");
      std::string spec;
      for (auto it = cols.begin(); it != cols.end(); ++it) {
        spec += (spec.empty() ? "" : ",") + it.key() + ":" +
                std::to_string(detail::get_int(it.value(), "columns." + it.key()));
      }
      ColumnsFixture fixture{parse_columns_spec(spec, dim), std::nullopt};
      if (doc.contains("h01")) fixture.h01 = detail::get_int(doc["h01"], "h01");
      return fixture;
    } else {
      fail(ErrorKind::Parse, "document has none of 'sectors', 'family', 'entries', 'columns'");
    }
  }();
  return Document{std::move(name), std::move(description), std::move(content)};
}

inline Json parse_json_text(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse, std::string(origin) + ": " + e.what());
  }
}

inline Document parse_document_text(std::string_view text, std::string_view origin = "<input>") {
  return parse_document(parse_json_text(text, origin));
}

inline Document load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document_text(buffer.str(), path);
}

/// The diamond a document describes: assembled for presentations,
/// reconstructed for column fixtures.
inline HodgeDiamond resolve_diamond(const Document& doc) {
  struct Visitor {
    HodgeDiamond operator()(const OrbifoldPresentation& p) const { return assemble_diamond(p); }
    HodgeDiamond operator()(const HodgeDiamond& d) const { return d; }
    HodgeDiamond operator()(const ColumnsFixture& f) const {
      return reconstruct_gorenstein(f.columns, f.h01);
    }
  };
  return std::visit(Visitor{}, doc.content);
}

// ---------------------------------------------------------------------------
// Serialization. Output uses insertion-ordered objects so that the printed
// key order is stable and readable.

inline OrderedJson grade_json(const Grade& g) {
  if (is_integral(g)) return OrderedJson(g.numerator());
  return OrderedJson(format_grade(g));
}

inline OrderedJson entries_json(const HodgeDiamond::Entries& entries) {
  auto list = OrderedJson::array();
  for (const auto& [key, h] : entries) {
    OrderedJson e;
    e["p"] = grade_json(key.first);
    e["q"] = grade_json(key.second);
    e["h"] = h;
    list.push_back(std::move(e));
  }
  return list;
}

inline OrderedJson diamond_json(const HodgeDiamond& d, const std::string& name) {
  OrderedJson out;
  out["name"] = name;
  out["dim"] = d.dim();
  out["level"] = d.level();
  out["entries"] = entries_json(d.entries());
  return out;
}

/// Canonical inertia-data document: sectors sorted by (order, exponents,
/// label), runs of identical sectors folded into "count".
inline OrderedJson presentation_json(const OrbifoldPresentation& p) {
  OrderedJson out;
  out["name"] = p.name();
  out["dim"] = p.dim();
  auto sectors = OrderedJson::array();
  const auto sorted = p.sorted_components();
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const auto& c = sorted[i];
    OrderedJson s;
    s["order"] = c.order();
    s["exponents"] = c.exponents();
    s["diamond"] = entries_json(c.coarse_diamond().entries());
    if (j - i > 1) s["count"] = j - i;
    if (!c.label().empty()) s["label"] = c.label();
    sectors.push_back(std::move(s));
    i = j;
  }
  out["sectors"] = std::move(sectors);
  return out;
}

inline std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

}  // namespace orbikit::io
