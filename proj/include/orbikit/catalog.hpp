#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "orbikit/error.hpp"
#include "orbikit/io.hpp"

namespace orbikit {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string text;    // JSON document
  std::string source;  // "builtin" or the file path
};

inline const std::vector<CatalogEntry>& builtin_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"kummer2", "Kummer surface A/{+-1}, n = 2: orbifold diamond is the K3 diamond",
       R"({"name": "kummer2", "family": "kummer", "params": {"torus_dim": 2}})", "builtin"},
      {"kummer3", "Kummer threefold A/{+-1}, n = 3: non-Gorenstein, 64 sectors at grade (3/2,3/2)",
       R"({"name": "kummer3", "family": "kummer", "params": {"torus_dim": 3}})", "builtin"},
      {"p2_mu3", "P^2 / (Z/3) with weights (0,1,2): Gorenstein, matches the A2-resolution diamond",
       R"({"name": "p2_mu3", "family": "projective_quotient",
           "params": {"proj_dim": 2, "cyclic_orders": [3], "weights": [[0, 1, 2]]}})",
       "builtin"},
      {"pn_trivial", "P^2 with the trivial group: untwisted sector only",
       R"({"name": "pn_trivial", "family": "projective_quotient",
           "params": {"proj_dim": 2, "cyclic_orders": [], "weights": []}})",
       "builtin"},
      {"quintic_columns", "Hochschild columns of a quintic threefold with h01 = 0 (reconstruction fixture)",
       R"({"name": "quintic_columns", "dim": 3,
           "columns": {"3": 1, "2": 0, "1": 101, "0": 4}, "h01": 0})",
       "builtin"},
  };
  return entries;
}

/// Built-in entries followed by every *.json file in ORBIKIT_CATALOG_DIR
/// (sorted by file name). A user entry never shadows a built-in name.
inline std::vector<CatalogEntry> catalog_entries() {
  auto out = builtin_entries();
  const char* dir = std::getenv("ORBIKIT_CATALOG_DIR");
  if (dir == nullptr || *dir == '\0') return out;
  std::error_code ec;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const auto name = path.stem().string();
    if (std::any_of(out.begin(), out.end(), [&](const auto& e) { return e.name == name; })) continue;
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string description;
    try {
      auto json = io::Json::parse(buffer.str());
      if (json.is_object() && json.contains("description") && json["description"].is_string())
        description = json["description"].get<std::string>();
    } catch (const io::Json::exception&) {
      description = "(unparseable)";
    }
    out.push_back({name, description, buffer.str(), path.string()});
  }
  return out;
}

inline const CatalogEntry* find_catalog_entry(const std::vector<CatalogEntry>& entries,
                                              std::string_view name) {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

inline io::Document load_catalog_entry(std::string_view name) {
  const auto entries = catalog_entries();
  const auto* entry = find_catalog_entry(entries, name);
  if (entry == nullptr)
    fail(ErrorKind::UnknownCatalogEntry, "unknown catalog entry '" + std::string(name) + "'");
  auto doc = io::parse_document_text(entry->text, entry->source + ":" + entry->name);
  if (doc.description.empty()) doc.description = entry->description;
  return doc;
}

/// A readable file path wins; otherwise the argument names a catalog entry.
inline io::Document load_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return io::load_document_file(arg);
  const bool looks_like_path = arg.find('/') != std::string::npos ||
                               (arg.size() > 5 && arg.ends_with(".json"));
  if (looks_like_path) fail(ErrorKind::Parse, "cannot open '" + arg + "'");
  return load_catalog_entry(arg);
}

}  // namespace orbikit
