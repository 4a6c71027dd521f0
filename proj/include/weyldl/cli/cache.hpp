#pragma once

// On-disk character-table cache. One JSON file per
// (type, rank, central_rank, schema_version); all numbers are decimal
// strings. A cache entry is only trusted after it matches the freshly
// computed classes and passes every table integrity check.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include <unistd.h>

#include "weyldl/chars.hpp"
#include "weyldl/rootsys.hpp"

namespace weyldl::cli {

inline constexpr int kCacheSchemaVersion = 1;

struct TableCacheEntry {
  TypeLabel type = TypeLabel::A;
  int rank = 0;
  int central_rank = 0;
  int schema_version = kCacheSchemaVersion;
  std::vector<std::string> class_words;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::vector<std::int64_t>> values;  // [irreducible][class], canonical order

  friend bool operator==(const TableCacheEntry&, const TableCacheEntry&) = default;
};

inline TableCacheEntry make_entry(const CartanDatum& cartan, const CharacterTable& table) {
  TableCacheEntry e;
  e.type = cartan.type_label;
  e.rank = cartan.rank;
  e.central_rank = cartan.central_rank;
  const auto& g = *table.group;
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    e.class_words.push_back(g.group.weyl().word_string(g.representative(c)));
    e.class_sizes.push_back(g.classes.sizes[c]);
  }
  e.values = table.values;
  return e;
}

inline nlohmann::ordered_json to_json(const TableCacheEntry& e) {
  nlohmann::ordered_json j;
  j["schema_version"] = std::to_string(e.schema_version);
  j["fingerprint"] = {{"type", std::string(1, to_char(e.type))},
                      {"rank", std::to_string(e.rank)},
                      {"central_rank", std::to_string(e.central_rank)}};
  auto classes = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < e.class_words.size(); ++c) {
    classes.push_back({{"representative", e.class_words[c]}, {"size", std::to_string(e.class_sizes[c])}});
  }
  j["classes"] = std::move(classes);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : e.values) {
    auto r = nlohmann::ordered_json::array();
    for (auto v : row) r.push_back(std::to_string(v));
    rows.push_back(std::move(r));
  }
  j["table"] = std::move(rows);
  return j;
}

namespace detail {

template <typename T>
T parse_decimal(const nlohmann::ordered_json& j) {
  const std::string& s = j.get_ref<const std::string&>();
  std::size_t used = 0;
  long long v = std::stoll(s, &used);
  if (used != s.size() || s.empty()) throw std::invalid_argument("not a decimal integer: " + s);
  return static_cast<T>(v);
}

}  // namespace detail

/// Throws on any structural problem.
inline TableCacheEntry entry_from_json(const nlohmann::ordered_json& j) {
  TableCacheEntry e;
  e.schema_version = detail::parse_decimal<int>(j.at("schema_version"));
  const auto& fp = j.at("fingerprint");
  e.type = parse_type_label(fp.at("type").get<std::string>());
  e.rank = detail::parse_decimal<int>(fp.at("rank"));
  e.central_rank = detail::parse_decimal<int>(fp.at("central_rank"));
  for (const auto& c : j.at("classes")) {
    e.class_words.push_back(c.at("representative").get<std::string>());
    e.class_sizes.push_back(detail::parse_decimal<std::uint64_t>(c.at("size")));
  }
  for (const auto& row : j.at("table")) {
    std::vector<std::int64_t> r;
    for (const auto& v : row) r.push_back(detail::parse_decimal<std::int64_t>(v));
    e.values.push_back(std::move(r));
  }
  return e;
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, TypeLabel type, int rank, int central_rank) {
  return dir / (std::string(1, to_char(type)) + std::to_string(rank) + "_c" + std::to_string(central_rank) + "_v" +
                std::to_string(kCacheSchemaVersion) + ".json");
}

/// Write-temp-then-rename. Returns false (with a reason) instead of throwing.
inline bool save_entry(const std::filesystem::path& dir, const TableCacheEntry& e, std::string* why = nullptr) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto target = cache_path(dir, e.type, e.rank, e.central_rank);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      if (why) *why = "cannot write " + tmp.string();
      return false;
    }
    out << to_json(e).dump(1) << '\n';
    if (!out) {
      if (why) *why = "short write to " + tmp.string();
      return false;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    if (why) *why = "cannot rename into " + target.string();
    return false;
  }
  return true;
}

/// Reads the entry for the fingerprint. A missing file is a silent miss;
/// an unreadable, malformed or mismatched file is a miss with a warning.
inline std::optional<TableCacheEntry> load_entry(const std::filesystem::path& dir, TypeLabel type, int rank, int central_rank,
                                                 std::string* warning = nullptr) {
  const auto path = cache_path(dir, type, rank, central_rank);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  try {
    std::stringstream buf;
    buf << in.rdbuf();
    auto e = entry_from_json(nlohmann::ordered_json::parse(buf.str()));
    if (e.schema_version != kCacheSchemaVersion || e.type != type || e.rank != rank || e.central_rank != central_rank) {
      if (warning) *warning = "cache entry " + path.string() + " has a mismatched fingerprint; recomputing";
      return std::nullopt;
    }
    return e;
  } catch (const std::exception& ex) {
    if (warning) *warning = "cache entry " + path.string() + " is corrupt (" + ex.what() + "); recomputing";
    return std::nullopt;
  }
}

/// Rebuilds a table from an entry, provided it describes exactly the given
/// group's classes and is a sound character table.
inline std::optional<CharacterTable> table_from_entry(const TableCacheEntry& e, const GroupHandle& group, std::string* why = nullptr) {
  const auto& g = *group;
  if (e.class_words.size() != g.num_classes() || e.class_sizes.size() != g.num_classes()) {
    if (why) *why = "class count mismatch";
    return std::nullopt;
  }
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    if (e.class_words[c] != g.group.weyl().word_string(g.representative(c)) || e.class_sizes[c] != g.classes.sizes[c]) {
      if (why) *why = "class data mismatch at class " + std::to_string(c);
      return std::nullopt;
    }
  }
  CharacterTable t{group, e.values, {}, std::nullopt};
  for (const auto& row : e.values) {
    if (row.empty()) {
      if (why) *why = "empty row";
      return std::nullopt;
    }
    t.degrees.push_back(row[0]);
  }
  if (auto bad = table_violations(t); !bad.empty()) {
    if (why) *why = bad.front();
    return std::nullopt;
  }
  auto canonical = t;
  canonicalize(canonical);
  if (canonical.values != t.values) {
    if (why) *why = "rows are not in canonical order";
    return std::nullopt;
  }
  return t;
}

}  // namespace weyldl::cli
