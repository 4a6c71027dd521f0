#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "weyldl/error.hpp"

namespace weyldl::cli {

enum class OutputFormat { json, csv, text };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw InvalidType("unknown output format '" + s + "'; accepted: json, csv, text");
}

/// $XDG_CACHE_HOME/weyl-dl, else ~/.cache/weyl-dl, else ./.weyl-dl-cache.
inline std::filesystem::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "weyl-dl";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "weyl-dl";
  return ".weyl-dl-cache";
}

struct Config {
  std::uint64_t max_group_order = 2'000'000;
  std::uint64_t rng_seed = 0;
  std::filesystem::path cache_dir = default_cache_dir();
  OutputFormat output_format = OutputFormat::text;

  void validate() const {
    if (max_group_order < 2) throw InvalidType("max_group_order must be at least 2");
  }
};

}  // namespace weyldl::cli
