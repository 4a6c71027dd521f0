#pragma once

// The three CLI commands as pure functions of (arguments, Config). Output
// goes to CommandResult::output; warnings are kept apart so that stdout
// stays byte-identical across runs.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "weyldl/cli/cache.hpp"
#include "weyldl/cli/config.hpp"
#include "weyldl/dl.hpp"
#include "weyldl/verify.hpp"

namespace weyldl::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInvalidInput = 2, kResourceLimit = 3 };

struct CommandResult {
  std::string output;
  int exit_code = kSuccess;
  std::vector<std::string> warnings;
};

/// Enumerates W and its classes, then takes the character table from the
/// cache when a sound entry exists, otherwise computes and stores it.
inline WeylContext obtain_context(const CartanDatum& cartan, const Config& config, std::vector<std::string>& warnings) {
  config.validate();
  auto weyl = enumerate_group(cartan, config.max_group_order);
  auto group = whole_group(weyl, cartan.name());

  std::optional<CharacterTable> table;
  std::string warning;
  if (auto entry = load_entry(config.cache_dir, cartan.type_label, cartan.rank, cartan.central_rank, &warning)) {
    std::string why;
    table = table_from_entry(*entry, group, &why);
    if (!table) warnings.push_back("cache entry for " + cartan.name() + " rejected (" + why + "); recomputing");
  } else if (!warning.empty()) {
    warnings.push_back(warning);
  }
  if (!table) {
    table = character_table(group, TableOptions{config.rng_seed});
    std::string why;
    if (!save_entry(config.cache_dir, make_entry(cartan, *table), &why)) warnings.push_back("cache not written: " + why);
  }
  return make_context(cartan, std::move(weyl), std::move(group), std::move(*table));
}

namespace detail {

using Json = nlohmann::ordered_json;

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string status(bool passed) { return passed ? "pass" : "fail"; }

/// Top-level JSON document: "cartan", "classes", "irreducibles", "checks".
struct Document {
  Json cartan = Json::array();
  Json classes = Json::array();
  Json irreducibles = Json::array();
  Json checks = Json::array();
  std::optional<std::string> convention;

  std::string dump() const {
    Json j;
    j["cartan"] = cartan;
    j["classes"] = classes;
    j["irreducibles"] = irreducibles;
    j["checks"] = checks;
    if (convention) j["convention"] = *convention;
    return j.dump(2) + "\n";
  }
};

inline void add_group(Document& doc, const WeylContext& ctx) {
  Json matrix = Json::array();
  for (const auto& row : ctx.cartan.cartan_matrix) {
    Json r = Json::array();
    for (int v : row) r.push_back(std::to_string(v));
    matrix.push_back(std::move(r));
  }
  doc.cartan.push_back({{"group", ctx.cartan.name()},
                        {"type", std::string(1, to_char(ctx.cartan.type_label))},
                        {"rank", std::to_string(ctx.cartan.rank)},
                        {"central_rank", std::to_string(ctx.cartan.central_rank)},
                        {"order", std::to_string(ctx.weyl->order())},
                        {"matrix", std::move(matrix)}});
  const auto& g = *ctx.group;
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    doc.classes.push_back({{"group", ctx.cartan.name()},
                           {"index", std::to_string(c)},
                           {"representative", ctx.weyl->word_string(g.representative(c))},
                           {"size", std::to_string(g.classes.sizes[c])}});
  }
}

inline Json irreducible_json(const WeylContext& ctx, std::size_t i) {
  Json values = Json::array();
  for (auto v : ctx.table.values[i]) values.push_back(std::to_string(v));
  return Json{{"group", ctx.cartan.name()},
              {"index", std::to_string(i)},
              {"label", ctx.table.display_label(i)},
              {"degree", std::to_string(ctx.table.degrees[i])},
              {"values", std::move(values)}};
}

inline void add_checks(Document& doc, const std::string& group, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    Json violations = Json::array();
    for (const auto& v : c.violations) violations.push_back(v);
    doc.checks.push_back({{"group", group},
                          {"name", c.name},
                          {"status", status(c.passed)},
                          {"cases", std::to_string(c.cases)},
                          {"violations", std::move(violations)}});
  }
}

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline std::string springer_convention(const WeylContext& ctx) {
  if (ctx.cartan.type_label == TypeLabel::A) {
    return "type A labels are partitions of " + std::to_string(ctx.rank() + 1) + "; the trivial character is (" +
           std::to_string(ctx.rank() + 1) + ")";
  }
  return "labels are deg<d>#<k>: the k-th irreducible of degree d in canonical order";
}

}  // namespace detail

inline CommandResult cmd_table(TypeLabel type, int rank, const Config& config) {
  CommandResult res;
  const auto ctx = obtain_context(build_cartan(type, rank), config, res.warnings);
  const auto& g = *ctx.group;
  std::ostringstream out;
  switch (config.output_format) {
    case OutputFormat::json: {
      detail::Document doc;
      detail::add_group(doc, ctx);
      for (std::size_t i = 0; i < ctx.table.size(); ++i) doc.irreducibles.push_back(detail::irreducible_json(ctx, i));
      out << doc.dump();
      break;
    }
    case OutputFormat::csv: {
      out << "irreducible";
      for (std::size_t c = 0; c < g.num_classes(); ++c) out << ',' << detail::csv_field(ctx.weyl->word_string(g.representative(c)));
      out << '\n';
      for (std::size_t i = 0; i < ctx.table.size(); ++i) {
        out << detail::csv_field(ctx.table.display_label(i));
        for (auto v : ctx.table.values[i]) out << ',' << v;
        out << '\n';
      }
      break;
    }
    case OutputFormat::text: {
      out << "W(" << ctx.cartan.name() << "): order " << ctx.weyl->order() << ", " << g.num_classes() << " classes\n";
      out << "classes:\n";
      for (std::size_t c = 0; c < g.num_classes(); ++c) {
        out << "  " << detail::pad(std::to_string(c), 4) << detail::pad(ctx.weyl->word_string(g.representative(c)), 24)
            << "size " << g.classes.sizes[c] << '\n';
      }
      out << "characters:\n";
      for (std::size_t i = 0; i < ctx.table.size(); ++i) {
        out << "  " << detail::pad(ctx.table.display_label(i), 16);
        for (auto v : ctx.table.values[i]) out << ' ' << detail::pad(std::to_string(v), 4);
        out << '\n';
      }
      break;
    }
  }
  res.output = out.str();
  return res;
}

inline CommandResult cmd_dl(TypeLabel type, int rank, const Config& config) {
  CommandResult res;
  const auto ctx = obtain_context(build_cartan(type, rank), config, res.warnings);
  const auto twist = verify_sign_twist(ctx);
  const std::vector<CheckResult> checks{twist.check, verify_involution(ctx)};
  std::vector<std::pair<SpringerLabel, SpringerLabel>> pairs;
  for (std::size_t i = 0; i < ctx.table.size(); ++i) {
    const std::size_t j = twist.permutation[i];
    pairs.emplace_back(SpringerLabel{i, ctx.table.display_label(i)}, SpringerLabel{j, ctx.table.display_label(j)});
  }
  std::ostringstream out;
  switch (config.output_format) {
    case OutputFormat::json: {
      detail::Document doc;
      doc.convention = detail::springer_convention(ctx);
      detail::add_group(doc, ctx);
      for (std::size_t i = 0; i < ctx.table.size(); ++i) {
        auto j = detail::irreducible_json(ctx, i);
        j["dl_image"] = pairs[i].second.display;
        j["dl_image_index"] = std::to_string(pairs[i].second.irr_index);
        doc.irreducibles.push_back(std::move(j));
      }
      detail::add_checks(doc, ctx.cartan.name(), checks);
      out << doc.dump();
      break;
    }
    case OutputFormat::csv: {
      out << "group,irreducible,dl_image\n";
      for (const auto& [a, b] : pairs) out << ctx.cartan.name() << ',' << detail::csv_field(a.display) << ',' << detail::csv_field(b.display) << '\n';
      break;
    }
    case OutputFormat::text: {
      out << "# convention: " << detail::springer_convention(ctx) << '\n';
      out << "DL on Irr(W(" << ctx.cartan.name() << ")):\n";
      for (const auto& [a, b] : pairs) out << "  " << detail::pad(a.display, 16) << " -> " << b.display << '\n';
      out << "pairing: " << render_pairing(pairs) << '\n';
      for (const auto& c : checks) out << detail::status(c.passed) << "  " << c.name << " (" << c.cases << " cases)\n";
      break;
    }
  }
  res.output = out.str();
  if (!detail::all_passed(checks)) res.exit_code = kVerificationFailure;
  return res;
}

/// Runs the invariant suite for one type, or for the whole roster when
/// target is empty.
inline CommandResult cmd_verify(std::optional<std::pair<TypeLabel, int>> target, const Config& config) {
  CommandResult res;
  std::vector<std::pair<TypeLabel, int>> roster;
  if (target) {
    roster.push_back(*target);
  } else {
    roster = supported_roster();
  }
  detail::Document doc;
  std::ostringstream csv;
  std::ostringstream text;
  csv << "group,check,status,cases,first_violation\n";
  bool ok = true;
  for (const auto& [type, rank] : roster) {
    const auto ctx = obtain_context(build_cartan(type, rank), config, res.warnings);
    SuiteOptions opts;
    opts.table.seed = config.rng_seed;
    const auto checks = run_suite(ctx, opts);
    ok = ok && detail::all_passed(checks);
    detail::add_group(doc, ctx);
    detail::add_checks(doc, ctx.cartan.name(), checks);
    for (const auto& c : checks) {
      csv << ctx.cartan.name() << ',' << detail::csv_field(c.name) << ',' << detail::status(c.passed) << ',' << c.cases << ','
          << detail::csv_field(c.violations.empty() ? "" : c.violations.front()) << '\n';
      text << detail::pad(detail::status(c.passed), 6) << detail::pad(ctx.cartan.name(), 5) << detail::pad(c.name, 28) << c.cases
           << " cases\n";
      for (const auto& v : c.violations) text << "        " << v << '\n';
    }
  }
  switch (config.output_format) {
    case OutputFormat::json: res.output = doc.dump(); break;
    case OutputFormat::csv: res.output = csv.str(); break;
    case OutputFormat::text: res.output = text.str() + (ok ? "all checks passed\n" : "VERIFICATION FAILED\n"); break;
  }
  res.exit_code = ok ? kSuccess : kVerificationFailure;
  return res;
}

/// Maps engine errors to process exit codes.
inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SizeLimit*>(&e)) return kResourceLimit;
  if (dynamic_cast<const InvalidType*>(&e) || dynamic_cast<const NonFinite*>(&e)) return kInvalidInput;
  return kVerificationFailure;
}

}  // namespace weyldl::cli
