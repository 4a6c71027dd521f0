#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "weyldl/cli/commands.hpp"

namespace {

using namespace weyldl;
using namespace weyldl::cli;

int parse_rank(const std::string& s) {
  std::size_t used = 0;
  int r = 0;
  try {
    r = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InvalidType("rank must be an integer, got '" + s + "'");
  return r;
}

int emit(const CommandResult& res) {
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << res.output << std::flush;
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyl group character tables and the Deligne-Lusztig operator on K_0(Rep W)", "weyl-dl"};
  app.require_subcommand(1);

  Config config;
  std::string format = "text";
  std::string cache_dir = config.cache_dir.string();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", cache_dir, "Character-table cache directory");
  app.add_option("--seed", config.rng_seed, "Seed for eigenspace splitting");
  app.add_option("--max-order", config.max_group_order, "Largest group order to enumerate");

  std::string type;
  std::string rank;
  auto* table = app.add_subcommand("table", "Print the character table of W");
  table->add_option("type", type, "Type label A-G")->required();
  table->add_option("rank", rank, "Rank")->required();
  auto* dl = app.add_subcommand("dl", "Print the DL permutation of Irr(W) and its pairing");
  dl->add_option("type", type, "Type label A-G")->required();
  dl->add_option("rank", rank, "Rank")->required();
  auto* verify = app.add_subcommand("verify", "Run the invariant suite for one type or 'all'");
  verify->add_option("type", type, "Type label A-G, or 'all'")->required();
  verify->add_option("rank", rank, "Rank");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    config.output_format = parse_format(format);
    config.cache_dir = cache_dir;
    config.validate();
    if (*table) return emit(cmd_table(parse_type_label(type), parse_rank(rank), config));
    if (*dl) return emit(cmd_dl(parse_type_label(type), parse_rank(rank), config));
    if (type == "all") {
      if (!rank.empty()) throw InvalidType("'verify all' takes no rank");
      return emit(cmd_verify(std::nullopt, config));
    }
    if (rank.empty()) throw InvalidType("verify needs <TYPE> <RANK> or 'all'");
    return emit(cmd_verify(std::make_pair(parse_type_label(type), parse_rank(rank)), config));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}
