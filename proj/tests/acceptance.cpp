// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "support.hpp"
#include "weyldl/cli/commands.hpp"

namespace {

using namespace weyldl;
using weyldl::testing::context;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

Outcome sign_twist() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::size_t n = 0;
  for (auto [t, r] : supported_roster()) {
    const auto& ctx = context(t, r);
    const auto sgn = decompose(sign(ctx.group), ctx.table);
    for (std::size_t i = 0; i < ctx.table.size(); ++i, ++n) {
      out.require(dl_operator(ctx, ctx.table.unit(i)) == tensor(sgn, ctx.table.unit(i), ctx.table),
                  ctx.cartan.name() + " irreducible " + ctx.table.display_label(i));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < 300.0, "took " + std::to_string(secs) + " s");
  if (out.passed) out.detail = std::to_string(n) + " irreducibles over 12 types in " + std::to_string(secs) + " s";
  return out;
}

Outcome involution() {
  Outcome out;
  for (auto [t, r] : supported_roster()) {
    const auto& ctx = context(t, r);
    const auto m = dl_matrix(ctx);
    out.require(is_identity(multiply(m, m)), ctx.cartan.name());
  }
  if (out.passed) out.detail = "DL^2 = Id on all 12 types";
  return out;
}

Outcome springer() {
  Outcome out;
  std::size_t n = 0;
  for (int r = 1; r <= 5; ++r) {
    const auto& ctx = context(TypeLabel::A, r);
    std::vector<Partition> types;
    for (std::size_t c = 0; c < ctx.group->num_classes(); ++c) {
      types.push_back(cycle_type(weyldl::testing::points_permutation(*ctx.weyl, ctx.group->representative(c))));
    }
    auto oracle_row = [&](const Partition& l) {
      std::vector<std::int64_t> row;
      for (const auto& mu : types) row.push_back(weyldl::testing::frobenius_character(l, mu));
      return row;
    };
    // Identify each irreducible by its oracle row, then check DL sends it to
    // the row of the transpose partition.
    for (const auto& lambda : partitions_of(r + 1)) {
      const auto row = oracle_row(lambda);
      const auto it = std::find(ctx.table.values.begin(), ctx.table.values.end(), row);
      out.require(it != ctx.table.values.end(), "A" + std::to_string(r) + " has no row for " + partition_string(lambda));
      if (it == ctx.table.values.end()) continue;
      const auto i = static_cast<std::size_t>(it - ctx.table.values.begin());
      const auto image = unit_index(dl_operator(ctx, ctx.table.unit(i)));
      out.require(image && ctx.table.values[*image] == oracle_row(transpose(lambda)),
                  "A" + std::to_string(r) + " " + partition_string(lambda));
      ++n;
    }
  }
  if (out.passed) out.detail = std::to_string(n) + " partitions in A1..A5 pair with their transposes";
  return out;
}

Outcome table_integrity() {
  Outcome out;
  for (auto [t, r] : supported_roster()) {
    const auto& ctx = context(t, r);
    const auto bad = table_violations(ctx.table);
    out.require(bad.empty(), ctx.cartan.name() + ": " + (bad.empty() ? "" : bad.front()));
    Integer sum = 0;
    for (auto d : ctx.table.degrees) sum += Integer(d) * d;
    out.require(sum == Integer(ctx.weyl->order()), ctx.cartan.name() + " sum of squared degrees");
    out.require(Integer(ctx.weyl->order()) == order_from_degrees(t, r), ctx.cartan.name() + " |W| vs degree product");
    // Orthogonality of columns, restated here from the raw integer table.
    for (std::size_t a = 0; a < ctx.table.size(); ++a) {
      for (std::size_t b = 0; b < ctx.table.size(); ++b) {
        Integer s = 0;
        for (std::size_t i = 0; i < ctx.table.size(); ++i) s += Integer(ctx.table.values[i][a]) * ctx.table.values[i][b];
        const Integer expected = a == b ? Integer(ctx.weyl->order() / ctx.group->classes.sizes[a]) : Integer(0);
        out.require(s == expected, ctx.cartan.name() + " column orthogonality");
      }
    }
  }
  if (out.passed) out.detail = "orthogonality, sum deg^2 = |W| = prod d_i on all 12 types";
  return out;
}

Outcome frobenius() {
  Outcome out;
  std::size_t cases = 0;
  for (auto [t, r] : supported_roster()) {
    if (r > 4) continue;
    const auto res = check_frobenius(context(t, r), {});
    cases += res.cases;
    out.require(res.passed, res.name + (res.violations.empty() ? "" : ": " + res.violations.front()));
  }
  if (out.passed) out.detail = std::to_string(cases) + " (I, chi, psi) cases, rank <= 4";
  return out;
}

Outcome checked(const std::string& label, const std::function<CheckResult(const WeylContext&)>& f, int max_rank) {
  Outcome out;
  std::size_t cases = 0;
  for (auto [t, r] : supported_roster()) {
    if (r > max_rank) continue;
    const auto res = f(context(t, r));
    cases += res.cases;
    out.require(res.passed, res.name + (res.violations.empty() ? "" : ": " + res.violations.front()));
  }
  if (out.passed) out.detail = std::to_string(cases) + " " + label + " cases, rank <= " + std::to_string(max_rank);
  return out;
}

Outcome ledger() {
  Outcome out;
  std::size_t cases = 0;
  for (int s = 0; s <= 6; ++s) {
    const auto res = check_ledgers(s, 3);
    cases += res.cases;
    out.require(res.passed, res.name);
  }
  if (out.passed) out.detail = std::to_string(cases) + " layers, central rank <= 3, |S| <= 6";
  return out;
}

Outcome determinism() {
  Outcome out;
  std::random_device rd;
  const auto dir = std::filesystem::temp_directory_path() / ("weyl-dl-acceptance-" + std::to_string(rd()));
  cli::Config cfg;
  cfg.cache_dir = dir;
  cfg.output_format = cli::OutputFormat::json;
  const auto first = cli::cmd_verify(std::nullopt, cfg);
  const auto second = cli::cmd_verify(std::nullopt, cfg);
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
  out.require(first.exit_code == 0, "verify all exited " + std::to_string(first.exit_code));
  out.require(first.output == second.output, "outputs differ");
  if (out.passed) out.detail = std::to_string(first.output.size()) + " identical bytes";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sign-twist", sign_twist},
      {"involution", involution},
      {"springer-transpose", springer},
      {"table-integrity", table_integrity},
      {"frobenius", frobenius},
      {"mackey", [] { return checked("Mackey", [](const WeylContext& c) { return check_mackey(c, {}); }, 3); }},
      {"transitivity", [] { return checked("chain", [](const WeylContext& c) { return check_transitivity(c, {}); }, 3); }},
      {"parity-ledger", ledger},
      {"determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << " - " << o.detail << std::endl;
    if (!o.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
