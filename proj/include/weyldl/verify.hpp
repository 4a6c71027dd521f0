#pragma once

// The full invariant suite for one Weyl group, in a fixed order.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstring>
#include <string>
#include <vector>

#include "weyldl/chars.hpp"
#include "weyldl/dl.hpp"
#include "weyldl/indres.hpp"
#include "weyldl/partitions.hpp"

namespace weyldl {

struct SuiteOptions {
  TableOptions table;
  int mackey_max_rank = 3;
  int transitivity_max_rank = 3;
  int ledger_max_central_rank = 3;
};

inline CheckResult check_cartan(const CartanDatum& c) {
  CheckResult out{"cartan " + c.name(), true, 1, {}};
  if (auto why = cartan_violation(c); !why.empty()) out.fail(why);
  if (build_cartan(c.type_label, c.rank, c.central_rank).cartan_matrix != c.cartan_matrix) out.fail("matrix differs from the standard table");
  return out;
}

/// |W| against the degree product, BFS depth against inversion count,
/// faithfulness, w0 and the reflection count.
inline CheckResult check_group(const CartanDatum& c, const WeylGroup& w, const ClassedGroup& g) {
  CheckResult out{"group " + c.name(), true, 0, {}};
  ++out.cases;
  if (Integer(w.order()) != order_from_degrees(c.type_label, c.rank)) {
    out.fail("|W| = " + std::to_string(w.order()) + " but the degree product is " + order_from_degrees(c.type_label, c.rank).str());
  }
  const std::size_t nroots = w.root_system().roots.size();
  for (ElementId e = 0; e < w.order(); ++e) {
    ++out.cases;
    if (w.length(e) != w.inversions(e)) out.fail("length/inversion mismatch at " + w.word_string(e));
    if (e > 0 && std::memcmp(w.perm(e - 1), w.perm(e), nroots * sizeof(std::uint16_t)) == 0) out.fail("two elements share a root permutation");
  }
  const ElementId w0 = w.longest_element();
  ++out.cases;
  if (w.length(w0) != w.root_system().num_positive) out.fail("longest element has the wrong length");
  if (w.multiply(w0, w0) != w.identity()) out.fail("w0 is not an involution");
  std::vector<bool> reflection_class(g.num_classes(), false);
  for (ElementId s : w.generators()) reflection_class[g.class_of_element(s)] = true;
  std::size_t reflections = 0;
  for (std::size_t k = 0; k < g.num_classes(); ++k) {
    if (reflection_class[k]) reflections += g.classes.sizes[k];
  }
  if (reflections != w.root_system().num_positive) out.fail("reflection count differs from the number of positive roots");
  return out;
}

inline CheckResult check_table(const CharacterTable& t) {
  CheckResult out{"character-table " + t.group->name, true, 1, {}};
  for (auto& v : table_violations(t)) out.fail(std::move(v));
  return out;
}

inline CheckResult check_frobenius(const WeylContext& ctx, const TableOptions& opts) {
  CheckResult out{"frobenius " + ctx.cartan.name(), true, 0, {}};
  for (const auto& p : ctx.parabolics) out.merge(frobenius_check(p, ctx.table, character_table(p.sub, opts)));
  return out;
}

inline CheckResult check_mackey(const WeylContext& ctx, const TableOptions& opts) {
  CheckResult out{"mackey " + ctx.cartan.name(), true, 0, {}};
  for (const auto& pi : ctx.parabolics) {
    const auto table_i = character_table(pi.sub, opts);
    for (const auto& pj : ctx.parabolics) {
      for (std::size_t k = 0; k < table_i.size(); ++k) out.merge(mackey_check(pi, pj, table_i.character(k)));
    }
  }
  return out;
}

inline CheckResult check_transitivity(const WeylContext& ctx, const TableOptions& opts) {
  CheckResult out{"transitivity " + ctx.cartan.name(), true, 0, {}};
  for (unsigned j = 0; j < ctx.parabolics.size(); ++j) {
    const auto table_j = character_table(ctx.parabolics[j].sub, opts);
    for (unsigned i = 0; i < ctx.parabolics.size(); ++i) {
      if ((j & i) != j) continue;
      for (std::size_t k = 0; k < table_j.size(); ++k) {
        out.merge(transitivity_check(ctx.parabolics[j], ctx.parabolics[i], table_j.character(k)));
      }
    }
  }
  return out;
}

inline CheckResult check_ledgers(int sigma_size, int max_central_rank) {
  CheckResult out{"shift-parity |S|=" + std::to_string(sigma_size), true, 0, {}};
  for (int c = 0; c <= max_central_rank; ++c) out.merge(ledger_check(make_shift_ledger(c, sigma_size)));
  return out;
}

/// Type A only: the pairing sends every partition to its transpose.
inline CheckResult check_springer_transpose(const WeylContext& ctx) {
  CheckResult out{"springer-transpose " + ctx.cartan.name(), true, 0, {}};
  if (!ctx.table.labels) {
    out.fail("no partition labels attached");
    return out;
  }
  const auto& labels = *ctx.table.labels;
  for (const auto& [a, b] : springer_table(ctx)) {
    ++out.cases;
    if (labels[b.irr_index] != transpose(labels[a.irr_index])) out.fail(a.display + " pairs with " + b.display + ", not its transpose");
  }
  return out;
}

inline std::vector<CheckResult> run_suite(const WeylContext& ctx, const SuiteOptions& opts = {}) {
  std::vector<CheckResult> out;
  out.push_back(check_cartan(ctx.cartan));
  out.push_back(check_group(ctx.cartan, *ctx.weyl, *ctx.group));
  out.push_back(check_table(ctx.table));
  out.push_back(check_frobenius(ctx, opts.table));
  if (ctx.rank() <= opts.mackey_max_rank) out.push_back(check_mackey(ctx, opts.table));
  if (ctx.rank() <= opts.transitivity_max_rank) out.push_back(check_transitivity(ctx, opts.table));
  out.push_back(verify_sign_twist(ctx).check);
  out.push_back(verify_involution(ctx));
  out.push_back(verify_inverse(ctx));
  out.push_back(check_ledgers(ctx.rank(), opts.ledger_max_central_rank));
  if (ctx.cartan.type_label == TypeLabel::A) out.push_back(check_springer_transpose(ctx));
  return out;
}

/// Types exercised by `verify all`.
inline std::vector<std::pair<TypeLabel, int>> supported_roster() {
  return {{TypeLabel::A, 1}, {TypeLabel::A, 2}, {TypeLabel::A, 3}, {TypeLabel::A, 4}, {TypeLabel::A, 5},
          {TypeLabel::B, 2}, {TypeLabel::B, 3}, {TypeLabel::B, 4}, {TypeLabel::C, 3}, {TypeLabel::D, 4},
          {TypeLabel::G, 2}, {TypeLabel::F, 4}};
}

}  // namespace weyldl
