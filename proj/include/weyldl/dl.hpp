#pragma once

// The Deligne-Lusztig operator on the representation ring of W:
//
//   DL_W(V) = sum over I subset of Sigma of (-1)^|I| ind_{W_I}^W res_{W_I}^W V
//
// together with its sign-twist and involution checks, the inverse assembled
// from the shift ledger, and the induced pairing of irreducibles.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "weyldl/chars.hpp"
#include "weyldl/grp.hpp"
#include "weyldl/indres.hpp"
#include "weyldl/rootsys.hpp"

namespace weyldl {

/// d_i = central_rank + |Sigma| - i for 0 <= i <= |Sigma|; d_I = d_|I|.
struct ShiftLedger {
  int central_rank = 0;
  int sigma_size = 0;
  std::vector<int> d;

  int d_subset(std::size_t subset_size) const { return d.at(subset_size); }
  /// (-1)^(d_emptyset + d_I), the sign carried by the N-side layers.
  int layer_sign(std::size_t subset_size) const { return ((d[0] + d_subset(subset_size)) % 2 == 0) ? 1 : -1; }
};

inline ShiftLedger make_shift_ledger(int central_rank, int sigma_size) {
  ShiftLedger l{central_rank, sigma_size, {}};
  for (int i = 0; i <= sigma_size; ++i) l.d.push_back(central_rank + sigma_size - i);
  return l;
}

inline CheckResult ledger_check(const ShiftLedger& l) {
  CheckResult out{"shift-parity c=" + std::to_string(l.central_rank) + " |S|=" + std::to_string(l.sigma_size), true, 0, {}};
  for (int i = 0; i + 1 <= l.sigma_size; ++i) {
    if (!(l.d[i] > l.d[i + 1])) out.fail("d is not strictly decreasing at " + std::to_string(i));
  }
  for (int size = 0; size <= l.sigma_size; ++size) {
    ++out.cases;
    const int expected = (size % 2 == 0) ? 1 : -1;
    if (l.layer_sign(static_cast<std::size_t>(size)) != expected) {
      out.fail("(-1)^(d_0 + d_I) != (-1)^|I| for |I|=" + std::to_string(size));
    }
  }
  return out;
}

/// Everything the operator needs for one Weyl group: the group with its
/// classes, the character table and all 2^rank standard parabolics.
struct WeylContext {
  CartanDatum cartan;
  std::shared_ptr<const WeylGroup> weyl;
  GroupHandle group;
  CharacterTable table;
  std::vector<ParabolicSubgroup> parabolics;  // indexed by subset bitmask

  int rank() const { return cartan.rank; }
  ShiftLedger ledger() const { return make_shift_ledger(cartan.central_rank, cartan.rank); }
};

inline WeylContext make_context(CartanDatum cartan, std::shared_ptr<const WeylGroup> weyl, GroupHandle group,
                                CharacterTable table) {
  if (cartan.type_label == TypeLabel::A && !table.labels) attach_partition_labels(table);
  auto parabolics = all_parabolics(group);
  return WeylContext{std::move(cartan), std::move(weyl), std::move(group), std::move(table), std::move(parabolics)};
}

inline WeylContext make_context(const CartanDatum& cartan, std::size_t max_order = 2'000'000, const TableOptions& opts = {}) {
  auto weyl = enumerate_group(cartan, max_order);
  auto group = whole_group(weyl, cartan.name());
  auto table = character_table(group, opts);
  return make_context(cartan, std::move(weyl), std::move(group), std::move(table));
}

namespace detail {

inline ClassFunction alternating_sum(const WeylContext& ctx, const ClassFunction& f, int (*sign_of)(const WeylContext&, std::size_t)) {
  auto total = ClassFunction::zero(ctx.group);
  // Layers by decreasing |I|; the order is immaterial in exact arithmetic.
  for (int size = ctx.rank(); size >= 0; --size) {
    for (unsigned mask = 0; mask < ctx.parabolics.size(); ++mask) {
      if (std::popcount(mask) != size) continue;
      const auto& p = ctx.parabolics[mask];
      const auto term = induce(restrict(f, p), p);
      if (sign_of(ctx, static_cast<std::size_t>(size)) > 0) {
        total += term;
      } else {
        total -= term;
      }
    }
  }
  return total;
}

}  // namespace detail

/// DL_W on class functions.
inline ClassFunction dl_class_function(const WeylContext& ctx, const ClassFunction& f) {
  if (f.group() != ctx.group) throw GroupMismatch("dl_operator: class function is not on " + ctx.group->name);
  return detail::alternating_sum(ctx, f, [](const WeylContext&, std::size_t size) { return size % 2 == 0 ? 1 : -1; });
}

inline VirtualCharacter dl_operator(const WeylContext& ctx, const VirtualCharacter& v) {
  return decompose(dl_class_function(ctx, compose(v, ctx.table)), ctx.table);
}

/// The same alternating sum with every sign read from the shift ledger as
/// (-1)^(d_emptyset + d_I).
inline VirtualCharacter dl_inverse_operator(const WeylContext& ctx, const VirtualCharacter& v) {
  if (v.group != ctx.group) throw GroupMismatch("dl_inverse_operator: virtual character is not on " + ctx.group->name);
  const auto f = compose(v, ctx.table);
  const auto total = detail::alternating_sum(ctx, f, [](const WeylContext& c, std::size_t size) { return c.ledger().layer_sign(size); });
  return decompose(total, ctx.table);
}

using IntTable = std::vector<std::vector<std::int64_t>>;

/// Matrix of a K_0 endomorphism in the irreducible basis; column j is the
/// image of the j-th irreducible.
template <typename Op>
IntTable operator_matrix(const WeylContext& ctx, Op&& op) {
  const std::size_t n = ctx.table.size();
  IntTable m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto image = op(ctx.table.unit(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = image.coeffs[i];
  }
  return m;
}

inline IntTable dl_matrix(const WeylContext& ctx) {
  return operator_matrix(ctx, [&](const VirtualCharacter& v) { return dl_operator(ctx, v); });
}

inline IntTable dl_inverse_matrix(const WeylContext& ctx) {
  return operator_matrix(ctx, [&](const VirtualCharacter& v) { return dl_inverse_operator(ctx, v); });
}

inline IntTable sign_twist_matrix(const WeylContext& ctx) {
  const auto sgn = decompose(sign(ctx.group), ctx.table);
  return operator_matrix(ctx, [&](const VirtualCharacter& v) { return tensor(sgn, v, ctx.table); });
}

inline IntTable multiply(const IntTable& a, const IntTable& b) {
  const std::size_t n = a.size();
  IntTable c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline bool is_identity(const IntTable& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

/// Index of the unit vector v, if it is one.
inline std::optional<std::size_t> unit_index(const VirtualCharacter& v) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
    if (v.coeffs[i] == 0) continue;
    if (v.coeffs[i] != 1 || found) return std::nullopt;
    found = i;
  }
  return found;
}

struct SignTwistReport {
  CheckResult check;
  std::vector<std::size_t> permutation;  // DL(chi_i) = chi_permutation[i]
};

/// DL(chi) == sgn (x) chi for every irreducible chi, and DL(chi) is again
/// irreducible.
inline SignTwistReport verify_sign_twist(const WeylContext& ctx) {
  SignTwistReport out{{"sign-twist " + ctx.cartan.name(), true, 0, {}}, {}};
  const auto sgn = decompose(sign(ctx.group), ctx.table);
  for (std::size_t i = 0; i < ctx.table.size(); ++i) {
    const auto chi = ctx.table.unit(i);
    const auto dl = dl_operator(ctx, chi);
    const auto twisted = tensor(sgn, chi, ctx.table);
    ++out.check.cases;
    if (!(dl == twisted)) out.check.fail("DL(" + ctx.table.display_label(i) + ") != sgn (x) " + ctx.table.display_label(i));
    const auto idx = unit_index(dl);
    if (!idx) {
      out.check.fail("DL(" + ctx.table.display_label(i) + ") is not an irreducible character");
      out.permutation.push_back(i);
    } else {
      out.permutation.push_back(*idx);
    }
  }
  return out;
}

/// DL(DL(chi)) == chi for every irreducible, and the K_0 matrix squares to Id.
inline CheckResult verify_involution(const WeylContext& ctx) {
  CheckResult out{"involution " + ctx.cartan.name(), true, 0, {}};
  const auto m = dl_matrix(ctx);
  for (std::size_t i = 0; i < ctx.table.size(); ++i) {
    const auto chi = ctx.table.unit(i);
    ++out.cases;
    if (!(dl_operator(ctx, dl_operator(ctx, chi)) == chi)) out.fail("DL(DL(" + ctx.table.display_label(i) + ")) != " + ctx.table.display_label(i));
  }
  ++out.cases;
  if (!is_identity(multiply(m, m))) out.fail("DL matrix does not square to the identity");
  return out;
}

/// The inverse assembled from the ledger equals DL, and their composite is Id.
inline CheckResult verify_inverse(const WeylContext& ctx) {
  CheckResult out{"ledger-inverse " + ctx.cartan.name(), true, 2, {}};
  const auto m = dl_matrix(ctx);
  const auto n = dl_inverse_matrix(ctx);
  if (m != n) out.fail("ledger-signed inverse differs from DL");
  if (!is_identity(multiply(m, n))) out.fail("DL composed with its ledger inverse is not the identity");
  return out;
}

struct SpringerLabel {
  std::size_t irr_index = 0;
  std::string display;

  friend bool operator==(const SpringerLabel&, const SpringerLabel&) = default;
};

/// alpha -> sgn (x) alpha, read off from DL on each irreducible, one entry
/// per irreducible in canonical order.
inline std::vector<std::pair<SpringerLabel, SpringerLabel>> springer_table(const WeylContext& ctx) {
  std::vector<std::pair<SpringerLabel, SpringerLabel>> out;
  for (std::size_t i = 0; i < ctx.table.size(); ++i) {
    const auto image = unit_index(dl_operator(ctx, ctx.table.unit(i)));
    if (!image) throw Error("DL of irreducible " + ctx.table.display_label(i) + " is not irreducible");
    out.emplace_back(SpringerLabel{i, ctx.table.display_label(i)}, SpringerLabel{*image, ctx.table.display_label(*image)});
  }
  return out;
}

/// "(3) ↔ (1,1,1); (2,1) fixed": each orbit of the pairing once, in
/// canonical order of its first member.
inline std::string render_pairing(const std::vector<std::pair<SpringerLabel, SpringerLabel>>& pairs) {
  std::string out;
  for (const auto& [a, b] : pairs) {
    if (b.irr_index < a.irr_index) continue;
    if (!out.empty()) out += "; ";
    out += (a.irr_index == b.irr_index) ? a.display + " fixed" : a.display + " ↔ " + b.display;
  }
  return out;
}

}  // namespace weyldl
