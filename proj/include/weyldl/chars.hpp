#pragma once

// Exact class functions, virtual characters and integer character tables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "weyldl/exact.hpp"
#include "weyldl/grp.hpp"
#include "weyldl/partitions.hpp"

namespace weyldl {

class ClassFunction {
 public:
  ClassFunction(GroupHandle group, std::vector<Rational> values) : group_(std::move(group)), values_(std::move(values)) {
    if (values_.size() != group_->num_classes()) {
      throw GroupMismatch("class function has " + std::to_string(values_.size()) + " values but " + group_->name +
                          " has " + std::to_string(group_->num_classes()) + " classes");
    }
  }

  static ClassFunction from_integers(GroupHandle group, const std::vector<std::int64_t>& values) {
    std::vector<Rational> q(values.begin(), values.end());
    return ClassFunction(std::move(group), std::move(q));
  }

  static ClassFunction zero(GroupHandle group) {
    const std::size_t n = group->num_classes();
    return ClassFunction(std::move(group), std::vector<Rational>(n));
  }

  const GroupHandle& group() const { return group_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t c) const { return values_[c]; }
  Rational& operator[](std::size_t c) { return values_[c]; }

  ClassFunction& operator+=(const ClassFunction& o) {
    require_same(o);
    for (std::size_t c = 0; c < size(); ++c) values_[c] += o.values_[c];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    require_same(o);
    for (std::size_t c = 0; c < size(); ++c) values_[c] -= o.values_[c];
    return *this;
  }
  ClassFunction& operator*=(const Rational& k) {
    for (auto& v : values_) v *= k;
    return *this;
  }

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& k) { return a *= k; }
  friend ClassFunction operator*(const Rational& k, ClassFunction a) { return a *= k; }

  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    a.require_same(b);
    ClassFunction out = a;
    for (std::size_t c = 0; c < out.size(); ++c) out.values_[c] *= b.values_[c];
    return out;
  }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

  std::vector<std::int64_t> integer_values() const {
    std::vector<std::int64_t> out;
    for (const auto& v : values_) out.push_back(to_int64(v));
    return out;
  }

 private:
  void require_same(const ClassFunction& o) const {
    if (group_ != o.group_) throw GroupMismatch("class functions on " + group_->name + " and " + o.group_->name);
  }

  GroupHandle group_;
  std::vector<Rational> values_;
};

/// <f, g> = (1/|G|) sum_C |C| f(C) g(C^-1).
inline Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group() != g.group()) throw GroupMismatch("inner product across groups");
  const auto& cc = f.group()->classes;
  Rational sum = 0;
  for (std::size_t c = 0; c < f.size(); ++c) sum += Rational(cc.sizes[c]) * f[c] * g[cc.inverse_class[c]];
  return sum / Rational(f.group()->order());
}

inline ClassFunction trivial(const GroupHandle& g) {
  return ClassFunction(g, std::vector<Rational>(g->num_classes(), Rational(1)));
}

/// w -> (-1)^length(w), length taken in the ambient Weyl group.
inline ClassFunction sign(const GroupHandle& g) {
  std::vector<Rational> v;
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    v.emplace_back(g->group.weyl().length(g->representative(c)) % 2 == 0 ? 1 : -1);
  }
  return ClassFunction(g, std::move(v));
}

inline ClassFunction reflection(const GroupHandle& g) {
  std::vector<Rational> v;
  for (std::size_t c = 0; c < g->num_classes(); ++c) v.emplace_back(g->group.weyl().reflection_trace(g->representative(c)));
  return ClassFunction(g, std::move(v));
}

inline ClassFunction regular(const GroupHandle& g) {
  auto f = ClassFunction::zero(g);
  f[0] = Rational(g->order());
  return f;
}

struct VirtualCharacter {
  GroupHandle group;
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.group == b.group && a.coeffs == b.coeffs;
  }
  VirtualCharacter& operator+=(const VirtualCharacter& o) {
    if (group != o.group) throw GroupMismatch("virtual characters on different groups");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  friend VirtualCharacter operator-(VirtualCharacter a) {
    for (auto& c : a.coeffs) c = -c;
    return a;
  }

  static VirtualCharacter unit(GroupHandle g, std::size_t n, std::size_t i) {
    VirtualCharacter v{std::move(g), std::vector<std::int64_t>(n, 0)};
    v.coeffs[i] = 1;
    return v;
  }
};

struct CharacterTable {
  GroupHandle group;
  std::vector<std::vector<std::int64_t>> values;  // [irreducible][class]
  std::vector<std::int64_t> degrees;
  std::optional<std::vector<Partition>> labels;   // type A only

  std::size_t size() const { return values.size(); }
  ClassFunction character(std::size_t i) const { return ClassFunction::from_integers(group, values[i]); }
  VirtualCharacter unit(std::size_t i) const { return VirtualCharacter::unit(group, size(), i); }

  /// Partition for type A, otherwise "deg<d>#<k>" with k counting
  /// irreducibles of that degree from 1.
  std::string display_label(std::size_t i) const {
    if (labels) return partition_string((*labels)[i]);
    std::size_t ordinal = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (degrees[j] == degrees[i]) ++ordinal;
    }
    return "deg" + std::to_string(degrees[i]) + "#" + std::to_string(ordinal);
  }
};

/// Irreducible coordinates <f, chi_i>. Throws NotVirtual when f is not an
/// integer combination of irreducibles.
inline VirtualCharacter decompose(const ClassFunction& f, const CharacterTable& table) {
  if (f.group() != table.group) throw GroupMismatch("decompose: class function and table on different groups");
  VirtualCharacter v{table.group, {}};
  auto rebuilt = ClassFunction::zero(table.group);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto chi = table.character(i);
    const Rational m = inner_product(f, chi);
    if (!is_integral(m)) throw NotVirtual("multiplicity " + m.str() + " of irreducible " + std::to_string(i) + " is not an integer");
    v.coeffs.push_back(to_int64(m));
    rebuilt += chi * m;
  }
  if (!(rebuilt == f)) throw NotVirtual("class function is not spanned by the irreducible characters");
  return v;
}

/// sum_i coeffs_i chi_i.
inline ClassFunction compose(const VirtualCharacter& v, const CharacterTable& table) {
  if (v.group != table.group) throw GroupMismatch("compose: virtual character and table on different groups");
  auto f = ClassFunction::zero(table.group);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (v.coeffs[i] != 0) f += table.character(i) * Rational(v.coeffs[i]);
  }
  return f;
}

inline VirtualCharacter tensor(const VirtualCharacter& v, const VirtualCharacter& w, const CharacterTable& table) {
  if (v.group != w.group) throw GroupMismatch("tensor: virtual characters on different groups");
  try {
    return decompose(compose(v, table) * compose(w, table), table);
  } catch (const NotVirtual& e) {
    throw Error(std::string("internal: product of virtual characters is not virtual: ") + e.what());
  }
}

/// Every exact integrity condition of a character table; returns a
/// description of each failure (empty when the table is sound).
inline std::vector<std::string> table_violations(const CharacterTable& t) {
  std::vector<std::string> out;
  const auto& g = *t.group;
  const auto& cc = g.classes;
  const std::size_t r = g.num_classes();
  if (t.size() != r) {
    out.push_back("irreducible count " + std::to_string(t.size()) + " != class count " + std::to_string(r));
    return out;
  }
  for (const auto& row : t.values) {
    if (row.size() != r) {
      out.push_back("row length mismatch");
      return out;
    }
  }
  const Integer order(g.order());
  Integer deg_sq = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (t.degrees[i] <= 0 || t.values[i][0] != t.degrees[i]) out.push_back("degree of irreducible " + std::to_string(i) + " is inconsistent");
    if (t.degrees[i] > 0 && order % t.degrees[i] != 0) out.push_back("degree " + std::to_string(t.degrees[i]) + " does not divide |G|");
    deg_sq += Integer(t.degrees[i]) * t.degrees[i];
  }
  if (deg_sq != order) out.push_back("sum of squared degrees " + deg_sq.str() + " != |G| " + order.str());

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Integer s = 0;
      for (std::size_t c = 0; c < r; ++c) s += Integer(cc.sizes[c]) * t.values[i][c] * t.values[j][cc.inverse_class[c]];
      const Integer expect = (i == j) ? order : Integer(0);
      if (s != expect) out.push_back("row orthonormality fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t d = 0; d < r; ++d) {
      Integer s = 0;
      for (std::size_t i = 0; i < r; ++i) s += Integer(t.values[i][c]) * t.values[i][cc.inverse_class[d]];
      const Integer expect = (c == d) ? Integer(order / cc.sizes[c]) : Integer(0);
      if (s != expect) out.push_back("column orthogonality fails at (" + std::to_string(c) + "," + std::to_string(d) + ")");
    }
  }
  return out;
}

/// Sorts irreducibles by ascending degree, then by descending value list,
/// so the trivial character is always first.
inline void canonicalize(CharacterTable& t) {
  std::vector<std::size_t> order(t.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    return t.values[a] > t.values[b];
  });
  CharacterTable sorted{t.group, {}, {}, std::nullopt};
  for (auto i : order) {
    sorted.values.push_back(t.values[i]);
    sorted.degrees.push_back(t.degrees[i]);
  }
  if (t.labels) {
    std::vector<Partition> l;
    for (auto i : order) l.push_back((*t.labels)[i]);
    sorted.labels = std::move(l);
  }
  t = std::move(sorted);
}

/// a[i][j][k] = #{(x, y) in C_i x C_j : x y = z_k} for the fixed
/// representative z_k of C_k.
inline std::vector<std::int64_t> class_structure_constants(const ClassedGroup& g) {
  const std::size_t r = g.num_classes();
  const WeylGroup& w = g.group.weyl();
  std::vector<std::int64_t> a(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const ElementId z = g.representative(k);
    for (std::size_t lx = 0; lx < g.order(); ++lx) {
      const ElementId x = g.group.element(lx);
      const std::size_t i = g.classes.class_of[lx];
      const std::size_t j = g.class_of_element(w.multiply(w.inverse(x), z));
      ++a[(i * r + j) * r + k];
    }
  }
  return a;
}

struct TableOptions {
  std::uint64_t seed = 0;
  int max_attempts = 64;
};

/// Exact character table by simultaneous eigenspace splitting of the
/// class-multiplication matrices (M_i)_{jk} = a[i][j][k]. A common
/// eigenvector has entries omega_chi(C_k) = |C_k| chi(z_k) / chi(1); degrees
/// follow from sum_k |C_k| |chi(z_k)|^2 = |G|.
inline CharacterTable character_table(const GroupHandle& g, const TableOptions& opts = {}) {
  const std::size_t r = g->num_classes();
  const auto& cc = g->classes;
  const auto a = class_structure_constants(*g);
  std::mt19937_64 rng(opts.seed);

  std::vector<Matrix> pending{Matrix::identity(r)};
  std::vector<Matrix> lines;
  while (!pending.empty()) {
    Matrix basis = std::move(pending.back());
    pending.pop_back();
    if (basis.cols() == 1) {
      lines.push_back(std::move(basis));
      continue;
    }
    bool split = false;
    for (int attempt = 0; attempt < opts.max_attempts && !split; ++attempt) {
      std::vector<std::int64_t> coeff(r);
      Integer bound = 0;
      for (std::size_t i = 0; i < r; ++i) {
        coeff[i] = static_cast<std::int64_t>(rng() % 7) - 3;
        bound += Integer(coeff[i] < 0 ? -coeff[i] : coeff[i]) * cc.sizes[i];
      }
      Matrix op(r, r);
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
          std::int64_t s = 0;
          for (std::size_t i = 0; i < r; ++i) s += coeff[i] * a[(i * r + j) * r + k];
          op(j, k) = s;
        }
      }
      const Matrix restricted = restrict_operator(op, basis);
      const auto roots = integer_roots(characteristic_polynomial(restricted), bound);
      std::size_t total = 0;
      for (const auto& [root, mult] : roots) total += mult;
      if (total != basis.cols()) {
        throw IrrationalityError("class-algebra eigenvalues are not all integers in " + g->name);
      }
      if (roots.size() < 2) continue;
      for (const auto& [root, mult] : roots) {
        Matrix shifted = restricted;
        for (std::size_t d = 0; d < shifted.rows(); ++d) shifted(d, d) -= Rational(root);
        const Matrix kernel = nullspace(shifted);
        if (kernel.cols() != mult) throw Error("class algebra is not diagonalizable in " + g->name);
        pending.push_back(basis * kernel);
      }
      split = true;
    }
    if (!split) throw IrrationalityError("eigenspace splitting did not converge in " + g->name);
  }

  CharacterTable table{g, {}, {}, std::nullopt};
  for (const auto& v : lines) {
    if (v(0, 0) == 0) throw Error("central character vanishes on the identity class");
    std::vector<Rational> omega(r);
    for (std::size_t k = 0; k < r; ++k) omega[k] = v(k, 0) / v(0, 0);
    Rational norm = 0;
    for (std::size_t k = 0; k < r; ++k) norm += omega[k] * omega[cc.inverse_class[k]] / Rational(cc.sizes[k]);
    const Rational deg_sq = Rational(g->order()) / norm;
    if (!is_integral(deg_sq) || deg_sq <= 0) throw IrrationalityError("squared degree " + deg_sq.str() + " is not a positive integer");
    const Integer dsq(boost::multiprecision::numerator(deg_sq));
    const Integer deg = boost::multiprecision::sqrt(dsq);
    if (deg * deg != dsq) throw IrrationalityError("squared degree " + dsq.str() + " is not a perfect square");
    std::vector<std::int64_t> row;
    for (std::size_t k = 0; k < r; ++k) row.push_back(to_int64(omega[k] * Rational(deg) / Rational(cc.sizes[k])));
    table.values.push_back(std::move(row));
    table.degrees.push_back(to_int64(deg));
  }
  canonicalize(table);
  if (auto bad = table_violations(table); !bad.empty()) throw Error("character table of " + g->name + " failed integrity: " + bad.front());
  return table;
}

/// Image of a type-A Weyl group element in S_{rank+1}, s_i -> (i, i+1).
inline std::vector<int> type_a_permutation(const WeylGroup& w, ElementId e) {
  std::vector<int> perm(static_cast<std::size_t>(w.rank()) + 1);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (int letter : w.word(e)) std::swap(perm[letter], perm[letter + 1]);
  return perm;
}

/// Attaches partitions of rank+1 by matching each irreducible of the full
/// type-A Weyl group against the Murnaghan-Nakayama character.
inline void attach_partition_labels(CharacterTable& t) {
  const auto& g = *t.group;
  const WeylGroup& w = g.group.weyl();
  std::vector<Partition> cycle_types;
  for (std::size_t c = 0; c < g.num_classes(); ++c) cycle_types.push_back(cycle_type(type_a_permutation(w, g.representative(c))));
  std::vector<Partition> labels(t.size());
  std::vector<bool> used(t.size(), false);
  for (const auto& lambda : partitions_of(w.rank() + 1)) {
    std::vector<std::int64_t> row;
    for (const auto& mu : cycle_types) row.push_back(murnaghan_nakayama(lambda, mu));
    bool matched = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!used[i] && t.values[i] == row) {
        labels[i] = lambda;
        used[i] = matched = true;
        break;
      }
    }
    if (!matched) throw Error("no irreducible matches the character of partition " + partition_string(lambda));
  }
  t.labels = std::move(labels);
}

}  // namespace weyldl
