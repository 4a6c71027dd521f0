#pragma once

// Restriction and induction of class functions between subgroups of one
// Weyl group, plus Frobenius, transitivity and Mackey checks.

#include <cstddef>
#include <string>
#include <vector>

#include "weyldl/chars.hpp"
#include "weyldl/grp.hpp"

namespace weyldl {

/// Outcome of one verification. Violations are content, not errors.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> violations;

  void fail(std::string why) {
    passed = false;
    violations.push_back(std::move(why));
  }
  void merge(const CheckResult& o) {
    cases += o.cases;
    if (!o.passed) passed = false;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

namespace detail {

inline void require_same_ambient(const ClassedGroup& a, const ClassedGroup& b) {
  if (a.group.ambient() != b.group.ambient()) throw GroupMismatch(a.name + " and " + b.name + " live in different Weyl groups");
}

}  // namespace detail

/// Restriction from a group to any of its subgroups.
inline ClassFunction restrict_to(const ClassFunction& f, const GroupHandle& sub) {
  const ClassedGroup& g = *f.group();
  detail::require_same_ambient(g, *sub);
  std::vector<Rational> v;
  for (std::size_t c = 0; c < sub->num_classes(); ++c) v.push_back(f[g.class_of_element(sub->representative(c))]);
  return ClassFunction(sub, std::move(v));
}

/// (ind f)(g) = (1/|H|) sum over C of counts[g][C] f(C).
inline ClassFunction induce_with_counts(const ClassFunction& f, const GroupHandle& ambient,
                                        const std::vector<std::vector<std::size_t>>& counts) {
  const Rational h(f.group()->order());
  std::vector<Rational> v;
  for (std::size_t c = 0; c < ambient->num_classes(); ++c) {
    Rational s = 0;
    for (std::size_t d = 0; d < f.size(); ++d) {
      if (counts[c][d]) s += Rational(counts[c][d]) * f[d];
    }
    v.push_back(s / h);
  }
  return ClassFunction(ambient, std::move(v));
}

/// Induction from a subgroup H to a group G containing it:
/// (ind f)(g) = (1/|H|) sum_{x in G, x g x^-1 in H} f(x g x^-1).
inline ClassFunction induce_to(const ClassFunction& f, const GroupHandle& ambient) {
  detail::require_same_ambient(*f.group(), *ambient);
  for (ElementId h : f.group()->group.elements()) {
    if (!ambient->group.contains(h)) throw GroupMismatch(f.group()->name + " is not contained in " + ambient->name);
  }
  return induce_with_counts(f, ambient, conjugation_counts(*f.group(), *ambient));
}

inline ClassFunction restrict(const ClassFunction& f, const ParabolicSubgroup& p) {
  if (f.group() != p.ambient) throw GroupMismatch("restrict: " + f.group()->name + " is not the ambient group of " + p.sub->name);
  std::vector<Rational> v;
  for (std::size_t c = 0; c < p.sub->num_classes(); ++c) v.push_back(f[p.fusion[c]]);
  return ClassFunction(p.sub, std::move(v));
}

inline ClassFunction induce(const ClassFunction& f, const ParabolicSubgroup& p) {
  if (f.group() != p.sub) throw GroupMismatch("induce: " + f.group()->name + " is not " + p.sub->name);
  return induce_with_counts(f, p.ambient, p.conj_counts);
}

/// Transport along x: on the subgroup target (inside x H x^-1), the
/// function k -> f(x^-1 k x).
inline ClassFunction conjugate_transport(const ClassFunction& f, ElementId x, const GroupHandle& target) {
  const ClassedGroup& h = *f.group();
  detail::require_same_ambient(h, *target);
  const WeylGroup& w = h.group.weyl();
  const ElementId x_inv = w.inverse(x);
  std::vector<Rational> v;
  for (std::size_t c = 0; c < target->num_classes(); ++c) {
    const ElementId k = target->representative(c);
    v.push_back(f[h.class_of_element(w.multiply(w.multiply(x_inv, k), x))]);
  }
  return ClassFunction(target, std::move(v));
}

/// <ind chi, psi>_W == <chi, res psi>_{W_I} for every irreducible pair.
inline CheckResult frobenius_check(const ParabolicSubgroup& p, const CharacterTable& table_w, const CharacterTable& table_wi) {
  CheckResult out{"frobenius " + p.sub->name, true, 0, {}};
  for (std::size_t i = 0; i < table_wi.size(); ++i) {
    const auto chi = table_wi.character(i);
    const auto ind = induce(chi, p);
    for (std::size_t j = 0; j < table_w.size(); ++j) {
      const auto psi = table_w.character(j);
      const Rational lhs = inner_product(ind, psi);
      const Rational rhs = inner_product(chi, restrict(psi, p));
      ++out.cases;
      if (lhs != rhs) {
        out.fail("I=" + subset_string(p.subset) + " chi=" + table_wi.display_label(i) + " psi=" + table_w.display_label(j) +
                 ": " + lhs.str() + " != " + rhs.str());
      }
    }
  }
  return out;
}

/// Right-hand side of the Mackey formula on W_J:
/// sum over x in W_J\W/W_I of ind_{W_J cap x W_I x^-1}^{W_J} (x-transport of f).
inline ClassFunction mackey_sum(const ParabolicSubgroup& pi, const ParabolicSubgroup& pj, const ClassFunction& f) {
  auto total = ClassFunction::zero(pj.sub);
  for (const auto& dc : double_cosets(pi, pj)) {
    total += induce_to(conjugate_transport(f, dc.representative, dc.intersection), pj.sub);
  }
  return total;
}

/// res_J ind_I f == mackey_sum(I, J, f).
inline CheckResult mackey_check(const ParabolicSubgroup& pi, const ParabolicSubgroup& pj, const ClassFunction& f) {
  CheckResult out{"mackey I=" + subset_string(pi.subset) + " J=" + subset_string(pj.subset), true, 1, {}};
  const auto lhs = restrict(induce(f, pi), pj);
  const auto rhs = mackey_sum(pi, pj, f);
  if (!(lhs == rhs)) out.fail("res_J ind_I f differs from the double-coset sum for I=" + subset_string(pi.subset) + " J=" + subset_string(pj.subset));
  return out;
}

/// ind_{W_I}^W ind_{W_J}^{W_I} f == ind_{W_J}^W f for J a subset of I.
inline CheckResult transitivity_check(const ParabolicSubgroup& pj, const ParabolicSubgroup& pi, const ClassFunction& f) {
  CheckResult out{"transitivity J=" + subset_string(pj.subset) + " I=" + subset_string(pi.subset), true, 1, {}};
  const auto two_step = induce(induce_to(f, pi.sub), pi);
  const auto direct = induce(f, pj);
  if (!(two_step == direct)) out.fail("two-step induction differs from direct induction for J=" + subset_string(pj.subset) + " I=" + subset_string(pi.subset));
  return out;
}

}  // namespace weyldl
