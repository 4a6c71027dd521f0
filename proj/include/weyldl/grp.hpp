#pragma once

// Subgroups of an enumerated Weyl group, their conjugacy classes, standard
// parabolic subgroups with class fusion, and double cosets.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weyldl/rootsys.hpp"

namespace weyldl {

/// A subgroup of an ambient Weyl group, held as a sorted list of ambient
/// element ids. Local index k refers to elements()[k]; local index 0 is the
/// identity because ambient ids are in canonical order.
class Subgroup {
 public:
  Subgroup(std::shared_ptr<const WeylGroup> ambient, std::vector<ElementId> elements,
           std::vector<ElementId> generators)
      : ambient_(std::move(ambient)), elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    whole_ = elements_.size() == ambient_->order();
  }

  static Subgroup whole(std::shared_ptr<const WeylGroup> w) {
    std::vector<ElementId> all(w->order());
    for (std::size_t e = 0; e < all.size(); ++e) all[e] = static_cast<ElementId>(e);
    auto gens = w->generators();
    return Subgroup(std::move(w), std::move(all), std::move(gens));
  }

  /// Closure of the given generators under multiplication.
  static Subgroup generated_by(std::shared_ptr<const WeylGroup> w, std::vector<ElementId> gens) {
    std::vector<ElementId> elems{w->identity()};
    std::vector<bool> seen(w->order(), false);
    seen[w->identity()] = true;
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (ElementId g : gens) {
        const ElementId next = w->multiply(g, elems[head]);
        if (!seen[next]) {
          seen[next] = true;
          elems.push_back(next);
        }
      }
    }
    return Subgroup(std::move(w), std::move(elems), std::move(gens));
  }

  const std::shared_ptr<const WeylGroup>& ambient() const { return ambient_; }
  const WeylGroup& weyl() const { return *ambient_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  ElementId element(std::size_t local) const { return elements_[local]; }

  std::optional<std::size_t> local_index(ElementId e) const {
    if (whole_) return e < elements_.size() ? std::optional<std::size_t>(e) : std::nullopt;
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it == elements_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool contains(ElementId e) const { return local_index(e).has_value(); }

 private:
  std::shared_ptr<const WeylGroup> ambient_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
  bool whole_ = false;
};

struct ConjugacyClasses {
  std::vector<std::size_t> representatives;  // local indices
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> class_of;       // local index -> class
  std::vector<std::size_t> inverse_class;    // class of the inverses

  std::size_t count() const { return representatives.size(); }
};

/// Orbits under conjugation by the subgroup's generators. Iterating local
/// indices in order makes each representative the canonical minimum.
inline ConjugacyClasses conjugacy_classes(const Subgroup& g) {
  const WeylGroup& w = g.weyl();
  const std::uint32_t unassigned = UINT32_MAX;
  ConjugacyClasses cc;
  cc.class_of.assign(g.order(), unassigned);
  std::vector<ElementId> gens = g.generators();
  if (gens.empty()) gens = g.elements();
  std::vector<ElementId> gen_inv;
  for (ElementId s : gens) gen_inv.push_back(w.inverse(s));

  for (std::size_t start = 0; start < g.order(); ++start) {
    if (cc.class_of[start] != unassigned) continue;
    const auto cls = static_cast<std::uint32_t>(cc.representatives.size());
    cc.representatives.push_back(start);
    std::vector<std::size_t> orbit{start};
    cc.class_of[start] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const ElementId x = g.element(orbit[head]);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const ElementId y = w.multiply(w.multiply(gens[k], x), gen_inv[k]);
        const auto local = g.local_index(y);
        if (!local) throw Error("conjugacy_classes: generators do not normalize the subgroup");
        if (cc.class_of[*local] == unassigned) {
          cc.class_of[*local] = cls;
          orbit.push_back(*local);
        }
      }
    }
    cc.sizes.push_back(orbit.size());
  }

  for (std::size_t c = 0; c < cc.count(); ++c) {
    const ElementId inv = w.inverse(g.element(cc.representatives[c]));
    cc.inverse_class.push_back(cc.class_of[*g.local_index(inv)]);
  }
  return cc;
}

/// A subgroup together with its conjugacy classes. Class functions and
/// character tables are bound to one of these by identity.
struct ClassedGroup {
  Subgroup group;
  ConjugacyClasses classes;
  std::string name;

  std::size_t order() const { return group.order(); }
  std::size_t num_classes() const { return classes.count(); }
  std::size_t class_of_element(ElementId e) const {
    const auto local = group.local_index(e);
    if (!local) throw GroupMismatch("element is not in " + name);
    return classes.class_of[*local];
  }
  ElementId representative(std::size_t c) const { return group.element(classes.representatives[c]); }
};

using GroupHandle = std::shared_ptr<const ClassedGroup>;

inline GroupHandle make_classed(Subgroup g, std::string name) {
  auto cc = conjugacy_classes(g);
  return std::make_shared<const ClassedGroup>(ClassedGroup{std::move(g), std::move(cc), std::move(name)});
}

inline GroupHandle whole_group(std::shared_ptr<const WeylGroup> w, std::string name) {
  return make_classed(Subgroup::whole(std::move(w)), std::move(name));
}

/// Subset of {0..rank-1}, stored sorted. Rendered 1-based.
using SimpleSubset = std::vector<int>;

inline std::string subset_string(const SimpleSubset& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k] + 1);
  }
  return out + "}";
}

inline SimpleSubset subset_from_mask(unsigned mask, int rank) {
  SimpleSubset s;
  for (int i = 0; i < rank; ++i) {
    if (mask & (1u << i)) s.push_back(i);
  }
  return s;
}

/// Number of x in the ambient group G with x g x^-1 in D, for each class
/// representative g of G and each class D of the subgroup H. Row-major
/// [G-class][H-class].
inline std::vector<std::vector<std::size_t>> conjugation_counts(const ClassedGroup& sub, const ClassedGroup& ambient) {
  const WeylGroup& w = ambient.group.weyl();
  std::vector<std::vector<std::size_t>> counts(ambient.num_classes(), std::vector<std::size_t>(sub.num_classes(), 0));
  for (std::size_t c = 0; c < ambient.num_classes(); ++c) {
    const ElementId g = ambient.representative(c);
    for (ElementId x : ambient.group.elements()) {
      const auto local = sub.group.local_index(w.conjugate(x, g));
      if (local) ++counts[c][sub.classes.class_of[*local]];
    }
  }
  return counts;
}

/// Standard parabolic W_I with its fusion into the ambient classes.
struct ParabolicSubgroup {
  SimpleSubset subset;
  GroupHandle ambient;
  GroupHandle sub;
  std::vector<std::size_t> fusion;                    // W_I class -> W class
  std::vector<std::vector<std::size_t>> conj_counts;  // see conjugation_counts

  const std::vector<ElementId>& embedding() const { return sub->group.elements(); }
};

inline ParabolicSubgroup parabolic(const GroupHandle& w, SimpleSubset subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const auto& weyl = w->group.ambient();
  std::vector<ElementId> gens;
  for (int i : subset) {
    if (i < 0 || i >= weyl->rank()) throw InvalidType("parabolic: simple index out of range");
    gens.push_back(weyl->generators()[i]);
  }
  ParabolicSubgroup p;
  p.subset = subset;
  p.ambient = w;
  p.sub = make_classed(Subgroup::generated_by(weyl, gens), w->name + "_" + subset_string(subset));
  for (std::size_t c = 0; c < p.sub->num_classes(); ++c) {
    p.fusion.push_back(w->class_of_element(p.sub->representative(c)));
  }
  p.conj_counts = conjugation_counts(*p.sub, *w);
  return p;
}

/// All 2^rank standard parabolics, indexed by bitmask of the subset.
inline std::vector<ParabolicSubgroup> all_parabolics(const GroupHandle& w) {
  const int rank = w->group.weyl().rank();
  std::vector<ParabolicSubgroup> out;
  out.reserve(std::size_t{1} << rank);
  for (unsigned mask = 0; mask < (1u << rank); ++mask) out.push_back(parabolic(w, subset_from_mask(mask, rank)));
  return out;
}

struct DoubleCoset {
  ElementId representative;        // canonical minimum of W_J x W_I
  std::size_t size;
  GroupHandle intersection;        // W_J cap x W_I x^-1
};

/// Transversal of W_J \ W / W_I.
inline std::vector<DoubleCoset> double_cosets(const ParabolicSubgroup& pi, const ParabolicSubgroup& pj) {
  if (pi.ambient != pj.ambient) throw GroupMismatch("double_cosets: parabolics live in different groups");
  const WeylGroup& w = pi.ambient->group.weyl();
  const auto& wi = pi.sub->group.elements();
  const auto& wj = pj.sub->group.elements();
  std::vector<bool> assigned(w.order(), false);
  std::vector<DoubleCoset> out;
  for (std::size_t e = 0; e < w.order(); ++e) {
    if (assigned[e]) continue;
    const auto x = static_cast<ElementId>(e);
    std::size_t size = 0;
    for (ElementId j : wj) {
      const ElementId jx = w.multiply(j, x);
      for (ElementId i : wi) {
        const ElementId y = w.multiply(jx, i);
        if (!assigned[y]) {
          assigned[y] = true;
          ++size;
        }
      }
    }
    std::vector<ElementId> inter;
    const ElementId x_inv = w.inverse(x);
    for (ElementId j : wj) {
      if (pi.sub->group.contains(w.multiply(w.multiply(x_inv, j), x))) inter.push_back(j);
    }
    auto handle = make_classed(Subgroup(pi.ambient->group.ambient(), std::move(inter), {}),
                               pj.sub->name + " cap " + w.word_string(x) + "." + pi.sub->name);
    out.push_back(DoubleCoset{x, size, std::move(handle)});
  }
  return out;
}

}  // namespace weyldl
