#pragma once

// Cartan data, root systems and the Weyl group realized as permutations of
// the root set.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "weyldl/error.hpp"
#include "weyldl/exact.hpp"

namespace weyldl {

enum class TypeLabel : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char to_char(TypeLabel t) { return static_cast<char>(t); }

inline TypeLabel parse_type_label(const std::string& s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(s[0] & ~0x20);  // upper-case
    if (c >= 'A' && c <= 'G') return static_cast<TypeLabel>(c);
  }
  throw InvalidType("unknown type label '" + s + "'; accepted: A(n>=1), B(n>=2), C(n>=3), D(n>=4), G(2), F(4)");
}

using IntMatrix = std::vector<std::vector<int>>;

struct CartanDatum {
  TypeLabel type_label = TypeLabel::A;
  int rank = 0;
  IntMatrix cartan_matrix;  // entry(i, j) = <alpha_j, alpha_i^vee>
  int central_rank = 0;

  std::string name() const { return std::string(1, to_char(type_label)) + std::to_string(rank); }
};

namespace detail {

inline IntMatrix chain_matrix(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

}  // namespace detail

/// True iff (type, rank) is one of the supported irreducible pairs.
inline bool is_supported(TypeLabel type, int rank) {
  switch (type) {
    case TypeLabel::A: return rank >= 1;
    case TypeLabel::B: return rank >= 2;
    case TypeLabel::C: return rank >= 3;
    case TypeLabel::D: return rank >= 4;
    case TypeLabel::F: return rank == 4;
    case TypeLabel::G: return rank == 2;
    case TypeLabel::E: return false;
  }
  return false;
}

/// Standard Cartan matrix. B_n has its short simple root last, C_n its long
/// one; G_2 and F_4 list long simple roots first.
inline CartanDatum build_cartan(TypeLabel type, int rank, int central_rank = 0) {
  if (!is_supported(type, rank)) {
    throw InvalidType("unsupported type " + std::string(1, to_char(type)) + std::to_string(rank) +
                      "; accepted: A(n>=1), B(n>=2), C(n>=3), D(n>=4), G(2), F(4)");
  }
  if (central_rank < 0) throw InvalidType("central_rank must be non-negative");

  IntMatrix m = detail::chain_matrix(rank);
  switch (type) {
    case TypeLabel::A:
      break;
    case TypeLabel::B:
      m[rank - 1][rank - 2] = -2;
      break;
    case TypeLabel::C:
      m[rank - 2][rank - 1] = -2;
      break;
    case TypeLabel::D:
      m[rank - 2][rank - 1] = m[rank - 1][rank - 2] = 0;
      m[rank - 3][rank - 1] = m[rank - 1][rank - 3] = -1;
      break;
    case TypeLabel::F:
      m[2][1] = -2;
      break;
    case TypeLabel::G:
      m[1][0] = -3;
      break;
    case TypeLabel::E:
      break;
  }
  return CartanDatum{type, rank, std::move(m), central_rank};
}

/// Checks the structural Cartan-matrix axioms (not the match against the
/// standard table). Returns an empty string when all hold.
inline std::string cartan_violation(const CartanDatum& c) {
  const auto& m = c.cartan_matrix;
  if (c.rank <= 0 || static_cast<int>(m.size()) != c.rank) return "matrix size does not match rank";
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != c.rank) return "matrix is not square";
  }
  for (int i = 0; i < c.rank; ++i) {
    if (m[i][i] != 2) return "diagonal entry " + std::to_string(i + 1) + " is not 2";
    for (int j = 0; j < c.rank; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0) return "positive off-diagonal entry";
      if ((m[i][j] == 0) != (m[j][i] == 0)) return "zero pattern is not symmetric";
      const int prod = m[i][j] * m[j][i];
      if (prod < 0 || prod > 3) return "off-diagonal product outside {0,1,2,3}";
    }
  }
  return {};
}

/// Fundamental degrees of the reflection representation.
inline std::vector<int> fundamental_degrees(TypeLabel type, int rank) {
  std::vector<int> d;
  switch (type) {
    case TypeLabel::A:
      for (int k = 2; k <= rank + 1; ++k) d.push_back(k);
      break;
    case TypeLabel::B:
    case TypeLabel::C:
      for (int k = 1; k <= rank; ++k) d.push_back(2 * k);
      break;
    case TypeLabel::D:
      for (int k = 1; k < rank; ++k) d.push_back(2 * k);
      d.push_back(rank);
      break;
    case TypeLabel::F:
      d = {2, 6, 8, 12};
      break;
    case TypeLabel::G:
      d = {2, 6};
      break;
    case TypeLabel::E:
      break;
  }
  return d;
}

inline Integer order_from_degrees(TypeLabel type, int rank) {
  Integer prod = 1;
  for (int d : fundamental_degrees(type, rank)) prod *= d;
  return prod;
}

using RootVector = std::vector<int>;  // coordinates in the simple-root basis
using RootPerm = std::vector<std::uint16_t>;

struct RootSystem {
  int rank = 0;
  std::vector<RootVector> roots;  // positives first; roots[k + N] == -roots[k]
  std::size_t num_positive = 0;
  std::vector<RootPerm> simple_reflections;  // action of s_i on root indices

  bool is_positive(std::size_t idx) const { return idx < num_positive; }
  std::size_t negation(std::size_t idx) const {
    return idx < num_positive ? idx + num_positive : idx - num_positive;
  }
};

/// Closure of the simple roots under the simple reflections
/// s_i(v) = v - <v, alpha_i^vee> alpha_i.
inline RootSystem build_root_system(const CartanDatum& cartan, std::size_t max_roots = 4096) {
  if (auto why = cartan_violation(cartan); !why.empty()) {
    throw InvalidType("invalid Cartan matrix: " + why);
  }
  const int n = cartan.rank;
  const auto& m = cartan.cartan_matrix;

  auto reflect = [&](const RootVector& v, int i) {
    int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += v[j] * m[i][j];
    RootVector w = v;
    w[i] -= pairing;
    return w;
  };

  std::map<RootVector, bool> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    seen.emplace(e, true);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RootVector w = reflect(v, i);
      if (seen.emplace(w, true).second) {
        if (seen.size() > max_roots) {
          throw NonFinite("root closure exceeded " + std::to_string(max_roots) +
                          " roots; Cartan matrix is not of finite type");
        }
        queue.push_back(std::move(w));
      }
    }
  }

  std::vector<RootVector> positive;
  for (const auto& [v, _] : seen) {
    const bool pos = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    const bool neg = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
    if (!pos && !neg) throw NonFinite("root with mixed-sign coordinates; Cartan matrix is corrupt");
    if (pos) positive.push_back(v);
  }
  // Height first, then descending coordinates so that alpha_1 precedes alpha_2.
  std::sort(positive.begin(), positive.end(), [](const RootVector& a, const RootVector& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  RootSystem rs;
  rs.rank = n;
  rs.num_positive = positive.size();
  rs.roots = positive;
  for (const auto& v : positive) {
    RootVector w = v;
    for (auto& x : w) x = -x;
    rs.roots.push_back(std::move(w));
  }
  if (rs.roots.size() != seen.size()) throw NonFinite("root set is not symmetric under negation");

  std::map<RootVector, std::size_t> index;
  for (std::size_t k = 0; k < rs.roots.size(); ++k) index.emplace(rs.roots[k], k);
  for (int i = 0; i < n; ++i) {
    RootPerm perm(rs.roots.size());
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      perm[k] = static_cast<std::uint16_t>(index.at(reflect(rs.roots[k], i)));
    }
    rs.simple_reflections.push_back(std::move(perm));
  }
  return rs;
}

using ElementId = std::uint32_t;

/// Finite Weyl group enumerated as permutations of the root list. Elements
/// are ordered by (length, lexicographic root image); index 0 is the identity.
class WeylGroup {
 public:
  WeylGroup(RootSystem rs, std::size_t max_order) : rs_(std::move(rs)) {
    const std::size_t nroots = rs_.roots.size();
    const int n = rs_.rank;
    if (n > static_cast<int>(kMaxKeyRank) || nroots > 0xFFFF) {
      throw SizeLimit("root system too large to enumerate (rank " + std::to_string(n) + ")");
    }

    // Breadth-first closure under left multiplication by generators.
    std::vector<RootPerm> found;
    std::vector<std::uint32_t> depth;
    std::unordered_map<Key, std::uint32_t, KeyHash> lookup;
    RootPerm id(nroots);
    std::iota(id.begin(), id.end(), std::uint16_t{0});
    lookup.emplace(key_of(id), 0);
    found.push_back(std::move(id));
    depth.push_back(0);
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (int i = 0; i < n; ++i) {
        const auto& s = rs_.simple_reflections[i];
        RootPerm next(nroots);
        for (std::size_t r = 0; r < nroots; ++r) next[r] = s[found[head][r]];
        const Key k = key_of(next);
        if (lookup.count(k)) continue;
        if (found.size() >= max_order) {
          throw SizeLimit("group order exceeds the configured maximum of " + std::to_string(max_order));
        }
        lookup.emplace(k, static_cast<std::uint32_t>(found.size()));
        found.push_back(std::move(next));
        depth.push_back(depth[head] + 1);
      }
    }

    std::vector<std::uint32_t> order(found.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (depth[a] != depth[b]) return depth[a] < depth[b];
      return found[a] < found[b];
    });

    const std::size_t size = found.size();
    perms_.reserve(size * nroots);
    length_.resize(size);
    for (std::size_t e = 0; e < size; ++e) {
      const auto& p = found[order[e]];
      perms_.insert(perms_.end(), p.begin(), p.end());
      length_[e] = depth[order[e]];
      index_.emplace(key_of(p), static_cast<ElementId>(e));
    }
    size_ = size;

    generators_.resize(n);
    for (int i = 0; i < n; ++i) generators_[i] = index_.at(key_of(rs_.simple_reflections[i]));

    inverse_.resize(size);
    RootPerm buf(nroots);
    for (std::size_t e = 0; e < size; ++e) {
      const auto* p = perm(static_cast<ElementId>(e));
      for (std::size_t r = 0; r < nroots; ++r) buf[p[r]] = static_cast<std::uint16_t>(r);
      inverse_[e] = index_.at(key_of(buf));
    }

    // Lexicographically first reduced word: peel the smallest left descent.
    first_letter_.assign(size, -1);
    for (std::size_t e = 1; e < size; ++e) {
      for (int i = 0; i < n; ++i) {
        if (length_[multiply(generators_[i], static_cast<ElementId>(e))] < length_[e]) {
          first_letter_[e] = i;
          break;
        }
      }
    }
  }

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank; }
  std::size_t order() const { return size_; }
  ElementId identity() const { return 0; }
  const std::vector<ElementId>& generators() const { return generators_; }
  std::uint32_t length(ElementId e) const { return length_[e]; }
  ElementId inverse(ElementId e) const { return inverse_[e]; }

  const std::uint16_t* perm(ElementId e) const { return perms_.data() + std::size_t{e} * rs_.roots.size(); }

  /// (ab)(r) = a(b(r)). Only the images of the simple roots are needed to
  /// identify the product.
  ElementId multiply(ElementId a, ElementId b) const {
    const auto* pa = perm(a);
    const auto* pb = perm(b);
    Key k{};
    for (int i = 0; i < rs_.rank; ++i) k[i] = pa[pb[i]];
    return index_.at(k);
  }

  ElementId conjugate(ElementId x, ElementId g) const { return multiply(multiply(x, g), inverse_[x]); }

  /// Number of positive roots sent to negative roots.
  std::uint32_t inversions(ElementId e) const {
    const auto* p = perm(e);
    std::uint32_t count = 0;
    for (std::size_t r = 0; r < rs_.num_positive; ++r) {
      if (!rs_.is_positive(p[r])) ++count;
    }
    return count;
  }

  /// Reduced word as 0-based generator indices, leftmost letter first.
  std::vector<int> word(ElementId e) const {
    std::vector<int> w;
    while (e != 0) {
      const int i = first_letter_[e];
      w.push_back(i);
      e = multiply(generators_[i], e);
    }
    return w;
  }

  std::string word_string(ElementId e) const {
    if (e == 0) return "e";
    std::string s;
    for (int i : word(e)) {
      if (!s.empty()) s += '*';
      s += 's' + std::to_string(i + 1);
    }
    return s;
  }

  /// Trace on the reflection representation, read off from the simple-root
  /// coordinates of the images of the simple roots.
  int reflection_trace(ElementId e) const {
    const auto* p = perm(e);
    int tr = 0;
    for (int j = 0; j < rs_.rank; ++j) tr += rs_.roots[p[j]][j];
    return tr;
  }

  ElementId longest_element() const { return static_cast<ElementId>(size_ - 1); }

 private:
  static constexpr std::size_t kMaxKeyRank = 16;
  using Key = std::array<std::uint16_t, kMaxKeyRank>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto v : k) h = (h ^ v) * 1099511628211ull;
      return h;
    }
  };

  Key key_of(const RootPerm& p) const {
    Key k{};
    for (int i = 0; i < rs_.rank; ++i) k[i] = p[i];
    return k;
  }

  RootSystem rs_;
  std::size_t size_ = 0;
  std::vector<std::uint16_t> perms_;
  std::vector<std::uint32_t> length_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> generators_;
  std::vector<int> first_letter_;
  std::unordered_map<Key, ElementId, KeyHash> index_;
};

/// Enumerates W, rejecting early when the known order already exceeds the limit.
inline std::shared_ptr<const WeylGroup> enumerate_group(const RootSystem& rs, std::size_t max_order = 2'000'000) {
  return std::make_shared<const WeylGroup>(rs, max_order);
}

inline std::shared_ptr<const WeylGroup> enumerate_group(const CartanDatum& cartan, std::size_t max_order = 2'000'000) {
  const Integer expected = order_from_degrees(cartan.type_label, cartan.rank);
  if (expected > max_order) {
    throw SizeLimit("|W(" + cartan.name() + ")| = " + expected.str() + " exceeds the configured maximum of " +
                    std::to_string(max_order));
  }
  return enumerate_group(build_root_system(cartan), max_order);
}

}  // namespace weyldl
