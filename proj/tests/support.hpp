#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls the code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "weyldl/dl.hpp"
#include "weyldl/verify.hpp"

namespace weyldl::testing {

/// One context per (type, rank), built on first use.
inline const WeylContext& context(TypeLabel t, int rank) {
  static std::map<std::pair<char, int>, std::unique_ptr<WeylContext>> cache;
  auto& slot = cache[{to_char(t), rank}];
  if (!slot) slot = std::make_unique<WeylContext>(make_context(build_cartan(t, rank)));
  return *slot;
}

inline std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Orbit partition under conjugation by every element (not just generators).
inline std::vector<std::set<ElementId>> brute_force_classes(const WeylGroup& w) {
  std::vector<std::set<ElementId>> out;
  std::vector<bool> seen(w.order(), false);
  for (ElementId g = 0; g < w.order(); ++g) {
    if (seen[g]) continue;
    std::set<ElementId> cls;
    for (ElementId x = 0; x < w.order(); ++x) cls.insert(w.multiply(w.multiply(x, g), w.inverse(x)));
    for (auto e : cls) seen[e] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

/// chi^lambda(mu) by the Frobenius formula: the coefficient of x^(lambda+delta)
/// in Vandermonde(x) * prod_k p_{mu_k}(x), expanded by brute force.
inline std::int64_t frobenius_character(const Partition& lambda, const Partition& mu) {
  const int n = static_cast<int>(lambda.size());
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::int64_t total = 0;
  do {
    std::vector<int> target(n);
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      target[i] = lambda[i] - i + sigma[i];
      if (target[i] < 0) ok = false;
    }
    if (!ok) continue;
    // Count assignments of the cycles of mu to variables hitting target.
    std::int64_t ways = 0;
    std::size_t combos = 1;
    for (std::size_t k = 0; k < mu.size(); ++k) combos *= static_cast<std::size_t>(n);
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t c = code;
      std::vector<int> exps(n, 0);
      for (std::size_t k = 0; k < mu.size(); ++k) {
        exps[c % n] += mu[k];
        c /= n;
      }
      if (exps == target) ++ways;
    }
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (sigma[i] > sigma[j]) ++inversions;
      }
    }
    total += (inversions % 2 == 0) ? ways : -ways;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

/// Permutation of {0..rank} induced by a type-A Weyl group element, read off
/// from its action on the roots e_0 - e_j.
inline std::vector<int> points_permutation(const WeylGroup& w, ElementId e) {
  const auto& rs = w.root_system();
  const int n = rs.rank;
  auto endpoints = [&](const RootVector& v) {
    // Support [a, b) with sign; returns (from, to) with root = e_from - e_to.
    int a = -1;
    int b = -1;
    int sgn = 0;
    for (int k = 0; k < n; ++k) {
      if (v[k] != 0) {
        if (a < 0) a = k;
        b = k + 1;
        sgn = v[k];
      }
    }
    return sgn > 0 ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  std::map<RootVector, std::size_t> index;
  for (std::size_t k = 0; k < rs.roots.size(); ++k) index[rs.roots[k]] = k;
  std::vector<int> sigma(n + 1, -1);
  const auto* p = w.perm(e);
  for (int j = 1; j <= n; ++j) {
    RootVector root(n, 0);
    for (int k = 0; k < j; ++k) root[k] = 1;
    const auto [from, to] = endpoints(rs.roots[p[index.at(root)]]);
    sigma[0] = from;
    sigma[j] = to;
  }
  return sigma;
}

}  // namespace weyldl::testing
