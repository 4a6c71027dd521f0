#pragma once

// Integer partitions and symmetric-group characters by the
// Murnaghan-Nakayama rule. Used to attach partition labels to the
// irreducible characters of type A.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace weyldl {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

/// All partitions of n, (n) first, in descending lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline Partition transpose(const Partition& lambda) {
  Partition t;
  if (lambda.empty()) return t;
  for (int j = 1; j <= lambda.front(); ++j) {
    int count = 0;
    for (int part : lambda) {
      if (part >= j) ++count;
    }
    t.push_back(count);
  }
  return t;
}

inline std::string partition_string(const Partition& lambda) {
  std::string s = "(";
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(lambda[k]);
  }
  return s + ")";
}

/// Cycle type (descending) of a permutation of {0..n-1}.
inline Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  Partition mu;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    mu.push_back(len);
  }
  std::sort(mu.rbegin(), mu.rend());
  return mu;
}

/// chi^lambda evaluated on the class of cycle type mu, by repeatedly
/// stripping rim hooks on the beta-set (first-column hook lengths) of lambda.
inline std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  std::function<std::int64_t(const std::vector<int>&, std::size_t)> rec = [&](const std::vector<int>& beta,
                                                                              std::size_t pos) -> std::int64_t {
    if (pos == mu.size()) return 1;
    auto key = std::make_pair(beta, pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu[pos];
    std::int64_t total = 0;
    for (std::size_t k = 0; k < beta.size(); ++k) {
      const int b = beta[k];
      const int target = b - r;
      if (target < 0 || std::binary_search(beta.begin(), beta.end(), target)) continue;
      int between = 0;
      for (int x : beta) {
        if (x > target && x < b) ++between;
      }
      std::vector<int> next = beta;
      next[k] = target;
      std::sort(next.begin(), next.end());
      const std::int64_t sub = rec(next, pos + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
  };

  std::vector<int> beta;
  const int len = static_cast<int>(lambda.size());
  for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + (len - 1 - i));
  std::sort(beta.begin(), beta.end());
  return rec(beta, 0);
}

}  // namespace weyldl
