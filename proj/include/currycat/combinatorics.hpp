#pragma once

// Small enumeration helpers shared across the library. Subsets of {0..n-1}
// are bitmasks; mask order (numeric ascending) is colexicographic order on
// sets, which is the basis order used everywhere.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "currycat/rational.hpp"

namespace currycat {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> v;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) v.push_back(i);
  return v;
}

inline Mask mask_of(const std::vector<int>& v) {
  Mask m = 0;
  for (int x : v) m |= (Mask(1) << x);
  return m;
}

// All subsets of {0..n-1}, colex order.
inline std::vector<Mask> all_subsets(int n) {
  std::vector<Mask> out;
  out.reserve(std::size_t(1) << n);
  for (Mask m = 0; m < (Mask(1) << n); ++m) out.push_back(m);
  return out;
}

// Subsets of {0..n-1} of size k, colex order.
inline std::vector<Mask> subsets_of_size(int n, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (popcount(m) == k) out.push_back(m);
  return out;
}

// Position of x within the sorted elements of mask m (x must be in m).
inline int rank_in_mask(Mask m, int x) {
  assert(m & (Mask(1) << x));
  return popcount(m & ((Mask(1) << x) - 1));
}

// All set partitions of {0..n-1}, as block lists (each block sorted, blocks
// ordered by least element). Enumerated via restricted growth strings.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> rgs(n, 0);
  while (true) {
    int nblocks = 0;
    for (int i = 0; i < n; ++i) nblocks = std::max(nblocks, rgs[i] + 1);
    std::vector<std::vector<int>> blocks(nblocks);
    for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i);
    out.push_back(std::move(blocks));
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int maxprev = 0;
      for (int j = 0; j < i; ++j) maxprev = std::max(maxprev, rgs[j]);
      if (rgs[i] <= maxprev) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

// All perfect matchings of {0..n-1} (empty list element when n is odd).
inline std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (n % 2 != 0) return out;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      out.push_back(cur);
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.emplace_back(first, j);
      self(self);
      cur.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return out;
}

inline Integer bell_number(int n) {
  // Bell triangle.
  std::vector<std::vector<Integer>> tri;
  tri.push_back({Integer(1)});
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> row;
    row.push_back(tri.back().back());
    for (std::size_t j = 0; j + 1 <= tri.back().size(); ++j)
      row.push_back(row.back() + tri.back()[j]);
    tri.push_back(std::move(row));
  }
  return tri[n][0];
}

inline Integer double_factorial(int n) {
  // (-1)!! = 1 by convention.
  Integer r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Integer partitions of n, weakly decreasing parts, lexicographically
// descending ((n) first, (1^n) last).
inline std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Rows i (1-based) where a box can be added to lambda keeping a partition.
// Row len(lambda)+1 (starting a new row) is always addable.
inline std::vector<int> addable_rows(const std::vector<int>& lambda) {
  std::vector<int> rows;
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i) {
    int above = (i == 0) ? (lambda.empty() ? 0 : lambda[0] + 1) : lambda[i - 1];
    if (lambda[i] < above) rows.push_back(i + 1);
  }
  rows.push_back(static_cast<int>(lambda.size()) + 1);
  return rows;
}

inline std::vector<int> add_box(const std::vector<int>& lambda, int row) {
  std::vector<int> mu = lambda;
  if (row == static_cast<int>(lambda.size()) + 1)
    mu.push_back(1);
  else
    mu[row - 1] += 1;
  return mu;
}

}  // namespace currycat
