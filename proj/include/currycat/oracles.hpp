#pragma once

// Independent oracles used by the acceptance battery and the unit tests.
// Everything in this header deliberately avoids the main implementation
// paths: dimensions come from direct enumeration of raw structures, and the
// Weyl commutator oracle rewrites words one swap at a time.

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "currycat/combinatorics.hpp"
#include "currycat/rational.hpp"

namespace currycat {
namespace oracle {

// Number of standard Young tableaux of shape lambda, by backtracking over
// all placements.
inline Integer syt_count(const std::vector<int>& lambda) {
  int n = 0;
  for (int p : lambda) n += p;
  if (n == 0) return 1;
  std::vector<std::vector<int>> fill(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r)
    fill[r].assign(lambda[r], 0);
  Integer count = 0;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      ++count;
      return;
    }
    for (std::size_t r = 0; r < fill.size(); ++r) {
      int c = 0;
      while (c < lambda[r] && fill[r][c] != 0) ++c;
      if (c == lambda[r]) continue;
      if (r > 0 && (c >= lambda[r - 1] || fill[r - 1][c] == 0)) continue;
      fill[r][c] = next;
      self(self, next + 1);
      fill[r][c] = 0;
    }
  };
  rec(rec, 1);
  return count;
}

// Perfect matchings of n points, counted by generating all permutations and
// reading consecutive pairs, deduplicated as canonical pair sets.
inline Integer matching_count_bruteforce(int n) {
  if (n % 2 != 0) return 0;
  if (n == 0) return 1;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::set<std::vector<std::pair<int, int>>> seen;
  do {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; i += 2)
      pairs.emplace_back(std::min(perm[i], perm[i + 1]),
                         std::max(perm[i], perm[i + 1]));
    std::sort(pairs.begin(), pairs.end());
    seen.insert(std::move(pairs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<int>(seen.size());
}

// Set partitions of {0..n-1}, enumerated by inserting one element at a time
// into an existing block or a new one.
inline Integer set_partition_count_bruteforce(int n) {
  Integer count = 0;
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int next) -> void {
    if (next == n) {
      ++count;
      return;
    }
    for (auto& b : blocks) {
      b.push_back(next);
      self(self, next + 1);
      b.pop_back();
    }
    blocks.push_back({next});
    self(self, next + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  return count;
}

// --- Weyl algebra normal ordering -----------------------------------------
//
// Words over the alphabet xi_1..xi_n (creation) and eta_1..eta_n
// (annihilation), rewritten to normal order using only the single relation
// eta_i xi_i = xi_i eta_i + 1, one adjacent swap at a time.

struct WeylLetter {
  bool eta;  // false: xi_i, true: eta_i
  int var;
  bool operator<(const WeylLetter& o) const {
    return std::tie(eta, var) < std::tie(o.eta, o.var);
  }
  bool operator==(const WeylLetter& o) const {
    return eta == o.eta && var == o.var;
  }
};

using WeylWord = std::vector<WeylLetter>;

// xi^alpha eta^sigma as a normal-ordered word.
inline WeylWord monomial_word(const std::vector<int>& alpha,
                              const std::vector<int>& sigma) {
  WeylWord w;
  for (int i = 0; i < static_cast<int>(alpha.size()); ++i)
    for (int k = 0; k < alpha[i]; ++k) w.push_back({false, i});
  for (int i = 0; i < static_cast<int>(sigma.size()); ++i)
    for (int k = 0; k < sigma[i]; ++k) w.push_back({true, i});
  return w;
}

// Key for a normal-ordered monomial: (alpha, sigma) exponent vectors.
using WeylMonomial = std::pair<std::vector<int>, std::vector<int>>;
using WeylPoly = std::map<WeylMonomial, Rational>;

inline void normal_order_into(const WeylWord& w, const Rational& coeff,
                              int nvars, WeylPoly& out) {
  // find the first inversion: an eta immediately before a xi
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].eta && !w[i + 1].eta) {
      WeylWord swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      normal_order_into(swapped, coeff, nvars, out);
      if (w[i].var == w[i + 1].var) {
        WeylWord contracted;
        for (std::size_t j = 0; j < w.size(); ++j)
          if (j != i && j != i + 1) contracted.push_back(w[j]);
        normal_order_into(contracted, coeff, nvars, out);
      }
      return;
    }
  }
  // already normal ordered
  std::vector<int> alpha(nvars, 0), sigma(nvars, 0);
  for (const auto& l : w) (l.eta ? sigma : alpha)[l.var] += 1;
  out[{alpha, sigma}] += coeff;
}

inline WeylPoly normal_order(const WeylWord& w, int nvars) {
  WeylPoly out;
  normal_order_into(w, 1, nvars, out);
  WeylPoly pruned;
  for (auto& [k, c] : out)
    if (c != 0) pruned.insert({k, c});
  return pruned;
}

// [xi^a eta^s, xi^b eta^t] by concatenating words both ways and rewriting.
inline WeylPoly commutator_by_reordering(const std::vector<int>& a,
                                         const std::vector<int>& s,
                                         const std::vector<int>& b,
                                         const std::vector<int>& t) {
  int nvars = static_cast<int>(a.size());
  WeylWord xy = monomial_word(a, s), yx = monomial_word(b, t);
  WeylWord fwd = xy, bwd = yx;
  fwd.insert(fwd.end(), yx.begin(), yx.end());
  bwd.insert(bwd.end(), xy.begin(), xy.end());
  WeylPoly out;
  normal_order_into(fwd, 1, nvars, out);
  normal_order_into(bwd, -1, nvars, out);
  WeylPoly pruned;
  for (auto& [k, c] : out)
    if (c != 0) pruned.insert({k, c});
  return pruned;
}

}  // namespace oracle
}  // namespace currycat
