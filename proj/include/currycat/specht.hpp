#pragma once

// Specht modules, built from the Young symmetrizer of the canonical
// (row-major) tableau acting on the group algebra Q[S_n]. The left ideal
// Q[S_n] c_lambda is the irreducible with that label; we extract a basis by
// sparse row reduction of the vectors g * c_lambda and read generator
// matrices off the reduced basis.

#include <map>
#include <vector>

#include "currycat/fb_module.hpp"

namespace currycat {

namespace detail {

inline Integer perm_rank(const Permutation& p) {
  int n = p.size();
  Integer rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p(j) < p(i)) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

inline int perm_index(const Permutation& p) {
  return static_cast<int>(perm_rank(p));
}

// Sparse group-algebra vector: (permutation index, coefficient), sorted.
using GAVec = std::vector<std::pair<int, Rational>>;

inline void ga_normalize(GAVec& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  GAVec out;
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, c);
  }
  GAVec pruned;
  for (auto& [i, c] : out)
    if (c != 0) pruned.emplace_back(i, c);
  v = std::move(pruned);
}

// All permutations stabilizing each block of `blocks` setwise.
inline std::vector<Permutation> block_stabilizer(
    int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out;
  std::vector<std::vector<int>> arrangements;  // current arrangement per block
  for (const auto& b : blocks) arrangements.push_back(b);
  auto emit = [&]() {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
      for (std::size_t k = 0; k < blocks[bi].size(); ++k)
        img[blocks[bi][k]] = arrangements[bi][k];
    out.push_back(Permutation(std::move(img)));
  };
  // odometer over per-block permutations
  auto rec = [&](auto&& self, std::size_t bi) -> void {
    if (bi == blocks.size()) {
      emit();
      return;
    }
    std::sort(arrangements[bi].begin(), arrangements[bi].end());
    do {
      self(self, bi + 1);
    } while (std::next_permutation(arrangements[bi].begin(),
                                   arrangements[bi].end()));
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

struct SpechtData {
  int n = 0;
  int dimension = 0;
  std::vector<Mat> gen_mats;  // s_1..s_{n-1} on the ideal basis
};

inline SpechtData build_specht(const std::vector<int>& lambda) {
  using namespace detail;
  int n = 0;
  for (int part : lambda) n += part;
  SpechtData out;
  out.n = n;
  if (n == 0) {
    out.dimension = 1;
    return out;
  }

  // canonical tableau: row r holds consecutive entries
  std::vector<std::vector<int>> rows, cols;
  {
    int next = 0;
    for (int part : lambda) {
      std::vector<int> row;
      for (int c = 0; c < part; ++c) row.push_back(next++);
      rows.push_back(std::move(row));
    }
    int width = lambda.empty() ? 0 : lambda[0];
    for (int c = 0; c < width; ++c) {
      std::vector<int> col;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (c < static_cast<int>(rows[r].size())) col.push_back(rows[r][c]);
      cols.push_back(std::move(col));
    }
  }

  auto rowg = block_stabilizer(n, rows);
  auto colg = block_stabilizer(n, cols);

  // c = (sum over p in R of p) * (sum over q in C of sgn(q) q)
  GAVec c;
  for (const auto& p : rowg)
    for (const auto& q : colg)
      c.emplace_back(perm_index(p * q), Rational(q.sign()));
  ga_normalize(c);

  // all permutations of S_n, indexed consistently with perm_index
  std::vector<Permutation> sn;
  {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      sn.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
  }
  std::vector<int> index_of(sn.size());
  for (std::size_t i = 0; i < sn.size(); ++i)
    index_of[perm_index(sn[i])] = static_cast<int>(i);

  auto left_mult = [&](const Permutation& g, const GAVec& v) {
    GAVec w;
    w.reserve(v.size());
    for (const auto& [i, coef] : v)
      w.emplace_back(perm_index(g * sn[index_of[i]]), coef);
    ga_normalize(w);
    return w;
  };

  // incremental RREF over sparse rows
  std::vector<GAVec> basis;
  std::vector<int> pivots;
  auto reduce = [&](GAVec v) -> GAVec {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Rational coef = 0;
      for (const auto& [i, cv] : v)
        if (i == pivots[k]) {
          coef = cv;
          break;
        }
      if (coef == 0) continue;
      GAVec w = v;
      for (const auto& [i, cv] : basis[k]) w.emplace_back(i, -coef * cv);
      ga_normalize(w);
      v = std::move(w);
    }
    return v;
  };
  auto insert_row = [&](GAVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    Rational lead = v.front().second;
    for (auto& [i, cv] : v) cv /= lead;
    int piv = v.front().first;
    // back-eliminate the new pivot from the existing basis
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Rational coef = 0;
      for (const auto& [i, cv] : basis[k])
        if (i == piv) {
          coef = cv;
          break;
        }
      if (coef == 0) continue;
      GAVec w = basis[k];
      for (const auto& [i, cv] : v) w.emplace_back(i, -coef * cv);
      ga_normalize(w);
      basis[k] = std::move(w);
    }
    basis.push_back(std::move(v));
    pivots.push_back(piv);
  };

  for (const auto& g : sn) insert_row(left_mult(g, c));

  int f = static_cast<int>(basis.size());
  out.dimension = f;

  auto coords = [&](const GAVec& v) {
    Vec coord(f);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (const auto& [i, cv] : v)
        if (i == pivots[k]) coord[k] = cv;
    // check the expression is exact
    GAVec resid = v;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coord[k] != 0)
        for (const auto& [i, cv] : basis[k])
          resid.emplace_back(i, -coord[k] * cv);
    ga_normalize(resid);
    if (!resid.empty())
      throw std::logic_error("specht: vector outside the ideal basis span");
    return coord;
  };

  for (int i = 1; i <= n - 1; ++i) {
    Permutation si = Permutation::coxeter(n, i);
    Mat m(f, f);
    for (int j = 0; j < f; ++j) {
      Vec col = coords(left_mult(si, basis[j]));
      for (int r = 0; r < f; ++r) m(r, j) = col[r];
    }
    out.gen_mats.push_back(std::move(m));
  }
  return out;
}

// Specht module as a truncated FB-module concentrated in degree |lambda|.
inline TruncatedFBModule specht_module(const std::vector<int>& lambda, int N) {
  int n = 0;
  for (int part : lambda) n += part;
  if (n > N) throw std::invalid_argument("specht: |lambda| exceeds truncation");
  SpechtData data = build_specht(lambda);
  TruncatedFBModule m = zero_module(N);
  m.dims[n] = data.dimension;
  m.gens[n] = data.gen_mats;
  return m;
}

}  // namespace currycat
