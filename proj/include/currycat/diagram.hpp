#pragma once

// Partition, Brauer, and restricted partition diagrams between finite sets,
// and Q-linear combinations of them. A diagram from [n] to [m] is a set
// partition of the n bottom labels 0..n-1 and m top labels n..n+m-1.
// Composition g . f glues along the middle set, takes the join partition,
// restricts to the outer labels, and multiplies by delta^k where k is the
// number of join components contained entirely in the middle (closed loops,
// in the Brauer case).

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "currycat/combinatorics.hpp"
#include "currycat/matrix.hpp"
#include "currycat/permutation.hpp"

namespace currycat {

enum class DiagramKind { brauer, partition, restricted };

inline std::string kind_name(DiagramKind k) {
  switch (k) {
    case DiagramKind::brauer: return "brauer";
    case DiagramKind::partition: return "partition";
    case DiagramKind::restricted: return "restricted";
  }
  return "?";
}

struct PartitionDiagram {
  int n = 0, m = 0;                      // bottom, top sizes
  std::vector<std::vector<int>> blocks;  // canonical form; labels 0..n+m-1

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
  }

  bool is_bottom(int label) const { return label < n; }

  bool valid() const {
    std::vector<int> seen(n + m, 0);
    for (const auto& b : blocks) {
      if (b.empty()) return false;
      for (int x : b) {
        if (x < 0 || x >= n + m || seen[x]) return false;
        seen[x] = 1;
      }
    }
    for (int x = 0; x < n + m; ++x)
      if (!seen[x]) return false;
    return true;
  }

  bool is_brauer() const {
    for (const auto& b : blocks)
      if (b.size() != 2) return false;
    return true;
  }

  // each block meets the bottom in at most one point
  bool is_restricted() const {
    for (const auto& b : blocks) {
      int bot = 0;
      for (int x : b)
        if (is_bottom(x)) ++bot;
      if (bot > 1) return false;
    }
    return true;
  }

  bool fits(DiagramKind k) const {
    switch (k) {
      case DiagramKind::brauer: return is_brauer();
      case DiagramKind::partition: return true;
      case DiagramKind::restricted: return is_restricted();
    }
    return false;
  }

  // upwards: every block has at least one top and at most one bottom label
  // (for Brauer this says: no edge inside the bottom).
  bool is_upwards() const {
    for (const auto& b : blocks) {
      int bot = 0, top = 0;
      for (int x : b) (is_bottom(x) ? bot : top)++;
      if (bot > 1 || top < 1) return false;
    }
    return true;
  }
  bool is_downwards() const {
    for (const auto& b : blocks) {
      int bot = 0, top = 0;
      for (int x : b) (is_bottom(x) ? bot : top)++;
      if (top > 1 || bot < 1) return false;
    }
    return true;
  }

  bool operator==(const PartitionDiagram& o) const {
    return n == o.n && m == o.m && blocks == o.blocks;
  }
  bool operator<(const PartitionDiagram& o) const {
    if (n != o.n) return n < o.n;
    if (m != o.m) return m < o.m;
    return blocks < o.blocks;
  }

  static PartitionDiagram identity(int n) {
    PartitionDiagram d;
    d.n = d.m = n;
    for (int i = 0; i < n; ++i) d.blocks.push_back({i, n + i});
    d.canonicalize();
    return d;
  }

  // the diagram of a bijection: bottom i joined to top p(i)
  static PartitionDiagram bijection(const Permutation& p) {
    int n = p.size();
    PartitionDiagram d;
    d.n = d.m = n;
    for (int i = 0; i < n; ++i) d.blocks.push_back({i, n + p(i)});
    d.canonicalize();
    return d;
  }
};

struct ComposedDiagram {
  PartitionDiagram diagram;
  int loops = 0;  // middle-only components
};

// g . f where f: n -> m and g: m -> l.
inline ComposedDiagram compose_diagrams(const PartitionDiagram& g,
                                        const PartitionDiagram& f) {
  if (f.m != g.n) throw std::invalid_argument("compose: size mismatch");
  int n = f.n, mid = f.m, l = g.m;
  // union-find over bottom(0..n-1), middle(n..n+mid-1), top(n+mid..n+mid+l-1)
  int total = n + mid + l;
  std::vector<int> parent(total);
  for (int i = 0; i < total; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& b : f.blocks)
    for (std::size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
  // g's labels shift up by n: bottoms land on the middle range, tops beyond
  for (const auto& b : g.blocks)
    for (std::size_t i = 1; i < b.size(); ++i) unite(n + b[0], n + b[i]);
  // collect components
  std::vector<std::vector<int>> comp(total);
  for (int x = 0; x < total; ++x) comp[find(x)].push_back(x);
  ComposedDiagram out;
  out.diagram.n = n;
  out.diagram.m = l;
  for (int r = 0; r < total; ++r) {
    if (comp[r].empty()) continue;
    std::vector<int> outer;
    for (int x : comp[r]) {
      if (x < n)
        outer.push_back(x);
      else if (x >= n + mid)
        outer.push_back(x - mid);  // top label in the composite
    }
    if (outer.empty())
      ++out.loops;
    else
      out.diagram.blocks.push_back(std::move(outer));
  }
  out.diagram.canonicalize();
  return out;
}

// --- linear combinations ------------------------------------------------

struct DiagramMorphism {
  int n = 0, m = 0;
  DiagramKind kind = DiagramKind::partition;
  std::vector<std::pair<Rational, PartitionDiagram>> terms;  // sorted, merged

  void normalize() {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      return a.second < b.second;
    });
    std::vector<std::pair<Rational, PartitionDiagram>> out;
    for (auto& t : terms) {
      if (!out.empty() && out.back().second == t.second)
        out.back().first += t.first;
      else
        out.push_back(t);
    }
    terms.clear();
    for (auto& t : out)
      if (t.first != 0) terms.push_back(std::move(t));
  }

  bool operator==(const DiagramMorphism& o) const {
    return n == o.n && m == o.m && kind == o.kind && terms == o.terms;
  }

  bool is_zero() const { return terms.empty(); }

  static DiagramMorphism single(DiagramKind k, const PartitionDiagram& d,
                                const Rational& c = Rational(1)) {
    DiagramMorphism f;
    f.n = d.n;
    f.m = d.m;
    f.kind = k;
    if (c != 0) f.terms.emplace_back(c, d);
    return f;
  }

  static DiagramMorphism identity(DiagramKind k, int n,
                                  const Rational& c = Rational(1)) {
    return single(k, PartitionDiagram::identity(n), c);
  }

  static DiagramMorphism zero(DiagramKind k, int n, int m) {
    DiagramMorphism f;
    f.n = n;
    f.m = m;
    f.kind = k;
    return f;
  }

  DiagramMorphism operator+(const DiagramMorphism& o) const {
    DiagramMorphism f = *this;
    for (const auto& t : o.terms) f.terms.push_back(t);
    f.normalize();
    return f;
  }
  DiagramMorphism operator*(const Rational& c) const {
    DiagramMorphism f = *this;
    for (auto& t : f.terms) t.first *= c;
    f.normalize();
    return f;
  }
};

inline DiagramMorphism compose(const DiagramMorphism& g,
                               const DiagramMorphism& f,
                               const Rational& delta) {
  if (f.m != g.n) throw std::invalid_argument("compose: size mismatch");
  if (f.kind != g.kind) throw std::invalid_argument("compose: kind mismatch");
  DiagramMorphism out;
  out.n = f.n;
  out.m = g.m;
  out.kind = f.kind;
  for (const auto& [cg, dg] : g.terms)
    for (const auto& [cf, df] : f.terms) {
      ComposedDiagram cd = compose_diagrams(dg, df);
      Rational coeff = cg * cf;
      for (int i = 0; i < cd.loops; ++i) coeff *= delta;
      if (coeff != 0) out.terms.emplace_back(coeff, cd.diagram);
    }
  out.normalize();
  return out;
}

// --- generators ----------------------------------------------------------
//
// Generators are stated on a frame S = {0..s-1}; the morphism is between the
// order-collapsed copies of S minus the named subsets.

namespace detail {
// Builds a diagram from src = sorted labels of the source subset of S,
// tgt likewise, one distinguished block given by (srcPart, tgtPart) in S
// coordinates, and identity strands on all shared remaining labels.
inline PartitionDiagram frame_diagram(const std::vector<int>& src,
                                      const std::vector<int>& tgt,
                                      const std::vector<int>& srcPart,
                                      const std::vector<int>& tgtPart) {
  PartitionDiagram d;
  d.n = static_cast<int>(src.size());
  d.m = static_cast<int>(tgt.size());
  auto spos = [&](int x) {
    return static_cast<int>(std::lower_bound(src.begin(), src.end(), x) -
                            src.begin());
  };
  auto tpos = [&](int x) {
    return d.n +
           static_cast<int>(std::lower_bound(tgt.begin(), tgt.end(), x) -
                            tgt.begin());
  };
  std::vector<int> block;
  for (int x : srcPart) block.push_back(spos(x));
  for (int x : tgtPart) block.push_back(tpos(x));
  if (!block.empty()) d.blocks.push_back(block);
  for (int x : src) {
    if (std::find(srcPart.begin(), srcPart.end(), x) != srcPart.end())
      continue;
    // x is shared between source and target (identity strand)
    d.blocks.push_back({spos(x), tpos(x)});
  }
  d.canonicalize();
  return d;
}

inline std::vector<int> frame_minus(int s, const std::vector<int>& removed) {
  std::vector<int> out;
  for (int x = 0; x < s; ++x)
    if (std::find(removed.begin(), removed.end(), x) == removed.end())
      out.push_back(x);
  return out;
}
}  // namespace detail

// Brauer cup eta^S_{i,j}: S\{i,j} -> S, edge between i and j in the target.
inline PartitionDiagram brauer_cup(int s, int i, int j) {
  auto src = detail::frame_minus(s, {i, j});
  auto tgt = detail::frame_minus(s, {});
  return detail::frame_diagram(src, tgt, {}, {i, j});
}

// Brauer cap (eta')^S_{i,j}: S -> S\{i,j}.
inline PartitionDiagram brauer_cap(int s, int i, int j) {
  auto src = detail::frame_minus(s, {});
  auto tgt = detail::frame_minus(s, {i, j});
  return detail::frame_diagram(src, tgt, {i, j}, {});
}

// Restricted partition eta^S_{i,A}: S\A -> S\{i}, block {i} u A.
inline PartitionDiagram restricted_eta(int s, int i, std::vector<int> A) {
  std::sort(A.begin(), A.end());
  auto src = detail::frame_minus(s, A);
  auto tgt = detail::frame_minus(s, {i});
  return detail::frame_diagram(src, tgt, {i}, A);
}

// Restricted partition zeta^S_A: S\A -> S with A a single (top) block.
// A = {} is the convention zeta^S_{} = delta . id, handled at morphism level.
inline DiagramMorphism zeta_morphism(int s, std::vector<int> A,
                                     const Rational& delta,
                                     DiagramKind kind = DiagramKind::restricted) {
  std::sort(A.begin(), A.end());
  if (A.empty()) return DiagramMorphism::identity(kind, s, delta);
  auto src = detail::frame_minus(s, A);
  auto tgt = detail::frame_minus(s, {});
  return DiagramMorphism::single(
      kind, detail::frame_diagram(src, tgt, {}, A));
}

// Partition eta^S_{A,B}: S\B -> S\A with A u B a single block.
// A = B = {} is the convention eta^S_{{},{}} = delta . id.
inline DiagramMorphism partition_eta_morphism(int s, std::vector<int> A,
                                              std::vector<int> B,
                                              const Rational& delta) {
  std::sort(A.begin(), A.end());
  std::sort(B.begin(), B.end());
  if (A.empty() && B.empty())
    return DiagramMorphism::identity(DiagramKind::partition, s, delta);
  auto src = detail::frame_minus(s, B);
  auto tgt = detail::frame_minus(s, A);
  return DiagramMorphism::single(DiagramKind::partition,
                                 detail::frame_diagram(src, tgt, A, B));
}

// iota^S_{i,j} as a diagram: the bijection S\{j} -> S\{i}, i |-> j.
inline PartitionDiagram iota_diagram(int s, int i, int j) {
  auto src = detail::frame_minus(s, {j});
  auto tgt = detail::frame_minus(s, {i});
  return detail::frame_diagram(src, tgt, {i}, {j});
}

// A function f: [m] -> [n] as a restricted partition diagram [n] -> [m],
// with blocks {x} u f^{-1}(x).
inline PartitionDiagram embed_fa(int n, const std::vector<int>& f) {
  int m = static_cast<int>(f.size());
  PartitionDiagram d;
  d.n = n;
  d.m = m;
  for (int x = 0; x < n; ++x) {
    std::vector<int> block{x};
    for (int y = 0; y < m; ++y)
      if (f[y] == x) block.push_back(n + y);
    d.blocks.push_back(std::move(block));
  }
  d.canonicalize();
  return d;
}

// --- enumeration ---------------------------------------------------------

inline std::vector<PartitionDiagram> enumerate_diagrams(int n, int m,
                                                        DiagramKind kind,
                                                        int bound = 12) {
  if (n + m > bound) throw std::invalid_argument("enumerate: bound exceeded");
  std::vector<PartitionDiagram> out;
  if (kind == DiagramKind::brauer) {
    for (const auto& matching : perfect_matchings(n + m)) {
      PartitionDiagram d;
      d.n = n;
      d.m = m;
      for (const auto& [a, b] : matching) d.blocks.push_back({a, b});
      d.canonicalize();
      out.push_back(std::move(d));
    }
  } else {
    for (const auto& blocks : set_partitions(n + m)) {
      PartitionDiagram d;
      d.n = n;
      d.m = m;
      d.blocks = blocks;
      d.canonicalize();
      if (kind == DiagramKind::restricted && !d.is_restricted()) continue;
      out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t hom_dim(int n, int m, DiagramKind kind, int bound = 12) {
  return enumerate_diagrams(n, m, kind, bound).size();
}

// --- triangular factorization ---------------------------------------------

struct TriangularFactorization {
  PartitionDiagram up;    // y -> m, upwards
  PartitionDiagram down;  // n -> y, downwards
  int middle = 0;         // y
};

// Factors d = up . down with minimal middle (= number of through blocks).
// Through blocks take their middle label in order of least bottom label, so
// an upwards diagram factors as (d, identity).
inline TriangularFactorization triangular_factorize(
    const PartitionDiagram& d) {
  std::vector<const std::vector<int>*> through, bottomOnly, topOnly;
  for (const auto& b : d.blocks) {
    bool hasBot = false, hasTop = false;
    for (int x : b) (x < d.n ? hasBot : hasTop) = true;
    if (hasBot && hasTop)
      through.push_back(&b);
    else if (hasBot)
      bottomOnly.push_back(&b);
    else
      topOnly.push_back(&b);
  }
  // canonical blocks are sorted by least label, so `through` is already in
  // order of least bottom label
  int y = static_cast<int>(through.size());
  TriangularFactorization out;
  out.middle = y;
  out.down.n = d.n;
  out.down.m = y;
  out.up.n = y;
  out.up.m = d.m;
  for (int t = 0; t < y; ++t) {
    std::vector<int> vblock, ublock{t};
    for (int x : *through[t]) {
      if (x < d.n)
        vblock.push_back(x);
      else
        ublock.push_back(y + (x - d.n));
    }
    vblock.push_back(d.n + t);
    out.down.blocks.push_back(std::move(vblock));
    out.up.blocks.push_back(std::move(ublock));
  }
  for (const auto* b : bottomOnly) out.down.blocks.push_back(*b);
  for (const auto* b : topOnly) {
    std::vector<int> block;
    for (int x : *b) block.push_back(y + (x - d.n));
    out.up.blocks.push_back(std::move(block));
  }
  out.down.canonicalize();
  out.up.canonicalize();
  return out;
}

}  // namespace currycat
