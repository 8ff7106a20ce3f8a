#pragma once

// Modules over the diagram categories: the principal (representable) modules
// M(S) = span of diagrams [k] -> S, with morphisms acting by
// post-composition, plus the analogous star-category modules and FA^op
// functor modules. These are the canonical test bank for the comparison
// functors.

#include <vector>

#include "currycat/diagram.hpp"
#include "currycat/fb_module.hpp"
#include "currycat/operations.hpp"
#include "currycat/star.hpp"

namespace currycat {

struct DiagramModule {
  DiagramKind kind = DiagramKind::partition;
  Rational param;  // the category parameter entering composition
  int k = 0;       // source object size of the principal module
  TruncatedFBModule fb;
  std::vector<std::vector<PartitionDiagram>> basis;  // diagrams [k] -> [n]
  std::vector<std::map<PartitionDiagram, int>> index;

  // matrix of post-composition with f: [srcDeg] -> [tgtDeg]
  Mat action(const DiagramMorphism& f) const {
    int a = f.n, b = f.m;
    if (a > fb.truncation || b > fb.truncation)
      throw std::invalid_argument("diagram module: degree beyond truncation");
    Mat out(fb.dim(b), fb.dim(a));
    for (std::size_t col = 0; col < basis[a].size(); ++col) {
      DiagramMorphism d = DiagramMorphism::single(kind, basis[a][col]);
      DiagramMorphism comp = compose(f, d, param);
      for (const auto& [c, diag] : comp.terms) {
        auto it = index[b].find(diag);
        if (it == index[b].end())
          throw std::logic_error("diagram module: image outside basis");
        out(it->second, col) += c;
      }
    }
    return out;
  }
};

inline DiagramModule principal_module(DiagramKind kind, int k, int N,
                                      const Rational& param, int bound = 12) {
  if (k > N) throw std::invalid_argument("principal_module: k exceeds N");
  DiagramModule M;
  M.kind = kind;
  M.param = param;
  M.k = k;
  M.fb = zero_module(N);
  M.basis.resize(N + 1);
  M.index.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    M.basis[n] = enumerate_diagrams(k, n, kind, bound);
    for (std::size_t i = 0; i < M.basis[n].size(); ++i)
      M.index[n][M.basis[n][i]] = static_cast<int>(i);
    M.fb.dims[n] = static_cast<int>(M.basis[n].size());
  }
  for (int n = 0; n <= N; ++n) {
    M.fb.gens[n].clear();
    for (int i = 1; i <= n - 1; ++i) {
      DiagramMorphism s = DiagramMorphism::single(
          kind, PartitionDiagram::bijection(Permutation::coxeter(n, i)));
      M.fb.gens[n].push_back(M.action(s));
    }
  }
  return M;
}

// --- star modules ------------------------------------------------------------

struct StarModule {
  Rational delta, epsilon;
  int k = 0;
  TruncatedFBModule fb;
  struct Entry {
    Mask kMask = 0, sMask = 0;     // first-factor parts of [k] and [n]
    PartitionDiagram d1, d2;       // P(delta) and P(epsilon) components
    bool operator<(const Entry& o) const {
      return std::tie(kMask, sMask, d1, d2) <
             std::tie(o.kMask, o.sMask, o.d1, o.d2);
    }
  };
  std::vector<std::vector<Entry>> basis;
  std::vector<std::map<Entry, int>> index;

  StarMorphism entry_as_morphism(int n, const Entry& e) const {
    StarMorphism f;
    f.n = k;
    f.m = n;
    StarTerm t;
    t.coeff = 1;
    t.srcMask = e.kMask;
    t.tgtMask = e.sMask;
    t.d1 = e.d1;
    t.d2 = e.d2;
    f.terms.push_back(std::move(t));
    f.normalize();
    return f;
  }

  Mat action(const StarMorphism& f) const {
    int a = f.n, b = f.m;
    if (a > fb.truncation || b > fb.truncation)
      throw std::invalid_argument("star module: degree beyond truncation");
    Mat out(fb.dim(b), fb.dim(a));
    for (std::size_t col = 0; col < basis[a].size(); ++col) {
      StarMorphism comp =
          star_compose(f, entry_as_morphism(a, basis[a][col]), delta, epsilon);
      for (const auto& t : comp.terms) {
        Entry e{t.srcMask, t.tgtMask, t.d1, t.d2};
        auto it = index[b].find(e);
        if (it == index[b].end())
          throw std::logic_error("star module: image outside basis");
        out(it->second, col) += t.coeff;
      }
    }
    return out;
  }
};

inline StarModule principal_star_module(int k, int N, const Rational& delta,
                                        const Rational& epsilon,
                                        int bound = 12) {
  StarModule M;
  M.delta = delta;
  M.epsilon = epsilon;
  M.k = k;
  M.fb = zero_module(N);
  M.basis.resize(N + 1);
  M.index.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    for (Mask km = 0; km < (Mask(1) << k); ++km)
      for (Mask sm = 0; sm < (Mask(1) << n); ++sm) {
        int k1 = popcount(km), s1 = popcount(sm);
        for (const auto& d1 :
             enumerate_diagrams(k1, s1, DiagramKind::partition, bound))
          for (const auto& d2 : enumerate_diagrams(
                   k - k1, n - s1, DiagramKind::partition, bound)) {
            StarModule::Entry e{km, sm, d1, d2};
            M.index[n][e] = static_cast<int>(M.basis[n].size());
            M.basis[n].push_back(e);
          }
      }
    M.fb.dims[n] = static_cast<int>(M.basis[n].size());
  }
  for (int n = 0; n <= N; ++n) {
    M.fb.gens[n].clear();
    for (int i = 1; i <= n - 1; ++i)
      M.fb.gens[n].push_back(
          M.action(star_bijection(Permutation::coxeter(n, i))));
  }
  return M;
}

// The star morphism realizing the generator block A -> B in the first factor
// (with the identity of the complement spread over both factors), on the
// frame S = {0..s-1}: a morphism S\B -> S\A.
inline StarMorphism star_block_morphism(int s, Mask A, Mask B,
                                        bool inSecondFactor) {
  StarMorphism f;
  f.n = s - popcount(B);
  f.m = s - popcount(A);
  Mask rest = ((Mask(1) << s) - 1) & ~(A | B);
  auto srcLabels = mask_elements(((Mask(1) << s) - 1) & ~B);
  auto tgtLabels = mask_elements(((Mask(1) << s) - 1) & ~A);
  auto posIn = [](const std::vector<int>& v, int x) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) -
                            v.begin());
  };
  // enumerate splits rest = U1 u U2 (U1 to the factor carrying the block)
  std::vector<int> restElems = mask_elements(rest);
  for (Mask pick = 0; pick < (Mask(1) << restElems.size()); ++pick) {
    Mask U1 = 0;
    for (std::size_t t = 0; t < restElems.size(); ++t)
      if (pick & (Mask(1) << t)) U1 |= Mask(1) << restElems[t];
    Mask U2 = rest & ~U1;
    // diagram carrying the block: (A u U1) -> (B u U1)
    std::vector<int> bsrc = mask_elements(A | U1), btgt = mask_elements(B | U1);
    PartitionDiagram blockDiag = detail::frame_diagram(
        bsrc, btgt, mask_elements(A), mask_elements(B));
    PartitionDiagram idDiag = PartitionDiagram::identity(popcount(U2));
    StarTerm t;
    t.coeff = 1;
    if (!inSecondFactor) {
      t.d1 = blockDiag;
      t.d2 = idDiag;
      for (int x : bsrc) t.srcMask |= Mask(1) << posIn(srcLabels, x);
      for (int x : btgt) t.tgtMask |= Mask(1) << posIn(tgtLabels, x);
    } else {
      t.d1 = idDiag;
      t.d2 = blockDiag;
      for (int x : mask_elements(U2)) {
        t.srcMask |= Mask(1) << posIn(srcLabels, x);
        t.tgtMask |= Mask(1) << posIn(tgtLabels, x);
      }
    }
    f.terms.push_back(std::move(t));
  }
  f.normalize();
  return f;
}

// --- FA^op functor modules -----------------------------------------------------

// M(S) = free module on Hom_FA(S, X); functions act by precomposition.
struct FAModule {
  int xSize = 1;
  TruncatedFBModule fb;
  // basis of M([n]): all functions [n] -> X as vectors, ordered
  // lexicographically
  std::vector<std::vector<std::vector<int>>> basis;
  std::vector<std::map<std::vector<int>, int>> index;

  // precomposition with f: [a] -> [b], giving M([b]) -> M([a])
  Mat precompose(const std::vector<int>& f, int b) const {
    int a = static_cast<int>(f.size());
    Mat out(fb.dim(a), fb.dim(b));
    for (std::size_t col = 0; col < basis[b].size(); ++col) {
      const auto& h = basis[b][col];
      std::vector<int> hf(a);
      for (int t = 0; t < a; ++t) hf[t] = h[f[t]];
      out(index[a].at(hf), col) += 1;
    }
    return out;
  }
};

inline FAModule fa_functor_module(int xSize, int N) {
  FAModule M;
  M.xSize = xSize;
  M.fb = zero_module(N);
  M.basis.resize(N + 1);
  M.index.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    std::vector<int> h(n, 0);
    while (true) {
      M.index[n][h] = static_cast<int>(M.basis[n].size());
      M.basis[n].push_back(h);
      int i = 0;
      for (; i < n; ++i) {
        if (++h[i] < xSize) break;
        h[i] = 0;
      }
      if (i == n) break;
      // re-sort not needed: odometer order is deterministic
    }
    if (n == 0 && M.basis[0].empty()) {
      M.basis[0].push_back({});
      M.index[0][{}] = 0;
    }
    M.fb.dims[n] = static_cast<int>(M.basis[n].size());
  }
  for (int n = 0; n <= N; ++n) {
    M.fb.gens[n].clear();
    for (int i = 1; i <= n - 1; ++i) {
      // sigma acts by h -> h . sigma^{-1}; as precomposition this is
      // precompose(sigma^{-1}) read contravariantly, i.e. precompose with
      // the transposition itself
      std::vector<int> tr(n);
      for (int t = 0; t < n; ++t) tr[t] = t;
      std::swap(tr[i - 1], tr[i]);
      M.fb.gens[n].push_back(M.precompose(tr, n));
    }
  }
  return M;
}

}  // namespace currycat
