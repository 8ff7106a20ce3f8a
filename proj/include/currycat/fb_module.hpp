#pragma once

// Truncated FB-modules: sequences (M_n)_{0<=n<=N} of symmetric-group
// representations over Q, given by generator matrices for the adjacent
// transpositions s_1..s_{n-1}. Conventions used throughout:
//   - every abstract finite set of size n is identified with {0..n-1}; a
//     subset of a frame is identified with {0..k-1} by the unique
//     order-preserving bijection;
//   - matrices act on column vectors from the left;
//   - the induction tensor product (M (x) N)(S) = sum over A <= S of
//     M(A) (x) N(S \ A) is ordered by (A in colex order, M index, N index).

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "currycat/combinatorics.hpp"
#include "currycat/matrix.hpp"
#include "currycat/permutation.hpp"
#include "currycat/rational.hpp"

namespace currycat {

struct TruncatedFBModule {
  int truncation = 0;                  // N
  std::vector<int> dims;               // dims[n] for n = 0..N
  std::vector<std::vector<Mat>> gens;  // gens[n][i-1] = action of s_i

  int dim(int n) const {
    return (n >= 0 && n <= truncation) ? dims[n] : 0;
  }

  const Mat& gen(int n, int i) const {  // s_i at degree n, 1 <= i <= n-1
    return gens[n][i - 1];
  }

  Mat perm_matrix(int n, const Permutation& p) const {
    if (p.is_identity()) return Mat::identity(dim(n));
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->mats.find({n, p.images()});
      if (it != cache_->mats.end()) return it->second;
    }
    Mat m = Mat::identity(dim(n));
    for (int i : p.coxeter_word()) m = m * gen(n, i);
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      cache_->mats.emplace(std::make_pair(n, p.images()), m);
    }
    return m;
  }

 private:
  // memoized permutation actions; shared across copies, guarded by a mutex
  struct PermCache {
    std::mutex mu;
    std::map<std::pair<int, std::vector<int>>, Mat> mats;
  };
  std::shared_ptr<PermCache> cache_ = std::make_shared<PermCache>();
};

// --- basic modules -----------------------------------------------------

inline TruncatedFBModule zero_module(int N) {
  TruncatedFBModule m;
  m.truncation = N;
  m.dims.assign(N + 1, 0);
  m.gens.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    m.gens[n].assign(std::max(0, n - 1), Mat(0, 0));
  return m;
}

// k in degree 0 only (the monoidal unit).
inline TruncatedFBModule unit_module(int N) {
  TruncatedFBModule m = zero_module(N);
  m.dims[0] = 1;
  return m;
}

// The standard module V: k on singletons.
inline TruncatedFBModule standard_module(int N) {
  TruncatedFBModule m = zero_module(N);
  if (N >= 1) m.dims[1] = 1;
  return m;
}

// Sym^k(V): one-dimensional in degree k with trivial action.
inline TruncatedFBModule sym_power_module(int k, int N) {
  TruncatedFBModule m = zero_module(N);
  if (k <= N) {
    m.dims[k] = 1;
    m.gens[k].assign(std::max(0, k - 1), Mat::identity(1));
  }
  return m;
}

// Div^k(V): same underlying data; the basis vector is t^[S] instead of t^S.
inline TruncatedFBModule div_power_module(int k, int N) {
  return sym_power_module(k, N);
}

// Sym(V) truncated: one-dimensional in every degree, trivial action.
inline TruncatedFBModule sym_algebra_module(int N) {
  TruncatedFBModule m = zero_module(N);
  for (int n = 0; n <= N; ++n) {
    m.dims[n] = 1;
    m.gens[n].assign(std::max(0, n - 1), Mat::identity(1));
  }
  return m;
}

// --- validation --------------------------------------------------------

struct FBValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline FBValidationReport validate_fb_module(const TruncatedFBModule& M) {
  FBValidationReport rep;
  auto note = [&](const std::string& s) { rep.violations.push_back(s); };
  if (static_cast<int>(M.dims.size()) != M.truncation + 1 ||
      static_cast<int>(M.gens.size()) != M.truncation + 1) {
    note("malformed: dims/gens length does not match truncation");
    return rep;
  }
  for (int n = 0; n <= M.truncation; ++n) {
    int d = M.dims[n];
    if (static_cast<int>(M.gens[n].size()) != std::max(0, n - 1)) {
      note("degree " + std::to_string(n) + ": wrong generator count");
      continue;
    }
    for (int i = 1; i <= n - 1; ++i) {
      const Mat& g = M.gen(n, i);
      if (g.rows() != static_cast<std::size_t>(d) ||
          g.cols() != static_cast<std::size_t>(d)) {
        note("degree " + std::to_string(n) + " gen " + std::to_string(i) +
             ": wrong shape");
        continue;
      }
      if (!(g * g).is_identity())
        note("degree " + std::to_string(n) + ": s" + std::to_string(i) +
             "^2 != id");
    }
    for (int i = 1; i + 1 <= n - 1; ++i) {
      const Mat &a = M.gen(n, i), &b = M.gen(n, i + 1);
      if (a.rows() != static_cast<std::size_t>(d) ||
          b.rows() != static_cast<std::size_t>(d))
        continue;
      if (a * b * a != b * a * b)
        note("degree " + std::to_string(n) + ": braid relation fails for s" +
             std::to_string(i) + ",s" + std::to_string(i + 1));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {
        const Mat &a = M.gen(n, i), &b = M.gen(n, j);
        if (a.rows() != static_cast<std::size_t>(d) ||
            b.rows() != static_cast<std::size_t>(d))
          continue;
        if (a * b != b * a)
          note("degree " + std::to_string(n) + ": s" + std::to_string(i) +
               ",s" + std::to_string(j) + " do not commute");
      }
  }
  return rep;
}

// --- morphisms ---------------------------------------------------------

// A map of FB-modules, one matrix per degree (target dim x source dim).
struct FBMorphism {
  std::vector<Mat> mats;  // degree 0..N

  const Mat& at(int n) const { return mats[n]; }
  Mat& at(int n) { return mats[n]; }
  int top_degree() const { return static_cast<int>(mats.size()) - 1; }

  bool operator==(const FBMorphism& o) const { return mats == o.mats; }
};

inline FBMorphism fb_identity(const TruncatedFBModule& M) {
  FBMorphism f;
  for (int n = 0; n <= M.truncation; ++n)
    f.mats.push_back(Mat::identity(M.dim(n)));
  return f;
}

inline FBMorphism fb_zero(const TruncatedFBModule& src,
                          const TruncatedFBModule& tgt) {
  FBMorphism f;
  for (int n = 0; n <= src.truncation; ++n)
    f.mats.push_back(Mat::zero(tgt.dim(n), src.dim(n)));
  return f;
}

inline FBMorphism fb_compose(const FBMorphism& g, const FBMorphism& f) {
  FBMorphism h;
  for (std::size_t n = 0; n < f.mats.size(); ++n)
    h.mats.push_back(g.mats[n] * f.mats[n]);
  return h;
}

inline FBMorphism fb_add(const FBMorphism& f, const FBMorphism& g) {
  FBMorphism h;
  for (std::size_t n = 0; n < f.mats.size(); ++n)
    h.mats.push_back(f.mats[n] + g.mats[n]);
  return h;
}

inline FBMorphism fb_sub(const FBMorphism& f, const FBMorphism& g) {
  FBMorphism h;
  for (std::size_t n = 0; n < f.mats.size(); ++n)
    h.mats.push_back(f.mats[n] - g.mats[n]);
  return h;
}

inline FBMorphism fb_scale(const Rational& c, const FBMorphism& f) {
  FBMorphism h;
  for (const auto& m : f.mats) h.mats.push_back(m * c);
  return h;
}

inline bool fb_is_zero(const FBMorphism& f) {
  for (const auto& m : f.mats)
    if (!m.is_zero()) return false;
  return true;
}

// f_n must commute with every generator matrix.
inline bool is_equivariant(const FBMorphism& f, const TruncatedFBModule& src,
                           const TruncatedFBModule& tgt) {
  for (int n = 0; n <= src.truncation; ++n) {
    if (f.at(n).rows() != static_cast<std::size_t>(tgt.dim(n)) ||
        f.at(n).cols() != static_cast<std::size_t>(src.dim(n)))
      return false;
    for (int i = 1; i <= n - 1; ++i)
      if (f.at(n) * src.gen(n, i) != tgt.gen(n, i) * f.at(n)) return false;
  }
  return true;
}

// --- induced bijections ------------------------------------------------

// Permutation of collapsed positions induced by the bijection f between the
// sorted label vectors src and tgt: position i of src goes to the position
// of f(src[i]) in tgt.
inline Permutation induced_permutation(const std::vector<int>& src,
                                       const std::vector<int>& tgt,
                                       const std::function<int(int)>& f) {
  std::vector<int> img(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    int y = f(src[i]);
    int pos = -1;
    for (std::size_t j = 0; j < tgt.size(); ++j)
      if (tgt[j] == y) {
        pos = static_cast<int>(j);
        break;
      }
    img[i] = pos;
  }
  return Permutation(std::move(img));
}

// iota^S_{i,j}: S\{j} -> S\{i}, i |-> j, identity elsewhere (S = {0..s-1}).
// Returns the matrix of M(iota) between the collapsed frames.
inline Mat iota_matrix(const TruncatedFBModule& M, int s, int i, int j) {
  Mask full = (Mask(1) << s) - 1;
  auto src = mask_elements(full & ~(Mask(1) << j));
  auto tgt = mask_elements(full & ~(Mask(1) << i));
  Permutation p =
      induced_permutation(src, tgt, [&](int x) { return x == i ? j : x; });
  return M.perm_matrix(s - 1, p);
}

// --- tensor product ----------------------------------------------------

struct TensorEntry {
  Mask maskA;  // subset of {0..n-1} carrying the left factor
  int li, rj;  // basis indices in L(|A|) and R(n-|A|)
};

struct TensorModule {
  TruncatedFBModule mod;
  std::vector<std::vector<TensorEntry>> basis;               // per degree
  std::vector<std::map<std::tuple<Mask, int, int>, int>> index;

  int index_of(int n, Mask a, int li, int rj) const {
    auto it = index[n].find({a, li, rj});
    return it == index[n].end() ? -1 : it->second;
  }
};

inline TensorModule tensor_module(const TruncatedFBModule& L,
                                  const TruncatedFBModule& R) {
  if (L.truncation != R.truncation)
    throw std::invalid_argument("tensor: truncation mismatch");
  int N = L.truncation;
  TensorModule T;
  T.mod = zero_module(N);
  T.basis.resize(N + 1);
  T.index.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    for (Mask a = 0; a < (Mask(1) << n); ++a) {
      int ka = popcount(a);
      int dl = L.dim(ka), dr = R.dim(n - ka);
      for (int li = 0; li < dl; ++li)
        for (int rj = 0; rj < dr; ++rj) {
          T.index[n][{a, li, rj}] = static_cast<int>(T.basis[n].size());
          T.basis[n].push_back({a, li, rj});
        }
    }
    int d = static_cast<int>(T.basis[n].size());
    T.mod.dims[n] = d;
    T.mod.gens[n].assign(std::max(0, n - 1), Mat(d, d));
    for (int g = 1; g <= n - 1; ++g) {
      Mat& mat = T.mod.gens[n][g - 1];
      int lo = g - 1, hi = g;  // 0-based elements swapped by s_g
      for (int col = 0; col < d; ++col) {
        const TensorEntry& e = T.basis[n][col];
        bool inLo = e.maskA & (Mask(1) << lo);
        bool inHi = e.maskA & (Mask(1) << hi);
        if (inLo && inHi) {
          // acts inside the left factor; lo,hi are adjacent within A
          int r = rank_in_mask(e.maskA, lo);
          const Mat& lg = L.gen(popcount(e.maskA), r + 1);
          for (std::size_t li2 = 0; li2 < lg.rows(); ++li2) {
            if (lg(li2, e.li) == 0) continue;
            int row = T.index_of(n, e.maskA, static_cast<int>(li2), e.rj);
            mat(row, col) += lg(li2, e.li);
          }
        } else if (!inLo && !inHi) {
          Mask comp = ((Mask(1) << n) - 1) & ~e.maskA;
          int r = rank_in_mask(comp, lo);
          const Mat& rg = R.gen(popcount(comp), r + 1);
          for (std::size_t rj2 = 0; rj2 < rg.rows(); ++rj2) {
            if (rg(rj2, e.rj) == 0) continue;
            int row = T.index_of(n, e.maskA, e.li, static_cast<int>(rj2));
            mat(row, col) += rg(rj2, e.rj);
          }
        } else {
          // subset moves; collapsed orders are preserved, so no inner action
          Mask a2 = e.maskA ^ (Mask(1) << lo) ^ (Mask(1) << hi);
          int row = T.index_of(n, a2, e.li, e.rj);
          mat(row, col) += 1;
        }
      }
    }
  }
  return T;
}

// Symmetry tau: L (x) R -> R (x) L, (A, x, y) |-> (S\A, y, x).
inline FBMorphism symmetry_morphism(const TensorModule& LR,
                                    const TensorModule& RL) {
  FBMorphism f;
  int N = LR.mod.truncation;
  for (int n = 0; n <= N; ++n) {
    Mat m(RL.mod.dim(n), LR.mod.dim(n));
    Mask full = (Mask(1) << n) - 1;
    for (std::size_t col = 0; col < LR.basis[n].size(); ++col) {
      const TensorEntry& e = LR.basis[n][col];
      int row = RL.index_of(n, full & ~e.maskA, e.rj, e.li);
      m(row, col) = 1;
    }
    f.mats.push_back(std::move(m));
  }
  return f;
}

// f (x) g as a morphism L (x) R -> L' (x) R' of tensor modules.
inline FBMorphism tensor_morphism(const FBMorphism& f, const FBMorphism& g,
                                  const TensorModule& src,
                                  const TensorModule& tgt) {
  FBMorphism h;
  int N = src.mod.truncation;
  for (int n = 0; n <= N; ++n) {
    Mat m(tgt.mod.dim(n), src.mod.dim(n));
    for (std::size_t col = 0; col < src.basis[n].size(); ++col) {
      const TensorEntry& e = src.basis[n][col];
      int ka = popcount(e.maskA);
      const Mat& fm = f.at(ka);
      const Mat& gm = g.at(n - ka);
      for (std::size_t li2 = 0; li2 < fm.rows(); ++li2) {
        if (fm(li2, e.li) == 0) continue;
        for (std::size_t rj2 = 0; rj2 < gm.rows(); ++rj2) {
          if (gm(rj2, e.rj) == 0) continue;
          int row = tgt.index_of(n, e.maskA, static_cast<int>(li2),
                                 static_cast<int>(rj2));
          m(row, col) += fm(li2, e.li) * gm(rj2, e.rj);
        }
      }
    }
    h.mats.push_back(std::move(m));
  }
  return h;
}

// Expands a subset of the collapsed frame {0..|outer|-1} back through the
// sorted elements of outer.
inline Mask expand_mask(Mask inner, Mask outer) {
  auto elems = mask_elements(outer);
  Mask out = 0;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    if (inner & (Mask(1) << i)) out |= (Mask(1) << elems[i]);
  return out;
}

// Canonical relabeling (L (x) R) (x) P -> L (x) (R (x) P).
inline FBMorphism associator(const TensorModule& LR, const TensorModule& LR_P,
                             const TensorModule& RP,
                             const TensorModule& L_RP) {
  FBMorphism f;
  int N = LR_P.mod.truncation;
  for (int n = 0; n <= N; ++n) {
    Mat m(L_RP.mod.dim(n), LR_P.mod.dim(n));
    Mask full = (Mask(1) << n) - 1;
    for (std::size_t col = 0; col < LR_P.basis[n].size(); ++col) {
      const TensorEntry& e = LR_P.basis[n][col];  // (AB, lr, p)
      Mask maskAB = e.maskA;
      const TensorEntry& inner = LR.basis[popcount(maskAB)][e.li];
      Mask maskA = expand_mask(inner.maskA, maskAB);
      Mask maskB = maskAB & ~maskA;
      // right side: (A, (B', r, p)) where B' = B collapsed through S\A
      Mask maskBinExp = 0;
      {
        auto elems = mask_elements(full & ~maskA);
        for (int i = 0; i < static_cast<int>(elems.size()); ++i)
          if (maskB & (Mask(1) << elems[i])) maskBinExp |= (Mask(1) << i);
      }
      int innerIdx =
          RP.index_of(n - popcount(maskA), maskBinExp, inner.rj, e.rj);
      int row = L_RP.index_of(n, maskA, inner.li, innerIdx);
      m(row, col) = 1;
    }
    f.mats.push_back(std::move(m));
  }
  return f;
}

// Left unitor 1 (x) M -> M and right unitor M (x) 1 -> M.
inline FBMorphism left_unitor(const TensorModule& UM) {
  // basis entries all have maskA = 0, li = 0; identity after relabel
  FBMorphism f;
  for (int n = 0; n <= UM.mod.truncation; ++n)
    f.mats.push_back(Mat::identity(UM.mod.dim(n)));
  return f;
}

// --- Sym basis label calculus -------------------------------------------

struct ScaledLabel {
  Rational coeff;  // 0 or 1 over Q
  Mask label;
};

// m(t^A (x) t^B) = t^{A u B}, zero when the supports overlap.
inline ScaledLabel sym_mult(Mask A, Mask B) {
  if (A & B) return {Rational(0), 0};
  return {Rational(1), A | B};
}

// Delta(t^S) = sum over ordered decompositions S = A u B of t^A (x) t^B.
inline std::vector<std::pair<Mask, Mask>> sym_comult(Mask S) {
  std::vector<std::pair<Mask, Mask>> out;
  // iterate over submasks of S in ascending numeric (colex) order
  std::vector<Mask> subs;
  Mask sub = 0;
  while (true) {
    subs.push_back(sub);
    if (sub == S) break;
    sub = (sub - S) & S;
  }
  std::sort(subs.begin(), subs.end());
  for (Mask a : subs) out.emplace_back(a, S & ~a);
  return out;
}

// avg: Sym^k(V) -> Div^k(V), t^S |-> t^[S]; the identity matrix in the
// distinguished bases.
inline FBMorphism avg_iso(int k, int N) {
  TruncatedFBModule s = sym_power_module(k, N);
  FBMorphism f;
  for (int n = 0; n <= N; ++n) f.mats.push_back(Mat::identity(s.dim(n)));
  return f;
}

}  // namespace currycat
