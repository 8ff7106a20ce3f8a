#pragma once

// Operations on FB-modules (natural families phi^S_{x,y}: M(S\y) -> M(S\x)).
// A simple operation is stored by one matrix per canonical frame: for arity
// (m,n) and ambient degree p the frame is S = {0..p+m+n-1} with
// x = (p..p+m-1), y = (p+m..p+m+n-1); the matrix maps M(S\y) -> M(S\x) in
// collapsed bases, so it has shape d(p+n) x d(p+m). Values on every other
// frame follow by the unique tuple-order-respecting relabeling; frames are
// stored exactly for p+m+n <= ambient_bound.
//
// A general symmetric operation is the sequence of its simple layers
// phi[k]^S_{A,B} = phi^{S+[k]}_{A+[k], B+[k]}, evaluated through
// phi^S_{A,B} = phi[k]^{S\(A&B)}_{A\B, B\A} with k = |A&B|.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "currycat/fb_module.hpp"

namespace currycat {

enum class OpSymmetry { none, symmetric, skew };

struct OperationSpec {
  OpSymmetry sym = OpSymmetry::symmetric;
  int ambient_bound = 0;  // frames stored for p+m+n <= ambient_bound
  std::set<std::pair<int, int>> arities;
  std::map<std::tuple<int, int, int>, Mat> frames;  // (m,n,p) -> matrix

  const Mat* frame(int m, int n, int p) const {
    auto it = frames.find({m, n, p});
    return it == frames.end() ? nullptr : &it->second;
  }
  Mat& frame_ref(int m, int n, int p) { return frames.at({m, n, p}); }

  bool is_zero() const {
    for (const auto& [k, mat] : frames)
      if (!mat.is_zero()) return false;
    return true;
  }
  bool operator==(const OperationSpec& o) const {
    return sym == o.sym && ambient_bound == o.ambient_bound &&
           arities == o.arities && frames == o.frames;
  }
};

// Zero-initialized operation with the given arity set.
inline OperationSpec make_operation(const TruncatedFBModule& M, OpSymmetry sym,
                                    const std::vector<std::pair<int, int>>& ar,
                                    int ambient_bound = -1) {
  OperationSpec op;
  op.sym = sym;
  op.ambient_bound = ambient_bound < 0 ? M.truncation : ambient_bound;
  for (auto [m, n] : ar) {
    op.arities.insert({m, n});
    for (int p = 0; p + m + n <= op.ambient_bound; ++p)
      op.frames[{m, n, p}] = Mat::zero(M.dim(p + n), M.dim(p + m));
  }
  return op;
}

inline std::vector<std::pair<int, int>> star_arities(int mFixed, int N) {
  // (mFixed, n) for all representable n; mFixed = -1 means both vary
  std::vector<std::pair<int, int>> out;
  if (mFixed >= 0) {
    for (int n = 0; mFixed + n <= N; ++n) out.push_back({mFixed, n});
  } else {
    for (int m = 0; m <= N; ++m)
      for (int n = 0; m + n <= N; ++n) out.push_back({m, n});
  }
  return out;
}

inline OperationSpec op_add(const OperationSpec& a, const OperationSpec& b) {
  OperationSpec out = a;
  for (const auto& [k, mat] : b.frames) {
    auto it = out.frames.find(k);
    if (it == out.frames.end()) {
      out.frames[k] = mat;
      out.arities.insert({std::get<0>(k), std::get<1>(k)});
    } else {
      it->second = it->second + mat;
    }
  }
  return out;
}

inline OperationSpec op_scale(const Rational& c, const OperationSpec& a) {
  OperationSpec out = a;
  for (auto& [k, mat] : out.frames) mat = mat * c;
  return out;
}

// --- application ---------------------------------------------------------

inline bool tuples_overlap(const std::vector<int>& x,
                           const std::vector<int>& y) {
  for (int a : x)
    for (int b : y)
      if (a == b) return true;
  return false;
}

// phi^S_{x,y} for S = {0..s-1}; returns the d(s-m) x d(s-n) matrix.
// Tuples may be given in any order (the relabeling respects tuple order, so
// skew operations pick up their signs automatically).
inline Mat apply_op(const TruncatedFBModule& M, const OperationSpec& op, int s,
                    const std::vector<int>& xbar,
                    const std::vector<int>& ybar) {
  int m = static_cast<int>(xbar.size());
  int n = static_cast<int>(ybar.size());
  Mat zero = Mat::zero(M.dim(s - m), M.dim(s - n));
  if (!op.arities.count({m, n})) return zero;
  if (tuples_overlap(xbar, ybar)) return zero;  // stored kernel is simple
  int p = s - m - n;
  const Mat* fr = op.frame(m, n, p);
  if (!fr) throw std::out_of_range("apply_op: frame outside truncation");

  // canonical relabeling r: rest -> 0..p-1 order-preservingly,
  // xbar[t] -> p+t, ybar[t] -> p+m+t
  std::vector<int> r(s, -1);
  for (int t = 0; t < m; ++t) r[xbar[t]] = p + t;
  for (int t = 0; t < n; ++t) r[ybar[t]] = p + m + t;
  {
    int next = 0;
    for (int x = 0; x < s; ++x)
      if (r[x] < 0) r[x] = next++;
  }
  Mask full = (Mask(1) << s) - 1;
  Mask xmask = 0, ymask = 0;
  for (int t : xbar) xmask |= Mask(1) << t;
  for (int t : ybar) ymask |= Mask(1) << t;

  auto induced = [&](Mask removed, Mask removedCanonical) {
    auto src = mask_elements(full & ~removed);
    auto tgtLabels = mask_elements(full & ~removedCanonical);
    return induced_permutation(src, tgtLabels, [&](int x) { return r[x]; });
  };
  Mask xCan = 0, yCan = 0;
  for (int t = 0; t < m; ++t) xCan |= Mask(1) << (p + t);
  for (int t = 0; t < n; ++t) yCan |= Mask(1) << (p + m + t);

  Permutation pSrc = induced(ymask, yCan);   // M(S\y) -> M(canonical src)
  Permutation pTgt = induced(xmask, xCan);   // M(S\x) -> M(canonical tgt)
  Mat src = M.perm_matrix(s - n, pSrc);
  Mat tgtInv = M.perm_matrix(s - m, pTgt.inverse());
  return tgtInv * (*fr) * src;
}

// Symmetric-operation convenience: apply at subsets given as masks.
inline Mat apply_op_masks(const TruncatedFBModule& M, const OperationSpec& op,
                          int s, Mask xmask, Mask ymask) {
  return apply_op(M, op, s, mask_elements(xmask), mask_elements(ymask));
}

// --- validation ----------------------------------------------------------

struct OpValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline OpValidationReport validate_operation(const TruncatedFBModule& M,
                                             const OperationSpec& op) {
  OpValidationReport rep;
  auto note = [&](const std::string& s) { rep.violations.push_back(s); };
  for (const auto& [key, fr] : op.frames) {
    auto [m, n, p] = key;
    std::string where = "frame(m=" + std::to_string(m) +
                        ",n=" + std::to_string(n) + ",p=" + std::to_string(p) +
                        ")";
    if (fr.rows() != static_cast<std::size_t>(M.dim(p + n)) ||
        fr.cols() != static_cast<std::size_t>(M.dim(p + m))) {
      note(where + ": wrong shape");
      continue;
    }
    // naturality in the ambient points: the transposition of rest positions
    // t-1,t embeds as s_t in both collapsed frames
    for (int t = 1; t <= p - 1; ++t)
      if (fr * M.gen(p + m, t) != M.gen(p + n, t) * fr)
        note(where + ": not natural in ambient points (s" + std::to_string(t) +
             ")");
    // symmetry flags within the x block (source side) and y block (target)
    if (op.sym != OpSymmetry::none) {
      Rational sign = op.sym == OpSymmetry::symmetric ? 1 : -1;
      for (int t = 1; t <= m - 1; ++t)
        if (fr * M.gen(p + m, p + t) != fr * sign)
          note(where + ": x-block symmetry fails at position " +
               std::to_string(t));
      for (int t = 1; t <= n - 1; ++t)
        if (M.gen(p + n, p + t) * fr != fr * sign)
          note(where + ": y-block symmetry fails at position " +
               std::to_string(t));
    }
  }
  return rep;
}

// --- operations <-> tensor maps -------------------------------------------

struct SymmetricOperation {
  std::vector<OperationSpec> layers;  // layers[k] = phi[k]

  bool operator==(const SymmetricOperation& o) const {
    return layers == o.layers;
  }
};

// phi^S_{A,B} through the layer decomposition.
inline Mat apply_sym(const TruncatedFBModule& M, const SymmetricOperation& sop,
                     int s, Mask A, Mask B) {
  Mask common = A & B;
  int k = popcount(common);
  int m = popcount(A), n = popcount(B);
  if (k >= static_cast<int>(sop.layers.size()))
    return Mat::zero(M.dim(s - m), M.dim(s - n));
  // collapse S \ (A&B) order-preservingly
  auto rest = mask_elements(((Mask(1) << s) - 1) & ~common);
  std::vector<int> xbar, ybar;
  for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
    if (A & ~B & (Mask(1) << rest[i])) xbar.push_back(i);
    if (B & ~A & (Mask(1) << rest[i])) ybar.push_back(i);
  }
  return apply_op(M, sop.layers[k], s - k, xbar, ybar);
}

inline bool sym_can_apply(const SymmetricOperation& sop, int s, Mask A,
                          Mask B) {
  int k = popcount(A & B);
  if (k >= static_cast<int>(sop.layers.size())) return true;
  const OperationSpec& layer = sop.layers[k];
  int m = popcount(A & ~B), n = popcount(B & ~A);
  if (!layer.arities.count({m, n})) return true;
  return s - k <= layer.ambient_bound;
}

// The sequence of simple operations determining a symmetric operation.
inline std::vector<OperationSpec> expand(const SymmetricOperation& sop) {
  return sop.layers;
}

inline SymmetricOperation contract(std::vector<OperationSpec> layers) {
  SymmetricOperation sop;
  sop.layers = std::move(layers);
  return sop;
}

// Builds the map a: Sym^n(V) (x) M -> Sym^m(V) (x) M with
// a(t^B (x) x) = sum over A of t^A (x) phi^S_{A,B}(x).
inline FBMorphism op_to_map(const TruncatedFBModule& M,
                            const SymmetricOperation& sop, int m, int n,
                            const TensorModule& src, const TensorModule& tgt) {
  FBMorphism f;
  int N = M.truncation;
  for (int s = 0; s <= N; ++s) {
    Mat mat(tgt.mod.dim(s), src.mod.dim(s));
    for (std::size_t col = 0; col < src.basis[s].size(); ++col) {
      const TensorEntry& e = src.basis[s][col];  // (B, 0, x)
      if (n >= 0 && popcount(e.maskA) != n) continue;
      for (Mask A = 0; A < (Mask(1) << s); ++A) {
        if (m >= 0 && popcount(A) != m) continue;
        Mat phi = apply_sym(M, sop, s, A, e.maskA);
        for (std::size_t r = 0; r < phi.rows(); ++r) {
          if (phi(r, e.rj) == 0) continue;
          int row = tgt.index_of(s, A, 0, static_cast<int>(r));
          mat(row, col) += phi(r, e.rj);
        }
      }
    }
    f.mats.push_back(std::move(mat));
  }
  return f;
}

// Extracts the symmetric operation from an equivariant map
// a: Sym^n(V) (x) M -> Sym^m(V) (x) M. Layer k is read off the frames where
// A and B share exactly k points. Throws if a is not equivariant.
inline SymmetricOperation op_from_map(const TruncatedFBModule& M,
                                      const FBMorphism& a, int m, int n,
                                      const TensorModule& src,
                                      const TensorModule& tgt) {
  if (!is_equivariant(a, src.mod, tgt.mod))
    throw std::invalid_argument("op_from_map: map is not equivariant");
  int N = M.truncation;
  int maxLayer = std::min(m, n);
  SymmetricOperation sop;
  for (int k = 0; k <= maxLayer; ++k) {
    OperationSpec layer =
        make_operation(M, OpSymmetry::symmetric, {{m - k, n - k}}, N - k);
    // canonical frame of the layer: ambient [p], x = (p..p+m-k-1),
    // y = (p+m-k..p+m+n-2k-1); realize it inside a degree-s set with k
    // shared points appended.
    for (int p = 0; p + (m - k) + (n - k) <= N - k; ++p) {
      int s = p + m + n - k;
      Mask shared = 0;
      for (int t = 0; t < k; ++t) shared |= Mask(1) << (p + m + n - 2 * k + t);
      Mask A = shared, B = shared;
      for (int t = 0; t < m - k; ++t) A |= Mask(1) << (p + t);
      for (int t = 0; t < n - k; ++t) B |= Mask(1) << (p + m - k + t);
      Mat fr(M.dim(s - n), M.dim(s - m));
      const Mat& big = a.at(s);
      for (int xi = 0; xi < M.dim(s - n); ++xi)
        for (int xj = 0; xj < M.dim(s - m); ++xj) {
          int row = tgt.index_of(s, A, 0, xi);
          int colIdx = src.index_of(s, B, 0, xj);
          fr(xi, xj) = big(row, colIdx);
        }
      // The frame above is phi^{[s]}_{A,B} with the shared points at the
      // end; relabel so the layer's canonical frame has them removed.
      // A\B = (p..p+m-k-1) and B\A = (p+m-k..), rest = (0..p-1): already the
      // canonical layout of the layer after deleting the shared points.
      layer.frames[{m - k, n - k, p}] = std::move(fr);
    }
    sop.layers.push_back(std::move(layer));
  }
  return sop;
}

// --- commutation -----------------------------------------------------------

struct CommuteWitness {
  int s;
  Mask x, y, w, z;
  std::string to_string() const {
    auto fmt = [](Mask m) {
      std::string out = "{";
      bool first = true;
      for (int e : mask_elements(m)) {
        if (!first) out += ",";
        out += std::to_string(e + 1);
        first = false;
      }
      return out + "}";
    };
    return "s=" + std::to_string(s) + " x=" + fmt(x) + " y=" + fmt(y) +
           " w=" + fmt(w) + " z=" + fmt(z);
  }
};

// Exhaustive commuting-square check for two simple symmetric operations
// within the truncation margins. sign = +1 for commute, -1 for skew-commute.
inline std::vector<CommuteWitness> commute_witnesses(
    const TruncatedFBModule& M, const OperationSpec& opA,
    const OperationSpec& opB, int signVal = 1, int maxS = -1) {
  std::vector<CommuteWitness> bad;
  int N = M.truncation;
  if (maxS < 0) maxS = N;
  for (int s = 0; s <= maxS; ++s) {
    for (auto [mA, nA] : opA.arities)
      for (auto [mB, nB] : opB.arities) {
        if (mA + nA > s || mB + nB > s) continue;
        for (Mask x : subsets_of_size(s, mA))
          for (Mask w : subsets_of_size(s, mB)) {
            if (x & w) continue;
            for (Mask y : subsets_of_size(s, nA))
              for (Mask z : subsets_of_size(s, nB)) {
                if (y & z) continue;
                // the square only type-checks when x,z and y,w are disjoint
                if ((x & z) || (y & w)) continue;
                // both paths must be representable
                if (s - popcount(z) > opA.ambient_bound ||
                    s - popcount(x) > opB.ambient_bound ||
                    s - popcount(y) > opB.ambient_bound ||
                    s - popcount(w) > opA.ambient_bound)
                  continue;
                // path 1: phi over S\z, then psi over S\x
                auto sub = [&](Mask rem, Mask mm) {
                  // collapse mask mm through S\rem
                  auto rest = mask_elements((((Mask(1) << s) - 1) & ~rem));
                  Mask out = 0;
                  for (int i = 0; i < static_cast<int>(rest.size()); ++i)
                    if (mm & (Mask(1) << rest[i])) out |= Mask(1) << i;
                  return out;
                };
                Mat phi1 = apply_op_masks(M, opA, s - popcount(z), sub(z, x),
                                          sub(z, y));
                Mat psi1 = apply_op_masks(M, opB, s - popcount(x), sub(x, w),
                                          sub(x, z));
                Mat phi2 = apply_op_masks(M, opA, s - popcount(w), sub(w, x),
                                          sub(w, y));
                Mat psi2 = apply_op_masks(M, opB, s - popcount(y), sub(y, w),
                                          sub(y, z));
                Mat lhs = psi1 * phi1;
                Mat rhs = phi2 * psi2;
                if (signVal < 0) rhs = rhs * Rational(-1);
                if (lhs != rhs) bad.push_back({s, x, y, w, z});
              }
          }
      }
  }
  return bad;
}

inline bool commute_check(const TruncatedFBModule& M, const OperationSpec& a,
                          const OperationSpec& b, int maxS = -1) {
  return commute_witnesses(M, a, b, 1, maxS).empty();
}

inline bool skew_commute_check(const TruncatedFBModule& M,
                               const OperationSpec& a, const OperationSpec& b,
                               int maxS = -1) {
  return commute_witnesses(M, a, b, -1, maxS).empty();
}

}  // namespace currycat
