#pragma once

// The comparison functors: generator actions of a diagram-category module
// become curried operations and back. The forward directions read eta-type
// actions off by composition; the inverse directions verify the presentation
// conditions (the uniqueness halves of the comparison theorems) and return
// the generator actions for round-trip comparison.

#include "currycat/curried.hpp"
#include "currycat/diagram_module.hpp"

namespace currycat {

// --- operation extraction ------------------------------------------------------

// beta^S_{i,j} = action of eta^S_{i,j} (Brauer cup), canonical frames.
inline OperationSpec brauer_beta(const DiagramModule& M) {
  OperationSpec op = make_operation(M.fb, OpSymmetry::symmetric, {{0, 2}});
  for (auto& [key, mat] : op.frames) {
    int p = std::get<2>(key), s = p + 2;
    mat = M.action(
        DiagramMorphism::single(DiagramKind::brauer, brauer_cup(s, p, p + 1)));
  }
  return op;
}

inline OperationSpec brauer_beta_prime(const DiagramModule& M) {
  OperationSpec op = make_operation(M.fb, OpSymmetry::symmetric, {{2, 0}});
  for (auto& [key, mat] : op.frames) {
    int p = std::get<2>(key), s = p + 2;
    mat = M.action(
        DiagramMorphism::single(DiagramKind::brauer, brauer_cap(s, p, p + 1)));
  }
  return op;
}

// alpha^S_{i,A} = action of eta^S_{i,A} in the restricted partition category.
inline OperationSpec restricted_alpha(const DiagramModule& M) {
  int N = M.fb.truncation;
  OperationSpec op =
      make_operation(M.fb, OpSymmetry::symmetric, star_arities(1, N));
  for (auto& [key, mat] : op.frames) {
    auto [m, n, p] = key;
    int s = p + 1 + n;
    std::vector<int> A;
    for (int t = 0; t < n; ++t) A.push_back(p + 1 + t);
    mat = M.action(DiagramMorphism::single(DiagramKind::restricted,
                                           restricted_eta(s, p, A)));
  }
  return op;
}

// omega^S_A = action of zeta^S_A, with omega^S_{} = delta id by convention.
inline OperationSpec restricted_omega(const DiagramModule& M) {
  int N = M.fb.truncation;
  OperationSpec op =
      make_operation(M.fb, OpSymmetry::symmetric, star_arities(0, N));
  for (auto& [key, mat] : op.frames) {
    auto [m, n, p] = key;
    int s = p + n;
    std::vector<int> A;
    for (int t = 0; t < n; ++t) A.push_back(p + t);
    mat = M.action(zeta_morphism(s, A, M.param));
  }
  return op;
}

// alpha^S_{A,B} = action of eta^S_{A,B} in the partition category (with the
// eta^S_{{},{}} = delta id convention built into the builder).
inline OperationSpec partition_alpha(const DiagramModule& M) {
  int N = M.fb.truncation;
  OperationSpec op =
      make_operation(M.fb, OpSymmetry::symmetric, star_arities(-1, N));
  for (auto& [key, mat] : op.frames) {
    auto [m, n, p] = key;
    int s = p + m + n;
    std::vector<int> A, B;
    for (int t = 0; t < m; ++t) A.push_back(p + t);
    for (int t = 0; t < n; ++t) B.push_back(p + m + t);
    mat = M.action(partition_eta_morphism(s, A, B, M.param));
  }
  return op;
}

// --- Brauer <-> sp --------------------------------------------------------------

// Phi: a G(2 delta)-module gives delta-standard sp data.
inline SpRepData brauer_to_sp(const DiagramModule& M, const Rational& delta) {
  if (M.param != 2 * delta)
    throw std::invalid_argument("brauer_to_sp: module parameter must be 2*delta");
  SpRepData R;
  R.gl = make_delta_standard(M.fb, delta);
  R.beta = brauer_beta(M);
  R.betaPrime = brauer_beta_prime(M);
  return R;
}

struct BrauerStructure {
  OperationSpec beta, betaPrime;
  Rational param;  // 2*delta
  CheckReport report;
};

// Phi^{-1}: sp data must be delta-standard and satisfy the Brauer category
// presentation conditions (a)-(c); returns the generator actions.
inline BrauerStructure sp_to_brauer(const SpRepData& R) {
  BrauerStructure out;
  const TruncatedFBModule& M = R.gl.M;
  auto delta = standardness_delta(R.gl);
  if (!delta) {
    out.report.note("(standard) gl part is not delta-standard");
    out.report.sort();
    return out;
  }
  out.param = 2 * (*delta);
  out.beta = R.beta;
  out.betaPrime = R.betaPrime;
  // (a) beta and beta' commute with themselves and each other
  for (auto& w : commute_witnesses(M, R.beta, R.beta))
    out.report.note("(a) beta/beta " + w.to_string());
  for (auto& w : commute_witnesses(M, R.beta, R.betaPrime))
    out.report.note("(a) beta/beta' " + w.to_string());
  for (auto& w : commute_witnesses(M, R.betaPrime, R.betaPrime))
    out.report.note("(a) beta'/beta' " + w.to_string());
  // (b) beta'^S_{i,j} beta^S_{j,k} = iota^{S\j}_{i,k}
  for (int s = 3; s <= M.truncation; ++s)
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        for (int k = 0; k < s; ++k) {
          if (i == j || j == k || i == k) continue;
          Mask mi = Mask(1) << i, mj = Mask(1) << j, mk = Mask(1) << k;
          Mat lhs = apply_op_masks(M, R.betaPrime, s, mi | mj, 0) *
                    apply_op_masks(M, R.beta, s, 0, mj | mk);
          // iota on the frame S\{j}
          Mat rhs = [&] {
            auto frame = detail::frame_minus(s, {j});
            int ip = 0, kp = 0;
            for (std::size_t t = 0; t < frame.size(); ++t) {
              if (frame[t] == i) ip = static_cast<int>(t);
              if (frame[t] == k) kp = static_cast<int>(t);
            }
            return iota_matrix(M, s - 1, ip, kp);
          }();
          if (lhs != rhs)
            out.report.note("(b) s=" + std::to_string(s) + " i=" +
                            std::to_string(i + 1) + " j=" +
                            std::to_string(j + 1) + " k=" +
                            std::to_string(k + 1));
        }
  // (c) beta'^S_{i,j} beta^S_{i,j} = (2 delta) id
  for (int s = 2; s <= M.truncation; ++s)
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) {
        Mask mi = Mask(1) << i, mj = Mask(1) << j;
        Mat lhs = apply_op_masks(M, R.betaPrime, s, mi | mj, 0) *
                  apply_op_masks(M, R.beta, s, 0, mi | mj);
        if (!lhs.is_scalar(out.param))
          out.report.note("(c) s=" + std::to_string(s) + " i=" +
                          std::to_string(i + 1) + " j=" + std::to_string(j + 1));
      }
  out.report.sort();
  return out;
}

// --- restricted partition <-> Witt ----------------------------------------------

inline WittRepData restricted_to_witt(const DiagramModule& M) {
  WittRepData R;
  R.M = M.fb;
  R.alpha = restricted_alpha(M);
  R.omega = restricted_omega(M);
  return R;
}

struct RestrictedStructure {
  OperationSpec alpha, omega;
  Rational param;
  CheckReport report;
};

inline RestrictedStructure witt_to_restricted(const WittRepData& R) {
  RestrictedStructure out;
  const TruncatedFBModule& M = R.M;
  out.alpha = R.alpha;
  out.omega = R.omega;
  // (a)-(c) are the Witt presentation conditions
  CheckReport witt = check_witt(R);
  out.report.absorb(witt, "");
  // (d) alpha^S_{i,{j}} = (iota^S_{i,j})_*
  for (int p = 0; p + 2 <= M.truncation; ++p) {
    const Mat* fr = R.alpha.frame(1, 1, p);
    if (fr && !fr->is_identity())
      out.report.note("(d) frame p=" + std::to_string(p));
  }
  // (e) omega^S_{} = delta, consistently across degrees
  std::optional<Rational> delta;
  for (int p = 0; p <= M.truncation; ++p) {
    const Mat* fr = R.omega.frame(0, 0, p);
    if (!fr || fr->rows() == 0) continue;
    Rational d = (*fr)(0, 0);
    if (!fr->is_scalar(d) || (delta && *delta != d))
      out.report.note("(e) frame p=" + std::to_string(p));
    if (!delta) delta = d;
  }
  out.param = delta.value_or(Rational(0));
  out.report.sort();
  return out;
}

// --- partition <-> Weyl ----------------------------------------------------------

// A P(delta)-module gives Weyl data with vanishing omega operations,
// phi[0] = alpha and phi[n >= 1] = 0.
inline WeylRepData partition_to_weyl(const DiagramModule& M) {
  WeylRepData R;
  R.M = M.fb;
  R.phi = theta_inv(M.fb, partition_alpha(M), zero_star_op(M.fb));
  return R;
}

struct PartitionStructure {
  OperationSpec alpha;
  Rational param;
  CheckReport report;
};

inline PartitionStructure weyl_to_partition(const WeylRepData& R) {
  PartitionStructure out;
  const TruncatedFBModule& M = R.M;
  SymmetricOperation phi = pad_layers(M, R.phi, 2);
  for (std::size_t k = 1; k < phi.layers.size(); ++k)
    if (!phi.layers[k].is_zero())
      out.report.note("(omega) phi[" + std::to_string(k) +
                      "] does not vanish");
  out.alpha = phi.layers[0];
  // naturality first: (D2) below checks one representative per orbit, which
  // is only sufficient for natural families
  out.report.absorb({validate_operation(M, out.alpha).violations},
                    "(naturality) ");
  // (D1) alpha commutes with itself
  for (auto& w : commute_witnesses(M, out.alpha, out.alpha))
    out.report.note("(D1) " + w.to_string());
  // (D2): alpha1 alpha2 = alpha3 whenever B & D overlap (others disjoint)
  std::vector<unsigned> cells{0u, 1u, 2u, 4u, 8u, 2u | 8u};
  for (int s = 0; s <= M.truncation; ++s)
    for (const auto& masks : frame_orbit_reps(s, cells)) {
      Mask A = masks[0], B = masks[1], C = masks[2], D = masks[3];
      if (!(B & D)) continue;
      Mask shared = B & D;
      Mat a1 = op_on_subframe(M, out.alpha, s, C, D, A);
      Mat a2 = op_on_subframe(M, out.alpha, s, A, C, B);
      Mat a3 = op_on_subframe(M, out.alpha, s, shared, C | (D & ~B),
                              A | (B & ~D));
      if (a1 * a2 != a3)
        out.report.note("(D2) s=" + std::to_string(s) + " A=" + mask_str(A) +
                        " B=" + mask_str(B) + " C=" + mask_str(C) + " D=" +
                        mask_str(D));
    }
  // (D3) alpha^S_{{},{}} = delta, consistently
  std::optional<Rational> delta;
  for (int p = 0; p <= M.truncation; ++p) {
    const Mat* fr = out.alpha.frame(0, 0, p);
    if (!fr || fr->rows() == 0) continue;
    Rational d = (*fr)(0, 0);
    if (!fr->is_scalar(d) || (delta && *delta != d))
      out.report.note("(D3) frame p=" + std::to_string(p));
    if (!delta) delta = d;
  }
  out.param = delta.value_or(Rational(0));
  // (D4) alpha^S_{{i},{j}} = (iota^S_{i,j})_*
  for (int p = 0; p + 2 <= M.truncation; ++p) {
    const Mat* fr = out.alpha.frame(1, 1, p);
    if (fr && !fr->is_identity())
      out.report.note("(D4) frame p=" + std::to_string(p));
  }
  out.report.sort();
  return out;
}

// --- FA^op -> Witt ----------------------------------------------------------------

// An FA^op functor module is a restricted partition module at delta = 0 on
// which the zeta morphisms act by zero.
inline WittRepData fa_to_witt(const FAModule& M) {
  WittRepData R;
  R.M = M.fb;
  int N = M.fb.truncation;
  R.alpha = make_operation(M.fb, OpSymmetry::symmetric, star_arities(1, N));
  R.omega = make_operation(M.fb, OpSymmetry::symmetric, star_arities(0, N));
  for (auto& [key, mat] : R.alpha.frames) {
    auto [m, n, p] = key;
    // canonical frame: i = p, A = {p+1..p+n}; the corresponding function
    // f: S\i -> S\A collapses to [p+n] -> [p+1], x -> min(x, p)
    std::vector<int> f(p + n);
    for (int t = 0; t < p + n; ++t) f[t] = std::min(t, p);
    mat = M.precompose(f, p + 1);
  }
  return R;
}

// --- star product -> Weyl -----------------------------------------------------------

struct StarWeylData {
  WeylRepData weyl;
  OperationSpec alpha, omega;  // the (C1)/(C2) pair
};

inline StarWeylData star_to_weyl(const StarModule& M) {
  StarWeylData out;
  out.weyl.M = M.fb;
  int N = M.fb.truncation;
  out.alpha = make_operation(M.fb, OpSymmetry::symmetric, star_arities(-1, N));
  out.omega = make_operation(M.fb, OpSymmetry::symmetric, star_arities(-1, N));
  for (auto& [key, mat] : out.alpha.frames) {
    auto [m, n, p] = key;
    if (m == 0 && n == 0) {
      mat = Mat::scalar(M.fb.dim(p), M.delta);
      continue;
    }
    int s = p + m + n;
    Mask A = 0, B = 0;
    for (int t = 0; t < m; ++t) A |= Mask(1) << (p + t);
    for (int t = 0; t < n; ++t) B |= Mask(1) << (p + m + t);
    mat = M.action(star_block_morphism(s, A, B, false));
  }
  for (auto& [key, mat] : out.omega.frames) {
    auto [m, n, p] = key;
    if (m == 0 && n == 0) {
      mat = Mat::scalar(M.fb.dim(p), -M.epsilon);
      continue;
    }
    int s = p + m + n;
    Mask A = 0, B = 0;
    for (int t = 0; t < m; ++t) A |= Mask(1) << (p + t);
    for (int t = 0; t < n; ++t) B |= Mask(1) << (p + m + t);
    Rational sign = (m % 2 == 0) ? -1 : 1;  // (-1)^{|A|+1}
    mat = M.action(star_block_morphism(s, A, B, true)) * sign;
  }
  out.weyl.phi = theta_inv(M.fb, out.alpha, out.omega);
  return out;
}

}  // namespace currycat
