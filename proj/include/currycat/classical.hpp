#pragma once

// De-curried ground truth: gl(n), sp(V + V*), the Witt algebra W(V) and the
// Weyl Lie algebra a(V + V*) over Q with explicit structure constants, plus
// classical representations and the curry/uncurry transforms. Everything here
// is plain finite-dimensional (or graded finite-dimensional) linear algebra;
// the species side of the project is deliberately not used.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "currycat/combinatorics.hpp"
#include "currycat/matrix.hpp"

namespace currycat {

using ExpVec = std::vector<int>;

inline int exp_deg(const ExpVec& a) {
  int d = 0;
  for (int x : a) d += x;
  return d;
}
inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
inline bool exp_le(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
inline Integer exp_binom(const ExpVec& a, const ExpVec& e) {
  Integer r = 1;
  for (std::size_t i = 0; i < a.size(); ++i) r *= binomial(a[i], e[i]);
  return r;
}
inline Integer exp_factorial(const ExpVec& e) {
  Integer r = 1;
  for (int x : e) r *= factorial(x);
  return r;
}

// all exponent vectors in n variables with total degree d (resp. <= d)
inline std::vector<ExpVec> exponents_of_degree(int n, int d) {
  std::vector<ExpVec> out;
  ExpVec cur(n, 0);
  auto rec = [&](auto&& self, int var, int rest) -> void {
    if (var == n - 1) {
      cur[var] = rest;
      out.push_back(cur);
      return;
    }
    for (int k = rest; k >= 0; --k) {
      cur[var] = k;
      self(self, var + 1, rest - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}
inline std::vector<ExpVec> exponents_up_to(int n, int d) {
  std::vector<ExpVec> out;
  for (int k = 0; k <= d; ++k)
    for (auto& e : exponents_of_degree(n, k)) out.push_back(e);
  return out;
}

// --- structure constants -----------------------------------------------------

enum class AlgebraKind { gl, sp, witt, weyl };

inline std::string algebra_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::gl: return "gl";
    case AlgebraKind::sp: return "sp";
    case AlgebraKind::witt: return "witt";
    case AlgebraKind::weyl: return "weyl";
  }
  return "?";
}

using Combo = std::vector<std::pair<Rational, int>>;  // sum of c * label

struct StructureConstants {
  AlgebraKind kind;
  int n = 0;       // dim V
  int degree = 0;  // polynomial degree bound for witt/weyl labels
  std::vector<std::string> labels;
  // brackets for label pairs whose value stays within the label set
  std::map<std::pair<int, int>, Combo> bracket;

  bool has_bracket(int i, int j) const { return bracket.count({i, j}) > 0; }
};

namespace detail {

inline void combo_add(Combo& c, const Rational& coeff, int label) {
  if (coeff == 0) return;
  for (auto& [cc, l] : c)
    if (l == label) {
      cc += coeff;
      return;
    }
  c.emplace_back(coeff, label);
}

inline void combo_prune(Combo& c) {
  Combo out;
  for (auto& [cc, l] : c)
    if (cc != 0) out.emplace_back(cc, l);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  c = std::move(out);
}

}  // namespace detail

// gl(n), labels E_ij = v_i v_j^*, [E_ij, E_kl] = d_jk E_il - d_li E_kj.
inline StructureConstants build_gl(int n) {
  StructureConstants A;
  A.kind = AlgebraKind::gl;
  A.n = n;
  auto idx = [&](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Combo c;
          if (j == k) detail::combo_add(c, 1, idx(i, l));
          if (l == i) detail::combo_add(c, -1, idx(k, j));
          detail::combo_prune(c);
          A.bracket[{idx(i, j), idx(k, l)}] = std::move(c);
        }
  return A;
}

// sp(V + V*) with dim V = n: quadratic elements acting on U = V + V* through
// rho(uw) z = omega(z,u) w + omega(z,w) u, omega(v_i, v_j^*) = d_ij.
// Label order: gl block E_ij, then Div^2(V) = {v_i v_j (i<j), v_i^[2]},
// then Div^2(V*) likewise.
struct SpAlgebra {
  StructureConstants consts;
  std::vector<Mat> rho;  // 2n x 2n realization per label
  int glOffset = 0, plusOffset = 0, minusOffset = 0;
  int pairCount = 0;  // n(n+1)/2 per Div^2 block
};

inline SpAlgebra build_sp(int n) {
  SpAlgebra S;
  StructureConstants& A = S.consts;
  A.kind = AlgebraKind::sp;
  A.n = n;
  int dimU = 2 * n;
  auto omega = [&](int a, int b) -> Rational {
    // basis of U: 0..n-1 = v_i, n..2n-1 = v_i^*
    if (a < n && b >= n && b - n == a) return 1;
    if (a >= n && b < n && a - n == b) return -1;
    return 0;
  };
  auto rho_of_pair = [&](int u, int w, const Rational& half) {
    // half = 1 for u != w products, 1/2 for divided squares u^[2] = uu/2
    Mat m(dimU, dimU);
    for (int z = 0; z < dimU; ++z) {
      m(u, z) += omega(z, w) * half * (u == w ? 2 : 1);
      if (u != w) m(w, z) += omega(z, u);
    }
    return m;
  };
  // gl block: E_ij = v_i v_j^*
  S.glOffset = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      A.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      S.rho.push_back(rho_of_pair(i, n + j, 1));
    }
  // Div^2(V): v_i v_j (i<j), then v_i^[2]
  S.plusOffset = static_cast<int>(A.labels.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      A.labels.push_back("v" + std::to_string(i + 1) + "v" +
                         std::to_string(j + 1));
      S.rho.push_back(rho_of_pair(i, j, 1));
    }
  for (int i = 0; i < n; ++i) {
    A.labels.push_back("v" + std::to_string(i + 1) + "^[2]");
    S.rho.push_back(rho_of_pair(i, i, Rational(1, 2)));
  }
  // Div^2(V*)
  S.minusOffset = static_cast<int>(A.labels.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      A.labels.push_back("v" + std::to_string(i + 1) + "*v" +
                         std::to_string(j + 1) + "*");
      S.rho.push_back(rho_of_pair(n + i, n + j, 1));
    }
  for (int i = 0; i < n; ++i) {
    A.labels.push_back("v" + std::to_string(i + 1) + "*^[2]");
    S.rho.push_back(rho_of_pair(n + i, n + i, Rational(1, 2)));
  }
  S.pairCount = n * (n + 1) / 2;

  // expand commutators back in the label basis by solving against the
  // (injective) realization
  int dim = static_cast<int>(A.labels.size());
  Mat R(dimU * dimU, dim);
  for (int l = 0; l < dim; ++l)
    for (int a = 0; a < dimU; ++a)
      for (int b = 0; b < dimU; ++b) R(a * dimU + b, l) = S.rho[l](a, b);
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      Mat comm = S.rho[x] * S.rho[y] - S.rho[y] * S.rho[x];
      Mat aug(dimU * dimU, dim + 1);
      for (int a = 0; a < dimU; ++a)
        for (int b = 0; b < dimU; ++b) {
          for (int l = 0; l < dim; ++l) aug(a * dimU + b, l) = R(a * dimU + b, l);
          aug(a * dimU + b, dim) = comm(a, b);
        }
      auto pivots = aug.rref();
      Combo c;
      bool consistent = true;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == static_cast<std::size_t>(dim)) consistent = false;
      }
      if (!consistent)
        throw std::logic_error("sp: commutator outside the quadratic span");
      for (std::size_t r = 0; r < pivots.size(); ++r)
        detail::combo_add(c, aug(r, dim), static_cast<int>(pivots[r]));
      detail::combo_prune(c);
      A.bracket[{x, y}] = std::move(c);
    }
  return S;
}

// Witt labels: xi^a d_i with |a| <= degree.
struct WittAlgebra {
  StructureConstants consts;
  std::vector<std::pair<ExpVec, int>> data;  // (exponent, direction)
  std::map<std::pair<ExpVec, int>, int> index;
};

// [xi^a d_i, xi^b d_j] = b_i xi^{a+b-e_i} d_j - a_j xi^{a+b-e_j} d_i.
inline std::vector<std::pair<Rational, std::pair<ExpVec, int>>> witt_bracket(
    const ExpVec& a, int i, const ExpVec& b, int j) {
  std::vector<std::pair<Rational, std::pair<ExpVec, int>>> out;
  if (b[i] > 0) {
    ExpVec e = exp_add(a, b);
    e[i] -= 1;
    out.push_back({Rational(b[i]), {e, j}});
  }
  if (a[j] > 0) {
    ExpVec e = exp_add(a, b);
    e[j] -= 1;
    out.push_back({Rational(-a[j]), {e, i}});
  }
  // merge when both terms coincide
  if (out.size() == 2 && out[0].second == out[1].second) {
    out[0].first += out[1].first;
    out.pop_back();
    if (out[0].first == 0) out.clear();
  }
  return out;
}

inline WittAlgebra build_witt(int n, int degree) {
  WittAlgebra W;
  W.consts.kind = AlgebraKind::witt;
  W.consts.n = n;
  W.consts.degree = degree;
  for (const auto& e : exponents_up_to(n, degree))
    for (int i = 0; i < n; ++i) {
      W.index[{e, i}] = static_cast<int>(W.data.size());
      W.data.push_back({e, i});
      std::string name = "xi^(";
      for (int k = 0; k < n; ++k)
        name += std::to_string(e[k]) + (k + 1 < n ? "," : "");
      name += ")d" + std::to_string(i + 1);
      W.consts.labels.push_back(name);
    }
  for (std::size_t x = 0; x < W.data.size(); ++x)
    for (std::size_t y = 0; y < W.data.size(); ++y) {
      const auto& [a, i] = W.data[x];
      const auto& [b, j] = W.data[y];
      if (exp_deg(a) + exp_deg(b) - 1 > degree) continue;  // out of range
      Combo c;
      for (auto& [coeff, lab] : witt_bracket(a, i, b, j))
        detail::combo_add(c, coeff, W.index.at(lab));
      detail::combo_prune(c);
      W.consts.bracket[{static_cast<int>(x), static_cast<int>(y)}] =
          std::move(c);
    }
  return W;
}

// Weyl labels: xi^a eta^s with |a| + |s| <= degree (the (0,0) label is the
// central element 1).
struct WeylAlgebraLie {
  StructureConstants consts;
  std::vector<std::pair<ExpVec, ExpVec>> data;
  std::map<std::pair<ExpVec, ExpVec>, int> index;
};

// [xi^a eta^s, xi^b eta^t] =
//   sum_e (C(b,e)C(s,e) - C(a,e)C(t,e)) e! xi^{a+b-e} eta^{s+t-e}.
inline std::vector<std::pair<Rational, std::pair<ExpVec, ExpVec>>>
weyl_commutator(const ExpVec& a, const ExpVec& s, const ExpVec& b,
                const ExpVec& t) {
  std::vector<std::pair<Rational, std::pair<ExpVec, ExpVec>>> out;
  int n = static_cast<int>(a.size());
  ExpVec cap(n);
  for (int i = 0; i < n; ++i)
    cap[i] = std::max(std::min(b[i], s[i]), std::min(a[i], t[i]));
  for (const auto& e : exponents_up_to(n, exp_deg(cap))) {
    if (!exp_le(e, cap)) continue;
    Integer coeff = exp_binom(b, e) * exp_binom(s, e) -
                    exp_binom(a, e) * exp_binom(t, e);
    if (coeff == 0) continue;
    Rational c = Rational(coeff * exp_factorial(e));
    out.push_back({c, {exp_sub(exp_add(a, b), e), exp_sub(exp_add(s, t), e)}});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

inline WeylAlgebraLie build_weyl(int n, int degree) {
  WeylAlgebraLie W;
  W.consts.kind = AlgebraKind::weyl;
  W.consts.n = n;
  W.consts.degree = degree;
  for (int d = 0; d <= degree; ++d)
    for (const auto& a : exponents_up_to(n, d)) {
      int rest = d - exp_deg(a);
      for (const auto& s : exponents_of_degree(n, rest)) {
        if (W.index.count({a, s})) continue;
        W.index[{a, s}] = static_cast<int>(W.data.size());
        W.data.push_back({a, s});
        std::string name = "xi^(";
        for (int k = 0; k < n; ++k)
          name += std::to_string(a[k]) + (k + 1 < n ? "," : "");
        name += ")eta^(";
        for (int k = 0; k < n; ++k)
          name += std::to_string(s[k]) + (k + 1 < n ? "," : "");
        name += ")";
        W.consts.labels.push_back(name);
      }
    }
  for (std::size_t x = 0; x < W.data.size(); ++x)
    for (std::size_t y = 0; y < W.data.size(); ++y) {
      const auto& [a, s] = W.data[x];
      const auto& [b, t] = W.data[y];
      if (exp_deg(a) + exp_deg(s) + exp_deg(b) + exp_deg(t) - 2 >
          W.consts.degree)
        continue;
      Combo c;
      for (auto& [coeff, lab] : weyl_commutator(a, s, b, t))
        detail::combo_add(c, coeff, W.index.at(lab));
      detail::combo_prune(c);
      W.consts.bracket[{static_cast<int>(x), static_cast<int>(y)}] =
          std::move(c);
    }
  return W;
}

// --- Jacobi / antisymmetry ----------------------------------------------------

struct AlgebraReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline AlgebraReport verify_structure_constants(const StructureConstants& A) {
  AlgebraReport rep;
  auto bracket_combo = [&](const Combo& c, int z) -> std::optional<Combo> {
    Combo out;
    for (auto& [coeff, l] : c) {
      if (!A.has_bracket(l, z)) return std::nullopt;
      for (auto& [c2, l2] : A.bracket.at({l, z}))
        detail::combo_add(out, coeff * c2, l2);
    }
    detail::combo_prune(out);
    return out;
  };
  int dim = static_cast<int>(A.labels.size());
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      if (!A.has_bracket(x, y) || !A.has_bracket(y, x)) continue;
      Combo xy = A.bracket.at({x, y});
      Combo yx = A.bracket.at({y, x});
      for (auto& [c, l] : yx) detail::combo_add(xy, c, l);
      detail::combo_prune(xy);
      if (!xy.empty())
        rep.violations.push_back("antisymmetry fails at [" + A.labels[x] +
                                 "," + A.labels[y] + "]");
    }
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      if (!A.has_bracket(x, y)) continue;
      for (int z = 0; z < dim; ++z) {
        if (!A.has_bracket(y, z) || !A.has_bracket(z, x)) continue;
        auto t1 = bracket_combo(A.bracket.at({x, y}), z);
        auto t2 = bracket_combo(A.bracket.at({y, z}), x);
        auto t3 = bracket_combo(A.bracket.at({z, x}), y);
        if (!t1 || !t2 || !t3) continue;  // intermediate out of range
        Combo sum = *t1;
        for (auto& [c, l] : *t2) detail::combo_add(sum, c, l);
        for (auto& [c, l] : *t3) detail::combo_add(sum, c, l);
        detail::combo_prune(sum);
        if (!sum.empty())
          rep.violations.push_back("Jacobi fails at (" + A.labels[x] + "," +
                                   A.labels[y] + "," + A.labels[z] + ")");
      }
    }
  return rep;
}

// --- classical representations (matrix case: gl, sp) --------------------------

struct MatrixRep {
  int carrierDim = 0;
  std::vector<Mat> action;  // one matrix per algebra label
};

// mu([X,Y]) = [mu(X), mu(Y)] on all label pairs with stored brackets.
inline bool matrix_rep_condition(const StructureConstants& A,
                                 const MatrixRep& R) {
  int dim = static_cast<int>(A.labels.size());
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      if (!A.has_bracket(x, y)) continue;
      Mat lhs = Mat::zero(R.carrierDim, R.carrierDim);
      for (auto& [c, l] : A.bracket.at({x, y})) lhs = lhs + R.action[l] * c;
      Mat rhs = R.action[x] * R.action[y] - R.action[y] * R.action[x];
      if (lhs != rhs) return false;
    }
  return true;
}

// --- gl currying ---------------------------------------------------------------

// a(v_i (x) x) = sum_j v_j (x) mu(E_ij) x on V (x) M, basis (i, x) i-major.
inline Mat curry_gl(const StructureConstants& A, const MatrixRep& R) {
  int n = A.n, m = R.carrierDim;
  Mat a(n * m, n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Mat& act = R.action[i * n + j];
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
          if (act(r, c) != 0) a(j * m + r, i * m + c) += act(r, c);
    }
  return a;
}

inline MatrixRep uncurry_gl(const StructureConstants& A, const Mat& a, int m) {
  int n = A.n;
  MatrixRep R;
  R.carrierDim = m;
  R.action.assign(n * n, Mat(m, m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
          R.action[i * n + j](r, c) = a(j * m + r, i * m + c);
  return R;
}

// [a1, a2] = tau (a1 - a2) on V (x) V (x) M.
inline bool gl_curried_identity(int n, int m, const Mat& a) {
  int dim = n * n * m;
  Mat a2(dim, dim), tau(dim, dim);
  // basis (i, j, x) with index (i*n + j)*m + x
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int x = 0; x < m; ++x) {
        tau((j * n + i) * m + x, (i * n + j) * m + x) = 1;
        for (int j2 = 0; j2 < n; ++j2)
          for (int y = 0; y < m; ++y) {
            const Rational& c = a(j2 * m + y, j * m + x);
            if (c != 0) a2((i * n + j2) * m + y, (i * n + j) * m + x) += c;
          }
      }
  Mat a1 = tau * a2 * tau;
  return a1 * a2 - a2 * a1 == tau * (a1 - a2);
}

// --- sp currying ----------------------------------------------------------------

struct SpCurriedData {
  int n = 0, m = 0;
  Mat a;       // V (x) M -> V (x) M
  Mat b;       // Div^2 V (x) M -> M
  Mat bprime;  // M -> Sym^2 V (x) M
};

// Basis of Div^2 V / Sym^2 V: pairs (i<j) in lexicographic order, then the
// squares v_i^[2] / v_i^2.
inline int div2_dim(int n) { return n * (n + 1) / 2; }
inline int div2_index(int n, int i, int j) {
  if (i == j) return n * (n - 1) / 2 + i;
  if (i > j) std::swap(i, j);
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += n - 1 - a;
  return idx + (j - i - 1);
}

inline SpCurriedData curry_sp(const SpAlgebra& S, const MatrixRep& R) {
  const StructureConstants& A = S.consts;
  int n = A.n, m = R.carrierDim;
  SpCurriedData out;
  out.n = n;
  out.m = m;
  // gl part
  StructureConstants glA = build_gl(n);
  MatrixRep glR;
  glR.carrierDim = m;
  for (int l = 0; l < n * n; ++l) glR.action.push_back(R.action[l]);
  out.a = curry_gl(glA, glR);
  // b: Div^2 V (x) M -> M via the plus block
  int d2 = div2_dim(n);
  out.b = Mat(m, d2 * m);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int lbl;
      if (i == j)
        lbl = S.plusOffset + n * (n - 1) / 2 + i;  // v_i^[2]
      else {
        int idx = 0;
        for (int a2 = 0; a2 < i; ++a2) idx += n - 1 - a2;
        lbl = S.plusOffset + idx + (j - i - 1);
      }
      const Mat& act = R.action[lbl];
      int col0 = div2_index(n, i, j) * m;
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
          if (act(r, c) != 0) out.b(r, col0 + c) += act(r, c);
    }
  // b': M -> Sym^2 V (x) M via the minus block
  out.bprime = Mat(d2 * m, m);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int lbl;
      if (i == j)
        lbl = S.minusOffset + n * (n - 1) / 2 + i;  // (v_i^*)^[2]
      else {
        int idx = 0;
        for (int a2 = 0; a2 < i; ++a2) idx += n - 1 - a2;
        lbl = S.minusOffset + idx + (j - i - 1);
      }
      const Mat& act = R.action[lbl];
      int row0 = div2_index(n, i, j) * m;
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
          if (act(r, c) != 0) out.bprime(row0 + r, c) += act(r, c);
    }
  return out;
}

// Conditions (a)-(d) of the curried symplectic definition, as exact matrix
// identities on the finite-dimensional carrier.
inline std::vector<std::string> sp_curried_failures(const SpCurriedData& D) {
  std::vector<std::string> bad;
  int n = D.n, m = D.m, d2 = div2_dim(n);
  if (!gl_curried_identity(n, m, D.a)) bad.push_back("(a)");
  // (b): b b2 = b b1 on Div2 (x) Div2 (x) M, index ((p,q),x)
  {
    Mat b2(d2 * m, d2 * d2 * m), b1(d2 * m, d2 * d2 * m);
    for (int p = 0; p < d2; ++p)
      for (int q = 0; q < d2; ++q)
        for (int x = 0; x < m; ++x) {
          int col = (p * d2 + q) * m + x;
          for (int y = 0; y < m; ++y) {
            if (D.b(y, q * m + x) != 0)
              b2(p * m + y, col) += D.b(y, q * m + x);
            if (D.b(y, p * m + x) != 0)
              b1(q * m + y, col) += D.b(y, p * m + x);
          }
        }
    if (D.b * b2 != D.b * b1) bad.push_back("(b) mult");
    Mat bp2(d2 * d2 * m, d2 * m), bp1(d2 * d2 * m, d2 * m);
    for (int p = 0; p < d2; ++p)
      for (int x = 0; x < m; ++x) {
        int col = p * m + x;
        for (int q = 0; q < d2; ++q)
          for (int y = 0; y < m; ++y) {
            if (D.bprime(q * m + y, x) != 0) {
              bp2((p * d2 + q) * m + y, col) += D.bprime(q * m + y, x);
              bp1((q * d2 + p) * m + y, col) += D.bprime(q * m + y, x);
            }
          }
      }
    if (bp1 * D.bprime != bp2 * D.bprime) bad.push_back("(b) comult");
  }
  // E_ij on Div^2 V by the product rule, in the basis
  // {v_p v_q (p<q), v_p^[2] = v_p^2/2}: a product v_a v_a rewrites to
  // 2 v_a^[2].
  auto div2_gl_action = [&](int i, int j) {
    Mat act(d2, d2);
    for (int p = 0; p < n; ++p)
      for (int q = p; q < n; ++q) {
        int col = div2_index(n, p, q);
        auto add = [&](int u, int w, const Rational& c) {
          act(div2_index(n, u, w), col) += (u == w) ? c * 2 : c;
        };
        if (p == q) {
          if (j == p) add(i, p, 1);  // E_ij(v_p^2/2) = d_jp v_i v_p
        } else {
          if (j == p) add(i, q, 1);
          if (j == q) add(p, i, 1);
        }
      }
    return act;
  };
  // E_ij on Sym^2 V in the basis {v_p v_q (p<q), v_p^2}: same product rule
  // but the square basis vectors are v_p^2, not v_p^2/2.
  auto sym2_gl_action = [&](int i, int j) {
    Mat act(d2, d2);
    for (int p = 0; p < n; ++p)
      for (int q = p; q < n; ++q) {
        int col = div2_index(n, p, q);
        auto add = [&](int u, int w, const Rational& c) {
          act(div2_index(n, u, w), col) += c;  // v_a v_a is the basis vector
        };
        if (p == q) {
          if (j == p) add(i, p, 2);  // E_ij(v_p^2) = 2 d_jp v_i v_p
        } else {
          if (j == p) add(i, q, 1);
          if (j == q) add(p, i, 1);
        }
      }
    return act;
  };
  // equivariance squares on V (x) X (x) M with X = Div^2 (for b) and
  // X = Sym^2 (for b'); M and X spectate while a acts, plus the natural gl
  // action on X
  {
    int dimVD = n * d2 * m;
    Mat aSpect(dimVD, dimVD);
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < d2; ++p)
        for (int x = 0; x < m; ++x) {
          int col = (i * d2 + p) * m + x;
          for (int j = 0; j < n; ++j)
            for (int y = 0; y < m; ++y) {
              const Rational& c = D.a(j * m + y, i * m + x);
              if (c != 0) aSpect((j * d2 + p) * m + y, col) += c;
            }
        }
    Mat aPrDiv(dimVD, dimVD), aPrSym(dimVD, dimVD);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Mat actD = div2_gl_action(i, j);
        Mat actS = sym2_gl_action(i, j);
        for (int p = 0; p < d2; ++p)
          for (int q = 0; q < d2; ++q)
            for (int x = 0; x < m; ++x) {
              if (actD(q, p) != 0)
                aPrDiv((j * d2 + q) * m + x, (i * d2 + p) * m + x) +=
                    actD(q, p);
              if (actS(q, p) != 0)
                aPrSym((j * d2 + q) * m + x, (i * d2 + p) * m + x) +=
                    actS(q, p);
            }
      }
    // 1 (x) b: V (x) Div2 (x) M -> V (x) M
    Mat oneB(n * m, dimVD);
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < d2; ++p)
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) {
            const Rational& c = D.b(y, p * m + x);
            if (c != 0) oneB(i * m + y, (i * d2 + p) * m + x) += c;
          }
    if (D.a * oneB != oneB * (aSpect + aPrDiv)) bad.push_back("(c) b");
    // 1 (x) b': V (x) M -> V (x) Sym2 (x) M
    Mat oneBp(dimVD, n * m);
    for (int i = 0; i < n; ++i)
      for (int x = 0; x < m; ++x)
        for (int p = 0; p < d2; ++p)
          for (int y = 0; y < m; ++y) {
            const Rational& c = D.bprime(p * m + y, x);
            if (c != 0) oneBp((i * d2 + p) * m + y, i * m + x) += c;
          }
    if (oneBp * D.a != (aSpect + aPrSym) * oneBp) bad.push_back("(c) b'");
  }
  // (d): b'b - b1 b'2 = (m (x) 1)(1 (x) a)(Delta (x) 1)
  {
    Mat lhs = D.bprime * D.b;
    // b1 b'2: Div2 (x) M -> Div2 (x) Div2 (x) M -> Div2 (x) M
    Mat rhs1(d2 * m, d2 * m);
    for (int p = 0; p < d2; ++p)
      for (int x = 0; x < m; ++x) {
        int col = p * m + x;
        // b'2: insert (q, y), then b1 consumes p
        for (int q = 0; q < d2; ++q)
          for (int y = 0; y < m; ++y) {
            const Rational& c1 = D.bprime(q * m + y, x);
            if (c1 == 0) continue;
            for (int z = 0; z < m; ++z) {
              const Rational& c2 = D.b(z, p * m + y);
              if (c2 != 0) rhs1(q * m + z, col) += c1 * c2;
            }
          }
      }
    Mat lhsTotal = lhs - rhs1;
    // (m (x) 1)(1 (x) a)(Delta (x) 1)
    Mat rhs(d2 * m, d2 * m);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        int p = div2_index(n, i, j);
        for (int x = 0; x < m; ++x) {
          int col = p * m + x;
          // Delta: (i,j) -> i (x) j + j (x) i; for i == j a single i (x) i
          std::vector<std::pair<int, int>> terms;
          if (i == j)
            terms = {{i, i}};
          else
            terms = {{i, j}, {j, i}};
          for (auto [u, w] : terms) {
            // 1 (x) a on (w, x), then multiply u with the output V factor
            for (int w2 = 0; w2 < n; ++w2)
              for (int y = 0; y < m; ++y) {
                const Rational& c = D.a(w2 * m + y, w * m + x);
                if (c != 0) rhs(div2_index(n, u, w2) * m + y, col) += c;
              }
          }
        }
      }
    if (lhsTotal != rhs) bad.push_back("(d)");
  }
  return bad;
}

// --- polynomial carriers (Witt, Weyl) -----------------------------------------

struct PolySpace {
  int nvars = 0, maxdeg = 0;
  std::vector<ExpVec> basis;
  std::map<ExpVec, int> idx;
};

inline PolySpace make_poly_space(int nvars, int maxdeg) {
  PolySpace sp;
  sp.nvars = nvars;
  sp.maxdeg = maxdeg;
  for (const auto& e : exponents_up_to(nvars, maxdeg)) {
    sp.idx[e] = static_cast<int>(sp.basis.size());
    sp.basis.push_back(e);
  }
  return sp;
}

// A representation on Q[xi] truncated to total degree <= maxdeg; nullopt
// signals that the application leaves the stored degrees. `tweak` holds the
// perturbations used as negative controls.
struct WittRepPoly {
  PolySpace space;
  std::map<std::pair<ExpVec, int>, Mat> tweak;

  // mu(xi^a d_i) on basis monomial e: e_i xi^{a+e-eps_i}
  std::optional<Vec> act(const ExpVec& a, int dir, int basisIdx) const {
    const ExpVec& e = space.basis[basisIdx];
    Vec out(space.basis.size());
    if (e[dir] > 0) {
      ExpVec f = exp_add(a, e);
      f[dir] -= 1;
      if (exp_deg(f) > space.maxdeg) return std::nullopt;
      out[space.idx.at(f)] += e[dir];
    }
    auto it = tweak.find({a, dir});
    if (it != tweak.end())
      for (std::size_t r = 0; r < out.size(); ++r)
        out[r] += it->second(r, basisIdx);
    return out;
  }
};

struct WeylRepPoly {
  PolySpace space;
  std::map<std::pair<ExpVec, ExpVec>, Mat> tweak;

  // mu(xi^a eta^s) on basis monomial e: eta = d/dxi first, then multiply
  std::optional<Vec> act(const ExpVec& a, const ExpVec& s,
                         int basisIdx) const {
    const ExpVec& e = space.basis[basisIdx];
    Vec out(space.basis.size());
    if (exp_le(s, e)) {
      Rational coeff = 1;
      for (int i = 0; i < space.nvars; ++i)
        for (int k = 0; k < s[i]; ++k) coeff *= (e[i] - k);
      ExpVec f = exp_add(a, exp_sub(e, s));
      if (exp_deg(f) > space.maxdeg) return std::nullopt;
      out[space.idx.at(f)] += coeff;
    }
    auto it = tweak.find({a, s});
    if (it != tweak.end())
      for (std::size_t r = 0; r < out.size(); ++r)
        out[r] += it->second(r, basisIdx);
    return out;
  }
};

namespace detail {
// extends an optional-valued action linearly; nullopt propagates
template <typename F>
inline std::optional<Vec> act_vec(const F& act, const Vec& v) {
  std::optional<Vec> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    auto w = act(static_cast<int>(i));
    if (!w) return std::nullopt;
    if (!out) out = Vec(v.size());
    for (std::size_t r = 0; r < w->size(); ++r) (*out)[r] += v[i] * (*w)[r];
  }
  if (!out) out = Vec(v.size());
  return out;
}
}  // namespace detail

struct CurryVerdict {
  bool rep_ok = true;
  bool curried_ok = true;
  bool equivalent() const { return rep_ok == curried_ok; }
};

// Witt: mu([x,y]) = [mu(x),mu(y)] vs [a1,a2] = a' - a'' on the same data.
// labelDeg bounds |a| for the labels xi^a d_i exercised.
inline CurryVerdict verify_witt_currying(const WittRepPoly& R, int labelDeg) {
  CurryVerdict v;
  int n = R.space.nvars;
  auto labels = exponents_up_to(n, labelDeg);
  // representation condition
  for (const auto& a : labels)
    for (int i = 0; i < n; ++i)
      for (const auto& b : labels)
        for (int j = 0; j < n; ++j)
          for (std::size_t e = 0; e < R.space.basis.size(); ++e) {
            auto first = R.act(b, j, static_cast<int>(e));
            if (!first) continue;
            auto xy = detail::act_vec(
                [&](int k) { return R.act(a, i, k); }, *first);
            auto second = R.act(a, i, static_cast<int>(e));
            if (!second || !xy) continue;
            auto yx = detail::act_vec(
                [&](int k) { return R.act(b, j, k); }, *second);
            if (!yx) continue;
            Vec lhs(R.space.basis.size());
            bool inRange = true;
            for (auto& [c, lab] : witt_bracket(a, i, b, j)) {
              auto w = R.act(lab.first, lab.second, static_cast<int>(e));
              if (!w) {
                inRange = false;
                break;
              }
              for (std::size_t r = 0; r < w->size(); ++r)
                lhs[r] += c * (*w)[r];
            }
            if (!inRange) continue;
            for (std::size_t r = 0; r < lhs.size(); ++r)
              if (lhs[r] != (*xy)[r] - (*yx)[r]) {
                v.rep_ok = false;
                goto repdone;
              }
          }
repdone:
  // curried identity on inputs xi^alpha (x) xi^beta (x) x
  for (const auto& alpha : labels)
    for (const auto& beta : labels)
      for (std::size_t e = 0; e < R.space.basis.size(); ++e) {
        int dx = exp_deg(R.space.basis[e]);
        if (dx + exp_deg(alpha) - 1 > R.space.maxdeg ||
            dx + exp_deg(beta) - 1 > R.space.maxdeg ||
            dx + exp_deg(alpha) + exp_deg(beta) - 2 > R.space.maxdeg)
          continue;
        // keyed by (j, i, monomial): coefficient of xi_j (x) xi_i (x) y
        std::map<std::tuple<int, int, int>, Rational> comm, rhs;
        bool overflow = false;
        for (int i = 0; i < n && !overflow; ++i)
          for (int j = 0; j < n && !overflow; ++j) {
            auto bi = R.act(beta, i, static_cast<int>(e));
            if (!bi) { overflow = true; break; }
            auto aj = detail::act_vec(
                [&](int k) { return R.act(alpha, j, k); }, *bi);
            auto ajFirst = R.act(alpha, j, static_cast<int>(e));
            if (!aj || !ajFirst) { overflow = true; break; }
            auto bi2 = detail::act_vec(
                [&](int k) { return R.act(beta, i, k); }, *ajFirst);
            if (!bi2) { overflow = true; break; }
            for (std::size_t r = 0; r < aj->size(); ++r) {
              Rational c = (*aj)[r] - (*bi2)[r];
              if (c != 0) comm[{j, i, static_cast<int>(r)}] += c;
            }
          }
        if (overflow) continue;
        // a': sum_{j in beta} xi_j (x) xi_i (x) mu(xi^{alpha+beta-eps_j} d_i)x
        for (int j = 0; j < n && !overflow; ++j) {
          if (beta[j] == 0) continue;
          ExpVec merged = exp_add(alpha, beta);
          merged[j] -= 1;
          for (int i = 0; i < n; ++i) {
            auto w = R.act(merged, i, static_cast<int>(e));
            if (!w) { overflow = true; break; }
            for (std::size_t r = 0; r < w->size(); ++r)
              if ((*w)[r] != 0)
                rhs[{j, i, static_cast<int>(r)}] += Rational(beta[j]) * (*w)[r];
          }
        }
        // a'': sum_{j in alpha} xi_i (x) xi_j (x) ...
        for (int j = 0; j < n && !overflow; ++j) {
          if (alpha[j] == 0) continue;
          ExpVec merged = exp_add(alpha, beta);
          merged[j] -= 1;
          for (int i = 0; i < n; ++i) {
            auto w = R.act(merged, i, static_cast<int>(e));
            if (!w) { overflow = true; break; }
            for (std::size_t r = 0; r < w->size(); ++r)
              if ((*w)[r] != 0)
                rhs[{i, j, static_cast<int>(r)}] -= Rational(alpha[j]) * (*w)[r];
          }
        }
        if (overflow) continue;
        std::map<std::tuple<int, int, int>, Rational> pruned;
        for (auto& [k, c] : comm)
          if (c != 0) pruned[k] = c;
        std::map<std::tuple<int, int, int>, Rational> prunedRhs;
        for (auto& [k, c] : rhs)
          if (c != 0) prunedRhs[k] = c;
        if (pruned != prunedRhs) v.curried_ok = false;
      }
  return v;
}

// Weyl: mu([x,y]) = [mu(x),mu(y)] vs [a1,a2] = a' - a'' with the seven-map
// composition defining a'.
inline CurryVerdict verify_weyl_currying(const WeylRepPoly& R, int labelDeg) {
  CurryVerdict v;
  int n = R.space.nvars;
  auto labels = exponents_up_to(n, labelDeg);
  auto etaRange = exponents_up_to(n, R.space.maxdeg);
  // representation condition on labels xi^a eta^s with |a|,|s| <= labelDeg
  for (const auto& a : labels)
    for (const auto& s : labels)
      for (const auto& b : labels)
        for (const auto& t : labels)
          for (std::size_t e = 0; e < R.space.basis.size(); ++e) {
            auto first = R.act(b, t, static_cast<int>(e));
            if (!first) continue;
            auto xy = detail::act_vec(
                [&](int k) { return R.act(a, s, k); }, *first);
            auto second = R.act(a, s, static_cast<int>(e));
            if (!second || !xy) continue;
            auto yx = detail::act_vec(
                [&](int k) { return R.act(b, t, k); }, *second);
            if (!yx) continue;
            Vec lhs(R.space.basis.size());
            bool inRange = true;
            for (auto& [c, lab] : weyl_commutator(a, s, b, t)) {
              auto w = R.act(lab.first, lab.second, static_cast<int>(e));
              if (!w) {
                inRange = false;
                break;
              }
              for (std::size_t r = 0; r < w->size(); ++r)
                lhs[r] += c * (*w)[r];
            }
            if (!inRange) continue;
            for (std::size_t r = 0; r < lhs.size(); ++r)
              if (lhs[r] != (*xy)[r] - (*yx)[r]) {
                v.rep_ok = false;
                goto repdone;
              }
          }
repdone:
  // the a' composition evaluated on xi^alpha (x) xi^beta (x) x; output
  // components keyed by the divided exponents (sigma, tau) and a monomial
  using Key = std::tuple<ExpVec, ExpVec, int>;
  auto aprime = [&](const ExpVec& alpha, const ExpVec& beta,
                    int e) -> std::map<Key, Rational> {
    std::map<Key, Rational> out;
    // (1) id (x) Delta (x) id on Sym: binomial splitting of beta
    for (const auto& eps : etaRange) {
      if (!exp_le(eps, beta)) continue;
      Rational c1 = Rational(exp_binom(beta, eps));
      // (2) tau, (3) multiply: xi^eps (x) xi^{alpha+beta-eps} (x) x
      ExpVec merged = exp_add(alpha, exp_sub(beta, eps));
      // (4) id (x) a: sum_rho xi^[rho] (x) mu(xi^merged eta^rho) x
      for (const auto& rho : etaRange) {
        auto w = R.act(merged, rho, e);
        if (!w) continue;  // guarded by the caller's degree bound
        for (std::size_t r = 0; r < w->size(); ++r) {
          if ((*w)[r] == 0) continue;
          // (5) Delta on Div: rho = nu + mu_; (6) avg: eps -> eps! xi^[eps];
          // (7) multiply divided powers: xi^[eps] xi^[nu] =
          //     C(eps+nu, eps) xi^[eps+nu]
          for (const auto& nu : etaRange) {
            if (!exp_le(nu, rho)) continue;
            ExpVec mu_ = exp_sub(rho, nu);
            ExpVec sigma = exp_add(eps, nu);
            Rational c = c1 * Rational(exp_factorial(eps)) *
                         Rational(exp_binom(sigma, eps)) * (*w)[r];
            if (c != 0) out[{sigma, mu_, static_cast<int>(r)}] += c;
          }
        }
      }
    }
    std::map<Key, Rational> pruned;
    for (auto& [k, c] : out)
      if (c != 0) pruned[k] = c;
    return pruned;
  };
  for (const auto& alpha : labels)
    for (const auto& beta : labels)
      for (std::size_t e = 0; e < R.space.basis.size(); ++e) {
        int dx = exp_deg(R.space.basis[e]);
        if (dx + exp_deg(alpha) + exp_deg(beta) > R.space.maxdeg) continue;
        std::map<Key, Rational> comm;
        for (const auto& tau : etaRange) {
          auto first = R.act(beta, tau, static_cast<int>(e));
          if (!first) continue;
          for (const auto& sigma : etaRange) {
            auto second = detail::act_vec(
                [&](int k) { return R.act(alpha, sigma, k); }, *first);
            if (!second) continue;
            for (std::size_t r = 0; r < second->size(); ++r)
              if ((*second)[r] != 0)
                comm[{sigma, tau, static_cast<int>(r)}] += (*second)[r];
          }
        }
        for (const auto& sigma : etaRange) {
          auto first = R.act(alpha, sigma, static_cast<int>(e));
          if (!first) continue;
          for (const auto& tau : etaRange) {
            auto second = detail::act_vec(
                [&](int k) { return R.act(beta, tau, k); }, *first);
            if (!second) continue;
            for (std::size_t r = 0; r < second->size(); ++r)
              if ((*second)[r] != 0)
                comm[{sigma, tau, static_cast<int>(r)}] -= (*second)[r];
          }
        }
        std::map<Key, Rational> rhs = aprime(alpha, beta, static_cast<int>(e));
        // a'' = tau a' tau: swap the inputs and the two outputs
        for (auto& [k, c] : aprime(beta, alpha, static_cast<int>(e))) {
          Key swapped{std::get<1>(k), std::get<0>(k), std::get<2>(k)};
          rhs[swapped] -= c;
        }
        std::map<Key, Rational> lhsP, rhsP;
        for (auto& [k, c] : comm)
          if (c != 0) lhsP[k] = c;
        for (auto& [k, c] : rhs)
          if (c != 0) rhsP[k] = c;
        if (lhsP != rhsP) v.curried_ok = false;
      }
  return v;
}

// standard polynomial representations
inline WittRepPoly witt_polynomial_rep(int n, int maxdeg) {
  WittRepPoly R;
  R.space = make_poly_space(n, maxdeg);
  return R;
}
inline WeylRepPoly weyl_polynomial_rep(int n, int maxdeg) {
  WeylRepPoly R;
  R.space = make_poly_space(n, maxdeg);
  return R;
}

}  // namespace currycat
