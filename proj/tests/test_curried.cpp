#include <catch2/catch_amalgamated.hpp>

#include "currycat/curried.hpp"
#include "currycat/specht.hpp"

using namespace currycat;

namespace {

FBMorphism fb_transpose(const FBMorphism& f) {
  FBMorphism g;
  for (const auto& m : f.mats) g.mats.push_back(m.transpose());
  return g;
}

// a acting through the first tensor factor of L (x) R, as a morphism of
// V (x) (L (x) R): conjugate aL (x) id by the associator.
FBMorphism act_on_left_factor(const GlRepData& L, const TruncatedFBModule& R) {
  int N = L.M.truncation;
  auto V = standard_module(N);
  auto VL = tensor_module(V, L.M);
  auto VL_R = tensor_module(VL.mod, R);
  auto LR = tensor_module(L.M, R);
  auto V_LR = tensor_module(V, LR.mod);
  FBMorphism assoc = associator(VL, VL_R, LR, V_LR);
  FBMorphism aL = op_to_map(L.M, contract({L.alpha, L.omega}), 1, 1, VL, VL);
  FBMorphism idR;
  for (int n = 0; n <= N; ++n) idR.mats.push_back(Mat::identity(R.dim(n)));
  FBMorphism lifted = tensor_morphism(aL, idR, VL_R, VL_R);
  return fb_compose(assoc, fb_compose(lifted, fb_transpose(assoc)));
}

// Tensor product of two gl representations: action a + b through the
// canonical relabelings, extracted back to operations.
GlRepData tensor_gl_reps(const GlRepData& A, const GlRepData& B) {
  int N = A.M.truncation;
  auto V = standard_module(N);
  auto T = tensor_module(A.M, B.M);
  auto VT = tensor_module(V, T.mod);
  auto TN = tensor_module(B.M, A.M);
  auto VTN = tensor_module(V, TN.mod);

  FBMorphism aPart = act_on_left_factor(A, B.M);
  // conjugate B's action on N (x) M by id_V (x) tau
  FBMorphism tau = symmetry_morphism(T, TN);
  FBMorphism idV;
  for (int n = 0; n <= N; ++n) idV.mats.push_back(Mat::identity(V.dim(n)));
  FBMorphism idTau = tensor_morphism(idV, tau, VT, VTN);
  FBMorphism bExpr = act_on_left_factor(B, A.M);
  FBMorphism bPart = fb_compose(fb_transpose(idTau), fb_compose(bExpr, idTau));

  FBMorphism aT = fb_add(aPart, bPart);
  SymmetricOperation sop = op_from_map(T.mod, aT, 1, 1, VT, VT);
  GlRepData out;
  out.M = T.mod;
  out.alpha = sop.layers[0];
  out.omega = sop.layers[1];
  return out;
}

}  // namespace

TEST_CASE("the standard representation (a = tau on V) passes check_gl") {
  auto V = standard_module(4);
  GlRepData R = make_delta_standard(V, Rational(0));
  // on V the 0-standard structure is exactly a = tau
  auto VV = tensor_module(V, V);
  FBMorphism a = op_to_map(V, contract({R.alpha, R.omega}), 1, 1, VV, VV);
  FBMorphism tau = symmetry_morphism(VV, VV);
  CHECK(a == tau);
  CHECK(check_gl(R).passed());
}

TEST_CASE("the trivial representation passes check_gl") {
  auto M = specht_module({2, 1}, 4);
  CHECK(check_gl(trivial_gl(M)).passed());
}

TEST_CASE("delta-standard structures pass check_gl for several deltas") {
  auto M = tensor_module(standard_module(4), sym_algebra_module(4)).mod;
  for (const Rational& d : {Rational(0), Rational(1), Rational(-2)})
    CHECK(check_gl(make_delta_standard(M, d)).passed());
}

TEST_CASE("a broken condition (b) is reported with a located witness") {
  auto M = sym_algebra_module(4);
  GlRepData R = make_delta_standard(M, Rational(1));
  R.alpha.frame_ref(1, 1, 0)(0, 0) = Rational(2);  // alpha no longer iota
  auto rep = check_gl(R);
  REQUIRE(!rep.passed());
  bool foundB = false;
  for (const auto& v : rep.violations)
    if (v.rfind("(b)", 0) == 0) foundB = true;
  CHECK(foundB);
}

TEST_CASE("tensor product of two gl representations passes check_gl") {
  int N = 4;
  auto M1 = standard_module(N);
  auto M2 = sym_power_module(2, N);
  GlRepData A = make_delta_standard(M1, Rational(1));
  GlRepData B = make_delta_standard(M2, Rational(1, 2));
  GlRepData T = tensor_gl_reps(A, B);
  CHECK(check_gl(T).passed());
  // of two standard structures the product is (d1+d2)-standard
  CHECK(standardness_delta(T) == Rational(3, 2));
}

TEST_CASE("twisting by trace preserves check_gl and adds deltas on units") {
  auto M = tensor_module(standard_module(4), standard_module(4)).mod;
  GlRepData R = make_delta_standard(M, Rational(0));
  GlRepData tw = twist_by_trace(R, Rational(5, 3));
  CHECK(check_gl(tw).passed());
  CHECK(standardness_delta(tw) == Rational(5, 3));

  auto U = unit_module(3);
  GlRepData u1 = twist_by_trace(trivial_gl(U), Rational(2));
  GlRepData u2 = twist_by_trace(trivial_gl(U), Rational(7, 2));
  GlRepData prod = tensor_gl_reps(u1, u2);
  CHECK(check_gl(prod).passed());
  CHECK(standardness_delta(prod) == Rational(11, 2));
}

TEST_CASE("rho idempotents: delta-standard gives id, trivial gives 0") {
  auto M = sym_algebra_module(4);
  GlRepData R = make_delta_standard(M, Rational(2));
  auto rho = rho_idempotents(R, 3);
  for (const auto& r : rho) CHECK(r.is_identity());
  CHECK(check_rho_laws(R, 3).passed());

  GlRepData T = trivial_gl(M);
  auto rho0 = rho_idempotents(T, 3);
  for (const auto& r : rho0) CHECK(r.is_zero());
  CHECK(check_rho_laws(T, 3).passed());
}

TEST_CASE("rho conjugation law is checked over all transpositions at n=3") {
  auto M = tensor_module(standard_module(4), sym_algebra_module(4)).mod;
  GlRepData R = make_delta_standard(M, Rational(1));
  CHECK(check_rho_laws(R, 3).passed());
}

TEST_CASE("zero extension of a nontrivial gl structure is rejected by check_witt") {
  // In W(V) the bracket [W_{-1}, W_1] lands in gl(V), so a gl representation
  // with nonzero alpha cannot extend to the Witt algebra by zero; condition
  // (b) must produce a witness at a (1,0)/(1,2) frame.
  auto M = sym_algebra_module(4);
  GlRepData R = make_delta_standard(M, Rational(0));
  WittRepData W = extend_gl_to_witt(R);
  auto rep = check_witt(W);
  REQUIRE(!rep.passed());
  bool sawB = false;
  for (const auto& v : rep.violations)
    if (v.rfind("(b)", 0) == 0) sawB = true;
  CHECK(sawB);
  // the restriction still returns the original gl data
  GlRepData back = restrict_witt_to_gl(W);
  CHECK(back.alpha == R.alpha);
  CHECK(back.omega == R.omega);
}

TEST_CASE("zero extension of the trivial gl structure passes check_witt") {
  auto M = sym_algebra_module(4);
  WittRepData W = extend_gl_to_witt(trivial_gl(M));
  CHECK(check_witt(W).passed());
}

TEST_CASE("the zero Witt data passes check_witt") {
  auto M = specht_module({2}, 4);
  WittRepData W;
  W.M = M;
  W.alpha = make_operation(M, OpSymmetry::symmetric, star_arities(1, 4));
  W.omega = make_operation(M, OpSymmetry::symmetric, star_arities(0, 4));
  CHECK(check_witt(W).passed());
}

TEST_CASE("theta and theta_inv are mutually inverse") {
  auto M = sym_algebra_module(3);
  // build a nonzero pair (alpha, omega)
  OperationSpec alpha = zero_star_op(M);
  OperationSpec omega = zero_star_op(M);
  int v = 1;
  for (auto& [key, mat] : alpha.frames)
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j) mat(i, j) = Rational(v++);
  for (auto& [key, mat] : omega.frames)
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j) mat(i, j) = Rational(2 * v++);
  SymmetricOperation phi = theta_inv(M, alpha, omega);
  auto [a2, o2] = theta(M, phi);
  CHECK(a2 == alpha);
  CHECK(o2 == omega);
  SymmetricOperation phi2 = theta_inv(M, a2, o2);
  CHECK(phi2 == phi);
  CHECK(b3prime_holds(phi));
}

TEST_CASE("trivial Weyl data passes (B) and (C)") {
  auto M = specht_module({1}, 3);
  WeylRepData W;
  W.M = M;
  W.phi = theta_inv(M, zero_star_op(M), zero_star_op(M));
  CHECK(check_weyl(W).passed());
  auto cc = central_character(W);
  REQUIRE(cc.chi.has_value());
  CHECK(*cc.chi == 0);
}

TEST_CASE("central character detects degree-dependent phi") {
  auto M = sym_algebra_module(3);
  WeylRepData W;
  W.M = M;
  W.phi = theta_inv(M, zero_star_op(M), zero_star_op(M));
  W.phi.layers[0].frame_ref(0, 0, 1)(0, 0) = Rational(1);
  W.phi.layers[0].frame_ref(0, 0, 2)(0, 0) = Rational(2);
  auto cc = central_character(W);
  CHECK(!cc.chi.has_value());
  CHECK(cc.witness.find("degree-dependent") != std::string::npos);
}

TEST_CASE("flipping the sign of omega breaks (C2) at the omega.omega law") {
  auto M = sym_algebra_module(4);
  // delta-standard alpha as a (*,*) operation plus a nonzero omega family
  OperationSpec alpha = zero_star_op(M);
  for (auto& [key, mat] : alpha.frames) {
    auto [m, n, p] = key;
    if (m == 1 && n == 1) mat = Mat::identity(M.dim(p + 1));
  }
  (void)alpha;
  // build valid (alpha,omega) from partition-like data is exercised in the
  // functor tests; here check the reporting shape on a crafted failure
  OperationSpec omega = zero_star_op(M);
  for (auto& [key, mat] : omega.frames)
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j) mat(i, j) = 1;
  auto rep = check_weyl_C(M, zero_star_op(M), omega, 3);
  bool sawOmegaLaw = false;
  for (const auto& v : rep.violations)
    if (v.rfind("(C2) omega1.omega2", 0) == 0) sawOmegaLaw = true;
  CHECK(sawOmegaLaw);
}

TEST_CASE("make_delta_standard is functorial in the module") {
  // any equivariant map intertwines the delta-standard structures
  auto V = standard_module(4);
  auto VV = tensor_module(V, V);
  auto M = VV.mod;
  GlRepData R = make_delta_standard(M, Rational(2));
  FBMorphism tau = symmetry_morphism(VV, VV);  // an equivariant map M -> M
  REQUIRE(is_equivariant(tau, M, M));
  for (int s = 2; s <= 4; ++s)
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        if (i == j) continue;
        Mat a = apply_op(M, R.alpha, s, {i}, {j});
        CHECK(tau.at(s - 1) * a == a * tau.at(s - 1));
      }
  for (int s = 0; s <= 4; ++s) {
    Mat w = apply_op(M, R.omega, s, {}, {});
    CHECK(tau.at(s) * w == w * tau.at(s));
  }
}

TEST_CASE("apply_op rejects frames outside the truncation") {
  auto M = sym_algebra_module(3);
  GlRepData R = make_delta_standard(M, Rational(0));
  CHECK_THROWS_AS(apply_op(M, R.alpha, 5, {0}, {1}), std::out_of_range);
}

TEST_CASE("tensor_module rejects mismatched truncations") {
  CHECK_THROWS_AS(tensor_module(standard_module(3), standard_module(4)),
                  std::invalid_argument);
}
