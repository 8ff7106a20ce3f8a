#include <catch2/catch_amalgamated.hpp>

#include "currycat/functors.hpp"
#include "currycat/oracles.hpp"

using namespace currycat;

TEST_CASE("principal module dimensions match the diagram counts") {
  auto B0 = principal_module(DiagramKind::brauer, 0, 4, Rational(2));
  std::vector<int> expected{1, 0, 1, 0, 3};
  for (int n = 0; n <= 4; ++n) CHECK(B0.fb.dim(n) == expected[n]);
  CHECK(validate_fb_module(B0.fb).ok());

  auto P0 = principal_module(DiagramKind::partition, 0, 4, Rational(1));
  for (int n = 0; n <= 4; ++n)
    CHECK(Integer(P0.fb.dim(n)) == bell_number(n));
  CHECK(validate_fb_module(P0.fb).ok());

  auto B1 = principal_module(DiagramKind::brauer, 1, 4, Rational(0));
  CHECK(B1.fb.dim(1) == 1);
  CHECK(validate_fb_module(B1.fb).ok());
}

TEST_CASE("brauer principal modules give delta-standard sp representations") {
  for (const Rational& delta : {Rational(0), Rational(1)}) {
    for (int k = 0; k <= 1; ++k) {
      auto M = principal_module(DiagramKind::brauer, k, 4, 2 * delta);
      SpRepData R = brauer_to_sp(M, delta);
      auto rep = check_sp(R);
      CAPTURE(delta, k, rep.violations);
      CHECK(rep.passed());
      CHECK(standardness_delta(R.gl) == delta);
      // inverse: conditions (a)-(c) hold and generator actions round-trip
      BrauerStructure back = sp_to_brauer(R);
      CHECK(back.report.passed());
      CHECK(back.param == 2 * delta);
      CHECK(back.beta == brauer_beta(M));
      CHECK(back.betaPrime == brauer_beta_prime(M));
    }
  }
}

TEST_CASE("extracted operations agree with diagram actions on shifted frames") {
  auto M = principal_module(DiagramKind::brauer, 0, 4, Rational(2));
  OperationSpec beta = brauer_beta(M);
  // beta^S_{i,j} at a non-canonical frame (relabeled through naturality)
  // equals the action of the corresponding cup morphism
  for (int s = 2; s <= 4; ++s)
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) {
        Mat viaOp = apply_op(M.fb, beta, s, {}, {i, j});
        Mat direct = M.action(DiagramMorphism::single(
            DiagramKind::brauer, brauer_cup(s, i, j)));
        CHECK(viaOp == direct);
      }
}

TEST_CASE("a perturbed brauer module is rejected by the checkers") {
  auto M = principal_module(DiagramKind::brauer, 0, 4, Rational(2));
  SpRepData R = brauer_to_sp(M, Rational(1));
  R.beta.frame_ref(0, 2, 2)(0, 0) += 1;
  auto rep = check_sp(R);
  CHECK(!rep.passed());
  auto back = sp_to_brauer(R);
  CHECK(!back.report.passed());
}

TEST_CASE("restricted principal modules give delta-standard Witt data") {
  for (const Rational& delta : {Rational(0), Rational(1)}) {
    auto M = principal_module(DiagramKind::restricted, 0, 4, delta);
    WittRepData R = restricted_to_witt(M);
    auto rep = check_witt(R);
    CAPTURE(delta, rep.violations);
    CHECK(rep.passed());
    RestrictedStructure back = witt_to_restricted(R);
    CHECK(back.report.passed());
    CHECK(back.param == delta);
    CHECK(back.alpha == restricted_alpha(M));
    CHECK(back.omega == restricted_omega(M));
    // the gl restriction is delta-standard
    CHECK(standardness_delta(restrict_witt_to_gl(R)) == delta);
  }
}

TEST_CASE("partition principal modules give Weyl data with vanishing omega") {
  Rational delta(2);
  auto M = principal_module(DiagramKind::partition, 0, 4, delta);
  WeylRepData R = partition_to_weyl(M);
  auto repB = check_weyl_B(M.fb, R.phi);
  CAPTURE(repB.violations);
  CHECK(repB.passed());
  CHECK(b3prime_holds(R.phi));
  auto cc = central_character(R);
  REQUIRE(cc.chi.has_value());
  CHECK(*cc.chi == delta);
  PartitionStructure back = weyl_to_partition(R);
  CHECK(back.report.passed());
  CHECK(back.param == delta);
  CHECK(back.alpha == partition_alpha(M));
  // 0-standard: the gl restriction has omega = 0 and alpha = iota
  GlRepData gl = restrict_witt_to_gl(restrict_weyl_to_witt(R));
  CHECK(standardness_delta(gl) == Rational(0));
}

TEST_CASE("FA^op functor modules give 0-standard Witt data with omega = 0") {
  for (int xSize = 1; xSize <= 2; ++xSize) {
    FAModule F = fa_functor_module(xSize, 4);
    CHECK(validate_fb_module(F.fb).ok());
    for (int n = 0; n <= 4; ++n) {
      int expect = 1;
      for (int t = 0; t < n; ++t) expect *= xSize;
      CHECK(F.fb.dim(n) == expect);
    }
    WittRepData R = fa_to_witt(F);
    CHECK(R.omega.is_zero());
    auto rep = check_witt(R);
    CAPTURE(xSize, rep.violations);
    CHECK(rep.passed());
    CHECK(standardness_delta(restrict_witt_to_gl(R)) == Rational(0));
  }
}

TEST_CASE("FA module with |X| = 1 collapses alpha to identities") {
  FAModule F = fa_functor_module(1, 3);
  WittRepData R = fa_to_witt(F);
  for (const auto& [key, mat] : R.alpha.frames)
    if (mat.rows() > 0) CHECK(mat.is_identity());
  CHECK(check_witt(R).passed());
}

TEST_CASE("star modules give Weyl data with the expected invariants") {
  Rational delta(1), eps(2);
  auto M = principal_star_module(0, 3, delta, eps);
  CHECK(validate_fb_module(M.fb).ok());
  StarWeylData D = star_to_weyl(M);
  auto repC = check_weyl_C(M.fb, D.alpha, D.omega);
  CAPTURE(repC.violations);
  CHECK(repC.passed());
  // central character delta - eps
  auto cc = central_character(D.weyl);
  REQUIRE(cc.chi.has_value());
  CHECK(*cc.chi == delta - eps);
  // the gl restriction is eps-standard
  GlRepData gl = restrict_witt_to_gl(restrict_weyl_to_witt(D.weyl));
  CHECK(standardness_delta(gl) == eps);
  // Theta round-trips exactly on this data
  auto [a2, o2] = theta(M.fb, D.weyl.phi);
  CHECK(a2 == D.alpha);
  CHECK(o2 == D.omega);
  CHECK(theta_inv(M.fb, a2, o2) == D.weyl.phi);
  CHECK(b3prime_holds(D.weyl.phi));
}

TEST_CASE("star module dimensions count pairs of partial partitions") {
  auto M = principal_star_module(0, 4, Rational(1), Rational(2));
  // dim at degree n: sum over j of C(n,j) B(j) B(n-j)
  for (int n = 0; n <= 4; ++n) {
    Integer expect = 0;
    for (int j = 0; j <= n; ++j)
      expect += binomial(n, j) * bell_number(j) * bell_number(n - j);
    CHECK(Integer(M.fb.dim(n)) == expect);
  }
}

TEST_CASE("functors preserve morphisms: hom spaces agree on both sides") {
  // maps between two small Brauer principal modules: the solution space of
  // the generator-intertwining equations equals the solution space of the
  // operation-intertwining equations
  int N = 4;
  auto A = principal_module(DiagramKind::brauer, 0, N, Rational(2));
  SpRepData RA = brauer_to_sp(A, Rational(1));
  // unknowns: block maps f_n: A -> A per degree
  std::vector<int> offsets;
  int total = 0;
  for (int n = 0; n <= N; ++n) {
    offsets.push_back(total);
    total += A.fb.dim(n) * A.fb.dim(n);
  }
  auto unknown = [&](int n, int r, int c) {
    return offsets[n] + r * A.fb.dim(n) + c;
  };
  std::vector<Vec> rows;
  auto buildNullspace = [&](bool opSide) {
    std::vector<Vec> eqs;
    auto intertwine = [&](int srcDeg, int tgtDeg, const Mat& act) {
      for (int r = 0; r < A.fb.dim(tgtDeg); ++r)
        for (int c = 0; c < A.fb.dim(srcDeg); ++c) {
          Vec row(total);
          // (f_tgt . act - act . f_src)(r, c) = 0
          for (int t = 0; t < A.fb.dim(tgtDeg); ++t)
            if (act(t, c) != 0) row[unknown(tgtDeg, r, t)] += act(t, c);
          for (int t = 0; t < A.fb.dim(srcDeg); ++t)
            if (act(r, t) != 0) row[unknown(srcDeg, t, c)] -= act(r, t);
          eqs.push_back(std::move(row));
        }
    };
    for (int n = 0; n <= N; ++n)
      for (int i = 1; i <= n - 1; ++i) intertwine(n, n, A.fb.gen(n, i));
    if (!opSide) {
      for (int p = 0; p + 2 <= N; ++p) {
        int s = p + 2;
        intertwine(p, s, A.action(DiagramMorphism::single(
                             DiagramKind::brauer, brauer_cup(s, p, p + 1))));
        intertwine(s, p, A.action(DiagramMorphism::single(
                             DiagramKind::brauer, brauer_cap(s, p, p + 1))));
      }
    } else {
      for (int p = 0; p + 2 <= N; ++p) {
        intertwine(p, p + 2, *RA.beta.frame(0, 2, p));
        intertwine(p + 2, p, *RA.betaPrime.frame(2, 0, p));
        intertwine(p, p, *RA.gl.omega.frame(0, 0, p));
        if (p + 2 <= N) intertwine(p + 1, p + 1, *RA.gl.alpha.frame(1, 1, p));
      }
    }
    Mat sys(eqs.size(), total);
    for (std::size_t r = 0; r < eqs.size(); ++r)
      for (int c = 0; c < total; ++c) sys(r, c) = eqs[r][c];
    return sys.nullspace();
  };
  auto homDiagram = buildNullspace(false);
  auto homCurried = buildNullspace(true);
  CHECK(homDiagram.size() == homCurried.size());
  CHECK(homDiagram == homCurried);
}

TEST_CASE("rho laws hold on principal brauer and partition gl restrictions") {
  auto B = principal_module(DiagramKind::brauer, 0, 4, Rational(2));
  GlRepData glB = brauer_to_sp(B, Rational(1)).gl;
  for (int n = 1; n <= 3; ++n) CHECK(check_rho_laws(glB, n).passed());

  auto P = principal_module(DiagramKind::partition, 0, 4, Rational(1));
  WeylRepData W = partition_to_weyl(P);
  GlRepData glP = restrict_witt_to_gl(restrict_weyl_to_witt(W));
  for (int n = 1; n <= 3; ++n) CHECK(check_rho_laws(glP, n).passed());
}

TEST_CASE("scaling omega so that beta'beta = 3 omega fails exactly (e)") {
  // delta-standard sp data with beta'beta = 2 delta id; setting omega to
  // (2/3) delta id makes beta'beta = 3 omega, breaking only condition (e)
  Rational delta(1);
  auto M = principal_module(DiagramKind::brauer, 0, 4, 2 * delta);
  SpRepData R = brauer_to_sp(M, delta);
  for (int p = 0; p <= 4; ++p)
    R.gl.omega.frames[{0, 0, p}] =
        Mat::scalar(M.fb.dim(p), 2 * delta / 3);
  auto rep = check_sp(R);
  REQUIRE(!rep.passed());
  for (const auto& v : rep.violations) {
    bool expected = v.rfind("(e)", 0) == 0 || v.rfind("(sp-map)", 0) == 0 ||
                    v.rfind("(cross)", 0) == 0;
    CAPTURE(v);
    CHECK(expected);
  }
  bool sawE = false;
  for (const auto& v : rep.violations)
    if (v.rfind("(e)", 0) == 0) sawE = true;
  CHECK(sawE);
}

TEST_CASE("a perturbed restricted module is rejected by check_witt") {
  auto M = principal_module(DiagramKind::restricted, 0, 4, Rational(1));
  WittRepData R = restricted_to_witt(M);
  R.alpha.frame_ref(1, 2, 1)(0, 0) += Rational(1, 2);
  CHECK(!check_witt(R).passed());
}

TEST_CASE("negating omega on star data breaks (C2) at the omega laws") {
  auto M = principal_star_module(0, 3, Rational(1), Rational(2));
  StarWeylData D = star_to_weyl(M);
  OperationSpec negOmega = op_scale(-1, D.omega);
  auto rep = check_weyl_C(M.fb, D.alpha, negOmega);
  REQUIRE(!rep.passed());
  bool sawOmegaLaw = false;
  for (const auto& v : rep.violations)
    if (v.find("omega1.omega2") != std::string::npos) sawOmegaLaw = true;
  CHECK(sawOmegaLaw);
}

TEST_CASE("restrict_sp_to_gl returns the delta-standard gl part") {
  auto M = principal_module(DiagramKind::brauer, 0, 4, Rational(3));
  SpRepData R = brauer_to_sp(M, Rational(3, 2));
  GlRepData gl = restrict_sp_to_gl(R);
  CHECK(standardness_delta(gl) == Rational(3, 2));
  CHECK(check_gl(gl).passed());
}

TEST_CASE("star modules with a nonempty source exercise both factor splits") {
  Rational delta(1), eps(2);
  auto M = principal_star_module(1, 3, delta, eps);
  CHECK(validate_fb_module(M.fb).ok());
  StarWeylData D = star_to_weyl(M);
  auto repC = check_weyl_C(M.fb, D.alpha, D.omega);
  CAPTURE(repC.violations);
  CHECK(repC.passed());
  auto cc = central_character(D.weyl);
  REQUIRE(cc.chi.has_value());
  CHECK(*cc.chi == delta - eps);
  CHECK(standardness_delta(restrict_witt_to_gl(restrict_weyl_to_witt(D.weyl))) ==
        eps);
}
