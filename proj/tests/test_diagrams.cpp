#include <catch2/catch_amalgamated.hpp>

#include "currycat/diagram.hpp"
#include "currycat/oracles.hpp"
#include "currycat/star.hpp"

using namespace currycat;

TEST_CASE("brauer cap after cup on the same pair gives delta times identity") {
  // (eta')^S_{i,j} . eta^S_{j,i} = delta id on S\{i,j}, S = {1..4}, i=2, j=4
  int s = 4;
  auto cup = DiagramMorphism::single(DiagramKind::brauer, brauer_cup(s, 1, 3));
  auto cap = DiagramMorphism::single(DiagramKind::brauer, brauer_cap(s, 1, 3));
  Rational delta(3, 2);
  auto comp = compose(cap, cup, delta);
  CHECK(comp ==
        DiagramMorphism::identity(DiagramKind::brauer, s - 2, delta));
}

TEST_CASE("brauer cap after cup with one shared endpoint is a relabeling") {
  // (eta')^S_{j,l} . eta^S_{i,j} = iota^{S\j}_{i,l}: the composite is the
  // matching that pairs source l with target i (the bijection's diagram)
  int s = 4;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      for (int l = 0; l < s; ++l) {
        if (i == j || j == l || i == l) continue;
        auto cup =
            DiagramMorphism::single(DiagramKind::brauer, brauer_cup(s, i, j));
        auto cap =
            DiagramMorphism::single(DiagramKind::brauer, brauer_cap(s, j, l));
        auto comp = compose(cap, cup, Rational(7));
        auto frame = detail::frame_minus(s, {j});
        int iPos = 0, lPos = 0;
        for (std::size_t k = 0; k < frame.size(); ++k) {
          if (frame[k] == i) iPos = static_cast<int>(k);
          if (frame[k] == l) lPos = static_cast<int>(k);
        }
        auto expected = DiagramMorphism::single(DiagramKind::brauer,
                                                iota_diagram(3, lPos, iPos));
        CHECK(comp == expected);
      }
}

TEST_CASE("identity composes as the identity on both sides") {
  for (auto kind : {DiagramKind::brauer, DiagramKind::partition}) {
    for (const auto& d : enumerate_diagrams(2, 2, kind)) {
      auto f = DiagramMorphism::single(kind, d);
      auto idSrc = DiagramMorphism::identity(kind, 2);
      CHECK(compose(f, idSrc, Rational(5)) == f);
      CHECK(compose(idSrc, f, Rational(5)) == f);
    }
  }
}

TEST_CASE("diagram counts: matchings, partitions, parity") {
  CHECK(hom_dim(2, 2, DiagramKind::brauer) == 3);
  CHECK(hom_dim(1, 2, DiagramKind::brauer) == 0);
  CHECK(hom_dim(2, 2, DiagramKind::partition) == 15);
  // against the formulas and the independent enumerations
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      Integer lib = hom_dim(n, m, DiagramKind::brauer);
      CHECK(lib == oracle::matching_count_bruteforce(n + m));
      if ((n + m) % 2 == 0) CHECK(lib == double_factorial(n + m - 1));
      Integer libP = hom_dim(n, m, DiagramKind::partition);
      CHECK(libP == oracle::set_partition_count_bruteforce(n + m));
      CHECK(libP == bell_number(n + m));
    }
}

TEST_CASE("enumeration respects the configured bound") {
  CHECK_THROWS_AS(enumerate_diagrams(7, 7, DiagramKind::brauer, 12),
                  std::invalid_argument);
}

TEST_CASE("composition is associative for all triples of total size <= 6") {
  for (auto kind : {DiagramKind::brauer, DiagramKind::partition}) {
    for (const Rational& delta : {Rational(0), Rational(1), Rational(3, 2)}) {
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 4; ++b)
          for (int c = 0; a + b + c <= 5; ++c)
            for (int d = 0; a + b + c + d <= 6; ++d) {
              auto fs = enumerate_diagrams(a, b, kind);
              auto gs = enumerate_diagrams(b, c, kind);
              auto hs = enumerate_diagrams(c, d, kind);
              for (const auto& f : fs)
                for (const auto& g : gs)
                  for (const auto& h : hs) {
                    auto F = DiagramMorphism::single(kind, f);
                    auto G = DiagramMorphism::single(kind, g);
                    auto H = DiagramMorphism::single(kind, h);
                    CHECK(compose(H, compose(G, F, delta), delta) ==
                          compose(compose(H, G, delta), F, delta));
                  }
            }
    }
  }
}

TEST_CASE("brauer diagrams are closed under composition with loop powers") {
  Rational delta(3, 2);
  for (const auto& f : enumerate_diagrams(2, 4, DiagramKind::brauer))
    for (const auto& g : enumerate_diagrams(4, 2, DiagramKind::brauer)) {
      auto comp = compose(DiagramMorphism::single(DiagramKind::brauer, g),
                          DiagramMorphism::single(DiagramKind::brauer, f),
                          delta);
      REQUIRE(comp.terms.size() == 1);
      CHECK(comp.terms[0].second.is_brauer());
      // coefficient is a power of delta
      Rational c = comp.terms[0].first;
      bool powerOfDelta = false;
      Rational p(1);
      for (int k = 0; k <= 4; ++k) {
        if (c == p) powerOfDelta = true;
        p *= delta;
      }
      CHECK(powerOfDelta);
    }
}

TEST_CASE("restricted diagrams are closed under composition") {
  for (const auto& f : enumerate_diagrams(2, 2, DiagramKind::restricted))
    for (const auto& g : enumerate_diagrams(2, 3, DiagramKind::restricted)) {
      auto comp = compose(DiagramMorphism::single(DiagramKind::restricted, g),
                          DiagramMorphism::single(DiagramKind::restricted, f),
                          Rational(2));
      for (const auto& [c, d] : comp.terms) CHECK(d.is_restricted());
    }
}

TEST_CASE("an upwards diagram factors as (itself, identity)") {
  for (const auto& d : enumerate_diagrams(2, 3, DiagramKind::partition)) {
    if (!d.is_upwards()) continue;
    auto f = triangular_factorize(d);
    CHECK(f.middle == d.n);
    CHECK(f.down == PartitionDiagram::identity(d.n));
    CHECK(f.up == d);
  }
}

TEST_CASE("brauer diagram with a bottom and a top edge factors through 0") {
  PartitionDiagram d;
  d.n = 2;
  d.m = 2;
  d.blocks = {{0, 1}, {2, 3}};
  d.canonicalize();
  auto f = triangular_factorize(d);
  CHECK(f.middle == 0);
  CHECK(f.down.blocks == std::vector<std::vector<int>>{{0, 1}});
  CHECK(f.up.blocks == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("factorize-then-recompose is the identity up to size 4") {
  for (auto kind : {DiagramKind::brauer, DiagramKind::partition}) {
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m)
        for (const auto& d : enumerate_diagrams(n, m, kind)) {
          auto f = triangular_factorize(d);
          CHECK(f.up.is_upwards());
          CHECK(f.down.is_downwards());
          if (kind == DiagramKind::brauer) {
            CHECK(f.up.is_brauer());
            CHECK(f.down.is_brauer());
          }
          auto comp = compose_diagrams(f.up, f.down);
          CHECK(comp.loops == 0);  // recomposition is delta-free
          CHECK(comp.diagram == d);
        }
  }
}

TEST_CASE("up/down pairs recompose to a single diagram that refactors") {
  for (auto kind : {DiagramKind::brauer, DiagramKind::partition})
    for (int y = 0; y <= 2; ++y)
      for (const auto& u : enumerate_diagrams(y, 2, kind)) {
        if (!u.is_upwards()) continue;
        for (const auto& v : enumerate_diagrams(2, y, kind)) {
          if (!v.is_downwards()) continue;
          auto comp = compose_diagrams(u, v);
          CHECK(comp.loops == 0);
          auto f = triangular_factorize(comp.diagram);
          auto re = compose_diagrams(f.up, f.down);
          CHECK(re.diagram == comp.diagram);
          CHECK(re.loops == 0);
        }
      }
}

TEST_CASE("T3 dimension count for brauer at n=m=2") {
  // sum over y of #up(y -> 2) * #down(2 -> y) / y! = hom_dim(2,2)
  Rational total(0);
  for (int y = 0; y <= 4; ++y) {
    int ups = 0, downs = 0;
    for (const auto& u : enumerate_diagrams(y, 2, DiagramKind::brauer))
      if (u.is_upwards()) ++ups;
    for (const auto& v : enumerate_diagrams(2, y, DiagramKind::brauer))
      if (v.is_downwards()) ++downs;
    total += Rational(Integer(ups) * Integer(downs), factorial(y));
  }
  CHECK(total == Rational(3));
  CHECK(hom_dim(2, 2, DiagramKind::brauer) == 3);
}

TEST_CASE("embed_fa: identity, constant map, and functoriality") {
  // identity function -> identity diagram
  CHECK(embed_fa(3, {0, 1, 2}) == PartitionDiagram::identity(3));
  // constant map [2] -> [1]: single block {b1, t1, t2}
  PartitionDiagram c = embed_fa(1, {0, 0});
  REQUIRE(c.blocks.size() == 1);
  CHECK(c.blocks[0] == std::vector<int>{0, 1, 2});
  CHECK(c.is_restricted());
  // functoriality: embed(f . g) = embed(g) . embed(f) at delta = 0
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int k = 1; k <= 3; ++k) {
        // f: [m] -> [n], g: [k] -> [m]
        std::vector<int> f(m, 0), g(k, 0);
        auto inc = [](std::vector<int>& v, int base) {
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (++v[i] < base) return true;
            v[i] = 0;
          }
          return false;
        };
        do {
          std::vector<int> gcur(k, 0);
          do {
            std::vector<int> fg(k);
            for (int t = 0; t < k; ++t) fg[t] = f[gcur[t]];
            auto lhs = DiagramMorphism::single(DiagramKind::restricted,
                                               embed_fa(n, fg));
            auto rhs = compose(
                DiagramMorphism::single(DiagramKind::restricted,
                                        embed_fa(m, gcur)),
                DiagramMorphism::single(DiagramKind::restricted,
                                        embed_fa(n, f)),
                Rational(0));
            CHECK(lhs == rhs);
          } while (inc(gcur, m));
        } while (inc(f, n));
      }
}

TEST_CASE("star composition zeroes mismatched middles and fixes identities") {
  Rational delta(1), eps(2);
  // mismatched middle decompositions compose to zero
  StarMorphism f, g;
  f.n = 0;
  f.m = 1;
  {
    StarTerm t;
    t.coeff = 1;
    t.srcMask = 0;
    t.tgtMask = 1;  // the single point sits in the C part
    t.d1 = enumerate_diagrams(0, 1, DiagramKind::partition)[0];
    t.d2 = PartitionDiagram::identity(0);
    f.terms.push_back(t);
    f.normalize();
  }
  g.n = 1;
  g.m = 0;
  {
    StarTerm t;
    t.coeff = 1;
    t.srcMask = 0;  // expects the point in the D part: mismatch
    t.tgtMask = 0;
    t.d1 = PartitionDiagram::identity(0);
    t.d2 = enumerate_diagrams(1, 0, DiagramKind::partition)[0];
    g.terms.push_back(t);
    g.normalize();
  }
  CHECK(star_compose(g, f, delta, eps).terms.empty());

  // id . id = id
  for (int n = 0; n <= 3; ++n) {
    StarMorphism id = star_identity(n);
    CHECK(star_compose(id, id, delta, eps) == id);
  }

  // matched middles compose componentwise
  StarMorphism g2;
  g2.n = 1;
  g2.m = 0;
  {
    StarTerm t;
    t.coeff = 1;
    t.srcMask = 1;
    t.tgtMask = 0;
    t.d1 = enumerate_diagrams(1, 0, DiagramKind::partition)[0];
    t.d2 = PartitionDiagram::identity(0);
    g2.terms.push_back(t);
    g2.normalize();
  }
  auto comp = star_compose(g2, f, delta, eps);
  REQUIRE(comp.terms.size() == 1);
  CHECK(comp.terms[0].coeff == delta);  // closed loop in the C = P(delta) part
}

TEST_CASE("generator builders produce the stated diagrams") {
  // eta^{1,2}_{1,2}: [0] -> [2] with one top edge
  PartitionDiagram cup = brauer_cup(2, 0, 1);
  CHECK(cup.n == 0);
  CHECK(cup.m == 2);
  REQUIRE(cup.blocks.size() == 1);
  CHECK(cup.blocks[0] == std::vector<int>{0, 1});

  // zeta^S_{} = delta id at the morphism level
  Rational delta(5, 3);
  CHECK(zeta_morphism(4, {}, delta) ==
        DiagramMorphism::identity(DiagramKind::restricted, 4, delta));

  // eta^S_{i,{j}} in the partition category equals the relabeling bijection
  int s = 4, i = 1, j = 2;
  auto eta = partition_eta_morphism(s, {i}, {j}, Rational(9));
  REQUIRE(eta.terms.size() == 1);
  CHECK(eta.terms[0].second == iota_diagram(s, i, j));

  // eta^S_{{},{}} = delta id
  CHECK(partition_eta_morphism(s, {}, {}, delta) ==
        DiagramMorphism::identity(DiagramKind::partition, s, delta));
}

TEST_CASE("compose rejects size and kind mismatches") {
  auto a = DiagramMorphism::identity(DiagramKind::brauer, 2);
  auto b = DiagramMorphism::identity(DiagramKind::brauer, 3);
  CHECK_THROWS_AS(compose(b, a, Rational(1)), std::invalid_argument);
  auto c = DiagramMorphism::identity(DiagramKind::partition, 2);
  CHECK_THROWS_AS(compose(c, a, Rational(1)), std::invalid_argument);
}

TEST_CASE("star composition is associative on small morphisms") {
  Rational delta(1), eps(3);
  // a pool of star morphisms between sizes 1 and 2
  auto pool = [&](int n, int m) {
    std::vector<StarMorphism> out;
    out.push_back(star_identity(std::min(n, m)));  // placeholder sizes fixed below
    out.clear();
    for (Mask sm = 0; sm < (Mask(1) << n); ++sm)
      for (Mask tm = 0; tm < (Mask(1) << m); ++tm) {
        int s1 = popcount(sm), t1 = popcount(tm);
        auto d1s = enumerate_diagrams(s1, t1, DiagramKind::partition);
        auto d2s = enumerate_diagrams(n - s1, m - t1, DiagramKind::partition);
        for (const auto& d1 : d1s)
          for (const auto& d2 : d2s) {
            StarMorphism f;
            f.n = n;
            f.m = m;
            StarTerm t;
            t.coeff = 1;
            t.srcMask = sm;
            t.tgtMask = tm;
            t.d1 = d1;
            t.d2 = d2;
            f.terms.push_back(t);
            f.normalize();
            out.push_back(std::move(f));
          }
      }
    return out;
  };
  auto fs = pool(1, 2), gs = pool(2, 2), hs = pool(2, 1);
  for (const auto& f : fs)
    for (const auto& g : gs)
      for (const auto& h : hs) {
        auto lhs = star_compose(h, star_compose(g, f, delta, eps), delta, eps);
        auto rhs = star_compose(star_compose(h, g, delta, eps), f, delta, eps);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("star bijections compose like the symmetric group") {
  Rational delta(2), eps(5);
  Permutation a = Permutation::coxeter(3, 1), b = Permutation::coxeter(3, 2);
  CHECK(star_compose(star_bijection(a), star_bijection(b), delta, eps) ==
        star_bijection(a * b));
  CHECK(star_compose(star_bijection(a), star_bijection(a), delta, eps) ==
        star_identity(3));
}
