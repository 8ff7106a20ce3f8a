#include <catch2/catch_amalgamated.hpp>

#include "currycat/functors.hpp"
#include "currycat/serialize.hpp"
#include "currycat/specht.hpp"

using namespace currycat;

TEST_CASE("every small diagram round-trips through its text form") {
  for (auto kind : {DiagramKind::brauer, DiagramKind::partition,
                    DiagramKind::restricted})
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; n + m <= 5; ++m)
        for (const auto& d : enumerate_diagrams(n, m, kind)) {
          ParsedDiagram back = parse_diagram(diagram_to_string(d, kind));
          CHECK(back.diagram == d);
          CHECK(back.kind == kind);
        }
}

TEST_CASE("morphisms with fractional coefficients round-trip") {
  auto diagrams = enumerate_diagrams(2, 2, DiagramKind::partition);
  DiagramMorphism f;
  f.kind = DiagramKind::partition;
  f.n = f.m = 2;
  f.terms.emplace_back(Rational(-3, 2), diagrams[0]);
  f.terms.emplace_back(Rational(5), diagrams[3]);
  f.terms.emplace_back(Rational(1, 7), diagrams[7]);
  f.normalize();
  CHECK(parse_morphism(morphism_to_string(f)) == f);
}

TEST_CASE("module serialization is an exact round trip") {
  for (const auto& M :
       {specht_module({2, 1}, 4),
        principal_module(DiagramKind::brauer, 0, 4, Rational(3, 2)).fb}) {
    std::istringstream is(module_to_string(M));
    TruncatedFBModule back = parse_module(is);
    CHECK(back.truncation == M.truncation);
    CHECK(back.dims == M.dims);
    for (int n = 0; n <= M.truncation; ++n)
      for (int i = 1; i <= n - 1; ++i) CHECK(back.gen(n, i) == M.gen(n, i));
  }
}

TEST_CASE("curried rep files round-trip for every algebra") {
  auto checkRoundTrip = [](const CurriedRepFile& file) {
    std::istringstream is(curried_rep_to_string(file));
    CurriedRepFile back = parse_curried_rep(is);
    CHECK(back.algebra == file.algebra);
    CHECK(back.module.dims == file.module.dims);
    REQUIRE(back.ops.size() == file.ops.size());
    for (std::size_t i = 0; i < file.ops.size(); ++i) {
      CHECK(back.ops[i].first == file.ops[i].first);
      CHECK(back.ops[i].second == file.ops[i].second);
    }
    // a second emission is byte-identical
    CHECK(curried_rep_to_string(back) == curried_rep_to_string(file));
  };
  auto M = specht_module({2}, 3);
  checkRoundTrip(to_rep_file(make_delta_standard(M, Rational(1, 2))));
  auto B = principal_module(DiagramKind::brauer, 0, 4, Rational(2));
  checkRoundTrip(to_rep_file(brauer_to_sp(B, Rational(1))));
  auto Rm = principal_module(DiagramKind::restricted, 0, 3, Rational(1));
  checkRoundTrip(to_rep_file(restricted_to_witt(Rm)));
  auto P = principal_module(DiagramKind::partition, 0, 3, Rational(2));
  checkRoundTrip(to_rep_file(partition_to_weyl(P)));
}

TEST_CASE("malformed inputs are rejected with ParseError") {
  CHECK_THROWS_AS(parse_diagram("n=2 m=2 kind=brauer blocks=[[b1]]"),
                  ParseError);  // not a partition of all labels
  CHECK_THROWS_AS(parse_diagram("n=1 m=1 kind=brauer blocks=[[b1],[t1]]"),
                  ParseError);  // blocks of size 1 are not brauer
  CHECK_THROWS_AS(parse_diagram("n=1 m=1 kind=partition blocks=[[b1,x1]]"),
                  ParseError);  // bad label
  CHECK_THROWS_AS(parse_diagram("n=x m=1 kind=partition blocks=[[b1,t1]]"),
                  ParseError);
  {
    std::istringstream is("fbmodule\ntruncation -1\n");
    CHECK_THROWS_AS(parse_module(is), ParseError);
  }
  {
    std::istringstream is("curriedrep algebra=quantum\n");
    CHECK_THROWS_AS(parse_curried_rep(is), ParseError);
  }
  {
    // frame shape inconsistent with the module
    auto M = specht_module({1}, 2);
    CurriedRepFile f = to_rep_file(make_delta_standard(M, Rational(0)));
    std::string text = curried_rep_to_string(f);
    auto pos = text.find("rows=");
    text.replace(pos, 6, "rows=9");
    std::istringstream is(text);
    CHECK_THROWS_AS(parse_curried_rep(is), ParseError);
  }
}

TEST_CASE("restricted diagrams parsed as partition kind stay valid") {
  // a restricted diagram is in particular a partition diagram
  auto d = restricted_eta(3, 0, {1, 2});
  std::string line = diagram_to_string(d, DiagramKind::partition);
  auto back = parse_diagram(line);
  CHECK(back.diagram == d);
}
