#pragma once

// Command-line surface. All output is assembled from sorted data, so
// identical inputs produce byte-identical reports. Exit codes: 0 = success /
// all checks pass, 1 = a check failed, 2 = malformed input or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "currycat/acceptance.hpp"
#include "currycat/serialize.hpp"

namespace currycat {

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_output(const std::string& path, const std::string& text,
                         std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream o(path);
  if (!o) throw ParseError("cannot write '" + path + "'");
  o << text;
}

// accepts either a morphism file or a bare diagram line
inline DiagramMorphism read_morphism(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream is(text);
  std::string first;
  std::getline(is, first);
  if (first.rfind("morphism", 0) == 0) return parse_morphism(text);
  ParsedDiagram d = parse_diagram(first);
  return DiagramMorphism::single(d.kind, d.diagram);
}

inline Rational parse_rational_arg(const std::string& s,
                                   const std::string& what) {
  auto r = parse_rational(s);
  if (!r) throw ParseError("bad rational for " + what + ": '" + s + "'");
  return *r;
}

inline void print_report(const CheckReport& rep, const std::string& format,
                         std::ostream& out) {
  if (format == "machine") {
    out << "result " << (rep.passed() ? "pass" : "fail") << "\n";
    for (const auto& v : rep.violations) out << "violation\t" << v << "\n";
  } else {
    if (rep.passed()) {
      out << "all conditions hold\n";
    } else {
      out << rep.violations.size() << " violation(s):\n";
      for (const auto& v : rep.violations) out << "  " << v << "\n";
    }
  }
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"currycat: diagram categories and curried Lie algebras in "
               "linear species"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerateCmd =
      app.add_subcommand("enumerate", "list all diagrams [n] -> [m]");
  std::string kindStr = "partition";
  int nArg = 0, mArg = 0, boundArg = 12;
  enumerateCmd->add_option("--kind", kindStr, "brauer|partition|restricted");
  enumerateCmd->add_option("--n", nArg, "source size")->required();
  enumerateCmd->add_option("--m", mArg, "target size")->required();
  enumerateCmd->add_option("--bound", boundArg, "size bound (default 12)");

  // compose
  auto* composeCmd = app.add_subcommand(
      "compose", "compose two morphism files (second after first)");
  std::string deltaStr = "0", outPath = "-";
  std::vector<std::string> files;
  composeCmd->add_option("--kind", kindStr, "brauer|partition|restricted");
  composeCmd->add_option("--delta", deltaStr, "category parameter p/q");
  composeCmd->add_option("--out", outPath, "output path (default stdout)");
  composeCmd->add_option("files", files, "two input files")->expected(2);

  // factorize
  auto* factorizeCmd = app.add_subcommand(
      "factorize", "triangular factorization of a single diagram");
  std::string inputPath;
  factorizeCmd->add_option("--input", inputPath, "diagram file")->required();
  factorizeCmd->add_option("--out", outPath, "output path (default stdout)");

  // check
  auto* checkCmd =
      app.add_subcommand("check", "verify curried representation data");
  std::string algebraStr, formatStr = "text";
  checkCmd->add_option("--algebra", algebraStr, "gl|sp|witt|weyl")->required();
  checkCmd->add_option("--input", inputPath, "curried rep file")->required();
  checkCmd->add_option("--format", formatStr, "text|machine");

  // functor
  auto* functorCmd = app.add_subcommand(
      "functor", "apply a comparison functor to a principal module");
  std::string fromStr;
  std::string epsStr = "0";
  int kArg = 0, truncateArg = 4;
  bool roundtrip = false;
  functorCmd
      ->add_option("--from", fromStr, "brauer|partition|restricted|fa|star")
      ->required();
  functorCmd->add_option("--delta", deltaStr, "parameter p/q (for brauer this "
                                              "is the sp-side delta; the "
                                              "category carries 2*delta)");
  functorCmd->add_option("--epsilon", epsStr, "second parameter (star only)");
  functorCmd->add_option("--k", kArg,
                         "principal source size (for fa: the size of X)");
  functorCmd->add_option("--truncate", truncateArg, "module truncation N");
  functorCmd->add_flag("--roundtrip", roundtrip,
                       "verify the inverse functor round-trip");
  functorCmd->add_option("--out", outPath, "output path (default stdout)");

  // oracle
  auto* oracleCmd = app.add_subcommand(
      "oracle", "de-curried structure constants and currying checks");
  int dimArg = 2, degreeArg = 3;
  unsigned seedArg = 1;
  oracleCmd->add_option("--kind", kindStr, "gl|sp|witt|weyl")->required();
  oracleCmd->add_option("--dim", dimArg, "dim V");
  oracleCmd->add_option("--degree", degreeArg, "polynomial degree bound");
  oracleCmd->add_option("--seed", seedArg, "seed for perturbation controls");

  // acceptance
  auto* acceptCmd = app.add_subcommand("acceptance", "run the acceptance battery");
  bool runAll = false;
  int criterionArg = -1;
  acceptCmd->add_flag("--all", runAll, "run every criterion");
  acceptCmd->add_option("--criterion", criterionArg, "run a single criterion");
  acceptCmd->add_option("--seed", seedArg, "seed for perturbation controls");

  std::vector<const char*> argv;
  std::string prog = "currycat";
  argv.push_back(prog.c_str());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*enumerateCmd) {
      DiagramKind kind = detail::kind_of(kindStr);
      for (const auto& d : enumerate_diagrams(nArg, mArg, kind, boundArg))
        out << diagram_to_string(d, kind) << "\n";
      return 0;
    }
    if (*composeCmd) {
      DiagramKind kind = detail::kind_of(kindStr);
      Rational delta = cli_detail::parse_rational_arg(deltaStr, "--delta");
      DiagramMorphism f = cli_detail::read_morphism(files[0]);
      DiagramMorphism g = cli_detail::read_morphism(files[1]);
      if (f.kind != kind || g.kind != kind)
        throw ParseError("input kind disagrees with --kind");
      DiagramMorphism h = compose(g, f, delta);
      cli_detail::write_output(outPath, morphism_to_string(h), out);
      return 0;
    }
    if (*factorizeCmd) {
      DiagramMorphism f = cli_detail::read_morphism(inputPath);
      if (f.terms.size() != 1 || f.terms[0].first != 1)
        throw ParseError("factorize expects a single diagram");
      auto fac = triangular_factorize(f.terms[0].second);
      std::ostringstream os;
      os << "factorization middle=" << fac.middle << "\n";
      os << "down " << diagram_to_string(fac.down, f.kind) << "\n";
      os << "up " << diagram_to_string(fac.up, f.kind) << "\n";
      cli_detail::write_output(outPath, os.str(), out);
      return 0;
    }
    if (*checkCmd) {
      std::string text = cli_detail::read_file(inputPath);
      std::istringstream is(text);
      CurriedRepFile file = parse_curried_rep(is);
      if (file.algebra != algebraStr)
        throw ParseError("file algebra '" + file.algebra +
                         "' does not match --algebra");
      auto modRep = validate_fb_module(file.module);
      if (!modRep.ok()) throw ParseError("module data invalid: " +
                                         modRep.violations[0]);
      CheckReport rep;
      if (algebraStr == "gl")
        rep = check_gl(gl_from_file(file));
      else if (algebraStr == "sp")
        rep = check_sp(sp_from_file(file));
      else if (algebraStr == "witt")
        rep = check_witt(witt_from_file(file));
      else
        rep = check_weyl(weyl_from_file(file));
      cli_detail::print_report(rep, formatStr, out);
      return rep.passed() ? 0 : 1;
    }
    if (*functorCmd) {
      Rational delta = cli_detail::parse_rational_arg(deltaStr, "--delta");
      Rational eps = cli_detail::parse_rational_arg(epsStr, "--epsilon");
      int N = truncateArg;
      CurriedRepFile outFile;
      bool rtOk = true;
      if (fromStr == "brauer") {
        auto M = principal_module(DiagramKind::brauer, kArg, N, 2 * delta);
        SpRepData R = brauer_to_sp(M, delta);
        outFile = to_rep_file(R);
        if (roundtrip) {
          BrauerStructure back = sp_to_brauer(R);
          rtOk = back.report.passed() && back.param == 2 * delta &&
                 back.beta == brauer_beta(M) &&
                 back.betaPrime == brauer_beta_prime(M);
        }
      } else if (fromStr == "restricted") {
        auto M = principal_module(DiagramKind::restricted, kArg, N, delta);
        WittRepData R = restricted_to_witt(M);
        outFile = to_rep_file(R);
        if (roundtrip) {
          RestrictedStructure back = witt_to_restricted(R);
          rtOk = back.report.passed() && back.param == delta &&
                 back.alpha == restricted_alpha(M) &&
                 back.omega == restricted_omega(M);
        }
      } else if (fromStr == "partition") {
        auto M = principal_module(DiagramKind::partition, kArg, N, delta);
        WeylRepData R = partition_to_weyl(M);
        outFile = to_rep_file(R);
        if (roundtrip) {
          PartitionStructure back = weyl_to_partition(R);
          rtOk = back.report.passed() && back.param == delta &&
                 back.alpha == partition_alpha(M);
        }
      } else if (fromStr == "fa") {
        if (delta != 0) throw ParseError("the FA functor requires delta = 0");
        FAModule F = fa_functor_module(std::max(1, kArg), N);
        WittRepData R = fa_to_witt(F);
        outFile = to_rep_file(R);
        if (roundtrip)
          rtOk = R.omega.is_zero() &&
                 standardness_delta(restrict_witt_to_gl(R)) == Rational(0);
      } else if (fromStr == "star") {
        auto M = principal_star_module(kArg, N, delta, eps);
        StarWeylData D = star_to_weyl(M);
        outFile = to_rep_file(D.weyl);
        if (roundtrip) {
          auto [a2, o2] = theta(M.fb, D.weyl.phi);
          rtOk = a2 == D.alpha && o2 == D.omega;
        }
      } else {
        throw ParseError("unknown functor source '" + fromStr + "'");
      }
      cli_detail::write_output(outPath, curried_rep_to_string(outFile), out);
      if (roundtrip) {
        err << "roundtrip " << (rtOk ? "ok" : "FAILED") << "\n";
        if (!rtOk) return 1;
      }
      return 0;
    }
    if (*oracleCmd) {
      CheckReport rep;
      acceptance_detail::Lcg rng(seedArg);
      auto note = [&](bool ok, const std::string& what) {
        if (!ok) rep.note(what);
      };
      if (kindStr == "gl") {
        auto A = build_gl(dimArg);
        note(verify_structure_constants(A).ok(), "structure constants");
        MatrixRep R;
        R.carrierDim = dimArg;
        for (int i = 0; i < dimArg; ++i)
          for (int j = 0; j < dimArg; ++j) {
            Mat e(dimArg, dimArg);
            e(i, j) = 1;
            R.action.push_back(std::move(e));
          }
        note(matrix_rep_condition(A, R), "rep condition (standard)");
        note(gl_curried_identity(dimArg, dimArg, curry_gl(A, R)),
             "curried identity (standard)");
        MatrixRep bad = R;
        bad.action[rng.next(dimArg * dimArg)](rng.next(dimArg),
                                              rng.next(dimArg)) += 1;
        bool repBad = matrix_rep_condition(A, bad);
        bool curBad =
            gl_curried_identity(dimArg, dimArg, curry_gl(A, bad));
        note(repBad == curBad, "perturbation verdicts agree");
        note(!repBad, "perturbation rejected");
      } else if (kindStr == "sp") {
        SpAlgebra S = build_sp(dimArg);
        note(verify_structure_constants(S.consts).ok(), "structure constants");
        MatrixRep R;
        R.carrierDim = 2 * dimArg;
        R.action = S.rho;
        note(matrix_rep_condition(S.consts, R), "rep condition (standard)");
        note(sp_curried_failures(curry_sp(S, R)).empty(),
             "curried conditions (a)-(d)");
        MatrixRep bad = R;
        bad.action[rng.next(static_cast<unsigned>(S.rho.size()))](
            rng.next(2 * dimArg), rng.next(2 * dimArg)) += 1;
        bool repBad = matrix_rep_condition(S.consts, bad);
        bool curBad = sp_curried_failures(curry_sp(S, bad)).empty();
        note(repBad == curBad, "perturbation verdicts agree");
        note(!repBad, "perturbation rejected");
      } else if (kindStr == "witt") {
        note(verify_structure_constants(build_witt(dimArg, degreeArg).consts)
                 .ok(),
             "structure constants");
        WittRepPoly R = witt_polynomial_rep(dimArg, degreeArg + 1);
        auto v = verify_witt_currying(R, std::min(2, degreeArg));
        note(v.rep_ok, "rep condition (polynomials)");
        note(v.curried_ok, "curried identity (polynomials)");
      } else if (kindStr == "weyl") {
        note(verify_structure_constants(build_weyl(dimArg, degreeArg).consts)
                 .ok(),
             "structure constants");
        WeylRepPoly R = weyl_polynomial_rep(dimArg, degreeArg + 1);
        auto v = verify_weyl_currying(R, std::min(2, degreeArg));
        note(v.rep_ok, "rep condition (polynomials)");
        note(v.curried_ok, "curried identity (polynomials)");
      } else {
        throw ParseError("unknown oracle kind '" + kindStr + "'");
      }
      rep.sort();
      cli_detail::print_report(rep, "text", out);
      return rep.passed() ? 0 : 1;
    }
    if (*acceptCmd) {
      if (!runAll && criterionArg < 0)
        throw ParseError("acceptance needs --all or --criterion");
      auto results = run_acceptance(seedArg, runAll ? -1 : criterionArg);
      out << format_acceptance(results);
      for (const auto& r : results)
        if (!r.pass) return 1;
      return 0;
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace currycat
