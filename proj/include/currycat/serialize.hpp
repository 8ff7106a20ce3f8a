#pragma once

// Text formats, all line-oriented and byte-deterministic:
//   diagram:   n=2 m=2 kind=brauer blocks=[[b1,t2],[b2,t1]]
//   morphism:  header line, then one "<coeff> <diagram>" line per term
//   module:    fbmodule / truncation / degree n dim d / gen i + rows
//   rep file:  curriedrep algebra=<name>, module block, op blocks
// Rationals print as p/q with q omitted when 1. Parsing failures throw
// ParseError (the CLI maps these to exit code 2).

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "currycat/curried.hpp"
#include "currycat/diagram.hpp"
#include "currycat/fb_module.hpp"

namespace currycat {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- diagrams -------------------------------------------------------------

inline std::string diagram_to_string(const PartitionDiagram& d,
                                     DiagramKind kind) {
  std::ostringstream os;
  os << "n=" << d.n << " m=" << d.m << " kind=" << kind_name(kind)
     << " blocks=[";
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    if (b) os << ",";
    os << "[";
    for (std::size_t i = 0; i < d.blocks[b].size(); ++i) {
      if (i) os << ",";
      int x = d.blocks[b][i];
      if (x < d.n)
        os << "b" << (x + 1);
      else
        os << "t" << (x - d.n + 1);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace detail {
inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}
inline std::string value_of(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0)
    throw ParseError("expected '" + key + "=...', got '" + tok + "'");
  return tok.substr(key.size() + 1);
}
inline int int_of(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in '" + s + "'");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "'");
  }
}
inline Rational rational_of(const std::string& s) {
  auto r = parse_rational(s);
  if (!r) throw ParseError("bad rational '" + s + "'");
  return *r;
}
inline DiagramKind kind_of(const std::string& s) {
  if (s == "brauer") return DiagramKind::brauer;
  if (s == "partition") return DiagramKind::partition;
  if (s == "restricted") return DiagramKind::restricted;
  throw ParseError("unknown kind '" + s + "'");
}
}  // namespace detail

struct ParsedDiagram {
  PartitionDiagram diagram;
  DiagramKind kind;
};

inline ParsedDiagram parse_diagram(const std::string& line) {
  auto toks = detail::split_ws(line);
  if (toks.size() != 4) throw ParseError("diagram line needs 4 fields");
  ParsedDiagram out;
  out.diagram.n = detail::int_of(detail::value_of(toks[0], "n"));
  out.diagram.m = detail::int_of(detail::value_of(toks[1], "m"));
  out.kind = detail::kind_of(detail::value_of(toks[2], "kind"));
  std::string blocks = detail::value_of(toks[3], "blocks");
  if (blocks.size() < 2 || blocks.front() != '[' || blocks.back() != ']')
    throw ParseError("blocks must be bracketed");
  std::string inner = blocks.substr(1, blocks.size() - 2);
  std::size_t pos = 0;
  while (pos < inner.size()) {
    if (inner[pos] == ',') {
      ++pos;
      continue;
    }
    if (inner[pos] != '[') throw ParseError("expected '[' in blocks");
    std::size_t close = inner.find(']', pos);
    if (close == std::string::npos) throw ParseError("unclosed block");
    std::string blk = inner.substr(pos + 1, close - pos - 1);
    std::vector<int> block;
    std::istringstream bs(blk);
    std::string lab;
    while (std::getline(bs, lab, ',')) {
      if (lab.empty()) throw ParseError("empty label");
      char side = lab[0];
      int idx = detail::int_of(lab.substr(1)) - 1;
      if (side == 'b')
        block.push_back(idx);
      else if (side == 't')
        block.push_back(out.diagram.n + idx);
      else
        throw ParseError("labels start with 'b' or 't'");
    }
    if (block.empty()) throw ParseError("empty block");
    out.diagram.blocks.push_back(std::move(block));
    pos = close + 1;
  }
  out.diagram.canonicalize();
  if (!out.diagram.valid()) throw ParseError("blocks do not partition labels");
  if (!out.diagram.fits(out.kind))
    throw ParseError("diagram does not satisfy the " +
                     kind_name(out.kind) + " constraint");
  return out;
}

// --- morphisms --------------------------------------------------------------

inline std::string morphism_to_string(const DiagramMorphism& f) {
  std::ostringstream os;
  os << "morphism kind=" << kind_name(f.kind) << " n=" << f.n << " m=" << f.m
     << " terms=" << f.terms.size() << "\n";
  for (const auto& [c, d] : f.terms)
    os << rational_to_string(c) << " " << diagram_to_string(d, f.kind) << "\n";
  return os.str();
}

inline DiagramMorphism parse_morphism(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty morphism file");
  auto toks = detail::split_ws(line);
  if (toks.size() != 5 || toks[0] != "morphism")
    throw ParseError("morphism header malformed");
  DiagramMorphism f;
  f.kind = detail::kind_of(detail::value_of(toks[1], "kind"));
  f.n = detail::int_of(detail::value_of(toks[2], "n"));
  f.m = detail::int_of(detail::value_of(toks[3], "m"));
  int terms = detail::int_of(detail::value_of(toks[4], "terms"));
  for (int t = 0; t < terms; ++t) {
    if (!std::getline(is, line)) throw ParseError("missing morphism term");
    auto sp = line.find(' ');
    if (sp == std::string::npos) throw ParseError("term needs a coefficient");
    Rational c = detail::rational_of(line.substr(0, sp));
    ParsedDiagram d = parse_diagram(line.substr(sp + 1));
    if (d.kind != f.kind || d.diagram.n != f.n || d.diagram.m != f.m)
      throw ParseError("term does not match the morphism header");
    f.terms.emplace_back(c, d.diagram);
  }
  f.normalize();
  return f;
}

// --- modules ----------------------------------------------------------------

inline void emit_matrix(std::ostringstream& os, const Mat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << " ";
      os << rational_to_string(m(r, c));
    }
    os << "\n";
  }
}

inline std::string module_to_string(const TruncatedFBModule& M) {
  std::ostringstream os;
  os << "fbmodule\ntruncation " << M.truncation << "\n";
  for (int n = 0; n <= M.truncation; ++n) {
    os << "degree " << n << " dim " << M.dim(n) << "\n";
    for (int i = 1; i <= n - 1; ++i) {
      os << "gen " << i << "\n";
      emit_matrix(os, M.gen(n, i));
    }
  }
  os << "endmodule\n";
  return os.str();
}

namespace detail {
inline Mat read_matrix(std::istream& is, int rows, int cols) {
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("matrix rows missing");
    auto toks = split_ws(line);
    if (static_cast<int>(toks.size()) != cols)
      throw ParseError("matrix row has wrong length");
    for (int c = 0; c < cols; ++c) m(r, c) = rational_of(toks[c]);
  }
  return m;
}
}  // namespace detail

inline TruncatedFBModule parse_module(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "fbmodule")
    throw ParseError("expected 'fbmodule'");
  if (!std::getline(is, line)) throw ParseError("missing truncation");
  auto toks = detail::split_ws(line);
  if (toks.size() != 2 || toks[0] != "truncation")
    throw ParseError("expected 'truncation N'");
  int N = detail::int_of(toks[1]);
  if (N < 0 || N > 16) throw ParseError("unreasonable truncation");
  TruncatedFBModule M = zero_module(N);
  for (int n = 0; n <= N; ++n) {
    if (!std::getline(is, line)) throw ParseError("missing degree line");
    toks = detail::split_ws(line);
    if (toks.size() != 4 || toks[0] != "degree" || toks[2] != "dim")
      throw ParseError("expected 'degree n dim d'");
    if (detail::int_of(toks[1]) != n) throw ParseError("degrees out of order");
    int d = detail::int_of(toks[3]);
    if (d < 0) throw ParseError("negative dimension");
    M.dims[n] = d;
    M.gens[n].clear();
    for (int i = 1; i <= n - 1; ++i) {
      if (!std::getline(is, line)) throw ParseError("missing gen line");
      toks = detail::split_ws(line);
      if (toks.size() != 2 || toks[0] != "gen" || detail::int_of(toks[1]) != i)
        throw ParseError("expected 'gen " + std::to_string(i) + "'");
      M.gens[n].push_back(detail::read_matrix(is, d, d));
    }
  }
  if (!std::getline(is, line) || line != "endmodule")
    throw ParseError("expected 'endmodule'");
  return M;
}

// --- curried rep files ---------------------------------------------------------

inline const char* sym_name(OpSymmetry s) {
  switch (s) {
    case OpSymmetry::none: return "none";
    case OpSymmetry::symmetric: return "symmetric";
    case OpSymmetry::skew: return "skew";
  }
  return "?";
}

inline OpSymmetry sym_of(const std::string& s) {
  if (s == "none") return OpSymmetry::none;
  if (s == "symmetric") return OpSymmetry::symmetric;
  if (s == "skew") return OpSymmetry::skew;
  throw ParseError("unknown symmetry '" + s + "'");
}

struct CurriedRepFile {
  std::string algebra;
  TruncatedFBModule module;
  std::vector<std::pair<std::string, SymmetricOperation>> ops;

  const SymmetricOperation* find(const std::string& name) const {
    for (const auto& [n, op] : ops)
      if (n == name) return &op;
    return nullptr;
  }
};

inline std::string curried_rep_to_string(const CurriedRepFile& file) {
  std::ostringstream os;
  os << "curriedrep algebra=" << file.algebra << "\n";
  os << module_to_string(file.module);
  for (const auto& [name, sop] : file.ops) {
    os << "op name=" << name << " layers=" << sop.layers.size() << "\n";
    for (std::size_t k = 0; k < sop.layers.size(); ++k) {
      const OperationSpec& layer = sop.layers[k];
      os << "layer k=" << k << " sym=" << sym_name(layer.sym)
         << " bound=" << layer.ambient_bound << " frames=" << layer.frames.size()
         << "\n";
      for (const auto& [key, mat] : layer.frames) {
        auto [m, n, p] = key;
        os << "frame m=" << m << " n=" << n << " p=" << p
           << " rows=" << mat.rows() << " cols=" << mat.cols() << "\n";
        emit_matrix(os, mat);
      }
    }
    os << "endop\n";
  }
  os << "endrep\n";
  return os.str();
}

inline CurriedRepFile parse_curried_rep(std::istream& is) {
  CurriedRepFile out;
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty rep file");
  auto toks = detail::split_ws(line);
  if (toks.size() != 2 || toks[0] != "curriedrep")
    throw ParseError("expected 'curriedrep algebra=...'");
  out.algebra = detail::value_of(toks[1], "algebra");
  if (out.algebra != "gl" && out.algebra != "sp" && out.algebra != "witt" &&
      out.algebra != "weyl")
    throw ParseError("unknown algebra '" + out.algebra + "'");
  out.module = parse_module(is);
  while (std::getline(is, line)) {
    if (line == "endrep") return out;
    toks = detail::split_ws(line);
    if (toks.size() != 3 || toks[0] != "op")
      throw ParseError("expected 'op name=... layers=...' or 'endrep'");
    std::string name = detail::value_of(toks[1], "name");
    int layers = detail::int_of(detail::value_of(toks[2], "layers"));
    SymmetricOperation sop;
    for (int k = 0; k < layers; ++k) {
      if (!std::getline(is, line)) throw ParseError("missing layer header");
      auto lt = detail::split_ws(line);
      if (lt.size() != 5 || lt[0] != "layer")
        throw ParseError("layer header malformed");
      if (detail::int_of(detail::value_of(lt[1], "k")) != k)
        throw ParseError("layers out of order");
      OperationSpec layer;
      layer.sym = sym_of(detail::value_of(lt[2], "sym"));
      layer.ambient_bound = detail::int_of(detail::value_of(lt[3], "bound"));
      int frames = detail::int_of(detail::value_of(lt[4], "frames"));
      for (int f = 0; f < frames; ++f) {
        if (!std::getline(is, line)) throw ParseError("missing frame header");
        auto ft = detail::split_ws(line);
        if (ft.size() != 6 || ft[0] != "frame")
          throw ParseError("frame header malformed");
        int m = detail::int_of(detail::value_of(ft[1], "m"));
        int n = detail::int_of(detail::value_of(ft[2], "n"));
        int p = detail::int_of(detail::value_of(ft[3], "p"));
        int rows = detail::int_of(detail::value_of(ft[4], "rows"));
        int cols = detail::int_of(detail::value_of(ft[5], "cols"));
        if (rows != out.module.dim(p + n) || cols != out.module.dim(p + m))
          throw ParseError("frame shape disagrees with the module dimensions");
        layer.arities.insert({m, n});
        layer.frames[{m, n, p}] = detail::read_matrix(is, rows, cols);
      }
      sop.layers.push_back(std::move(layer));
    }
    if (!std::getline(is, line) || line != "endop")
      throw ParseError("expected 'endop'");
    out.ops.emplace_back(name, std::move(sop));
  }
  throw ParseError("missing 'endrep'");
}

// --- rep-data <-> file conversion ----------------------------------------------

inline SymmetricOperation single_layer(const OperationSpec& op) {
  SymmetricOperation sop;
  sop.layers.push_back(op);
  return sop;
}

inline CurriedRepFile to_rep_file(const GlRepData& R) {
  CurriedRepFile f;
  f.algebra = "gl";
  f.module = R.M;
  f.ops.emplace_back("alpha", single_layer(R.alpha));
  f.ops.emplace_back("omega", single_layer(R.omega));
  return f;
}

inline CurriedRepFile to_rep_file(const SpRepData& R) {
  CurriedRepFile f;
  f.algebra = "sp";
  f.module = R.gl.M;
  f.ops.emplace_back("alpha", single_layer(R.gl.alpha));
  f.ops.emplace_back("omega", single_layer(R.gl.omega));
  f.ops.emplace_back("beta", single_layer(R.beta));
  f.ops.emplace_back("betaprime", single_layer(R.betaPrime));
  return f;
}

inline CurriedRepFile to_rep_file(const WittRepData& R) {
  CurriedRepFile f;
  f.algebra = "witt";
  f.module = R.M;
  f.ops.emplace_back("alpha", single_layer(R.alpha));
  f.ops.emplace_back("omega", single_layer(R.omega));
  return f;
}

inline CurriedRepFile to_rep_file(const WeylRepData& R) {
  CurriedRepFile f;
  f.algebra = "weyl";
  f.module = R.M;
  f.ops.emplace_back("phi", R.phi);
  return f;
}

inline GlRepData gl_from_file(const CurriedRepFile& f) {
  const auto *a = f.find("alpha"), *o = f.find("omega");
  if (f.algebra != "gl" || !a || !o || a->layers.size() != 1 ||
      o->layers.size() != 1)
    throw ParseError("gl rep needs single-layer alpha and omega");
  return GlRepData{f.module, a->layers[0], o->layers[0]};
}

inline SpRepData sp_from_file(const CurriedRepFile& f) {
  const auto *a = f.find("alpha"), *o = f.find("omega");
  const auto *b = f.find("beta"), *bp = f.find("betaprime");
  if (f.algebra != "sp" || !a || !o || !b || !bp)
    throw ParseError("sp rep needs alpha, omega, beta, betaprime");
  if (a->layers.size() != 1 || o->layers.size() != 1 ||
      b->layers.size() != 1 || bp->layers.size() != 1)
    throw ParseError("sp operations are single-layer");
  SpRepData R;
  R.gl = GlRepData{f.module, a->layers[0], o->layers[0]};
  R.beta = b->layers[0];
  R.betaPrime = bp->layers[0];
  return R;
}

inline WittRepData witt_from_file(const CurriedRepFile& f) {
  const auto *a = f.find("alpha"), *o = f.find("omega");
  if (f.algebra != "witt" || !a || !o || a->layers.size() != 1 ||
      o->layers.size() != 1)
    throw ParseError("witt rep needs single-layer alpha and omega");
  return WittRepData{f.module, a->layers[0], o->layers[0]};
}

inline WeylRepData weyl_from_file(const CurriedRepFile& f) {
  const auto* p = f.find("phi");
  if (f.algebra != "weyl" || !p) throw ParseError("weyl rep needs phi");
  return WeylRepData{f.module, *p};
}

}  // namespace currycat
