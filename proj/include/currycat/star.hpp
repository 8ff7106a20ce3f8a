#pragma once

// The star product C * D of two partition categories: a morphism S -> T is a
// sum of terms, each carrying a decomposition of S and T into a C part and a
// D part together with a diagram in each factor. Compositions whose middle
// decompositions disagree are zero; the identity is the sum over all
// decompositions of componentwise identities.

#include <tuple>
#include <vector>

#include "currycat/diagram.hpp"
#include "currycat/fb_module.hpp"

namespace currycat {

struct StarTerm {
  Rational coeff;
  Mask srcMask = 0;     // source labels in the first (C) factor
  Mask tgtMask = 0;     // target labels in the first factor
  PartitionDiagram d1;  // diagram in C: |srcMask| -> |tgtMask|
  PartitionDiagram d2;  // diagram in D on the complements
};

struct StarMorphism {
  int n = 0, m = 0;
  std::vector<StarTerm> terms;

  void normalize() {
    std::sort(terms.begin(), terms.end(), [](const StarTerm& a,
                                             const StarTerm& b) {
      return std::make_tuple(a.srcMask, a.tgtMask, a.d1, a.d2) <
             std::make_tuple(b.srcMask, b.tgtMask, b.d1, b.d2);
    });
    std::vector<StarTerm> out;
    for (auto& t : terms) {
      if (!out.empty() && out.back().srcMask == t.srcMask &&
          out.back().tgtMask == t.tgtMask && out.back().d1 == t.d1 &&
          out.back().d2 == t.d2)
        out.back().coeff += t.coeff;
      else
        out.push_back(t);
    }
    terms.clear();
    for (auto& t : out)
      if (t.coeff != 0) terms.push_back(std::move(t));
  }

  bool operator==(const StarMorphism& o) const {
    if (n != o.n || m != o.m || terms.size() != o.terms.size()) return false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto &a = terms[i], &b = o.terms[i];
      if (a.coeff != b.coeff || a.srcMask != b.srcMask ||
          a.tgtMask != b.tgtMask || !(a.d1 == b.d1) || !(a.d2 == b.d2))
        return false;
    }
    return true;
  }

  StarMorphism operator+(const StarMorphism& o) const {
    StarMorphism f = *this;
    for (const auto& t : o.terms) f.terms.push_back(t);
    f.normalize();
    return f;
  }
  StarMorphism operator*(const Rational& c) const {
    StarMorphism f = *this;
    for (auto& t : f.terms) t.coeff *= c;
    f.normalize();
    return f;
  }
};

// The identity of S: sum over decompositions S = A u B of id_A (x) id_B.
inline StarMorphism star_identity(int n) {
  StarMorphism f;
  f.n = f.m = n;
  for (Mask a = 0; a < (Mask(1) << n); ++a) {
    StarTerm t;
    t.coeff = 1;
    t.srcMask = t.tgtMask = a;
    t.d1 = PartitionDiagram::identity(popcount(a));
    t.d2 = PartitionDiagram::identity(n - popcount(a));
    f.terms.push_back(std::move(t));
  }
  f.normalize();
  return f;
}

// A bijection p: [n] -> [n] as a star morphism (image of FB).
inline StarMorphism star_bijection(const Permutation& p) {
  int n = p.size();
  StarMorphism f;
  f.n = f.m = n;
  for (Mask a = 0; a < (Mask(1) << n); ++a) {
    Mask img = 0;
    for (int x : mask_elements(a)) img |= (Mask(1) << p(x));
    auto src1 = mask_elements(a), tgt1 = mask_elements(img);
    auto src2 = mask_elements(((Mask(1) << n) - 1) & ~a);
    auto tgt2 = mask_elements(((Mask(1) << n) - 1) & ~img);
    Permutation p1 =
        induced_permutation(src1, tgt1, [&](int x) { return p(x); });
    Permutation p2 =
        induced_permutation(src2, tgt2, [&](int x) { return p(x); });
    StarTerm t;
    t.coeff = 1;
    t.srcMask = a;
    t.tgtMask = img;
    t.d1 = PartitionDiagram::bijection(p1);
    t.d2 = PartitionDiagram::bijection(p2);
    f.terms.push_back(std::move(t));
  }
  f.normalize();
  return f;
}

// g . f; terms combine only when f's target decomposition equals g's source
// decomposition, composing componentwise in P(delta) and P(epsilon).
inline StarMorphism star_compose(const StarMorphism& g, const StarMorphism& f,
                                 const Rational& delta,
                                 const Rational& epsilon) {
  if (f.m != g.n) throw std::invalid_argument("star_compose: size mismatch");
  StarMorphism out;
  out.n = f.n;
  out.m = g.m;
  for (const auto& tg : g.terms)
    for (const auto& tf : f.terms) {
      if (tf.tgtMask != tg.srcMask) continue;
      ComposedDiagram c1 = compose_diagrams(tg.d1, tf.d1);
      ComposedDiagram c2 = compose_diagrams(tg.d2, tf.d2);
      Rational coeff = tg.coeff * tf.coeff;
      for (int i = 0; i < c1.loops; ++i) coeff *= delta;
      for (int i = 0; i < c2.loops; ++i) coeff *= epsilon;
      if (coeff == 0) continue;
      StarTerm t;
      t.coeff = coeff;
      t.srcMask = tf.srcMask;
      t.tgtMask = tg.tgtMask;
      t.d1 = c1.diagram;
      t.d2 = c2.diagram;
      out.terms.push_back(std::move(t));
    }
  out.normalize();
  return out;
}

}  // namespace currycat
