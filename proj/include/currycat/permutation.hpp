#pragma once

// Permutations of {0,..,n-1}. Composition is function composition:
// (p * q)(x) = p(q(x)).

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <numeric>
#include <vector>

namespace currycat {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
#ifndef NDEBUG
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      assert(v >= 0 && v < static_cast<int>(img_.size()) && !seen[v]);
      seen[v] = true;
    }
#endif
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }
  static Permutation transposition(int n, int i, int j) {
    auto p = identity(n);
    std::swap(p.img_[i], p.img_[j]);
    return p;
  }
  // s_i swaps i-1 and i (1-based Coxeter generator index).
  static Permutation coxeter(int n, int i) {
    return transposition(n, i - 1, i);
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& q) const {
    assert(size() == q.size());
    std::vector<int> img(img_.size());
    for (int x = 0; x < size(); ++x) img[x] = img_[q(x)];
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<int> img(img_.size());
    for (int x = 0; x < size(); ++x) img[img_[x]] = x;
    return Permutation(std::move(img));
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  bool is_identity() const {
    for (int x = 0; x < size(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  int sign() const {
    std::vector<bool> seen(img_.size(), false);
    int sgn = 1;
    for (int x = 0; x < size(); ++x) {
      if (seen[x]) continue;
      int len = 0;
      for (int y = x; !seen[y]; y = img_[y]) {
        seen[y] = true;
        ++len;
      }
      if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
  }

  // Writes *this as a product of Coxeter generators: if the result is
  // [i1,...,ik] then *this = s_{i1} * ... * s_{ik} (1-based indices).
  std::vector<int> coxeter_word() const {
    std::vector<int> img = img_;
    std::vector<int> word;
    // Bubble-sort img to the identity; each swap records a generator.
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i + 1 < size(); ++i) {
        if (img[i] > img[i + 1]) {
          std::swap(img[i], img[i + 1]);
          word.push_back(i + 1);
          moved = true;
        }
      }
    }
    // img was reduced by right-multiplying with the recorded generators:
    // *this * s_{w1} * ... * s_{wk} = id, hence *this = s_{wk} * ... * s_{w1}.
    std::reverse(word.begin(), word.end());
    return word;
  }

 private:
  std::vector<int> img_;
};

}  // namespace currycat
