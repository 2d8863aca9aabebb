#pragma once
#include <algorithm>
#include <compare>
#include <numeric>
#include <vector>

#include "qschur/fp.hpp"

namespace qschur {

/* Permutation of {1..n} in one-line notation: im[i-1] = w(i).
 * Products compose as functions, (v*w)(i) = v(w(i)). */
struct Perm {
  std::vector<int> im;

  Perm() = default;
  explicit Perm(std::vector<int> images) : im(std::move(images)) {}

  static Perm identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }
  /* simple reflection s_i = (i, i+1), 1 <= i <= n-1 */
  static Perm s(int i, int n) {
    Perm w = identity(n);
    std::swap(w.im[i - 1], w.im[i]);
    return w;
  }
  static Perm transposition(int i, int j, int n) {
    Perm w = identity(n);
    std::swap(w.im[i - 1], w.im[j - 1]);
    return w;
  }

  int n() const { return static_cast<int>(im.size()); }
  int of(int i) const { return im[i - 1]; }

  Perm operator*(const Perm& w) const {
    std::vector<int> v(im.size());
    for (size_t i = 0; i < im.size(); ++i) v[i] = im[w.im[i] - 1];
    return Perm(std::move(v));
  }
  Perm inv() const {
    std::vector<int> v(im.size());
    for (size_t i = 0; i < im.size(); ++i) v[im[i] - 1] = static_cast<int>(i) + 1;
    return Perm(std::move(v));
  }

  int length() const {
    int c = 0;
    for (size_t i = 0; i < im.size(); ++i)
      for (size_t j = i + 1; j < im.size(); ++j)
        if (im[i] > im[j]) ++c;
    return c;
  }
  bool is_identity() const {
    for (size_t i = 0; i < im.size(); ++i)
      if (im[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /* descent tests: ell(s_i w) < ell(w) resp. ell(w s_i) < ell(w) */
  bool left_descent(int i) const {
    Perm wi = inv();
    return wi.of(i) > wi.of(i + 1);
  }
  bool right_descent(int i) const { return of(i) > of(i + 1); }

  /* one fixed reduced word, letters in 1..n-1 */
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Perm x = *this;
    bool more = true;
    while (more) {
      more = false;
      for (int i = 1; i < x.n(); ++i)
        if (x.right_descent(i)) {
          std::swap(x.im[i - 1], x.im[i]);
          word.push_back(i);
          more = true;
          break;
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  auto operator<=>(const Perm&) const = default;
};

inline std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do out.push_back(Perm(v));
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Perm longest_element(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Perm(std::move(v));
}

}  // namespace qschur
