#pragma once
#include <vector>

#include "qschur/subsets.hpp"

namespace qschur {

/* Element w·X^lam of the extended affine Weyl group W = S ⋉ X, with the
 * conjugation convention s_i X_i s_i = X_{i+1}.  The affine generator s_0
 * and the rotation tau are provided as constructed elements. */
struct ExtAff {
  Perm w;
  std::vector<int> lam;

  ExtAff() = default;
  ExtAff(Perm wp, std::vector<int> l) : w(std::move(wp)), lam(std::move(l)) {}
  explicit ExtAff(Perm wp) : w(std::move(wp)), lam(wp_size(w), 0) {}

  static ExtAff identity(int n) { return ExtAff(Perm::identity(n)); }
  static ExtAff monomial(std::vector<int> l) {
    int n = static_cast<int>(l.size());
    return ExtAff(Perm::identity(n), std::move(l));
  }
  static ExtAff simple(int i, int n) { return ExtAff(Perm::s(i, n)); }
  /* s_0 = s_{n-1}..s_2 s_1 s_2..s_{n-1} X_1 X_n^{-1} */
  static ExtAff s0(int n) {
    std::vector<int> l(n, 0);
    l[0] = 1;
    l[n - 1] = -1;
    return ExtAff(Perm::transposition(1, n, n), std::move(l));
  }
  /* tau = s_{n-1}..s_1 X_1 */
  static ExtAff tau(int n) {
    Perm w = Perm::identity(n);
    for (int i = n - 1; i >= 1; --i) w = w * Perm::s(i, n);
    std::vector<int> l(n, 0);
    l[0] = 1;
    return ExtAff(std::move(w), std::move(l));
  }

  int n() const { return w.n(); }

  /* (w X^a)(v X^b) = wv X^{(v^{-1}·a) + b}, where (v·a)_i = a_{v^{-1}(i)} */
  ExtAff operator*(const ExtAff& o) const {
    std::vector<int> l(lam.size());
    for (size_t j = 0; j < lam.size(); ++j)
      l[j] = lam[o.w.im[j] - 1] + o.lam[j];
    return ExtAff(w * o.w, std::move(l));
  }
  ExtAff inv() const {
    Perm wi = w.inv();
    std::vector<int> l(lam.size());
    for (size_t j = 0; j < lam.size(); ++j) l[j] = -lam[wi.im[j] - 1];
    return ExtAff(std::move(wi), std::move(l));
  }
  /* the ♭ twist: fixes s_i, inverts every X_j */
  ExtAff flat() const {
    std::vector<int> l(lam.size());
    for (size_t j = 0; j < lam.size(); ++j) l[j] = -lam[j];
    return ExtAff(w, std::move(l));
  }

  bool operator==(const ExtAff& o) const { return w == o.w && lam == o.lam; }
  bool is_identity() const {
    if (!w.is_identity()) return false;
    for (int x : lam)
      if (x != 0) return false;
    return true;
  }

  /* power of tau in the unique form x·tau^j, x in <s_0..s_{n-1}> */
  int tau_power() const {
    int s = 0;
    for (int x : lam) s += x;
    return s;
  }

  /* Window of the periodic permutation realisation: win(i) = w(i) - n·lam_i,
   * extended by win(i + n) = win(i) + n.  Products of group elements
   * correspond to composition of the periodic maps. */
  std::vector<long long> window() const {
    std::vector<long long> f(lam.size());
    for (size_t i = 0; i < lam.size(); ++i)
      f[i] = w.im[i] - static_cast<long long>(lam.size()) * lam[i];
    return f;
  }
  long long win_at(long long i) const {
    int nn = n();
    long long r = (i - 1) % nn;
    if (r < 0) r += nn;
    long long base = i - 1 - r;  // multiple of n
    return window()[r] + base;
  }

  /* Coxeter length of the x-part of x·tau^j, counted as window inversions. */
  int length() const {
    int nn = n();
    int bound = 2;
    for (int x : lam) bound += 2 * (x < 0 ? -x : x);
    int c = 0;
    for (int a = 1; a <= nn; ++a)
      for (long long b = a + 1; b <= a + static_cast<long long>(nn) * bound; ++b)
        if (win_at(a) > win_at(b)) ++c;
    return c;
  }

  /* right descent at k in {0..n-1}: len(g s_k) < len(g) */
  bool right_descent(int k) const {
    if (k == 0) return win_at(n()) - n() > win_at(1);
    return win_at(k) > win_at(k + 1);
  }

  /* g = tau^j · s_{word[0]} · s_{word[1]} ··· with letters in {0..n-1} and
   * length additive along the word. */
  std::pair<int, std::vector<int>> tau_word() const {
    ExtAff g = *this;
    int nn = n();
    std::vector<int> word;
    bool more = true;
    while (more) {
      more = false;
      for (int k = 0; k < nn; ++k)
        if (g.right_descent(k)) {
          g = g * (k == 0 ? s0(nn) : simple(k, nn));
          word.push_back(k);
          more = true;
          break;
        }
    }
    int j = g.tau_power();
    for (int i = 1; i <= nn; ++i)
      if (g.win_at(i) != i - j) fail("tau_word: residue is not a tau power");
    std::reverse(word.begin(), word.end());
    return {j, word};
  }

private:
  static size_t wp_size(const Perm& p) { return p.im.size(); }
};

/* conjugated intersection for extended affine d:
 * dJ ∩ K = {s in K : d^{-1} s d in W_J}, J,K subsets of the finite I */
inline Subset conj_meet_aff(const ExtAff& d, Subset J, Subset K) {
  Subset out;
  ExtAff di = d.inv();
  for (int k : K.elems()) {
    ExtAff c = di * ExtAff::simple(k, d.n()) * d;
    if (!c.is_identity() && c.tau_power() == 0) {
      bool trans_zero = true;
      for (int x : c.lam) trans_zero = trans_zero && x == 0;
      if (trans_zero) {
        // c is a finite transposition (a,b); it lies in W_J iff b = a+1
        // up to ordering and s_a in J
        int a = 0, b = 0;
        for (int i = 1; i <= d.n(); ++i)
          if (c.w.of(i) != i) { a = i; b = c.w.of(i); break; }
        if (a > b) std::swap(a, b);
        if (b == a + 1 && J.has(a) &&
            c.w == Perm::transposition(a, b, d.n()))
          out.add(k);
      }
    }
  }
  return out;
}

/* Canonical representative d·X^p of W_K g W_J with d a shortest finite
 * double coset representative and p dominant for d^{-1}K ∩ J.  Every double
 * coset of the extended affine group contains exactly one such element. */
inline ExtAff canonical_rep(const ExtAff& g, Subset K, Subset J) {
  CosetDecomp dec = double_coset_decompose(g.w, K, J);
  std::vector<int> pa = perm_vec(dec.a, g.lam);
  Subset Jp = conj_meet(dec.d.inv(), K, J);  // d^{-1}K ∩ J
  return ExtAff(dec.d, dominant_rep(std::move(pa), Jp));
}

inline bool is_canonical_rep(const ExtAff& g, Subset K, Subset J) {
  if (!(g.w == min_double_coset_rep(g.w, K, J))) return false;
  return j_dominant(g.lam, conj_meet(g.w.inv(), K, J));
}

/* minimal-length representative of W_K g W_J, K,J finite subsets */
inline ExtAff min_double_coset_rep_aff(const ExtAff& g, Subset K, Subset J) {
  ExtAff best = g;
  int bl = g.length();
  bool first = true;
  for (const Perm& k : parabolic_elems(K, g.n()))
    for (const Perm& j : parabolic_elems(J, g.n())) {
      ExtAff c = ExtAff(k) * g * ExtAff(j);
      int l = c.length();
      if (first || l < bl) { bl = l; best = c; first = false; }
    }
  return best;
}

}  // namespace qschur
