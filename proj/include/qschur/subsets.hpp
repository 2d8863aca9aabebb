#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "qschur/perm.hpp"

namespace qschur {

/* Subset of the finite simple reflections {s_1..s_{n-1}}; bit i <-> s_i.
 * The affine reflection s_0 is never a member. */
struct Subset {
  uint32_t mask = 0;

  Subset() = default;
  explicit Subset(uint32_t m) : mask(m) {}
  static Subset full(int n) { return Subset(((1u << n) - 1) & ~1u); }
  static Subset of(std::initializer_list<int> idx) {
    Subset s;
    for (int i : idx) s.add(i);
    return s;
  }

  bool has(int i) const { return (mask >> i) & 1u; }
  void add(int i) { mask |= 1u << i; }
  bool empty() const { return mask == 0; }
  bool subset_of(Subset o) const { return (mask & ~o.mask) == 0; }
  std::vector<int> elems() const {
    std::vector<int> v;
    for (int i = 1; i < 32; ++i)
      if (has(i)) v.push_back(i);
    return v;
  }
  auto operator<=>(const Subset&) const = default;
};

inline std::vector<Subset> all_subsets(int n) {
  uint32_t f = Subset::full(n).mask;
  std::vector<Subset> out;
  uint32_t m = 0;
  while (true) {
    out.push_back(Subset(m));
    if (m == f) break;
    m = (m - f) & f;  // next submask of f in increasing order
  }
  return out;
}

/* Maximal position intervals [b,e] (1-based, inclusive) permuted by W_J;
 * singletons included, so the intervals partition {1..n}. */
inline std::vector<std::pair<int, int>> position_blocks(Subset J, int n) {
  std::vector<std::pair<int, int>> blocks;
  int b = 1;
  for (int i = 1; i <= n; ++i) {
    bool joined = i < n && J.has(i);
    if (!joined) {
      blocks.emplace_back(b, i);
      b = i + 1;
    }
  }
  return blocks;
}

inline bool in_parabolic(const Perm& w, Subset J) {
  for (auto [b, e] : position_blocks(J, w.n()))
    for (int i = b; i <= e; ++i)
      if (w.of(i) < b || w.of(i) > e) return false;
  return true;
}

inline std::vector<Perm> parabolic_elems(Subset J, int n) {
  std::vector<Perm> out;
  for (const Perm& w : all_perms(n))
    if (in_parabolic(w, J)) out.push_back(w);
  return out;
}

/* longest element of W_J: reversal within each block */
inline Perm parabolic_longest(Subset J, int n) {
  Perm w = Perm::identity(n);
  for (auto [b, e] : position_blocks(J, n))
    for (int i = b; i <= e; ++i) w.im[i - 1] = b + e - i;
  return w;
}

/* Minimal-length representatives D^K_{J1,J2} of W_J1 \ W_K / W_J2,
 * enumerated inside W_K.  Use K = Subset::full(n) for D_{J1,J2}. */
inline std::vector<Perm> min_coset_reps(Subset K, Subset J1, Subset J2, int n) {
  std::vector<Perm> out;
  for (const Perm& w : parabolic_elems(K, n)) {
    bool ok = true;
    for (int i : J1.elems())
      if (w.left_descent(i)) { ok = false; break; }
    if (ok)
      for (int i : J2.elems())
        if (w.right_descent(i)) { ok = false; break; }
    if (ok) out.push_back(w);
  }
  return out;
}

/* d J ∩ K = {s in K : d^{-1} s d in J}  (for finite d) */
inline Subset conj_meet(const Perm& d, Subset J, Subset K) {
  Subset out;
  Perm di = d.inv();
  for (int k : K.elems()) {
    int a = di.of(k), b = di.of(k + 1);
    if (a > b) std::swap(a, b);
    if (b == a + 1 && J.has(a)) out.add(k);
  }
  return out;
}

/* w = w_K d a with d in D_{K,J}, a in D^J_{d^{-1}K∩J, ∅}, lengths additive;
 * mirrored w = b d w_J with b in D^K_{∅, dJ∩K}. */
struct CosetDecomp {
  Perm wK, d, a;  // w = wK * d * a
  Perm b, wJ;     // w = b * d * wJ
};

inline Perm min_double_coset_rep(const Perm& w, Subset K, Subset J) {
  Perm best = w;
  int bl = w.length();
  for (const Perm& k : parabolic_elems(K, w.n()))
    for (const Perm& j : parabolic_elems(J, w.n())) {
      Perm c = k * w * j;
      int l = c.length();
      if (l < bl) { bl = l; best = c; }
    }
  return best;
}

inline CosetDecomp double_coset_decompose(const Perm& w, Subset K, Subset J) {
  int n = w.n();
  CosetDecomp out;
  out.d = min_double_coset_rep(w, K, J);
  Subset dKJ = conj_meet(out.d.inv(), K, J);  // d^{-1}K ∩ J
  Subset dJK = conj_meet(out.d, J, K);        // dJ ∩ K
  int lw = w.length(), ld = out.d.length();
  bool found = false;
  for (const Perm& k : parabolic_elems(K, n)) {
    Perm a = out.d.inv() * k.inv() * w;
    if (!in_parabolic(a, J)) continue;
    if (k.length() + ld + a.length() != lw) continue;
    bool min = true;
    for (int i : dKJ.elems())
      if (a.left_descent(i)) { min = false; break; }
    if (!min) continue;
    out.wK = k;
    out.a = a;
    found = true;
    break;
  }
  if (!found) fail("double_coset_decompose: no w_K d a factorization");
  found = false;
  for (const Perm& j : parabolic_elems(J, n)) {
    Perm b = w * j.inv() * out.d.inv();
    if (!in_parabolic(b, K)) continue;
    if (b.length() + ld + j.length() != lw) continue;
    bool min = true;
    for (int i : dJK.elems())
      if (b.right_descent(i)) { min = false; break; }
    if (!min) continue;
    out.b = b;
    out.wJ = j;
    found = true;
    break;
  }
  if (!found) fail("double_coset_decompose: no b d w_J factorization");
  return out;
}

/* J-dominance of exponent vectors: weakly decreasing within each J-block. */
inline bool j_dominant(const std::vector<int>& p, Subset J) {
  for (auto [b, e] : position_blocks(J, static_cast<int>(p.size())))
    for (int i = b; i < e; ++i)
      if (p[i - 1] < p[i]) return false;
  return true;
}
inline bool j_antidominant(const std::vector<int>& p, Subset J) {
  for (auto [b, e] : position_blocks(J, static_cast<int>(p.size())))
    for (int i = b; i < e; ++i)
      if (p[i - 1] > p[i]) return false;
  return true;
}
inline std::vector<int> dominant_rep(std::vector<int> p, Subset J) {
  for (auto [b, e] : position_blocks(J, static_cast<int>(p.size())))
    std::sort(p.begin() + (b - 1), p.begin() + e, std::greater<int>());
  return p;
}
inline std::vector<int> antidominant_rep(std::vector<int> p, Subset J) {
  for (auto [b, e] : position_blocks(J, static_cast<int>(p.size())))
    std::sort(p.begin() + (b - 1), p.begin() + e);
  return p;
}

/* permuted exponent vector (w·p)_i = p_{w^{-1}(i)}, matching w X^p w^{-1} */
inline std::vector<int> perm_vec(const Perm& w, const std::vector<int>& p) {
  std::vector<int> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[w.im[i] - 1] = p[i];
  return out;
}

}  // namespace qschur
