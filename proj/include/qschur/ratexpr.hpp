#pragma once
#include <map>
#include <vector>

#include "qschur/laurent.hpp"

namespace qschur {

/* The linear form X_i - c X_j with i < j and c != 0, used as a denominator
 * factor.  Monomial factors are units and never appear here. */
template <class C>
struct LinFactor {
  int i = 0, j = 0;
  C c;
  auto operator<=>(const LinFactor&) const = default;
};

/* Fraction num / prod factor^mult with simplification only by verified
 * exact division. */
template <class C>
struct RationalExpr {
  LaurentPoly<C> num;
  std::map<LinFactor<C>, int> den;

  RationalExpr() = default;
  explicit RationalExpr(LaurentPoly<C> p) : num(std::move(p)) {}

  int n() const { return num.n; }
  bool is_zero() const { return num.is_zero(); }

  LaurentPoly<C> factor_poly(const LinFactor<C>& f) const {
    return LaurentPoly<C>::var(n(), f.i, f.c.of(1)) -
           LaurentPoly<C>::var(n(), f.j, f.c);
  }
  LaurentPoly<C> den_poly() const {
    LaurentPoly<C> p = LaurentPoly<C>::constant(n(), num_ctx().of(1));
    for (auto& [f, m] : den)
      for (int k = 0; k < m; ++k) p *= factor_poly(f);
    return p;
  }

  /* cancel denominator factors against the numerator where exactly possible */
  void reduce() {
    if (num.is_zero()) {
      den.clear();
      return;
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto it = den.begin(); it != den.end(); ++it) {
        auto q = divide_linear(num, it->first.i, it->first.j, it->first.c);
        if (!q) continue;
        num = std::move(*q);
        if (--it->second == 0) den.erase(it);
        progress = true;
        break;
      }
    }
  }

  bool is_poly() const {
    RationalExpr r = *this;
    r.reduce();
    return r.den.empty();
  }
  /* the numerator after full cancellation; fails if a factor remains */
  LaurentPoly<C> as_poly() const {
    RationalExpr r = *this;
    r.reduce();
    if (!r.den.empty()) fail("RationalExpr: not a polynomial");
    return r.num;
  }

  RationalExpr& operator*=(const RationalExpr& o) {
    num *= o.num;
    for (auto& [f, m] : o.den) den[f] += m;
    return *this;
  }
  friend RationalExpr operator*(RationalExpr a, const RationalExpr& b) {
    return a *= b;
  }
  RationalExpr& operator*=(const LaurentPoly<C>& p) {
    num *= p;
    return *this;
  }
  RationalExpr operator-() const {
    RationalExpr r = *this;
    r.num = -r.num;
    return r;
  }

  RationalExpr& operator+=(const RationalExpr& o) {
    LaurentPoly<C> a = num, b = o.num;
    std::map<LinFactor<C>, int> d = den;
    for (auto& [f, m] : o.den) {
      auto it = d.find(f);
      if (it == d.end()) d[f] = m;
      else it->second = std::max(it->second, m);
    }
    for (auto& [f, m] : d) {
      int ma = 0, mb = 0;
      if (auto it = den.find(f); it != den.end()) ma = it->second;
      if (auto it = o.den.find(f); it != o.den.end()) mb = it->second;
      LaurentPoly<C> fp = factor_poly(f);
      for (int k = ma; k < m; ++k) a *= fp;
      for (int k = mb; k < m; ++k) b *= fp;
    }
    num = a + b;
    den = std::move(d);
    reduce();
    return *this;
  }
  friend RationalExpr operator+(RationalExpr a, const RationalExpr& b) {
    return a += b;
  }
  friend RationalExpr operator-(RationalExpr a, const RationalExpr& b) {
    return a += -b;
  }

  /* equality of fractions by cross-multiplication */
  bool operator==(const RationalExpr& o) const {
    if (num.is_zero() || o.num.is_zero())
      return num.is_zero() && o.num.is_zero();
    return num * o.den_poly() == o.num * den_poly();
  }

private:
  C num_ctx() const {
    if (!num.t.empty()) return num.t.begin()->second;
    if (!den.empty()) return den.begin()->first.c;
    fail("RationalExpr: no coefficient context");
  }
};

template <class C>
RationalExpr<C> act_perm(const Perm& w, const RationalExpr<C>& r) {
  RationalExpr<C> out;
  out.num = act_perm(w, r.num);
  for (auto& [f, m] : r.den) {
    int a = w.of(f.i), b = w.of(f.j);
    if (a < b) {
      out.den[LinFactor<C>{a, b, f.c}] += m;
    } else {
      // X_a - c X_b = -c (X_b - c^{-1} X_a)
      out.den[LinFactor<C>{b, a, f.c.inv()}] += m;
      C s = (-f.c).inv();
      for (int k = 0; k < m; ++k) out.num = out.num.scaled(s);
    }
  }
  return out;
}

/* theta_{i,j} = (q X_i - X_j)/(X_i - X_j) */
inline RationalExpr<Fp> theta(int i, int j, int n, Fp q) {
  if (i == j) fail("theta: indices must differ");
  RationalExpr<Fp> r;
  r.num = LaurentPoly<Fp>::var(n, i, q) - LaurentPoly<Fp>::var(n, j, q.of(1));
  if (i < j) {
    r.den[LinFactor<Fp>{i, j, q.of(1)}] = 1;
  } else {
    r.den[LinFactor<Fp>{j, i, q.of(1)}] = 1;
    r.num = r.num.scaled(q.of(-1));
  }
  return r;
}

/* composition (c_1,..,c_r) -> the subset of I joining positions inside each
 * part; zero parts are skipped */
inline Subset comp_subset(const std::vector<int>& parts) {
  Subset J;
  int pos = 0;
  for (int p : parts) {
    for (int k = 1; k < p; ++k) J.add(pos + k);
    pos += p;
  }
  return J;
}
inline int comp_size(const std::vector<int>& parts) {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

/* the merge over shortest coset representatives: sum of w(f) for
 * w in D^K_{empty,J} */
template <class C>
RationalExpr<C> merge_sum(Subset K, Subset J, const RationalExpr<C>& f,
                          int n) {
  if (!J.subset_of(K)) fail("merge_sum: J must be a subset of K");
  RationalExpr<C> out;
  out.num = LaurentPoly<C>(n);
  for (const Perm& w : min_coset_reps(K, Subset(), J, n)) out += act_perm(w, f);
  return out;
}

/* merge in composition notation (superscript K, subscript J) */
template <class C>
RationalExpr<C> merge_comp(const std::vector<int>& sup,
                           const std::vector<int>& sub,
                           const RationalExpr<C>& f) {
  int n = comp_size(sup);
  if (comp_size(sub) != n) fail("merge_comp: composition sizes differ");
  return merge_sum(comp_subset(sup), comp_subset(sub), f, n);
}

}  // namespace qschur
