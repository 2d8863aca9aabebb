#pragma once
#include <vector>

#include "qschur/hecke.hpp"
#include "qschur/series.hpp"

namespace qschur {

inline int res_canon(int x, int e) {
  int r = x % e;
  if (r <= 0) r += e;
  return r;
}
inline std::vector<int> res_canon_vec(std::vector<int> u, int e) {
  for (int& x : u) x = res_canon(x, e);
  return u;
}

inline TruncSeries swap_vars(const TruncSeries& f, int i, int j) {
  TruncSeries g(f.n, f.N);
  for (auto& [e, c] : f.t) {
    std::vector<int> e2 = e;
    std::swap(e2[i - 1], e2[j - 1]);
    g.t.emplace(std::move(e2), c);
  }
  return g;
}

/* Element of a completed faithful representation: a finite sum of
 * components f e_u with truncated series payloads.
 *
 * Sign side ('b', module over v-bar): payload in local coordinates
 *   x_j = 1 - q^{-u_j} X_j,  so X_j = q^{u_j}(1 - x_j).
 * Trivial side ('v', module over v): payload in local coordinates
 *   y_j = 1 - q^{u_j} X_j^{-1},  so X_j^{-1} = q^{-u_j}(1 - y_j). */
struct CompletedElem {
  char side = 'b';
  int n = 0;
  int N = 0;
  Field F;
  std::map<std::vector<int>, TruncSeries> comp;

  CompletedElem() = default;
  CompletedElem(char s, int nvars, int cutoff, const Field& fld)
      : side(s), n(nvars), N(cutoff), F(fld) {
    if (cutoff <= 0) fail("CompletedElem: cutoff exhausted");
  }

  static CompletedElem basis(char side, const std::vector<int>& u,
                             const Field& F, int N) {
    CompletedElem m(side, static_cast<int>(u.size()), N, F);
    m.comp.emplace(res_canon_vec(u, F.e),
                   TruncSeries::constant(m.n, N, F.one()));
    return m;
  }

  bool is_zero() const { return comp.empty(); }
  bool operator==(const CompletedElem& o) const {
    return side == o.side && n == o.n && N == o.N && comp == o.comp;
  }

  TruncSeries component(const std::vector<int>& u) const {
    auto it = comp.find(res_canon_vec(u, F.e));
    return it == comp.end() ? TruncSeries(n, N) : it->second;
  }

  void add(const std::vector<int>& u, const TruncSeries& f) {
    if (f.is_zero()) return;
    std::vector<int> key = res_canon_vec(u, F.e);
    if (!comp.empty()) {
      std::vector<int> a = comp.begin()->first, b = key;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) fail("CompletedElem: components from different orbits");
    }
    auto it = comp.find(key);
    if (it == comp.end()) {
      comp.emplace(key, f);
      return;
    }
    it->second += f;
    if (it->second.is_zero()) comp.erase(it);
  }

  CompletedElem& operator+=(const CompletedElem& o) {
    for (auto& [u, f] : o.comp) add(u, f);
    return *this;
  }
  friend CompletedElem operator+(CompletedElem a, const CompletedElem& b) {
    return a += b;
  }
  friend CompletedElem operator-(CompletedElem a, const CompletedElem& b) {
    for (auto& [u, f] : b.comp) a.add(u, -f);
    return a;
  }
  CompletedElem scaled(Fp c) const {
    CompletedElem m(side, n, N, F);
    if (c.is_zero()) return m;
    for (auto& [u, f] : comp) m.comp.emplace(u, f.scaled(c));
    return m;
  }

  /* drop to a smaller cutoff; each Demazure step inside act_T is exact only
   * below the top degree, so composites are compared at reduced precision */
  CompletedElem truncated(int M) const {
    CompletedElem m(side, n, M, F);
    for (auto& [u, f] : comp) {
      TruncSeries g(n, M);
      for (auto& [e, c] : f.t) g.add_term(e, c);
      if (!g.is_zero()) m.comp.emplace(u, std::move(g));
    }
    return m;
  }

  /* chart expansion of a Laurent polynomial on the component u */
  TruncSeries expand(const LaurentPoly<Fp>& g,
                     const std::vector<int>& u) const {
    if (side == 'b') return series_from_laurent(g, u, F.q, N);
    LaurentPoly<Fp> gneg(n);
    for (auto& [e, c] : g.t) {
      std::vector<int> e2(n);
      for (int k = 0; k < n; ++k) e2[k] = -e[k];
      gneg.add_term(e2, c);
    }
    std::vector<int> mu(u.size());
    for (size_t k = 0; k < u.size(); ++k) mu[k] = -u[k];
    return series_from_laurent(gneg, mu, F.q, N);
  }

  CompletedElem mul_poly(const LaurentPoly<Fp>& g) const {
    CompletedElem m(side, n, N, F);
    for (auto& [u, f] : comp) m.add(u, expand(g, u) * f);
    return m;
  }

  CompletedElem act_T(int r) const {
    CompletedElem m(side, n, N, F);
    Fp q = F.q, one = F.one();
    /* sign side works with (q X_{r+1} - X_r)/(X_{r+1} - X_r), trivial side
     * with (q X_r - X_{r+1})/(X_r - X_{r+1}); in the respective charts both
     * denominators are units when the residues differ */
    int hi = side == 'b' ? r + 1 : r;
    int lo = side == 'b' ? r : r + 1;
    LaurentPoly<Fp> top =
        LaurentPoly<Fp>::var(n, hi, q) - LaurentPoly<Fp>::var(n, lo, one);
    LaurentPoly<Fp> bottom =
        LaurentPoly<Fp>::var(n, hi, one) - LaurentPoly<Fp>::var(n, lo, one);
    for (auto& [u, f] : comp) {
      if (u[r - 1] == u[r]) {
        /* same residue: exact division of the antisymmetric part */
        TruncSeries mult = TruncSeries::constant(n, N, q - one) -
                           TruncSeries::var(n, N, r + 1, q) +
                           TruncSeries::var(n, N, r, one);
        TruncSeries d = demazure(r, f);
        if (side == 'b') {
          m.add(u, mult * d - f);
        } else {
          m.add(u, f.scaled(q) - mult * d);
        }
      } else {
        std::vector<int> v = u;
        std::swap(v[r - 1], v[r]);
        TruncSeries fs = swap_vars(f, r, r + 1);
        TruncSeries tu = expand(top, u) * expand(bottom, u).inverted();
        TruncSeries tv = expand(top, v) * expand(bottom, v).inverted();
        if (side == 'b') {
          /* (T_r+1) f e_u = theta (f e_u - s_r(f) e_{s_r u}) */
          m.add(u, tu * f - f);
          m.add(v, -(tv * fs));
        } else {
          /* (T_r-q) f e_u = -theta (f e_u - s_r(f) e_{s_r u}) */
          m.add(u, f.scaled(q) - tu * f);
          m.add(v, tv * fs);
        }
      }
    }
    return m;
  }
  CompletedElem act_Tinv(int r) const {
    Fp qi = F.q.inv();
    CompletedElem m = act_T(r).scaled(qi);
    return m + scaled(qi - F.one());
  }

  CompletedElem act_e(const std::vector<int>& u0) const {
    std::vector<int> key = res_canon_vec(u0, F.e);
    CompletedElem m(side, n, N, F);
    auto it = comp.find(key);
    if (it != comp.end()) m.comp.emplace(key, it->second);
    return m;
  }

  CompletedElem act_Phi(int r) const {
    CompletedElem m = act_T(r);
    Fp one = F.one();
    LaurentPoly<Fp> ratio =
        LaurentPoly<Fp>::var(n, r, one) *
        LaurentPoly<Fp>::var(n, r + 1, one, -1);
    for (auto& [u, f] : comp) {
      if (u[r - 1] == u[r]) {
        m.add(u, f);
      } else {
        TruncSeries den = TruncSeries::constant(n, N, one) - expand(ratio, u);
        m.add(u, den.inverted().scaled(one - F.q) * f);
      }
    }
    return m;
  }
};

inline CompletedElem apply_word(const HeckeWord& w, CompletedElem m) {
  for (auto it = w.g.rbegin(); it != w.g.rend(); ++it) {
    switch (it->kind) {
      case 'T': m = it->k == 1 ? m.act_T(it->i) : m.act_Tinv(it->i); break;
      case 'X':
        m = m.mul_poly(LaurentPoly<Fp>::var(m.n, it->i, m.F.one(), it->k));
        break;
      case 'e': m = m.act_e(it->u); break;
      case 'P': m = m.act_Phi(it->i); break;
    }
  }
  return m;
}

inline CompletedElem apply_elt(const HeckeElt& h, const CompletedElem& m) {
  CompletedElem out(m.side, m.n, m.N, m.F);
  for (auto& [w, f] : h.t) {
    CompletedElem piece = m;
    std::vector<int> word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      piece = piece.act_T(*it);
    out += piece.mul_poly(f);
  }
  return out;
}

/* The twist f v -> f^sharp v-bar: a trivial-side element at residue data u
 * becomes a sign-side element at -u with the same payload coefficients. */
inline CompletedElem corhash_map(const CompletedElem& m) {
  if (m.side != 'v') fail("corhash_map: expects a trivial-side element");
  CompletedElem out('b', m.n, m.N, m.F);
  for (auto& [u, f] : m.comp) {
    std::vector<int> mu(u.size());
    for (size_t k = 0; k < u.size(); ++k) mu[k] = -u[k];
    out.add(res_canon_vec(mu, m.F.e), f);
  }
  return out;
}

}  // namespace qschur
