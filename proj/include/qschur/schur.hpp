#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qschur/extaff.hpp"
#include "qschur/hecke.hpp"
#include "qschur/hecke_complete.hpp"
#include "qschur/linalg.hpp"
#include "qschur/ratexpr.hpp"

namespace qschur {

/* --------------------------------------------------------------------
 * T_w for the extended affine group.
 *
 * The finite generators come from the engine.  The rotation acts by
 * T_rot := T_{n-1}...T_1 X_1 and the wrap-around generator by
 * T_{s_0} := T_rot T_{n-1} T_rot^{-1}.  This normalisation avoids any
 * square root of q, at the cost of a power of q on central monomials;
 * products with adding lengths still multiply, which is all the coset
 * sums below ever use. */

inline HeckeElt perm_elt(const Perm& w, const Field& F) {
  HeckeElt h = HeckeElt::unit(w.n(), F);
  for (int i : w.reduced_word()) h = h.rmul_T(i);
  return h;
}

inline HeckeElt rot_elt(int n, const Field& F) {
  HeckeElt h = HeckeElt::unit(n, F);
  for (int i = n - 1; i >= 1; --i) h = h.rmul_T(i);
  return h.rmul_X(1, 1);
}

inline HeckeElt rot_inv_elt(int n, const Field& F) {
  HeckeElt h = HeckeElt::unit(n, F).rmul_X(1, -1);
  for (int i = 1; i <= n - 1; ++i) h = h.rmul_Tinv(i);
  return h;
}

inline HeckeElt s0_elt(int n, const Field& F) {
  return rot_elt(n, F).rmul_T(n - 1) * rot_inv_elt(n, F);
}

inline HeckeElt t_elt(const ExtAff& d, const Field& F) {
  int n = d.n();
  auto [j, word] = d.tau_word();
  HeckeElt h = HeckeElt::unit(n, F);
  if (j != 0) {
    HeckeElt step = j > 0 ? rot_elt(n, F) : rot_inv_elt(n, F);
    for (int c = 0; c < std::abs(j); ++c) h = h * step;
  }
  for (int k : word) h = k == 0 ? h * s0_elt(n, F) : h.rmul_T(k);
  return h;
}

/* --------------------------------------------------------------------
 * Double cosets and their characteristic sums. */

inline std::vector<ExtAff> double_coset_elems(const ExtAff& d, Subset K,
                                              Subset J) {
  int n = d.n();
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<ExtAff> out;
  for (const Perm& k : parabolic_elems(K, n))
    for (const Perm& j : parabolic_elems(J, n)) {
      ExtAff g = ExtAff(k) * d * ExtAff(j);
      if (seen.emplace(g.w.im, g.lam).second) out.push_back(g);
    }
  return out;
}

inline HeckeElt coset_sum_elt(const ExtAff& d, Subset K, Subset J,
                              const Field& F) {
  HeckeElt h(d.n(), F);
  for (const ExtAff& g : double_coset_elems(d, K, J)) h += t_elt(g, F);
  return h;
}

/* --------------------------------------------------------------------
 * Homomorphism data between the parabolic modules and the faithful
 * action on invariant payloads.  A datum is a target subset, a source
 * subset, and an extended affine representative stored canonically. */

struct SchurElem {
  Subset K, J;  // target, source
  ExtAff d;

  SchurElem(Subset Kp, Subset Jp, const ExtAff& g)
      : K(Kp), J(Jp), d(canonical_rep(g, Kp, Jp)) {}
};

/* engine element realising the datum on payloads: the sum of T_a T_d
 * over short representatives a of K modulo dJ cap K */
inline HeckeElt action_elt(const SchurElem& b, const Field& F) {
  int n = b.d.n();
  Subset meet = conj_meet_aff(b.d, b.J, b.K);
  HeckeElt td = t_elt(b.d, F);
  HeckeElt out(n, F);
  for (const Perm& a : min_coset_reps(b.K, Subset(), meet, n))
    out += perm_elt(a, F) * td;
  return out;
}

inline LaurentPoly<Fp> rho(const SchurElem& b, const LaurentPoly<Fp>& f,
                           const Field& F) {
  return apply_triv(action_elt(b, F), f);
}

/* the sign-side twin, acting through the hash twist */
inline LaurentPoly<Fp> rho_bar(const SchurElem& b, const LaurentPoly<Fp>& f,
                               const Field& F) {
  return apply_sign(action_elt(b, F).sharp(), f);
}

/* scalar by which the translation datum (J, p) acts on 1: a W_J-invariant
 * Laurent polynomial */
inline LaurentPoly<Fp> q_scalar(Subset J, const std::vector<int>& p,
                                const Field& F) {
  int n = static_cast<int>(p.size());
  SchurElem b(J, J, ExtAff::monomial(p));
  return rho(b, LaurentPoly<Fp>::constant(n, F.one()), F);
}

/* --------------------------------------------------------------------
 * Payload generators for probing the action. */

inline std::vector<std::vector<int>> exp_window(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, lo);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == hi) cur[i--] = lo;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

inline LaurentPoly<Fp> orbit_sum(Subset J, const std::vector<int>& p,
                                 const Field& F) {
  int n = static_cast<int>(p.size());
  std::set<std::vector<int>> seen;
  for (const Perm& w : parabolic_elems(J, n)) seen.insert(perm_vec(w, p));
  LaurentPoly<Fp> out(n);
  for (const auto& e : seen) out.add_term(e, F.one());
  return out;
}

/* W_K-invariant payloads: orbit sums of the K-dominant monomials with
 * exponents in [lo, hi], in lexicographic order */
inline std::vector<LaurentPoly<Fp>> invariant_probes(Subset K, int n, int lo,
                                                     int hi, const Field& F) {
  std::vector<LaurentPoly<Fp>> out;
  for (const auto& p : exp_window(n, lo, hi))
    if (j_dominant(p, K)) out.push_back(orbit_sum(K, p, F));
  return out;
}

/* --------------------------------------------------------------------
 * The product basis of a Hom-space: pairs (w, p) with w a minimal double
 * coset representative and p a J-dominant window exponent, acting by
 * merge past w, multiplication by the translation scalar, then split. */

inline std::vector<Perm> min_double_reps(Subset K2, Subset K1, int n) {
  std::vector<Perm> out;
  for (const Perm& w : all_perms(n))
    if (min_double_coset_rep(w, K2, K1) == w) out.push_back(w);
  return out;
}

inline std::vector<std::pair<Perm, std::vector<int>>> hom_basis_data(
    Subset K2, Subset K1, int n, int lo, int hi) {
  std::vector<std::pair<Perm, std::vector<int>>> out;
  for (const Perm& w : min_double_reps(K2, K1, n)) {
    Subset J = conj_meet(w.inv(), K2, K1);  // K1 cap w^{-1} K2
    for (const auto& p : exp_window(n, lo, hi))
      if (j_dominant(p, J)) out.emplace_back(w, p);
  }
  return out;
}

inline HeckeElt basis_action_elt(Subset K2, Subset K1, const Perm& w,
                                 const std::vector<int>& p, const Field& F) {
  int n = w.n();
  Subset J = conj_meet(w.inv(), K2, K1);
  Subset wJ = conj_meet(w, J, K2);
  HeckeElt ha(n, F), hb(n, F);
  for (const Perm& a : min_coset_reps(K2, Subset(), wJ, n))
    ha += perm_elt(a, F);
  for (const Perm& b : min_coset_reps(K1, Subset(), J, n))
    hb += perm_elt(b, F);
  return ha * perm_elt(w, F) * HeckeElt::from_poly(q_scalar(J, p, F), F) * hb;
}

/* Expand the composite of two data in the product basis of the outer
 * Hom-space by solving on the given source-invariant probes.  exact is
 * set when the probe images match the expansion with zero residual. */
struct Expansion {
  std::vector<std::pair<Perm, std::vector<int>>> data;
  std::vector<Fp> coef;
  bool exact = false;
};

inline Expansion compose_and_expand(const SchurElem& b2, const SchurElem& b1,
                                    const std::vector<LaurentPoly<Fp>>& probes,
                                    int lo, int hi, const Field& F) {
  if (!(b1.K == b2.J)) fail("compose_and_expand: middle subsets differ");
  int n = b1.d.n();
  Expansion out;
  out.data = hom_basis_data(b2.K, b1.J, n, lo, hi);
  std::vector<HeckeElt> elts;
  elts.reserve(out.data.size());
  for (const auto& [w, p] : out.data)
    elts.push_back(basis_action_elt(b2.K, b1.J, w, p, F));
  HeckeElt e2 = action_elt(b2, F), e1 = action_elt(b1, F);

  std::vector<SparseRank::Row> cols(out.data.size());
  SparseRank::Row rhs;
  for (size_t t = 0; t < probes.size(); ++t) {
    auto key = [&](const std::vector<int>& e) {
      std::vector<int> k{static_cast<int>(t)};
      k.insert(k.end(), e.begin(), e.end());
      return k;
    };
    LaurentPoly<Fp> y = apply_triv(e2, apply_triv(e1, probes[t]));
    for (const auto& [e, c] : y.t) rhs.emplace(key(e), c);
    for (size_t j = 0; j < cols.size(); ++j) {
      LaurentPoly<Fp> img = apply_triv(elts[j], probes[t]);
      for (const auto& [e, c] : img.t) cols[j].emplace(key(e), c);
    }
  }
  auto sol = solve_columns(cols, rhs, F.one().of(0));
  if (sol) {
    out.coef = *sol;
    out.exact = true;
  } else {
    out.coef.assign(out.data.size(), F.one().of(0));
  }
  return out;
}

/* --------------------------------------------------------------------
 * Residue words and block combinatorics. */

/* stabiliser of the word u inside the parabolic J */
inline Subset word_stab(const std::vector<int>& u, Subset J) {
  Subset out;
  for (int i : J.elems())
    if (u[i - 1] == u[i]) out.add(i);
  return out;
}

/* ascending reordering of u within each K-block */
inline std::vector<int> block_sort(std::vector<int> u, Subset K) {
  for (auto [b, e] : position_blocks(K, static_cast<int>(u.size())))
    std::sort(u.begin() + (b - 1), u.begin() + e);
  return u;
}

/* the permutation carrying the a-th occurrence of each value in u to the
 * a-th occurrence in v; minimal in its coset modulo the stabiliser of u */
inline Perm transport_perm(const std::vector<int>& u,
                           const std::vector<int>& v) {
  int n = static_cast<int>(u.size());
  std::vector<int> im(n, 0);
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    int j = 0;
    while (j < n && (used[j] || v[j] != u[i])) ++j;
    if (j == n) fail("transport_perm: words differ as multisets");
    used[j] = 1;
    im[i] = j + 1;
  }
  return Perm(std::move(im));
}

/* --------------------------------------------------------------------
 * One simple merge in closed form.  The residue content is d_i per value
 * i, split a_i | d_i - a_i across the two groups being merged; the
 * payload g lives at the two-group base word.  Returns the component at
 * the fully sorted word, which must come out polynomial. */

inline std::vector<int> sorted_word(const std::vector<int>& dims) {
  std::vector<int> u;
  for (size_t i = 0; i < dims.size(); ++i)
    u.insert(u.end(), dims[i], static_cast<int>(i) + 1);
  return u;
}

inline std::vector<int> split_word(const std::vector<int>& dims,
                                   const std::vector<int>& asplit) {
  std::vector<int> u;
  for (size_t i = 0; i < dims.size(); ++i)
    u.insert(u.end(), asplit[i], static_cast<int>(i) + 1);
  for (size_t i = 0; i < dims.size(); ++i)
    u.insert(u.end(), dims[i] - asplit[i], static_cast<int>(i) + 1);
  return u;
}

inline Subset two_group_subset(int n, int a) {
  Subset J;
  for (int i = 1; i < n; ++i)
    if (i != a) J.add(i);
  return J;
}

inline LaurentPoly<Fp> merge_closed_form(const std::vector<int>& dims,
                                         const std::vector<int>& asplit,
                                         const LaurentPoly<Fp>& g,
                                         const Field& F) {
  int n = comp_size(dims), a = comp_size(asplit);
  std::vector<int> uK = sorted_word(dims), uJ = split_word(dims, asplit);
  Subset J = two_group_subset(n, a);
  Subset stab = word_stab(uJ, J);

  RationalExpr<Fp> g0;
  g0.num = g;
  std::map<std::vector<int>, RationalExpr<Fp>> comp;
  for (const Perm& w : min_coset_reps(J, Subset(), stab, n))
    comp.emplace(perm_vec(w, uJ), act_perm(w, g0));

  RationalExpr<Fp> th;
  th.num = LaurentPoly<Fp>::constant(n, F.one());
  for (int k = a + 1; k <= n; ++k)
    for (int l = 1; l <= a; ++l) th *= theta(l, k, n, F.q);
  Perm sig = transport_perm(uJ, uK);

  std::map<std::vector<int>, RationalExpr<Fp>> moved;
  for (const auto& [v, r] : comp)
    moved.emplace(perm_vec(sig, v), act_perm(sig, r * th));

  std::vector<int> inter;
  for (size_t i = 0; i < dims.size(); ++i) {
    inter.push_back(asplit[i]);
    inter.push_back(dims[i] - asplit[i]);
  }
  RationalExpr<Fp> out;
  out.num = LaurentPoly<Fp>(n);
  for (const Perm& w :
       min_coset_reps(comp_subset(dims), Subset(), comp_subset(inter), n)) {
    auto it = moved.find(perm_vec(w.inv(), uK));
    if (it != moved.end()) out += act_perm(w, it->second);
  }
  if (!out.is_poly()) fail("merge_closed_form: component is not polynomial");
  return out.as_poly();
}

/* the same merge pushed through the completed sign-side action; the
 * extra working digits cover the truncation loss of each crossing */
inline TruncSeries merge_direct(const std::vector<int>& dims,
                                const std::vector<int>& asplit,
                                const LaurentPoly<Fp>& g, int N,
                                const Field& F) {
  int n = comp_size(dims), a = comp_size(asplit);
  std::vector<int> uK = sorted_word(dims), uJ = split_word(dims, asplit);
  Subset J = two_group_subset(n, a);
  Subset stab = word_stab(uJ, J);
  int M = N + a * (n - a);

  CompletedElem m('b', n, M, F);
  for (const Perm& w : min_coset_reps(J, Subset(), stab, n)) {
    std::vector<int> v = perm_vec(w, uJ);
    m.add(v, series_from_laurent(act_perm(w, g), v, F.q, M));
  }
  HeckeElt h(n, F);
  for (const Perm& c : min_coset_reps(Subset::full(n), Subset(), J, n))
    h += perm_elt(c, F);
  TruncSeries s = apply_elt(h.sharp(), m).component(uK);
  TruncSeries out(n, N);
  for (const auto& [e, c] : s.t) out.add_term(e, c);
  return out;
}

/* chart expansion of a rational expression on the component u; every
 * denominator factor must be a unit there */
inline TruncSeries expand_rational(const RationalExpr<Fp>& r,
                                   const std::vector<int>& u, char side,
                                   int N, const Field& F) {
  CompletedElem ctx(side, static_cast<int>(u.size()), N, F);
  TruncSeries out = ctx.expand(r.num, u);
  for (const auto& [lf, mult] : r.den) {
    TruncSeries d = ctx.expand(r.factor_poly(lf), u).inverted();
    for (int k = 0; k < mult; ++k) out = out * d;
  }
  return out;
}

/* --------------------------------------------------------------------
 * Completed homomorphism data between idempotent components.  A datum
 * carries the outer subsets, a finite representative, a translation
 * exponent read at the inner base word, the inner word itself, and the
 * component labels it claims to connect. */

struct CompletedDatum {
  Subset K2, K1;
  Perm w;
  std::vector<int> p;
  std::vector<int> uJ;
  std::vector<int> u2, u1;
};

inline bool datum_compatible(const CompletedDatum& D, int e) {
  Subset J = conj_meet(D.w.inv(), D.K2, D.K1);
  std::vector<int> uJ = res_canon_vec(D.uJ, e);
  if (uJ != block_sort(uJ, J)) return false;
  if (res_canon_vec(D.u1, e) != block_sort(uJ, D.K1)) return false;
  return res_canon_vec(D.u2, e) == block_sort(perm_vec(D.w, uJ), D.K2);
}

/* keep the components lying in the W_K-orbit of u */
inline CompletedElem eplus_filter(const CompletedElem& m, Subset K,
                                  const std::vector<int>& u) {
  std::vector<int> u0 = block_sort(res_canon_vec(u, m.F.e), K);
  CompletedElem out(m.side, m.n, m.N, m.F);
  for (const auto& [v, f] : m.comp)
    if (block_sort(v, K) == u0) out.add(v, f);
  return out;
}

/* multiply each component by the monomial X^p transported from the base
 * word u0 to the component's word */
inline CompletedElem mul_transported(const CompletedElem& m,
                                     const std::vector<int>& u0,
                                     const std::vector<int>& p) {
  std::vector<int> base = res_canon_vec(u0, m.F.e);
  CompletedElem out(m.side, m.n, m.N, m.F);
  for (const auto& [v, f] : m.comp) {
    Perm w = transport_perm(base, v);
    LaurentPoly<Fp> mono(m.n);
    mono.add_term(perm_vec(w, p), m.F.one());
    out.add(v, m.expand(mono, v) * f);
  }
  return out;
}

inline CompletedElem completed_apply(const CompletedDatum& D,
                                     const CompletedElem& m) {
  const Field& F = m.F;
  int n = m.n;
  if (!datum_compatible(D, F.e)) return CompletedElem(m.side, n, m.N, F);
  bool tw = m.side == 'b';
  Subset J = conj_meet(D.w.inv(), D.K2, D.K1);
  Subset wJ = conj_meet(D.w, J, D.K2);

  CompletedElem cur = eplus_filter(m, D.K1, D.u1);
  HeckeElt hb(n, F);
  for (const Perm& b : min_coset_reps(D.K1, Subset(), J, n))
    hb += perm_elt(b, F);
  cur = apply_elt(tw ? hb.sharp() : hb, cur);
  cur = eplus_filter(cur, J, D.uJ);
  std::vector<int> p = D.p;
  if (tw)
    for (int& x : p) x = -x;
  cur = mul_transported(cur, D.uJ, p);
  HeckeElt top(n, F);
  for (const Perm& a : min_coset_reps(D.K2, Subset(), wJ, n))
    top += perm_elt(a, F);
  top = top * perm_elt(D.w, F);
  cur = apply_elt(tw ? top.sharp() : top, cur);
  return eplus_filter(cur, D.K2, D.u2);
}

/* --------------------------------------------------------------------
 * Twisted merge elements in the engine, in composition notation, and
 * their truncation by the longest representative. */

inline HeckeElt qmerge_elt(Subset K, Subset J, int n, const Field& F) {
  HeckeElt h(n, F);
  for (const Perm& w : min_coset_reps(K, Subset(), J, n)) h += perm_elt(w, F);
  return h.sharp();
}

inline Perm longest_coset_rep(Subset K, Subset J, int n) {
  Perm best = Perm::identity(n);
  for (const Perm& w : min_coset_reps(K, Subset(), J, n))
    if (w.length() > best.length()) best = w;
  return best;
}

inline HeckeElt qmerge_comp(const std::vector<int>& sup,
                            const std::vector<int>& sub, const Field& F) {
  int n = comp_size(sup);
  return qmerge_elt(comp_subset(sup), comp_subset(sub), n, F);
}

inline HeckeElt qmerge_bar_comp(const std::vector<int>& sup,
                                const std::vector<int>& sub, const Field& F) {
  int n = comp_size(sup);
  Subset K = comp_subset(sup), J = comp_subset(sub);
  return qmerge_elt(K, J, n, F) -
         perm_elt(longest_coset_rep(K, J, n), F).sharp();
}

/* right hand side of the two-block reduction: the truncated merge of
 * shape (a, b) rebuilt from strictly smaller merges */
inline HeckeElt qmerge_bar_rhs(int a, int b, const Field& F) {
  int n = a + b;
  HeckeElt A = qmerge_comp({1, n - 1}, {1, a, b - 1}, F);
  HeckeElt Ab = qmerge_bar_comp({1, n - 1}, {1, a, b - 1}, F);
  HeckeElt B = qmerge_comp({a + 1, b - 1}, {a, 1, b - 1}, F);
  HeckeElt Bb = qmerge_bar_comp({a + 1, b - 1}, {a, 1, b - 1}, F);
  HeckeElt C = qmerge_comp({1, n - 1}, {1, a - 1, b}, F);
  HeckeElt Dd = qmerge_comp({a, b}, {a, 1, b - 1}, F);
  return A * Bb + Ab * B - Ab * Bb - C * Dd + C;
}

}  // namespace qschur
