#pragma once
#include <string>
#include <vector>

#include "qschur/fp.hpp"
#include "qschur/laurent.hpp"
#include "qschur/subsets.hpp"

namespace qschur {

/* Element of the affine Hecke algebra, kept in the normal form
 * sum_w f_w T_w with Laurent polynomial coefficients f_w on the left.
 * All rewriting goes through the commutation rule
 *   T_i g = s_i(g) T_i - (q-1) X_{i+1} D_i(g)
 * (D_i the divided difference), which is exact for Laurent g. */
struct HeckeElt {
  int n = 0;
  Field F;
  std::map<Perm, LaurentPoly<Fp>> t;

  HeckeElt() = default;
  HeckeElt(int nvars, const Field& fld) : n(nvars), F(fld) {}

  static HeckeElt unit(int n, const Field& F) {
    return from_poly(LaurentPoly<Fp>::constant(n, F.one()), F);
  }
  static HeckeElt from_poly(LaurentPoly<Fp> f, const Field& F) {
    HeckeElt h(f.n, F);
    if (!f.is_zero()) h.t.emplace(Perm::identity(h.n), std::move(f));
    return h;
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const HeckeElt& o) const { return n == o.n && t == o.t; }

  void add(const Perm& w, const LaurentPoly<Fp>& f) {
    if (f.is_zero()) return;
    auto it = t.find(w);
    if (it == t.end()) {
      t.emplace(w, f);
      return;
    }
    it->second += f;
    if (it->second.is_zero()) t.erase(it);
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    for (auto& [w, f] : o.t) add(w, f);
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) {
    for (auto& [w, f] : b.t) a.add(w, -f);
    return a;
  }
  HeckeElt scaled(Fp c) const {
    HeckeElt h(n, F);
    if (c.is_zero()) return h;
    for (auto& [w, f] : t) h.t.emplace(w, f.scaled(c));
    return h;
  }

  /* right multiplication by T_i */
  HeckeElt rmul_T(int i) const {
    HeckeElt h(n, F);
    Perm si = Perm::s(i, n);
    Fp q = F.q;
    for (auto& [w, f] : t) {
      Perm ws = w * si;
      if (ws.length() > w.length()) {
        h.add(ws, f);
      } else {
        h.add(w, f.scaled(q - F.one()));
        h.add(ws, f.scaled(q));
      }
    }
    return h;
  }
  /* right multiplication by T_i^{-1} = q^{-1} T_i + (q^{-1}-1) */
  HeckeElt rmul_Tinv(int i) const {
    Fp qi = F.q.inv();
    HeckeElt h = rmul_T(i).scaled(qi);
    return h + scaled(qi - F.one());
  }

  /* normal form of T_w g for a Laurent polynomial g */
  static HeckeElt t_times_poly(const Perm& w, const LaurentPoly<Fp>& g,
                               const Field& F) {
    if (g.is_zero()) return HeckeElt(g.n, F);
    if (w.length() == 0) return from_poly(g, F);
    std::vector<int> word = w.reduced_word();
    int i = word.back();
    Perm wp = w * Perm::s(i, g.n);
    HeckeElt a = t_times_poly(wp, act_perm(Perm::s(i, g.n), g), F).rmul_T(i);
    HeckeElt b =
        t_times_poly(wp, demazure(i, g).shifted(i + 1, 1, F.one()), F);
    return a - b.scaled(F.q - F.one());
  }

  HeckeElt rmul_poly(const LaurentPoly<Fp>& g) const {
    HeckeElt h(n, F);
    for (auto& [w, f] : t) {
      HeckeElt piece = t_times_poly(w, g, F);
      for (auto& [v, p] : piece.t) h.add(v, f * p);
    }
    return h;
  }
  HeckeElt rmul_X(int j, int k) const {
    return rmul_poly(LaurentPoly<Fp>::var(n, j, F.one(), k));
  }

  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
    HeckeElt h(a.n, a.F);
    for (auto& [v, g] : b.t) {
      HeckeElt piece = a.rmul_poly(g);
      for (int i : v.reduced_word()) piece = piece.rmul_T(i);
      h += piece;
    }
    return h;
  }

  /* the algebra automorphism T_i -> q-1-T_i, X_j -> X_j^{-1} */
  HeckeElt sharp() const {
    HeckeElt out(n, F);
    Fp qm1 = F.q - F.one();
    for (auto& [w, f] : t) {
      LaurentPoly<Fp> fs(n);
      for (auto& [e, c] : f.t) {
        std::vector<int> e2(n);
        for (int k = 0; k < n; ++k) e2[k] = -e[k];
        fs.add_term(e2, c);
      }
      HeckeElt piece = from_poly(fs, F);
      for (int i : w.reduced_word()) piece = piece.scaled(qm1) - piece.rmul_T(i);
      out += piece;
    }
    return out;
  }
};

/* v_J (trivial type) and v-bar_J (sign type) */
inline HeckeElt parahoric_triv(Subset J, int n, const Field& F) {
  HeckeElt h(n, F);
  for (const Perm& w : parabolic_elems(J, n))
    h.add(w, LaurentPoly<Fp>::constant(n, F.one()));
  return h;
}
inline HeckeElt parahoric_sign(Subset J, int n, const Field& F) {
  HeckeElt h(n, F);
  for (const Perm& w : parabolic_elems(J, n))
    h.add(w, LaurentPoly<Fp>::constant(n, (-F.q).pow(-w.length())));
  return h;
}

/* The two faithful representations on Laurent polynomials.
 * Sign type, module P v-bar:    T_i(f) = -(q X_{i+1} - X_i) D_i(f) - f.
 * Trivial type, module P v:     T_i(f) = q f - (q X_i - X_{i+1}) D_i(f). */
inline LaurentPoly<Fp> act_T_sign(int i, const LaurentPoly<Fp>& f,
                                  const Field& F) {
  LaurentPoly<Fp> d = demazure(i, f);
  return -(d.shifted(i + 1, 1, F.q) - d.shifted(i, 1, F.one())) - f;
}
inline LaurentPoly<Fp> act_T_triv(int i, const LaurentPoly<Fp>& f,
                                  const Field& F) {
  LaurentPoly<Fp> d = demazure(i, f);
  return f.scaled(F.q) - (d.shifted(i, 1, F.q) - d.shifted(i + 1, 1, F.one()));
}

template <class Act>
LaurentPoly<Fp> apply_hecke(const HeckeElt& h, const LaurentPoly<Fp>& g,
                            Act actT) {
  LaurentPoly<Fp> out(g.n);
  for (auto& [w, f] : h.t) {
    LaurentPoly<Fp> m = g;
    std::vector<int> word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = actT(*it, m);
    out += f * m;
  }
  return out;
}
inline LaurentPoly<Fp> apply_sign(const HeckeElt& h, const LaurentPoly<Fp>& g) {
  return apply_hecke(h, g, [&](int i, const LaurentPoly<Fp>& f) {
    return act_T_sign(i, f, h.F);
  });
}
inline LaurentPoly<Fp> apply_triv(const HeckeElt& h, const LaurentPoly<Fp>& g) {
  return apply_hecke(h, g, [&](int i, const LaurentPoly<Fp>& f) {
    return act_T_triv(i, f, h.F);
  });
}

/* Formal words in the generators.  Kinds: 'T' with power +-1, 'X' with any
 * nonzero power, 'e' with a residue sequence, 'P' for an intertwiner Phi_r. */
struct HGen {
  char kind = 'T';
  int i = 0;
  int k = 1;
  std::vector<int> u;
  bool operator==(const HGen&) const = default;
};
struct HeckeWord {
  int n = 0;
  std::vector<HGen> g;
  bool operator==(const HeckeWord&) const = default;
};

inline std::string word_str(const HeckeWord& w) {
  if (w.g.empty()) return "1";
  std::string out;
  for (const HGen& g : w.g) {
    if (!out.empty()) out += "*";
    switch (g.kind) {
      case 'T':
        out += "T" + std::to_string(g.i);
        if (g.k != 1) out += "^-1";
        break;
      case 'X':
        out += "X" + std::to_string(g.i);
        if (g.k != 1) out += "^" + std::to_string(g.k);
        break;
      case 'e': {
        out += "e(";
        for (size_t a = 0; a < g.u.size(); ++a)
          out += (a ? "," : "") + std::to_string(g.u[a]);
        out += ")";
        break;
      }
      case 'P':
        out += "Phi" + std::to_string(g.i);
        break;
    }
  }
  return out;
}

inline HeckeWord word_parse(const std::string& s, int n) {
  HeckeWord w;
  w.n = n;
  if (s == "1") return w;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, '*')) {
    HGen g;
    if (piece.rfind("Phi", 0) == 0) {
      g.kind = 'P';
      g.i = std::stoi(piece.substr(3));
      if (g.i < 1 || g.i > n - 1) fail("word_parse: Phi index out of range");
    } else if (piece.rfind("e(", 0) == 0) {
      if (piece.back() != ')') fail("word_parse: unclosed idempotent");
      g.kind = 'e';
      std::stringstream es(piece.substr(2, piece.size() - 3));
      std::string num;
      while (std::getline(es, num, ',')) g.u.push_back(std::stoi(num));
      if (static_cast<int>(g.u.size()) != n)
        fail("word_parse: idempotent length mismatch");
    } else if (piece[0] == 'T' || piece[0] == 'X') {
      g.kind = piece[0];
      auto caret = piece.find('^');
      g.i = std::stoi(piece.substr(1, caret == std::string::npos
                                          ? std::string::npos
                                          : caret - 1));
      g.k = caret == std::string::npos ? 1 : std::stoi(piece.substr(caret + 1));
      if (g.kind == 'T' && (g.k != 1 && g.k != -1))
        fail("word_parse: T powers must be +-1");
      int hi = g.kind == 'T' ? n - 1 : n;
      if (g.i < 1 || g.i > hi) fail("word_parse: index out of range");
      if (g.k == 0) fail("word_parse: zero power");
    } else {
      fail("word_parse: bad factor " + piece);
    }
    w.g.push_back(g);
  }
  return w;
}

/* Evaluate a word without completed-level generators to its normal form. */
inline HeckeElt word_elt(const HeckeWord& w, const Field& F) {
  HeckeElt h = HeckeElt::unit(w.n, F);
  for (const HGen& g : w.g) {
    switch (g.kind) {
      case 'T': h = g.k == 1 ? h.rmul_T(g.i) : h.rmul_Tinv(g.i); break;
      case 'X': h = h.rmul_X(g.i, g.k); break;
      default: fail("word_elt: completed generator in an uncompleted word");
    }
  }
  return h;
}

/* The word image under sharp: T -> -q T^{-1}, X -> X^{-1}, e_u -> e_{-u};
 * the scalar picked up from the T factors is returned separately. */
inline std::pair<Fp, HeckeWord> word_sharp(const HeckeWord& w, const Field& F) {
  Fp c = F.one();
  HeckeWord out;
  out.n = w.n;
  for (HGen g : w.g) {
    switch (g.kind) {
      case 'T':
        c *= g.k == 1 ? -F.q : (-F.q).inv();
        g.k = -g.k;
        break;
      case 'X': g.k = -g.k; break;
      case 'e': {
        for (int& x : g.u) {
          int r = (-x) % F.e;
          if (r <= 0) r += F.e;
          x = r;
        }
        break;
      }
      default: fail("word_sharp: no image defined for Phi factors");
    }
    out.g.push_back(g);
  }
  return {c, out};
}

}  // namespace qschur
