#pragma once
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qschur/subsets.hpp"

namespace qschur {

/* Sparse Laurent polynomial in X_1..X_n over a coefficient type C (a field
 * value type carrying its own context, see Fp and Rat).  No zero
 * coefficients are ever stored. */
template <class C>
struct LaurentPoly {
  int n = 0;
  std::map<std::vector<int>, C> t;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : n(nvars) {}

  static LaurentPoly constant(int n, C c) {
    LaurentPoly f(n);
    if (!c.is_zero()) f.t.emplace(std::vector<int>(n, 0), c);
    return f;
  }
  static LaurentPoly monomial(std::vector<int> e, C c) {
    LaurentPoly f(static_cast<int>(e.size()));
    if (!c.is_zero()) f.t.emplace(std::move(e), c);
    return f;
  }
  /* c * X_i^k */
  static LaurentPoly var(int n, int i, C c, int k = 1) {
    std::vector<int> e(n, 0);
    e[i - 1] = k;
    return monomial(std::move(e), c);
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const LaurentPoly& o) const { return n == o.n && t == o.t; }

  void add_term(const std::vector<int>& e, C c) {
    auto it = t.find(e);
    if (it == t.end()) {
      if (!c.is_zero()) t.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.t) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.t) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly f(n);
    for (auto& [e, c] : t) f.t.emplace(e, -c);
    return f;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly f(a.n);
    std::vector<int> e(a.n);
    for (auto& [ea, ca] : a.t)
      for (auto& [eb, cb] : b.t) {
        for (int i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
        f.add_term(e, ca * cb);
      }
    return f;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(C c) const {
    LaurentPoly f(n);
    if (c.is_zero()) return f;
    for (auto& [e, k] : t) f.t.emplace(e, k * c);
    return f;
  }
  /* multiply by c * X_j^k */
  LaurentPoly shifted(int j, int k, C c) const {
    LaurentPoly f(n);
    if (c.is_zero()) return f;
    for (auto& [e, coef] : t) {
      std::vector<int> e2 = e;
      e2[j - 1] += k;
      f.t.emplace(std::move(e2), coef * c);
    }
    return f;
  }

  C eval(const std::vector<C>& x) const {
    C r = x.at(0).of(0);
    for (auto& [e, c] : t) {
      C m = c;
      for (int i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        C b = e[i] > 0 ? x[i] : x[i].inv();
        int k = e[i] > 0 ? e[i] : -e[i];
        for (int s = 0; s < k; ++s) m *= b;
      }
      r += m;
    }
    return r;
  }

  int total_degree_max() const {
    int d = 0;
    bool first = true;
    for (auto& [e, c] : t) {
      int s = 0;
      for (int x : e) s += x;
      if (first || s > d) d = s;
      first = false;
    }
    return d;
  }
};

/* X_i -> X_{w(i)} */
template <class C>
LaurentPoly<C> act_perm(const Perm& w, const LaurentPoly<C>& f) {
  LaurentPoly<C> g(f.n);
  for (auto& [e, c] : f.t) g.t.emplace(perm_vec(w, e), c);
  return g;
}

/* Divided difference (f - s_i f)/(X_i - X_{i+1}), computed termwise:
 * for a monomial with exponents (a, b) in (X_i, X_{i+1}),
 *   a = b: 0
 *   a > b: sum_{k=b}^{a-1} X_i^k X_{i+1}^{a+b-1-k}
 *   a < b: minus the analogous sum.
 * Exact for Laurent exponents, no division needed. */
template <class C>
LaurentPoly<C> demazure(int i, const LaurentPoly<C>& f) {
  LaurentPoly<C> g(f.n);
  std::vector<int> e2;
  for (auto& [e, c] : f.t) {
    int a = e[i - 1], b = e[i];
    if (a == b) continue;
    e2 = e;
    if (a > b) {
      for (int k = b; k <= a - 1; ++k) {
        e2[i - 1] = k;
        e2[i] = a + b - 1 - k;
        g.add_term(e2, c);
      }
    } else {
      for (int k = a; k <= b - 1; ++k) {
        e2[i - 1] = k;
        e2[i] = a + b - 1 - k;
        g.add_term(e2, -c);
      }
    }
  }
  return g;
}

template <class C>
LaurentPoly<C> demazure_word(const Perm& w, LaurentPoly<C> f) {
  std::vector<int> word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure(*it, f);
  return f;
}

/* Exact division by the linear form (X_i - c X_j); nullopt if not divisible. */
template <class C>
std::optional<LaurentPoly<C>> divide_linear(const LaurentPoly<C>& f, int i,
                                            int j, C c) {
  if (f.is_zero()) return LaurentPoly<C>(f.n);
  // split f by the exponent of X_i
  std::map<int, LaurentPoly<C>> layer;
  for (auto& [e, coef] : f.t) {
    int k = e[i - 1];
    auto it = layer.find(k);
    if (it == layer.end()) it = layer.emplace(k, LaurentPoly<C>(f.n)).first;
    std::vector<int> e2 = e;
    e2[i - 1] = 0;
    it->second.t.emplace(std::move(e2), coef);
  }
  int lo = layer.begin()->first, hi = layer.rbegin()->first;
  if (lo == hi) return std::nullopt;  // single layer cannot be divisible
  auto at = [&](int k) -> LaurentPoly<C> {
    auto it = layer.find(k);
    return it == layer.end() ? LaurentPoly<C>(f.n) : it->second;
  };
  LaurentPoly<C> g(f.n);
  LaurentPoly<C> carry = at(hi);  // g_{hi-1}
  for (int k = hi; k > lo; --k) {
    g += carry.shifted(i, k - 1, c.of(1));
    carry = at(k - 1) + carry.shifted(j, 1, c);  // g_{k-2} = A_{k-1} + c X_j g_{k-1}
  }
  // remainder: A_lo must equal -c X_j g_lo, i.e. carry must now be zero
  if (!carry.is_zero()) return std::nullopt;
  return g;
}

/* Vandermonde product of (X_i - X_j) over i < j */
template <class C>
LaurentPoly<C> vandermonde(int n, C one) {
  LaurentPoly<C> f = LaurentPoly<C>::constant(n, one);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      f *= LaurentPoly<C>::var(n, i, one) - LaurentPoly<C>::var(n, j, one);
  return f;
}

/* text form: terms `c*X1^a1*...*Xn^an` joined by `+`, ordered by total
 * degree then lexicographically */
inline std::string coeff_str(const Fp& c) { return std::to_string(c.v); }
inline std::string coeff_str(const Rat& c) {
  if (c.de == 1) return std::to_string(c.nu);
  return std::to_string(c.nu) + "/" + std::to_string(c.de);
}
inline Fp coeff_parse(const std::string& s, const Fp& ctx) {
  return ctx.of(std::stoll(s));
}
inline Rat coeff_parse(const std::string& s, const Rat&) {
  auto p = s.find('/');
  if (p == std::string::npos) return Rat(std::stoll(s), 1);
  return Rat(std::stoll(s.substr(0, p)), std::stoll(s.substr(p + 1)));
}

template <class C>
std::string poly_str(const LaurentPoly<C>& f, const std::string& base = "X") {
  if (f.is_zero()) return "0";
  std::vector<std::pair<std::pair<int, std::vector<int>>, C>> terms;
  for (auto& [e, c] : f.t) {
    int d = 0;
    for (int x : e) d += x;
    terms.push_back({{d, e}, c});
  }
  std::sort(terms.begin(), terms.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  std::string out;
  for (auto& [key, c] : terms) {
    if (!out.empty()) out += "+";
    out += coeff_str(c);
    for (int i = 0; i < f.n; ++i)
      out += "*" + base + std::to_string(i + 1) + "^" + std::to_string(key.second[i]);
  }
  return out;
}

template <class C>
LaurentPoly<C> poly_parse(const std::string& s, int n, const C& ctx,
                          const std::string& base = "X") {
  LaurentPoly<C> f(n);
  if (s == "0") return f;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    std::stringstream ts(term);
    std::string piece;
    std::getline(ts, piece, '*');
    C c = coeff_parse(piece, ctx);
    std::vector<int> e(n, 0);
    while (std::getline(ts, piece, '*')) {
      auto caret = piece.find('^');
      if (caret == std::string::npos || piece.substr(0, base.size()) != base)
        fail("poly_parse: bad factor " + piece);
      int idx = std::stoi(piece.substr(base.size(), caret - base.size()));
      if (idx < 1 || idx > n) fail("poly_parse: variable index out of range");
      e[idx - 1] = std::stoi(piece.substr(caret + 1));
    }
    f.add_term(e, c);
  }
  return f;
}

}  // namespace qschur
