#pragma once
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qschur/laurent.hpp"

namespace qschur {

/* Power series in local coordinates x_1..x_n truncated at total degree N:
 * only monomials of total degree < N are stored.  Coefficients live in a
 * prime field. */
struct TruncSeries {
  int n = 0;
  int N = 0;
  std::map<std::vector<int>, Fp> t;

  TruncSeries() = default;
  TruncSeries(int nvars, int cutoff) : n(nvars), N(cutoff) {}

  static TruncSeries constant(int n, int N, Fp c) {
    TruncSeries s(n, N);
    if (!c.is_zero() && N > 0) s.t.emplace(std::vector<int>(n, 0), c);
    return s;
  }
  static TruncSeries var(int n, int N, int i, Fp c) {
    TruncSeries s(n, N);
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    if (!c.is_zero() && N > 1) s.t.emplace(std::move(e), c);
    return s;
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const TruncSeries& o) const {
    return n == o.n && N == o.N && t == o.t;
  }
  static int degree(const std::vector<int>& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  Fp constant_term(Fp zero) const {
    auto it = t.find(std::vector<int>(n, 0));
    return it == t.end() ? zero : it->second;
  }

  void add_term(const std::vector<int>& e, Fp c) {
    if (degree(e) >= N || c.is_zero()) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (auto& [e, c] : o.t) add_term(e, c);
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (auto& [e, c] : o.t) add_term(e, -c);
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  TruncSeries operator-() const {
    TruncSeries s(n, N);
    for (auto& [e, c] : t) s.t.emplace(e, -c);
    return s;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries s(a.n, a.N);
    std::vector<int> e(a.n);
    for (auto& [ea, ca] : a.t) {
      int da = degree(ea);
      for (auto& [eb, cb] : b.t) {
        if (da + degree(eb) >= a.N) continue;
        for (int i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
        s.add_term(e, ca * cb);
      }
    }
    return s;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
  TruncSeries scaled(Fp c) const {
    TruncSeries s(n, N);
    if (c.is_zero()) return s;
    for (auto& [e, k] : t) s.t.emplace(e, k * c);
    return s;
  }

  /* inverse of a unit: s = c(1 - r) gives s^{-1} = c^{-1} (1 + r + ... ) */
  TruncSeries inverted() const {
    if (t.empty()) fail("TruncSeries: inverting zero");
    Fp c = constant_term(t.begin()->second.of(0));
    if (c.is_zero()) fail("TruncSeries: inverting a non-unit");
    Fp ci = c.inv();
    TruncSeries r = constant(n, N, c.of(1)) - scaled(ci);  // zero constant term
    TruncSeries acc = constant(n, N, ci);
    TruncSeries pw = constant(n, N, c.of(1));
    for (int k = 1; k < N; ++k) {
      pw = pw * r;
      if (pw.is_zero()) break;
      acc += pw.scaled(ci);
    }
    return acc;
  }

  /* substitute x_i -> g_i; every g_i must have zero constant term so the
   * truncation is well defined */
  TruncSeries subst(const std::vector<TruncSeries>& g) const {
    if (static_cast<int>(g.size()) != n) fail("TruncSeries: bad substitution");
    Fp zero{};
    TruncSeries out(g.empty() ? n : g[0].n, N);
    for (auto& gi : g) {
      if (gi.N != N) fail("TruncSeries: substitution cutoff mismatch");
      if (!gi.constant_term(zero).is_zero())
        fail("TruncSeries: substitution needs zero constant term");
    }
    for (auto& [e, c] : t) {
      TruncSeries m = constant(out.n, N, c);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < e[i]; ++k) m = m * g[i];
      out += m;
    }
    return out;
  }

private:
  void check(const TruncSeries& o) const {
    if (n != o.n || N != o.N) fail("TruncSeries: incompatible operands");
  }
};

/* Expansion of a Laurent polynomial in the chart X_j = q^{u_j}(1 - x_j),
 * i.e. x_j = 1 - q^{-u_j} X_j. */
inline TruncSeries series_from_laurent(const LaurentPoly<Fp>& f,
                                       const std::vector<int>& u, Fp q,
                                       int N) {
  TruncSeries out(f.n, N);
  Fp one = q.of(1);
  for (auto& [e, c] : f.t) {
    TruncSeries m = TruncSeries::constant(f.n, N, c);
    for (int i = 0; i < f.n; ++i) {
      if (e[i] == 0) continue;
      // X_i^{e_i} = q^{u_i e_i} (1 - x_i)^{e_i}
      TruncSeries base =
          TruncSeries::constant(f.n, N, one) - TruncSeries::var(f.n, N, i + 1, one);
      if (e[i] < 0) base = base.inverted();
      int k = e[i] > 0 ? e[i] : -e[i];
      for (int s = 0; s < k; ++s) m = m * base;
      long long sc = static_cast<long long>(u[i]) * e[i];
      m = m.scaled(q.pow(sc));
    }
    out += m;
  }
  return out;
}

/* (f - s_i f)/(x_i - x_{i+1}), computed termwise; the quotient of each
 * monomial is a geometric block, so no actual division is needed */
inline TruncSeries demazure(int i, const TruncSeries& f) {
  TruncSeries out(f.n, f.N);
  for (auto& [e, c] : f.t) {
    int a = e[i - 1], b = e[i];
    if (a == b) continue;
    std::vector<int> m = e;
    if (a > b) {
      for (int k = b; k < a; ++k) {
        m[i - 1] = k;
        m[i] = a + b - 1 - k;
        out.add_term(m, c);
      }
    } else {
      for (int k = a; k < b; ++k) {
        m[i - 1] = k;
        m[i] = a + b - 1 - k;
        out.add_term(m, -c);
      }
    }
  }
  return out;
}

inline std::string series_str(const TruncSeries& s) {
  LaurentPoly<Fp> p(s.n);
  p.t = s.t;
  return poly_str(p, "x") + "+O(deg " + std::to_string(s.N) + ")";
}

inline TruncSeries series_parse(const std::string& str, int n, Fp ctx) {
  auto pos = str.rfind("+O(deg ");
  if (pos == std::string::npos || str.back() != ')')
    fail("series_parse: missing truncation marker");
  int N = std::stoi(str.substr(pos + 7, str.size() - pos - 8));
  LaurentPoly<Fp> p = poly_parse(str.substr(0, pos), n, ctx, "x");
  TruncSeries s(n, N);
  for (auto& [e, c] : p.t) s.add_term(e, c);
  return s;
}

}  // namespace qschur
