#pragma once
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qschur {

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

/* Element of the prime field F_ell.  Each value carries its modulus so that
 * elements of different fields cannot be combined by accident. */
struct Fp {
  uint32_t v = 0;
  uint32_t m = 0;

  Fp() = default;
  Fp(long long x, uint32_t mod) : m(mod) {
    long long r = x % static_cast<long long>(mod);
    if (r < 0) r += mod;
    v = static_cast<uint32_t>(r);
  }

  bool is_zero() const { return v == 0; }

  Fp of(long long x) const { return Fp(x, m); }

  friend Fp operator+(Fp a, Fp b) {
    a.check(b);
    uint32_t s = a.v + b.v;
    if (s >= a.m) s -= a.m;
    return Fp{s, a.m};
  }
  friend Fp operator-(Fp a, Fp b) {
    a.check(b);
    uint32_t s = a.v + a.m - b.v;
    if (s >= a.m) s -= a.m;
    return Fp{s, a.m};
  }
  friend Fp operator*(Fp a, Fp b) {
    a.check(b);
    return Fp{static_cast<uint32_t>(
                  (static_cast<uint64_t>(a.v) * b.v) % a.m),
              a.m};
  }
  Fp operator-() const { return Fp{v == 0 ? 0 : m - v, m}; }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }

  Fp pow(long long k) const {
    if (k < 0) return inv().pow(-k);
    Fp r{1 % m, m}, b = *this;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }
  Fp inv() const {
    if (v == 0) fail("Fp: division by zero");
    return pow(static_cast<long long>(m) - 2);
  }

  bool operator==(const Fp& o) const = default;
  auto operator<=>(const Fp& o) const = default;

private:
  void check(const Fp& o) const {
    if (m != o.m) fail("Fp: mixed moduli");
  }
};

/* Exact rational numbers on 64-bit words, used only where characteristic
 * zero is genuinely required.  Overflow is detected, not ignored. */
struct Rat {
  long long nu = 0;
  long long de = 1;

  Rat() = default;
  Rat(long long n) : nu(n), de(1) {}
  Rat(long long n, long long d) : nu(n), de(d) { reduce(); }

  bool is_zero() const { return nu == 0; }
  Rat of(long long x) const { return Rat(x); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat::make(i128(a.nu) * b.de + i128(b.nu) * a.de,
                     i128(a.de) * b.de);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat::make(i128(a.nu) * b.de - i128(b.nu) * a.de,
                     i128(a.de) * b.de);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat::make(i128(a.nu) * b.nu, i128(a.de) * b.de);
  }
  Rat operator-() const { return Rat(-nu, de); }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }

  Rat inv() const {
    if (nu == 0) fail("Rat: division by zero");
    return Rat(de, nu);
  }

  bool operator==(const Rat& o) const = default;
  auto operator<=>(const Rat& o) const = default;

private:
  using i128 = __int128;
  static Rat make(i128 n, i128 d) {
    if (d == 0) fail("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      fail("Rat: overflow");
    Rat r;
    r.nu = static_cast<long long>(n);
    r.de = static_cast<long long>(d);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void reduce() { *this = make(nu, de); }
};

/* The coefficient field together with the distinguished unit q and its
 * multiplicative order e. */
struct Field {
  uint32_t ell = 0;
  Fp q;
  int e = 0;

  Fp of(long long x) const { return Fp(x, ell); }
  Fp one() const { return of(1); }
  Fp zero() const { return of(0); }
  Fp qpow(long long k) const { return q.pow(k); }
};

inline bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline Field make_field(uint32_t ell, long long q_int) {
  if (!is_prime(ell)) fail("make_field: ell must be prime");
  Fp q(q_int, ell);
  if (q.is_zero()) fail("make_field: q divisible by ell");
  if (q == Fp(1, ell)) fail("make_field: q = 1 mod ell is excluded");
  int e = 1;
  Fp p = q;
  while (!(p == Fp(1, ell))) {
    p *= q;
    ++e;
    if (e > static_cast<int>(ell)) fail("make_field: order computation failed");
  }
  return Field{ell, q, e};
}

}  // namespace qschur
