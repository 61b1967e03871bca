#pragma once

// Brute-force reference computations over raw Cayley tables. Nothing here
// calls into the library beyond copying a ring's tables out, so these serve
// as independent checks of the cached structural sets and classifiers.

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "ringlab/ring.hpp"

namespace oracle {

using Elem = std::uint32_t;

struct Tables {
  std::size_t n = 0;
  std::vector<Elem> add, mul;

  Elem a(Elem x, Elem y) const { return add[x * n + y]; }
  Elem m(Elem x, Elem y) const { return mul[x * n + y]; }
};

inline Tables copy(const ringlab::FiniteRing& r) {
  return {r.order(), r.tables().add, r.tables().mul};
}

// Full O(n^3) axiom scan. Returns false on the first violated law.
inline bool is_ring(const Tables& t) {
  const auto n = t.n;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (t.a(x, y) >= n || t.m(x, y) >= n || t.a(x, y) != t.a(y, x)) return false;
  std::optional<Elem> zero, one;
  for (Elem z = 0; z < n && !zero; ++z) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = t.a(z, x) == x;
    if (ok) zero = z;
  }
  for (Elem e = 0; e < n && !one; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = t.m(e, x) == x && t.m(x, e) == x;
    if (ok) one = e;
  }
  if (!zero || !one) return false;
  for (Elem x = 0; x < n; ++x) {
    bool has_neg = false;
    for (Elem y = 0; y < n && !has_neg; ++y) has_neg = t.a(x, y) == *zero;
    if (!has_neg) return false;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (t.a(t.a(x, y), z) != t.a(x, t.a(y, z))) return false;
        if (t.m(t.m(x, y), z) != t.m(x, t.m(y, z))) return false;
        if (t.m(x, t.a(y, z)) != t.a(t.m(x, y), t.m(x, z))) return false;
        if (t.m(t.a(x, y), z) != t.a(t.m(x, z), t.m(y, z))) return false;
      }
  return true;
}

inline Elem zero(const Tables& t) {
  for (Elem z = 0;; ++z) {
    bool ok = true;
    for (Elem x = 0; x < t.n && ok; ++x) ok = t.a(z, x) == x;
    if (ok) return z;
  }
}

inline Elem one(const Tables& t) {
  for (Elem e = 0;; ++e) {
    bool ok = true;
    for (Elem x = 0; x < t.n && ok; ++x) ok = t.m(e, x) == x && t.m(x, e) == x;
    if (ok) return e;
  }
}

inline Elem neg(const Tables& t, Elem x) {
  const Elem z = zero(t);
  for (Elem y = 0;; ++y)
    if (t.a(x, y) == z) return y;
}

// Membership vector of units, by searching each row for a two-sided inverse.
inline std::vector<bool> units(const Tables& t) {
  const Elem e = one(t);
  std::vector<bool> u(t.n, false);
  for (Elem x = 0; x < t.n; ++x)
    for (Elem y = 0; y < t.n && !u[x]; ++y) u[x] = t.m(x, y) == e && t.m(y, x) == e;
  return u;
}

inline std::vector<Elem> members(const std::vector<bool>& v) {
  std::vector<Elem> out;
  for (Elem x = 0; x < v.size(); ++x)
    if (v[x]) out.push_back(x);
  return out;
}

inline std::vector<Elem> delta(const Tables& t) {
  const auto u = units(t);
  const auto us = members(u);
  std::vector<bool> d(t.n, true);
  for (Elem r = 0; r < t.n; ++r)
    for (Elem v : us)
      if (!u[t.a(r, v)]) {
        d[r] = false;
        break;
      }
  return members(d);
}

// Right-handed form: r is in J iff 1 - r x is a unit for every x.
inline std::vector<Elem> jacobson(const Tables& t) {
  const auto u = units(t);
  const Elem e = one(t);
  std::vector<bool> j(t.n, true);
  for (Elem r = 0; r < t.n; ++r)
    for (Elem x = 0; x < t.n && j[r]; ++x) j[r] = u[t.a(e, neg(t, t.m(r, x)))];
  return members(j);
}

inline std::vector<Elem> idempotents(const Tables& t) {
  std::vector<bool> v(t.n);
  for (Elem x = 0; x < t.n; ++x) v[x] = t.m(x, x) == x;
  return members(v);
}

// x^n = 0 for n = |R| catches every nilpotent.
inline std::vector<Elem> nilpotents(const Tables& t) {
  const Elem z = zero(t);
  std::vector<bool> v(t.n);
  for (Elem x = 0; x < t.n; ++x) {
    Elem p = x;
    for (std::size_t k = 1; k < t.n; ++k) p = t.m(p, x);
    v[x] = p == z;
  }
  return members(v);
}

inline std::vector<Elem> center(const Tables& t) {
  std::vector<bool> v(t.n, true);
  for (Elem x = 0; x < t.n; ++x)
    for (Elem y = 0; y < t.n && v[x]; ++y) v[x] = t.m(x, y) == t.m(y, x);
  return members(v);
}

// Every unit is 1 + d or -1 + d with d in the given set.
inline bool units_are_pm1_plus(const Tables& t, const std::vector<Elem>& d, bool allow_minus) {
  const auto u = units(t);
  const Elem e = one(t);
  const Elem me = neg(t, e);
  const std::set<Elem> ds(d.begin(), d.end());
  for (Elem x = 0; x < t.n; ++x) {
    if (!u[x]) continue;
    bool ok = ds.count(t.a(x, me)) > 0;  // x - 1
    if (!ok && allow_minus) ok = ds.count(t.a(x, e)) > 0;  // x + 1
    if (!ok) return false;
  }
  return true;
}

inline bool is_wdu(const Tables& t) { return units_are_pm1_plus(t, delta(t), true); }
inline bool is_du(const Tables& t) { return units_are_pm1_plus(t, delta(t), false); }

// Elements of Zn in the radical: multiples of the product of distinct primes of n.
inline std::vector<Elem> zn_radical(std::size_t n) {
  std::size_t rad = 1, m = n;
  for (std::size_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      rad *= p;
      while (m % p == 0) m /= p;
    }
  if (m > 1) rad *= m;
  std::vector<Elem> out;
  for (std::size_t x = 0; x < n; x += rad) out.push_back(static_cast<Elem>(x));
  return out;
}

inline std::size_t zn_unit_count(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < n; ++x) c += std::gcd(x, n) == 1;
  return n == 1 ? 1 : c;
}

// |GL_k(F_p)| = prod_{i<k} (p^k - p^i).
inline std::size_t gl_order(std::size_t k, std::size_t q) {
  std::size_t qk = 1;
  for (std::size_t i = 0; i < k; ++i) qk *= q;
  std::size_t out = 1, qi = 1;
  for (std::size_t i = 0; i < k; ++i, qi *= q) out *= qk - qi;
  return out;
}

}  // namespace oracle
