#include "ringlab/constructors.hpp"

#include <algorithm>
#include <atomic>
#include <map>

namespace ringlab {

namespace {

std::atomic<std::size_t> g_order_cap{kDefaultOrderCap};

// base^exp, raising OrderCap once the result would exceed the cap.
std::size_t capped_power(std::size_t base, std::size_t exp, const std::string& what) {
  const std::size_t cap = order_cap();
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) result = cap + 1;
    else result *= base;
    if (result > cap) break;
  }
  if (result > cap)
    throw Error(ErrorCode::order_cap, what + " would exceed the order cap of " + std::to_string(cap));
  return result;
}

std::size_t capped_product(std::size_t a, std::size_t b, const std::string& what) {
  const std::size_t cap = order_cap();
  if (a != 0 && b > cap / a)
    throw Error(ErrorCode::order_cap, what + " would exceed the order cap of " + std::to_string(cap));
  if (a * b > cap) throw Error(ErrorCode::order_cap, what + " would exceed the order cap of " + std::to_string(cap));
  return a * b;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::bad_params, msg);
}

// Elements of R^k as digit tuples, most significant first.
struct Digits {
  std::size_t base;
  std::size_t width;
  std::size_t count;
  std::vector<Elem> flat;  // count * width

  Digits(std::size_t b, std::size_t w, std::size_t n) : base(b), width(w), count(n), flat(n * w) {
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t v = x;
      for (std::size_t i = width; i-- > 0;) {
        flat[x * width + i] = static_cast<Elem>(v % base);
        v /= base;
      }
    }
  }
  const Elem* of(std::size_t x) const { return flat.data() + x * width; }
  Elem encode(const Elem* d) const {
    std::size_t v = 0;
    for (std::size_t i = 0; i < width; ++i) v = v * base + d[i];
    return static_cast<Elem>(v);
  }
};

std::string tuple_label(const FiniteRing& r, const Elem* d, std::size_t w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w; ++i) {
    if (i) s += ", ";
    s += r.label(d[i]);
  }
  return s + ")";
}

// Tables for a ring on R^width whose addition is componentwise; `mul_into`
// writes the product digits.
template <class MulFn, class LabelFn>
Ring tuple_ring(const FiniteRing& r, std::size_t width, std::string name, MulFn mul_into, LabelFn label_of) {
  const std::size_t n = capped_power(r.order(), width, name);
  Digits dg(r.order(), width, n);
  RingTables t;
  t.order = n;
  t.name = std::move(name);
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<Elem> out(width);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem* a = dg.of(x);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem* b = dg.of(y);
      for (std::size_t i = 0; i < width; ++i) out[i] = r.add(a[i], b[i]);
      t.add[x * n + y] = dg.encode(out.data());
      mul_into(a, b, out.data());
      t.mul[x * n + y] = dg.encode(out.data());
    }
  }
  t.labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x) t.labels.push_back(label_of(dg.of(x)));
  return FiniteRing::validate(std::move(t));
}

template <class MulFn>
Ring tuple_ring(const FiniteRing& r, std::size_t width, std::string name, MulFn mul_into) {
  return tuple_ring(r, width, std::move(name), mul_into,
                    [&](const Elem* d) { return tuple_label(r, d, width); });
}

}  // namespace

std::size_t order_cap() noexcept { return g_order_cap.load(); }
void set_order_cap(std::size_t cap) noexcept { g_order_cap.store(cap); }

Ring zmod(std::size_t n) {
  require(n >= 1, "Zn needs n >= 1");
  capped_power(n, 1, "Zn(" + std::to_string(n) + ")");
  RingTables t;
  t.order = n;
  t.name = "Zn(" + std::to_string(n) + ")";
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    t.labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Elem>((a + b) % n);
      t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  return FiniteRing::validate(std::move(t));
}

Ring galois_field(std::size_t q) {
  std::size_t p = 0, k = 0;
  std::vector<std::size_t> modulus;  // low-order coefficients of the monic irreducible
  switch (q) {
    case 2: case 3: case 5: case 7: p = q; k = 1; break;
    case 4: p = 2; k = 2; modulus = {1, 1}; break;     // x^2 = x + 1
    case 8: p = 2; k = 3; modulus = {1, 1, 0}; break;  // x^3 = x + 1
    case 9: p = 3; k = 2; modulus = {2, 0}; break;     // x^2 = -1
    default:
      throw Error(ErrorCode::unsupported_order, "GF(" + std::to_string(q) + ") is not supported");
  }
  const std::string name = "GF(" + std::to_string(q) + ")";
  if (k == 1) {
    auto z = zmod(q);
    RingTables t = z->tables();
    t.name = name;
    return FiniteRing::validate(std::move(t));
  }
  // Index sum c_i p^i; coefficient i is digit i from the right.
  auto coeffs = [&](std::size_t x) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i, x /= p) c[i] = x % p;
    return c;
  };
  auto index = [&](const std::vector<std::size_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = k; i-- > 0;) x = x * p + c[i];
    return static_cast<Elem>(x);
  };
  RingTables t;
  t.order = q;
  t.name = name;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::size_t x = 0; x < q; ++x) {
    auto a = coeffs(x);
    for (std::size_t y = 0; y < q; ++y) {
      auto b = coeffs(y);
      std::vector<std::size_t> s(k), prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i) s[i] = (a[i] + b[i]) % p;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
      // Reduce x^d for d >= k using x^k = sum modulus[i] x^i (mod p).
      for (std::size_t d = 2 * k - 1; d-- > k;) {
        const std::size_t c = prod[d];
        prod[d] = 0;
        for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + c * modulus[i]) % p;
      }
      prod.resize(k);
      t.add[x * q + y] = index(s);
      t.mul[x * q + y] = index(prod);
    }
  }
  for (std::size_t x = 0; x < q; ++x) {
    auto c = coeffs(x);
    std::string s;
    for (std::size_t i = k; i-- > 0;) {
      if (!c[i]) continue;
      std::string term;
      if (i == 0) term = std::to_string(c[i]);
      else {
        term = c[i] == 1 ? "" : std::to_string(c[i]);
        term += i == 1 ? "x" : "x^" + std::to_string(i);
      }
      if (!s.empty()) s += "+";
      s += term;
    }
    t.labels.push_back(s.empty() ? "0" : s);
  }
  return FiniteRing::validate(std::move(t));
}

Ring product(const FiniteRing& r, const FiniteRing& s) {
  const std::string name = "Prod(" + r.name() + ", " + s.name() + ")";
  const std::size_t m = s.order();
  const std::size_t n = capped_product(r.order(), m, name);
  RingTables t;
  t.order = n;
  t.name = name;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem a1 = static_cast<Elem>(x / m), a2 = static_cast<Elem>(x % m);
    t.labels.push_back("(" + r.label(a1) + ", " + s.label(a2) + ")");
    for (std::size_t y = 0; y < n; ++y) {
      const Elem b1 = static_cast<Elem>(y / m), b2 = static_cast<Elem>(y % m);
      t.add[x * n + y] = static_cast<Elem>(r.add(a1, b1) * m + s.add(a2, b2));
      t.mul[x * n + y] = static_cast<Elem>(r.mul(a1, b1) * m + s.mul(a2, b2));
    }
  }
  return FiniteRing::validate(std::move(t));
}

std::size_t MatrixPattern::variables() const {
  int top = -1;
  for (int v : slot) top = std::max(top, v);
  return static_cast<std::size_t>(top + 1);
}

MatrixPattern full_pattern(std::size_t k) {
  MatrixPattern p{k, std::vector<int>(k * k)};
  for (std::size_t i = 0; i < k * k; ++i) p.slot[i] = static_cast<int>(i);
  return p;
}

MatrixPattern upper_triangular_pattern(std::size_t k) {
  MatrixPattern p{k, std::vector<int>(k * k, -1)};
  int v = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) p.slot[i * k + j] = v++;
  return p;
}

namespace {

// Numbers variables by first appearance in row-major order. Input slots use
// arbitrary non-negative tags.
MatrixPattern renumber(std::size_t k, const std::vector<int>& tags) {
  MatrixPattern p{k, std::vector<int>(k * k, -1)};
  std::map<int, int> ids;
  for (std::size_t i = 0; i < k * k; ++i) {
    if (tags[i] < 0) continue;
    auto [it, fresh] = ids.emplace(tags[i], static_cast<int>(ids.size()));
    p.slot[i] = it->second;
  }
  return p;
}

}  // namespace

MatrixPattern constant_diagonal_pattern(std::size_t k) {
  std::vector<int> tags(k * k, -1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) tags[i * k + j] = i == j ? 0 : static_cast<int>(1 + i * k + j);
  return renumber(k, tags);
}

MatrixPattern snm_pattern(std::size_t n, std::size_t m) {
  const std::size_t k = n + m - 1;
  std::vector<int> tags(k * k, -1);
  const int b = 1000, d = 2000, c = 3000;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      if (i == j) tags[i * k + j] = 0;
      else if (j < n) tags[i * k + j] = b + static_cast<int>(j - i);
      else if (i >= n - 1) tags[i * k + j] = d + static_cast<int>(j - i);
      else tags[i * k + j] = c + static_cast<int>(i * k + j);
    }
  return renumber(k, tags);
}

MatrixPattern tnm_pattern(std::size_t n, std::size_t m) {
  const std::size_t k = n + m;
  std::vector<int> tags(k * k, -1);
  const int b = 1000, c = 2000;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      if (i == j) tags[i * k + j] = 0;
      else if (j < n) tags[i * k + j] = b + static_cast<int>(j - i);
      else if (i >= n) tags[i * k + j] = c + static_cast<int>(j - i);
    }
  return renumber(k, tags);
}

MatrixPattern un_pattern(std::size_t n) {
  std::vector<int> tags(n * n, -1);
  const int b = 1000, c = 2000;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      tags[i * n + j] = i == j ? 0 : (i % 2 == 0 ? b : c) + static_cast<int>(j - i);
  return renumber(n, tags);
}

Ring pattern_ring(const FiniteRing& r, const MatrixPattern& pattern, std::string name) {
  const std::size_t k = pattern.k;
  require(k >= 1 && pattern.slot.size() == k * k, "matrix pattern has the wrong shape");
  const std::size_t nv = pattern.variables();
  // Position of the first occurrence of each variable.
  std::vector<std::size_t> first(nv, k * k);
  for (std::size_t pos = 0; pos < k * k; ++pos) {
    const int v = pattern.slot[pos];
    if (v >= 0 && first[static_cast<std::size_t>(v)] == k * k) first[static_cast<std::size_t>(v)] = pos;
  }
  const Elem zero = r.zero();
  auto entry = [&](const Elem* vars, std::size_t pos) {
    const int v = pattern.slot[pos];
    return v < 0 ? zero : vars[v];
  };
  std::vector<Elem> prod(k * k);
  auto mul_into = [&](const Elem* a, const Elem* b, Elem* out) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Elem s = zero;
        for (std::size_t l = 0; l < k; ++l) s = r.add(s, r.mul(entry(a, i * k + l), entry(b, l * k + j)));
        prod[i * k + j] = s;
      }
    for (std::size_t v = 0; v < nv; ++v) out[v] = prod[first[v]];
    for (std::size_t pos = 0; pos < k * k; ++pos)
      if (prod[pos] != entry(out, pos))
        throw Error(ErrorCode::bad_params, "matrix pattern for " + name + " is not closed under multiplication");
  };
  auto label_of = [&](const Elem* vars) {
    std::string s = "[";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < k; ++j) {
        if (j) s += " ";
        s += r.label(entry(vars, i * k + j));
      }
    }
    return s + "]";
  };
  return tuple_ring(r, nv, name, mul_into, label_of);
}

Ring matrix_ring(std::size_t k, const FiniteRing& r) {
  require(k >= 1, "Mat needs k >= 1");
  return pattern_ring(r, full_pattern(k), "Mat(" + std::to_string(k) + ", " + r.name() + ")");
}

Ring upper_triangular(std::size_t k, const FiniteRing& r) {
  require(k >= 1, "UT needs k >= 1");
  return pattern_ring(r, upper_triangular_pattern(k), "UT(" + std::to_string(k) + ", " + r.name() + ")");
}

Ring constant_diag_triangular(std::size_t k, const FiniteRing& r) {
  require(k >= 1, "SD needs k >= 1");
  return pattern_ring(r, constant_diagonal_pattern(k), "SD(" + std::to_string(k) + ", " + r.name() + ")");
}

Ring trunc_poly(const FiniteRing& r, std::size_t n) {
  require(n >= 1, "Trunc needs n >= 1");
  auto mul_into = [&](const Elem* a, const Elem* b, Elem* out) {
    for (std::size_t d = 0; d < n; ++d) {
      Elem s = r.zero();
      for (std::size_t i = 0; i <= d; ++i) s = r.add(s, r.mul(a[i], b[d - i]));
      out[d] = s;
    }
  };
  return tuple_ring(r, n, "Trunc(" + r.name() + ", " + std::to_string(n) + ")", mul_into);
}

Ring shaped_triangular(TriangularShape kind, std::size_t n, std::size_t m, const FiniteRing& r) {
  const std::string rn = r.name();
  switch (kind) {
    case TriangularShape::Snm:
      require(n >= 1 && m >= 1, "Snm needs n, m >= 1");
      return pattern_ring(r, snm_pattern(n, m),
                          "Snm(" + std::to_string(n) + ", " + std::to_string(m) + ", " + rn + ")");
    case TriangularShape::Tnm:
      require(n >= 1 && m >= 1, "Tnm needs n, m >= 1");
      return pattern_ring(r, tnm_pattern(n, m),
                          "Tnm(" + std::to_string(n) + ", " + std::to_string(m) + ", " + rn + ")");
    case TriangularShape::Un:
      require(n >= 1, "Un needs n >= 1");
      return pattern_ring(r, un_pattern(n), "Un(" + std::to_string(n) + ", " + rn + ")");
  }
  throw Error(ErrorCode::internal, "unknown triangular shape");
}

Ring trivial_extension(const FiniteRing& r) {
  auto mul_into = [&](const Elem* a, const Elem* b, Elem* out) {
    out[0] = r.mul(a[0], b[0]);
    out[1] = r.add(r.mul(a[0], b[1]), r.mul(a[1], b[0]));
  };
  return tuple_ring(r, 2, "Triv(" + r.name() + ")", mul_into);
}

GroupRing group_ring(const Ring& base, const GroupTable& g) {
  const FiniteRing& r = *base;
  const std::size_t gn = g.order();
  const std::string name = "Grp(" + r.name() + ", " + g.name() + ")";
  auto mul_into = [&](const Elem* a, const Elem* b, Elem* out) {
    for (std::size_t i = 0; i < gn; ++i) out[i] = r.zero();
    for (std::size_t x = 0; x < gn; ++x) {
      if (a[x] == r.zero()) continue;
      for (std::size_t y = 0; y < gn; ++y) {
        const std::size_t z = g.mul(x, y);
        out[z] = r.add(out[z], r.mul(a[x], b[y]));
      }
    }
  };
  auto label_of = [&](const Elem* c) {
    std::string s;
    for (std::size_t i = 0; i < gn; ++i) {
      if (c[i] == r.zero()) continue;
      const std::string& gname = g.element_name(i);
      std::string term;
      if (i == g.identity()) term = r.label(c[i]);
      else if (c[i] == r.one()) term = gname;
      else term = r.label(c[i]) + "*" + gname;
      if (!s.empty()) s += "+";
      s += term;
    }
    return s.empty() ? r.label(r.zero()) : s;
  };
  auto ring = tuple_ring(r, gn, name, mul_into, label_of);
  const std::size_t n = ring->order();
  Digits dg(r.order(), gn, n);
  std::vector<Elem> aug(n);
  for (std::size_t x = 0; x < n; ++x) {
    Elem sum = r.zero();
    for (std::size_t i = 0; i < gn; ++i) sum = r.add(sum, dg.of(x)[i]);
    aug[x] = sum;
  }
  return GroupRing{std::move(ring), base, g, std::move(aug)};
}

Ideal augmentation_ideal(const GroupRing& rg) {
  ElementSet members(*rg.ring);
  for (Elem x = 0; x < rg.ring->order(); ++x)
    if (rg.augmentation[x] == rg.base->zero()) members.insert(x);
  return Ideal{std::move(members), Sidedness::two};
}

GroupSubring group_subring(const GroupRing& rg, const std::vector<std::size_t>& members) {
  std::string hname = rg.group.name() + "[";
  for (std::size_t i = 0; i < members.size(); ++i) hname += (i ? "," : "") + std::to_string(members[i]);
  hname += "]";
  GroupRing sub = group_ring(rg.base, rg.group.subgroup(members, hname));
  const std::size_t q = rg.base->order();
  const std::size_t gn = rg.group.order(), hn = members.size();
  Digits hd(q, hn, sub.ring->order());
  std::vector<Elem> full(gn), embedding(sub.ring->order());
  Digits gd(q, gn, 0);
  for (std::size_t x = 0; x < sub.ring->order(); ++x) {
    std::fill(full.begin(), full.end(), rg.base->zero());
    const Elem* c = hd.of(x);
    for (std::size_t i = 0; i < hn; ++i) full[members[i]] = c[i];
    embedding[x] = gd.encode(full.data());
  }
  return GroupSubring{std::move(sub), std::move(embedding)};
}

EndoMap::EndoMap(const FiniteRing& r, std::vector<Elem> image, std::string name)
    : ring_(&r), image_(std::move(image)), name_(std::move(name)) {
  const std::size_t n = r.order();
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::not_endomorphism, "map '" + name_ + "' on " + r.name() + " " + why);
  };
  if (image_.size() != n) fail("has the wrong length");
  for (Elem x : image_)
    if (x >= n) fail("has an entry out of range");
  if (image_[r.zero()] != r.zero()) fail("does not fix zero");
  if (image_[r.one()] != r.one()) fail("does not fix one");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (image_[r.add(a, b)] != r.add(image_[a], image_[b])) fail("is not additive");
      if (image_[r.mul(a, b)] != r.mul(image_[a], image_[b])) fail("is not multiplicative");
    }
}

EndoMap EndoMap::identity(const FiniteRing& r) {
  std::vector<Elem> img(r.order());
  for (Elem a = 0; a < r.order(); ++a) img[a] = a;
  return EndoMap(r, std::move(img), "id");
}

EndoMap EndoMap::frobenius(const FiniteRing& r) {
  const std::size_t p = r.characteristic();
  bool prime = p >= 2;
  for (std::size_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
  if (!prime)
    throw Error(ErrorCode::not_endomorphism,
                "frob needs prime characteristic, " + r.name() + " has characteristic " + std::to_string(p));
  std::vector<Elem> img(r.order());
  for (Elem a = 0; a < r.order(); ++a) img[a] = r.pow(a, p);
  return EndoMap(r, std::move(img), "frob");
}

EndoMap EndoMap::by_name(const FiniteRing& r, std::string_view name) {
  if (name == "id") return identity(r);
  if (name == "frob") return frobenius(r);
  throw Error(ErrorCode::unknown_name, "unknown endomorphism '" + std::string(name) + "' (expected id or frob)");
}

Ring skew_trunc(const FiniteRing& r, const EndoMap& alpha, std::size_t n) {
  require(n >= 1, "SkewTrunc needs n >= 1");
  if (alpha.ring() != &r && !alpha.ring()->same_tables(r))
    throw Error(ErrorCode::not_endomorphism, "endomorphism belongs to a different ring");
  // alpha^i as tables.
  std::vector<std::vector<Elem>> powers(n, std::vector<Elem>(r.order()));
  for (Elem a = 0; a < r.order(); ++a) powers[0][a] = a;
  for (std::size_t i = 1; i < n; ++i)
    for (Elem a = 0; a < r.order(); ++a) powers[i][a] = alpha(powers[i - 1][a]);
  auto mul_into = [&](const Elem* a, const Elem* b, Elem* out) {
    for (std::size_t d = 0; d < n; ++d) {
      Elem s = r.zero();
      for (std::size_t i = 0; i <= d; ++i) s = r.add(s, r.mul(a[i], powers[i][b[d - i]]));
      out[d] = s;
    }
  };
  return tuple_ring(r, n, "SkewTrunc(" + r.name() + ", " + alpha.name() + ", " + std::to_string(n) + ")", mul_into);
}

bool is_alpha_compatible(const FiniteRing& r, const EndoMap& alpha) {
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b)
      if ((r.mul(a, b) == r.zero()) != (r.mul(a, alpha(b)) == r.zero())) return false;
  return true;
}

}  // namespace ringlab
