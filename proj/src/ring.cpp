#include "ringlab/ring.hpp"

#include <algorithm>

#include "derived_cache.hpp"

namespace ringlab {

struct FiniteRing::Private {};

namespace {

constexpr auto npos = AxiomViolation::npos;

[[noreturn]] void shape_error(const std::string& msg) { throw Error(ErrorCode::shape, msg); }

// Greedy generating set of the magma (elements, op). Every element is reached
// by repeatedly applying op to generators.
std::vector<Elem> magma_generators(std::size_t n, const std::vector<Elem>& op) {
  std::vector<char> in(n, 0);
  std::vector<Elem> members;
  std::vector<Elem> gens;
  members.reserve(n);
  std::vector<Elem> queue;
  for (Elem cand = 0; cand < n; ++cand) {
    if (in[cand]) continue;
    gens.push_back(cand);
    in[cand] = 1;
    queue.push_back(cand);
    while (!queue.empty()) {
      Elem x = queue.back();
      queue.pop_back();
      members.push_back(x);
      for (Elem y : members) {
        for (Elem z : {op[x * n + y], op[y * n + x]}) {
          if (!in[z]) {
            in[z] = 1;
            queue.push_back(z);
          }
        }
      }
    }
  }
  return gens;
}

}  // namespace

FiniteRing::FiniteRing(const Private&, std::shared_ptr<const RingTables> tables, Elem zero, Elem one,
                       std::vector<Elem> neg, std::shared_ptr<const RingExpr> provenance, std::string name)
    : tables_(std::move(tables)),
      n_(tables_->order),
      add_(tables_->add.data()),
      mul_(tables_->mul.data()),
      neg_(std::move(neg)),
      zero_(zero),
      one_(one),
      provenance_(std::move(provenance)),
      name_(std::move(name)),
      cache_(std::make_shared<detail::DerivedCache>()) {}

FiniteRing::~FiniteRing() = default;

Ring FiniteRing::validate(RingTables t) {
  const std::size_t n = t.order;
  if (n == 0) shape_error("ring order must be positive");
  if (t.add.size() != n * n) shape_error("addition table must have order^2 entries");
  if (t.mul.size() != n * n) shape_error("multiplication table must have order^2 entries");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.add[i] >= n) shape_error("addition table entry out of range at (" + std::to_string(i / n) + ", " + std::to_string(i % n) + ")");
    if (t.mul[i] >= n) shape_error("multiplication table entry out of range at (" + std::to_string(i / n) + ", " + std::to_string(i % n) + ")");
  }
  if (!t.labels.empty() && t.labels.size() != n) shape_error("labels must have one entry per element");
  if (t.zero && *t.zero >= n) shape_error("zero out of range");
  if (t.one && *t.one >= n) shape_error("one out of range");

  const auto& add = t.add;
  const auto& mul = t.mul;
  auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
  auto M = [&](Elem a, Elem b) { return mul[a * n + b]; };

  // Additive identity.
  std::optional<Elem> zero;
  for (Elem z = 0; z < n && !zero; ++z) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = A(z, a) == a && A(a, z) == a;
    if (ok) zero = z;
  }
  if (!zero) throw AxiomViolation(AxiomKind::additive_identity_missing, {npos, npos, npos});

  // Associativity of + via Light's test over magma generators.
  const auto add_gens = magma_generators(n, add);
  for (Elem g : add_gens)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (A(A(x, g), y) != A(x, A(g, y))) throw AxiomViolation(AxiomKind::additive_not_associative, {x, g, y});

  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (A(a, b) != A(b, a)) throw AxiomViolation(AxiomKind::additive_not_commutative, {a, b, npos});

  std::vector<Elem> neg(n);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) {
      if (A(a, b) == *zero) {
        neg[a] = b;
        found = true;
      }
    }
    if (!found) throw AxiomViolation(AxiomKind::additive_inverse_missing, {a, npos, npos});
  }

  // (R,+) is now an abelian group generated by add_gens. A map f is additive
  // iff f(b + g) = f(b) + f(g) for all b and all generators g.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem g : add_gens)
        if (M(a, A(b, g)) != A(M(a, b), M(a, g))) throw AxiomViolation(AxiomKind::left_distributivity, {a, b, g});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem g : add_gens)
        if (M(A(b, g), a) != A(M(b, a), M(g, a))) throw AxiomViolation(AxiomKind::right_distributivity, {b, g, a});

  // Multiplication is biadditive, so associativity on generator triples
  // extends to all triples.
  for (Elem a : add_gens)
    for (Elem b : add_gens)
      for (Elem c : add_gens)
        if (M(M(a, b), c) != M(a, M(b, c))) throw AxiomViolation(AxiomKind::multiplicative_not_associative, {a, b, c});

  std::optional<Elem> one;
  for (Elem e = 0; e < n && !one; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = M(e, a) == a && M(a, e) == a;
    if (ok) one = e;
  }
  if (!one) throw AxiomViolation(AxiomKind::multiplicative_identity_missing, {npos, npos, npos});

  if (t.zero && *t.zero != *zero) throw AxiomViolation(AxiomKind::identity_mismatch, {*t.zero, *zero, npos});
  if (t.one && *t.one != *one) throw AxiomViolation(AxiomKind::identity_mismatch, {*t.one, *one, npos});
  if (n > 1 && *zero == *one) throw AxiomViolation(AxiomKind::identity_mismatch, {*zero, *one, npos});

  t.zero = zero;
  t.one = one;
  std::string name = t.name;
  auto tables = std::make_shared<const RingTables>(std::move(t));
  return std::make_shared<const FiniteRing>(Private{}, std::move(tables), *zero, *one, std::move(neg), nullptr,
                                            std::move(name));
}

Elem FiniteRing::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = one_;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::optional<Elem> FiniteRing::try_inverse(Elem a) const {
  if (a >= n_) throw Error(ErrorCode::index_out_of_range, "element " + std::to_string(a) + " out of range");
  const auto& inv = cache_->inverse.get([&] {
    std::vector<std::int64_t> out(n_, -1);
    for (Elem x = 0; x < n_; ++x) {
      if (out[x] >= 0) continue;
      for (Elem y = 0; y < n_; ++y) {
        if (mul(x, y) == one_ && mul(y, x) == one_) {
          out[x] = y;
          out[y] = x;
          break;
        }
      }
    }
    return out;
  });
  if (inv[a] < 0) return std::nullopt;
  return static_cast<Elem>(inv[a]);
}

Elem FiniteRing::int_embed(std::int64_t k) const noexcept {
  // k may be INT64_MIN; work with the unsigned magnitude.
  std::uint64_t m = k < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  Elem result = zero_;
  Elem base = one_;
  while (m) {
    if (m & 1) result = add(result, base);
    base = add(base, base);
    m >>= 1;
  }
  return k < 0 ? neg(result) : result;
}

std::size_t FiniteRing::characteristic() const noexcept {
  std::size_t k = 1;
  for (Elem s = one_; s != zero_; s = add(s, one_)) ++k;
  return k;
}

const std::string& FiniteRing::name() const noexcept { return name_; }

bool FiniteRing::has_labels() const noexcept { return !tables_->labels.empty(); }

std::string FiniteRing::label(Elem a) const {
  if (a >= n_) throw Error(ErrorCode::index_out_of_range, "element " + std::to_string(a) + " out of range");
  return has_labels() ? tables_->labels[a] : std::to_string(a);
}

Ring FiniteRing::with_provenance(std::shared_ptr<const RingExpr> expr, std::string name) const {
  return std::make_shared<const FiniteRing>(Private{}, tables_, zero_, one_, neg_, std::move(expr), std::move(name));
}

bool FiniteRing::same_tables(const FiniteRing& other) const noexcept {
  return n_ == other.n_ && tables_->add == other.tables_->add && tables_->mul == other.tables_->mul;
}

CayleySpec FiniteRing::to_spec() const {
  CayleySpec spec;
  spec.order = n_;
  spec.name = name_;
  spec.labels = tables_->labels;
  spec.zero = zero_;
  spec.one = one_;
  spec.add.assign(n_, std::vector<std::int64_t>(n_));
  spec.mul.assign(n_, std::vector<std::int64_t>(n_));
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) {
      spec.add[a][b] = add(a, b);
      spec.mul[a][b] = mul(a, b);
    }
  return spec;
}

Ring validate_tables(const CayleySpec& spec) {
  const std::size_t n = spec.order;
  if (n == 0) shape_error("order must be positive");
  if (n > 0xffffffffu) shape_error("order too large");
  auto flatten = [&](const std::vector<std::vector<std::int64_t>>& rows, const char* what) {
    if (rows.size() != n) shape_error(std::string(what) + " table must have " + std::to_string(n) + " rows");
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n)
        shape_error(std::string(what) + " row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        auto v = rows[i][j];
        if (v < 0 || static_cast<std::uint64_t>(v) >= n)
          shape_error(std::string(what) + "[" + std::to_string(i) + "][" + std::to_string(j) + "] out of range");
        flat.push_back(static_cast<Elem>(v));
      }
    }
    return flat;
  };
  RingTables t;
  t.order = n;
  t.add = flatten(spec.add, "add");
  t.mul = flatten(spec.mul, "mul");
  t.labels = spec.labels;
  t.name = spec.name;
  auto index = [&](std::optional<std::int64_t> v, const char* what) -> std::optional<Elem> {
    if (!v) return std::nullopt;
    if (*v < 0 || static_cast<std::uint64_t>(*v) >= n) shape_error(std::string(what) + " out of range");
    return static_cast<Elem>(*v);
  };
  t.zero = index(spec.zero, "zero");
  t.one = index(spec.one, "one");
  return FiniteRing::validate(std::move(t));
}

Elem element_arith(const FiniteRing& ring, ArithOp op, Elem a, std::uint64_t b) {
  auto check = [&](std::uint64_t x) {
    if (x >= ring.order()) throw Error(ErrorCode::index_out_of_range, "element " + std::to_string(x) + " out of range");
  };
  check(a);
  switch (op) {
    case ArithOp::add: check(b); return ring.add(a, static_cast<Elem>(b));
    case ArithOp::mul: check(b); return ring.mul(a, static_cast<Elem>(b));
    case ArithOp::sub: check(b); return ring.sub(a, static_cast<Elem>(b));
    case ArithOp::neg: return ring.neg(a);
    case ArithOp::pow: return ring.pow(a, b);
  }
  throw Error(ErrorCode::internal, "unknown arithmetic operation");
}

}  // namespace ringlab
