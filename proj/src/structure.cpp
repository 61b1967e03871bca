#include "ringlab/structure.hpp"

#include <algorithm>
#include <sstream>

#include "derived_cache.hpp"

namespace ringlab {

namespace {

std::string index_list(std::span<const Elem> xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << ']';
  return out.str();
}

// Closure of `seeds` under +, negation and multiplication.
ElementSet close_subring_set(const FiniteRing& r, std::span<const Elem> seeds) {
  ElementSet in = r.empty_set();
  std::vector<Elem> members;
  std::vector<Elem> queue;
  auto push = [&](Elem x) {
    if (!in.contains(x)) {
      in.insert(x);
      queue.push_back(x);
    }
  };
  for (Elem s : seeds) push(s);
  while (!queue.empty()) {
    Elem x = queue.back();
    queue.pop_back();
    members.push_back(x);
    push(r.neg(x));
    for (Elem y : members) {
      push(r.add(x, y));
      push(r.mul(x, y));
      push(r.mul(y, x));
    }
  }
  return in;
}

Subring materialize(const FiniteRing& r, const ElementSet& members, std::string name) {
  std::vector<Elem> emb = members.members();
  std::vector<std::int64_t> local(r.order(), -1);
  for (std::size_t i = 0; i < emb.size(); ++i) local[emb[i]] = static_cast<std::int64_t>(i);
  RingTables t;
  t.order = emb.size();
  t.add.resize(t.order * t.order);
  t.mul.resize(t.order * t.order);
  for (std::size_t i = 0; i < t.order; ++i)
    for (std::size_t j = 0; j < t.order; ++j) {
      auto s = local[r.add(emb[i], emb[j])];
      auto p = local[r.mul(emb[i], emb[j])];
      if (s < 0 || p < 0) throw Error(ErrorCode::embedding_mismatch, "member set is not closed under the ring operations");
      t.add[i * t.order + j] = static_cast<Elem>(s);
      t.mul[i * t.order + j] = static_cast<Elem>(p);
    }
  t.labels.reserve(t.order);
  for (Elem x : emb) t.labels.push_back(r.label(x));
  t.name = std::move(name);
  return Subring{FiniteRing::validate(std::move(t)), std::move(emb)};
}

[[noreturn]] void internal(const std::string& msg) { throw Error(ErrorCode::internal, msg); }

}  // namespace

const ElementSet& units(const FiniteRing& r) {
  return r.cache().units.get([&] {
    ElementSet s = r.empty_set();
    for (Elem a = 0; a < r.order(); ++a)
      if (r.try_inverse(a)) s.insert(a);
    return s;
  });
}

const ElementSet& idempotents(const FiniteRing& r) {
  return r.cache().idempotents.get([&] {
    ElementSet s = r.empty_set();
    for (Elem a = 0; a < r.order(); ++a)
      if (r.mul(a, a) == a) s.insert(a);
    return s;
  });
}

bool is_nilpotent(const FiniteRing& r, Elem a) {
  // Walk a, a^2, a^3, ... until it hits zero or revisits a power.
  ElementSet seen = r.empty_set();
  Elem x = a;
  while (x != r.zero()) {
    if (seen.contains(x)) return false;
    seen.insert(x);
    x = r.mul(x, a);
  }
  return true;
}

const ElementSet& nilpotents(const FiniteRing& r) {
  return r.cache().nilpotents.get([&] {
    ElementSet s = r.empty_set();
    for (Elem a = 0; a < r.order(); ++a)
      if (is_nilpotent(r, a)) s.insert(a);
    return s;
  });
}

const ElementSet& center(const FiniteRing& r) {
  return r.cache().center.get([&] {
    ElementSet s = r.empty_set();
    for (Elem a = 0; a < r.order(); ++a) {
      bool central = true;
      for (Elem x = 0; x < r.order() && central; ++x) central = r.mul(a, x) == r.mul(x, a);
      if (central) s.insert(a);
    }
    return s;
  });
}

const ElementSet& jacobson(const FiniteRing& r) {
  return r.cache().jacobson.get([&] {
    const auto& u = units(r);
    ElementSet s = r.empty_set();
    for (Elem a = 0; a < r.order(); ++a) {
      bool quasi_regular = true;
      for (Elem x = 0; x < r.order() && quasi_regular; ++x) quasi_regular = u.contains(r.sub(r.one(), r.mul(x, a)));
      if (quasi_regular) s.insert(a);
    }
    return s;
  });
}

const ElementSet& delta(const FiniteRing& r) {
  return r.cache().delta.get([&] {
    const auto& u = units(r);
    const auto unit_list = u.members();
    ElementSet d = r.empty_set();
    for (Elem a = 0; a < r.order(); ++a) {
      bool stable = true;
      for (std::size_t i = 0; i < unit_list.size() && stable; ++i) stable = u.contains(r.add(a, unit_list[i]));
      if (stable) d.insert(a);
    }

    if (!d.contains(r.zero())) internal("delta does not contain zero");
    if (!jacobson(r).is_subset_of(d)) internal("J(R) is not contained in delta");
    const auto dl = d.members();
    for (Elem x : dl) {
      if (!d.contains(r.neg(x))) internal("delta not closed under negation");
      for (Elem y : dl) {
        if (!d.contains(r.add(x, y))) internal("delta not closed under addition");
        if (!d.contains(r.mul(x, y))) internal("delta not closed under multiplication");
      }
      for (Elem v : unit_list)
        if (!d.contains(r.mul(v, x)) || !d.contains(r.mul(x, v))) internal("delta not closed under multiplication by units");
    }
    return d;
  });
}

Subring subring_generated(const FiniteRing& r, std::span<const Elem> gens) {
  std::vector<Elem> seeds{r.zero(), r.one()};
  for (Elem g : gens) {
    if (g >= r.order()) throw Error(ErrorCode::index_out_of_range, "generator " + std::to_string(g) + " out of range");
    seeds.push_back(g);
  }
  return materialize(r, close_subring_set(r, seeds), "Subring(" + r.name() + ", " + index_list(gens) + ")");
}

Subring unit_generated_subring(const FiniteRing& r) {
  auto seeds = units(r).members();
  seeds.push_back(r.zero());
  seeds.push_back(r.one());
  return materialize(r, close_subring_set(r, seeds), "UnitSubring(" + r.name() + ")");
}

Subring subring_from_members(const FiniteRing& r, const ElementSet& members) {
  if (members.ring() != &r) throw Error(ErrorCode::cross_ring, "member set belongs to a different ring");
  if (!members.contains(r.zero()) || !members.contains(r.one()))
    throw Error(ErrorCode::embedding_mismatch, "a unital subring must contain 0 and 1");
  bool closed = true;
  members.for_each([&](Elem x) {
    if (!members.contains(r.neg(x))) closed = false;
  });
  if (!closed) throw Error(ErrorCode::embedding_mismatch, "member set is not closed under negation");
  return materialize(r, members, "Subring(" + r.name() + ")");
}

bool is_good_subring(const FiniteRing& r, const Subring& s) {
  const auto& sr = *s.ring;
  const auto& emb = s.embedding;
  if (emb.size() != sr.order()) throw Error(ErrorCode::embedding_mismatch, "embedding size differs from subring order");
  ElementSet image = r.empty_set();
  for (Elem x : emb) {
    if (x >= r.order()) throw Error(ErrorCode::embedding_mismatch, "embedding leaves the ring");
    if (image.contains(x)) throw Error(ErrorCode::embedding_mismatch, "embedding is not injective");
    image.insert(x);
  }
  if (emb[sr.zero()] != r.zero() || emb[sr.one()] != r.one())
    throw Error(ErrorCode::embedding_mismatch, "embedding does not preserve 0 and 1");
  for (Elem a = 0; a < sr.order(); ++a)
    for (Elem b = 0; b < sr.order(); ++b)
      if (emb[sr.add(a, b)] != r.add(emb[a], emb[b]) || emb[sr.mul(a, b)] != r.mul(emb[a], emb[b]))
        throw Error(ErrorCode::embedding_mismatch, "embedding is not a ring homomorphism");
  const auto& ur = units(r);
  const auto& us = units(sr);
  for (Elem a = 0; a < sr.order(); ++a)
    if (ur.contains(emb[a]) != us.contains(a)) return false;
  return true;
}

Ideal ideal_closure(const FiniteRing& r, std::span<const Elem> gens, Sidedness sided) {
  ElementSet in = r.empty_set();
  std::vector<Elem> members;
  std::vector<Elem> queue;
  auto push = [&](Elem x) {
    if (!in.contains(x)) {
      in.insert(x);
      queue.push_back(x);
    }
  };
  push(r.zero());
  for (Elem g : gens) {
    if (g >= r.order()) throw Error(ErrorCode::index_out_of_range, "generator " + std::to_string(g) + " out of range");
    push(g);
  }
  const bool left = sided != Sidedness::right;
  const bool right = sided != Sidedness::left;
  while (!queue.empty()) {
    Elem x = queue.back();
    queue.pop_back();
    members.push_back(x);
    push(r.neg(x));
    for (Elem y : members) push(r.add(x, y));
    for (Elem s = 0; s < r.order(); ++s) {
      if (left) push(r.mul(s, x));
      if (right) push(r.mul(x, s));
    }
  }
  return Ideal{std::move(in), sided};
}

bool is_ideal(const FiniteRing& r, const ElementSet& set, Sidedness sided) {
  if (set.ring() != &r) throw Error(ErrorCode::cross_ring, "set belongs to a different ring");
  if (!set.contains(r.zero())) return false;
  const auto xs = set.members();
  for (Elem x : xs) {
    if (!set.contains(r.neg(x))) return false;
    for (Elem y : xs)
      if (!set.contains(r.add(x, y))) return false;
    for (Elem s = 0; s < r.order(); ++s) {
      if (sided != Sidedness::right && !set.contains(r.mul(s, x))) return false;
      if (sided != Sidedness::left && !set.contains(r.mul(x, s))) return false;
    }
  }
  return true;
}

std::vector<Elem> ideal_generators(const FiniteRing& r, const ElementSet& ideal) {
  std::vector<Elem> gens;
  ElementSet current = ideal_closure(r, gens, Sidedness::two).members;
  ideal.for_each([&](Elem x) {
    if (current.contains(x)) return;
    gens.push_back(x);
    current = ideal_closure(r, gens, Sidedness::two).members;
  });
  return gens;
}

Quotient quotient(const FiniteRing& r, const Ideal& ideal) {
  if (ideal.members.ring() != &r) throw Error(ErrorCode::cross_ring, "ideal belongs to a different ring");
  if (!ideal.two_sided() || !is_ideal(r, ideal.members, Sidedness::two))
    throw Error(ErrorCode::not_two_sided, "quotient requires a two-sided ideal");
  const auto members = ideal.members.members();
  constexpr Elem unassigned = 0xffffffffu;
  std::vector<Elem> proj(r.order(), unassigned);
  std::vector<Elem> reps;
  for (Elem a = 0; a < r.order(); ++a) {
    if (proj[a] != unassigned) continue;
    const auto c = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem i : members) proj[r.add(a, i)] = c;
  }
  RingTables t;
  t.order = reps.size();
  t.add.resize(t.order * t.order);
  t.mul.resize(t.order * t.order);
  for (std::size_t c = 0; c < t.order; ++c)
    for (std::size_t d = 0; d < t.order; ++d) {
      t.add[c * t.order + d] = proj[r.add(reps[c], reps[d])];
      t.mul[c * t.order + d] = proj[r.mul(reps[c], reps[d])];
    }
  for (Elem rep : reps) t.labels.push_back(r.label(rep) + "+I");
  t.name = "Quot(" + r.name() + ", " + index_list(ideal_generators(r, ideal.members)) + ")";
  return Quotient{FiniteRing::validate(std::move(t)), std::move(proj), std::move(reps)};
}

const Quotient& jacobson_quotient(const FiniteRing& r) {
  return r.cache().jacobson_quotient.get([&] { return quotient(r, Ideal{jacobson(r), Sidedness::two}); });
}

Subring corner(const FiniteRing& r, Elem e) {
  if (e >= r.order()) throw Error(ErrorCode::index_out_of_range, "element " + std::to_string(e) + " out of range");
  if (r.mul(e, e) != e) throw Error(ErrorCode::not_idempotent, "corner requires an idempotent, got " + r.label(e));
  ElementSet members = r.empty_set();
  for (Elem x = 0; x < r.order(); ++x) members.insert(r.mul(r.mul(e, x), e));
  return materialize(r, members, "Corner(" + r.name() + ", " + std::to_string(e) + ")");
}

std::vector<Elem> primitive_central_idempotents(const FiniteRing& r) {
  ElementSet ci = idempotents(r) & center(r);
  ci.erase(r.zero());
  const auto list = ci.members();
  std::vector<Elem> out;
  for (Elem e : list) {
    bool primitive = true;
    for (Elem f : list)
      if (f != e && r.mul(e, f) == f) primitive = false;
    if (primitive) out.push_back(e);
  }
  return out;
}

LiftResult idempotents_lift(const FiniteRing& r) {
  const auto& q = jacobson_quotient(r);
  std::vector<std::int64_t> lift(q.ring->order(), -1);
  idempotents(r).for_each([&](Elem e) {
    auto c = q.projection[e];
    if (lift[c] < 0) lift[c] = e;
  });
  LiftResult out;
  idempotents(*q.ring).for_each([&](Elem c) {
    if (lift[c] < 0) {
      if (!out.failing_coset) out.failing_coset = c;
      out.all_lift = false;
    } else {
      out.lifts.emplace_back(c, static_cast<Elem>(lift[c]));
    }
  });
  return out;
}

ElementSet right_multiples(const FiniteRing& r, Elem a) {
  ElementSet s = r.empty_set();
  for (Elem x = 0; x < r.order(); ++x) s.insert(r.mul(a, x));
  return s;
}

RightIdealIdempotentResult every_nonzero_right_ideal_has_idempotent(const FiniteRing& r) {
  ElementSet nonzero_idem = idempotents(r);
  nonzero_idem.erase(r.zero());
  for (Elem a = 0; a < r.order(); ++a) {
    if (a == r.zero()) continue;
    if (!right_multiples(r, a).intersects(nonzero_idem)) return {false, a};
  }
  return {};
}

StructureSet parse_structure_set(std::string_view name) {
  if (name == "units") return StructureSet::units;
  if (name == "idempotents") return StructureSet::idempotents;
  if (name == "nilpotents") return StructureSet::nilpotents;
  if (name == "center") return StructureSet::center;
  if (name == "jacobson") return StructureSet::jacobson;
  if (name == "delta") return StructureSet::delta;
  throw Error(ErrorCode::unknown_set, "unknown set '" + std::string(name) + "'");
}

const char* structure_set_name(StructureSet s) {
  switch (s) {
    case StructureSet::units: return "units";
    case StructureSet::idempotents: return "idempotents";
    case StructureSet::nilpotents: return "nilpotents";
    case StructureSet::center: return "center";
    case StructureSet::jacobson: return "jacobson";
    case StructureSet::delta: return "delta";
  }
  return "?";
}

const ElementSet& structure_set(const FiniteRing& r, StructureSet s) {
  switch (s) {
    case StructureSet::units: return units(r);
    case StructureSet::idempotents: return idempotents(r);
    case StructureSet::nilpotents: return nilpotents(r);
    case StructureSet::center: return center(r);
    case StructureSet::jacobson: return jacobson(r);
    case StructureSet::delta: return delta(r);
  }
  throw Error(ErrorCode::unknown_set, "unknown set");
}

}  // namespace ringlab
