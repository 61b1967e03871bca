#include "ringlab/classify.hpp"

#include <functional>
#include <json.hpp>

#include "ringlab/structure.hpp"

namespace ringlab {

namespace {

using Json = nlohmann::ordered_json;

Verdict pass() { return {}; }

Verdict fail(const FiniteRing& r, std::vector<Elem> elems, std::string why) {
  Witness w;
  for (Elem e : elems) w.labels.push_back(r.label(e));
  w.elements = std::move(elems);
  w.explanation = std::move(why);
  return Verdict{false, std::move(w)};
}

// U(R) = S + 1, or S +- 1 when `both_signs`; checks both inclusions.
Verdict units_are_shifted(const FiniteRing& r, const ElementSet& s, bool both_signs, const char* set_name) {
  const auto& u = units(r);
  const Elem one = r.one();
  const Elem minus_one = r.neg(one);
  for (Elem x : u.members()) {
    if (s.contains(r.sub(x, one))) continue;
    if (both_signs && s.contains(r.sub(x, minus_one))) continue;
    return fail(r, {x}, "unit " + r.label(x) + (both_signs ? " is not +-1 plus an element of " : " is not 1 plus an element of ") +
                            set_name);
  }
  for (Elem d : s.members()) {
    for (Elem shift : both_signs ? std::vector<Elem>{one, minus_one} : std::vector<Elem>{one}) {
      const Elem x = r.add(d, shift);
      if (!u.contains(x))
        return fail(r, {d}, "element " + r.label(x) + " of the shifted " + std::string(set_name) + " is not a unit");
    }
  }
  return pass();
}

Verdict local_ring(const FiniteRing& r) {
  if (r.is_zero_ring()) return fail(r, {}, "the zero ring is not local");
  const auto nonunits = units(r).complement().members();
  const auto& u = units(r);
  for (Elem a : nonunits)
    for (Elem b : nonunits)
      if (u.contains(r.add(a, b)))
        return fail(r, {a, b}, "nonunits " + r.label(a) + " and " + r.label(b) + " sum to a unit");
  return pass();
}

Verdict boolean_ring(const FiniteRing& r) {
  for (Elem a = 0; a < r.order(); ++a)
    if (r.mul(a, a) != a) return fail(r, {a}, r.label(a) + " is not idempotent");
  return pass();
}

Verdict weakly_boolean(const FiniteRing& r) {
  const auto& id = idempotents(r);
  for (Elem a = 0; a < r.order(); ++a)
    if (!id.contains(a) && !id.contains(r.neg(a)))
      return fail(r, {a}, "neither " + r.label(a) + " nor its negative is idempotent");
  return pass();
}

Verdict abelian(const FiniteRing& r) {
  const auto& c = center(r);
  for (Elem e : idempotents(r).members())
    if (!c.contains(e)) return fail(r, {e}, "idempotent " + r.label(e) + " is not central");
  return pass();
}

Verdict reduced(const FiniteRing& r) {
  for (Elem a : nilpotents(r).members())
    if (a != r.zero()) return fail(r, {a}, r.label(a) + " is a nonzero nilpotent");
  return pass();
}

// a = e + s for some idempotent e and s in `target` (s = a - e).
Verdict idempotent_plus(const FiniteRing& r, const ElementSet& target, bool both_signs, const std::string& what) {
  const auto id = idempotents(r).members();
  for (Elem a = 0; a < r.order(); ++a) {
    bool ok = false;
    for (Elem e : id) {
      if (target.contains(r.sub(a, e)) || (both_signs && target.contains(r.add(a, e)))) {
        ok = true;
        break;
      }
    }
    if (!ok) return fail(r, {a}, r.label(a) + " is not " + what);
  }
  return pass();
}

Verdict exchange(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<ElementSet> right;
  right.reserve(n);
  for (Elem a = 0; a < n; ++a) right.push_back(right_multiples(r, a));
  const auto id = idempotents(r).members();
  for (Elem a = 0; a < n; ++a) {
    const auto& ar = right[a];
    const auto& rest = right[r.sub(r.one(), a)];
    bool ok = false;
    for (Elem e : id) {
      if (ar.contains(e) && rest.contains(r.sub(r.one(), e))) {
        ok = true;
        break;
      }
    }
    if (!ok) return fail(r, {a}, "no idempotent e in " + r.label(a) + "R with 1-e in (1-a)R");
  }
  return pass();
}

Verdict regular(const FiniteRing& r, bool unit_only) {
  const auto& u = units(r);
  for (Elem a = 0; a < r.order(); ++a) {
    bool ok = false;
    for (Elem x = 0; x < r.order() && !ok; ++x) {
      if (unit_only && !u.contains(x)) continue;
      ok = r.mul(r.mul(a, x), a) == a;
    }
    if (!ok) return fail(r, {a}, unit_only ? "no unit x with axa = a for a = " + r.label(a) : "no x with axa = a for a = " + r.label(a));
  }
  return pass();
}

Verdict strongly_regular(const FiniteRing& r) {
  for (Elem a = 0; a < r.order(); ++a)
    if (!right_multiples(r, r.mul(a, a)).contains(a))
      return fail(r, {a}, r.label(a) + " is not in a^2 R");
  return pass();
}

Verdict semi_regular(const FiniteRing& r) {
  const auto& q = jacobson_quotient(r);
  auto reg = regular(*q.ring, false);
  if (!reg.holds) {
    Elem c = reg.witness->elements.at(0);
    return fail(r, {q.representatives[c]}, "R/J is not regular at the coset of " + r.label(q.representatives[c]));
  }
  auto lift = idempotents_lift(r);
  if (!lift.all_lift)
    return fail(r, {q.representatives[*lift.failing_coset]},
                "idempotent coset of " + r.label(q.representatives[*lift.failing_coset]) + " does not lift");
  return pass();
}

Verdict semisimple(const FiniteRing& r) {
  for (Elem a : jacobson(r).members())
    if (a != r.zero()) return fail(r, {a}, r.label(a) + " is a nonzero element of J");
  return pass();
}

Verdict dedekind_finite(const FiniteRing& r) {
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b)
      if (r.mul(a, b) == r.one() && r.mul(b, a) != r.one())
        return fail(r, {a, b}, "ab = 1 but ba != 1");
  return pass();
}

Verdict division(const FiniteRing& r) {
  if (r.is_zero_ring()) return fail(r, {}, "the zero ring is not a division ring");
  for (Elem a = 0; a < r.order(); ++a)
    if (a != r.zero() && !units(r).contains(a)) return fail(r, {a}, "nonzero " + r.label(a) + " is not a unit");
  return pass();
}

Verdict semi_weakly_boolean(const FiniteRing& r) {
  const auto& q = jacobson_quotient(r);
  auto wb = weakly_boolean(*q.ring);
  if (!wb.holds) {
    Elem c = wb.witness->elements.at(0);
    return fail(r, {q.representatives[c]}, "R/J is not weakly Boolean at the coset of " + r.label(q.representatives[c]));
  }
  auto lift = idempotents_lift(r);
  if (!lift.all_lift)
    return fail(r, {q.representatives[*lift.failing_coset]},
                "idempotent coset of " + r.label(q.representatives[*lift.failing_coset]) + " does not lift");
  return pass();
}

using PredicateFn = std::function<Verdict(const FiniteRing&)>;

const std::vector<std::pair<std::string, PredicateFn>>& catalog() {
  static const std::vector<std::pair<std::string, PredicateFn>> table = {
      {"wdu", is_wdu},
      {"du", is_du},
      {"uj", [](const FiniteRing& r) { return units_are_shifted(r, jacobson(r), false, "J"); }},
      {"wuj", [](const FiniteRing& r) { return units_are_shifted(r, jacobson(r), true, "J"); }},
      {"uu", [](const FiniteRing& r) { return units_are_shifted(r, nilpotents(r), false, "Nil"); }},
      {"wuu", [](const FiniteRing& r) { return units_are_shifted(r, nilpotents(r), true, "Nil"); }},
      {"local", local_ring},
      {"boolean", boolean_ring},
      {"weakly_boolean", weakly_boolean},
      {"abelian", abelian},
      {"reduced", reduced},
      {"clean", [](const FiniteRing& r) { return idempotent_plus(r, units(r), false, "clean"); }},
      {"weakly_clean", [](const FiniteRing& r) { return idempotent_plus(r, units(r), true, "weakly clean"); }},
      {"delta_clean", [](const FiniteRing& r) { return idempotent_plus(r, delta(r), false, "Delta-clean"); }},
      {"weakly_delta_clean", [](const FiniteRing& r) { return weakly_delta_clean_routes(r).signed_sum; }},
      {"j_clean", [](const FiniteRing& r) { return idempotent_plus(r, jacobson(r), false, "J-clean"); }},
      {"exchange", exchange},
      {"regular", [](const FiniteRing& r) { return regular(r, false); }},
      {"unit_regular", [](const FiniteRing& r) { return regular(r, true); }},
      {"strongly_regular", strongly_regular},
      {"semi_regular", semi_regular},
      {"semisimple", semisimple},
      {"dedekind_finite", dedekind_finite},
      {"division", division},
      {"semi_weakly_boolean", semi_weakly_boolean},
  };
  return table;
}

}  // namespace

Verdict is_wdu(const FiniteRing& r) { return units_are_shifted(r, delta(r), true, "Delta"); }
Verdict is_du(const FiniteRing& r) { return units_are_shifted(r, delta(r), false, "Delta"); }

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : catalog()) out.push_back(name);
    return out;
  }();
  return names;
}

Verdict predicate(const FiniteRing& r, std::string_view name) {
  for (const auto& [key, fn] : catalog())
    if (key == name) return fn(r);
  throw Error(ErrorCode::unknown_predicate, "unknown predicate '" + std::string(name) + "'");
}

Verdict square_delta_condition(const FiniteRing& r) {
  const auto& d = delta(r);
  for (Elem a = 0; a < r.order(); ++a) {
    const Elem sq = r.mul(a, a);
    if (!d.contains(r.sub(a, sq)) && !d.contains(r.add(a, sq)))
      return fail(r, {a}, "neither a - a^2 nor a + a^2 lies in Delta for a = " + r.label(a));
    if (!is_weakly_delta_clean_element(r, a))
      return fail(r, {a}, "no idempotent e with a +- e in Delta for a = " + r.label(a));
  }
  return pass();
}

bool is_clean_element(const FiniteRing& r, Elem a) {
  const auto& u = units(r);
  bool found = false;
  idempotents(r).for_each([&](Elem e) { found = found || u.contains(r.sub(a, e)); });
  return found;
}

bool is_weakly_delta_clean_element(const FiniteRing& r, Elem a) {
  const auto& d = delta(r);
  bool found = false;
  idempotents(r).for_each([&](Elem e) { found = found || d.contains(r.sub(a, e)) || d.contains(r.add(a, e)); });
  return found;
}

WeaklyDeltaCleanRoutes weakly_delta_clean_routes(const FiniteRing& r) {
  WeaklyDeltaCleanRoutes out;
  out.signed_sum = idempotent_plus(r, delta(r), true, "weakly Delta-clean");
  ElementSet signed_idem = idempotents(r);
  idempotents(r).for_each([&](Elem e) { signed_idem.insert(r.neg(e)); });
  const auto& d = delta(r);
  const auto fs = signed_idem.members();
  for (Elem a = 0; a < r.order(); ++a) {
    bool ok = false;
    for (Elem f : fs)
      if (d.contains(r.sub(a, f))) {
        ok = true;
        break;
      }
    if (!ok) {
      out.signed_set = fail(r, {a}, r.label(a) + " is not (+-idempotent) + Delta");
      return out;
    }
  }
  return out;
}

const char* quotient_shape_name(QuotientShape s) {
  switch (s) {
    case QuotientShape::Boolean: return "Boolean";
    case QuotientShape::Z3: return "Z3";
    case QuotientShape::BooleanTimesZ3: return "BooleanTimesZ3";
    case QuotientShape::Other: return "Other";
  }
  return "?";
}

QuotientShape quotient_shape_B_Z3(const FiniteRing& q) {
  if (jacobson(q).size() != 1) throw Error(ErrorCode::nonzero_radical, "quotient shape needs J = 0 in " + q.name());
  if (boolean_ring(q).holds) return QuotientShape::Boolean;
  if (q.order() == 3 && division(q).holds) return QuotientShape::Z3;
  const ElementSet central = idempotents(q) & center(q);
  for (Elem e : central.members()) {
    const Elem f = q.sub(q.one(), e);
    bool b_ok = true;
    ElementSet other = q.empty_set();
    for (Elem x = 0; x < q.order(); ++x) {
      const Elem y = q.mul(q.mul(e, x), e);
      if (q.mul(y, y) != y) b_ok = false;
      other.insert(q.mul(q.mul(f, x), f));
    }
    if (!b_ok || other.size() != 3) continue;
    bool cube = true;
    other.for_each([&](Elem z) { cube = cube && q.mul(q.mul(z, z), z) == z; });
    if (cube) return QuotientShape::BooleanTimesZ3;
  }
  return QuotientShape::Other;
}

bool ClassificationRecord::flag(std::string_view name) const {
  for (const auto& [k, v] : flags)
    if (k == name) return v;
  throw Error(ErrorCode::unknown_predicate, "unknown predicate '" + std::string(name) + "'");
}

const Witness* ClassificationRecord::witness(std::string_view name) const {
  for (const auto& [k, w] : witnesses)
    if (k == name) return &w;
  return nullptr;
}

std::size_t ClassificationRecord::size(std::string_view set) const {
  for (const auto& [k, v] : sizes)
    if (k == set) return v;
  throw Error(ErrorCode::unknown_set, "unknown set '" + std::string(set) + "'");
}

ClassificationRecord classify(const FiniteRing& r) {
  ClassificationRecord rec;
  rec.spec = r.name();
  rec.order = r.order();
  for (const auto& [name, fn] : catalog()) {
    Verdict v = fn(r);
    rec.flags.emplace_back(name, v.holds);
    if (v.witness) rec.witnesses.emplace_back(name, std::move(*v.witness));
  }
  auto routes = weakly_delta_clean_routes(r);
  if (!routes.agree()) {
    const auto& w = routes.signed_sum.witness ? *routes.signed_sum.witness : *routes.signed_set.witness;
    rec.witnesses.emplace_back("weakly_delta_clean_routes",
                               Witness{w.elements, w.labels, "the two weakly Delta-clean scans disagree: " + w.explanation});
  }
  for (auto s : {StructureSet::units, StructureSet::idempotents, StructureSet::nilpotents, StructureSet::center,
                 StructureSet::jacobson, StructureSet::delta})
    rec.sizes.emplace_back(structure_set_name(s), structure_set(r, s).size());

  auto inconsistent = [&](const char* what) {
    throw Error(ErrorCode::internal, std::string("inconsistent classification of ") + r.name() + ": " + what);
  };
  if (rec.flag("du") && !rec.flag("wdu")) inconsistent("du without wdu");
  if (rec.flag("uj") && !rec.flag("du")) inconsistent("uj without du");
  if (rec.flag("boolean") && !rec.flag("abelian")) inconsistent("boolean but not abelian");
  if (rec.flag("local") && rec.size("idempotents") != 2) inconsistent("local with nontrivial idempotents");
  return rec;
}

std::string record_json(const ClassificationRecord& rec, int indent) {
  Json j;
  j["spec"] = rec.spec;
  j["order"] = rec.order;
  Json flags = Json::object();
  for (const auto& [k, v] : rec.flags) flags[k] = v;
  j["flags"] = flags;
  Json wit = Json::object();
  for (const auto& [k, w] : rec.witnesses)
    wit[k] = Json{{"elements", w.elements}, {"labels", w.labels}, {"explanation", w.explanation}};
  j["witness"] = wit;
  Json sizes = Json::object();
  for (const auto& [k, v] : rec.sizes) sizes[k] = v;
  j["sizes"] = sizes;
  return j.dump(indent);
}

std::string record_text(const ClassificationRecord& rec) {
  std::string out = rec.spec + " (order " + std::to_string(rec.order) + ")\n";
  out += "sizes:";
  for (const auto& [k, v] : rec.sizes) out += " " + k + "=" + std::to_string(v);
  out += "\n";
  std::size_t width = 0;
  for (const auto& [k, v] : rec.flags) width = std::max(width, k.size());
  for (const auto& [k, v] : rec.flags) {
    out += "  " + k + std::string(width - k.size() + 2, ' ') + (v ? "yes" : "no");
    if (const Witness* w = rec.witness(k)) out += "  (" + w->explanation + ")";
    out += "\n";
  }
  if (const Witness* w = rec.witness("weakly_delta_clean_routes")) out += "  note: " + w->explanation + "\n";
  return out;
}

}  // namespace ringlab
