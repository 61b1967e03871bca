#include "ringlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ringlab/constructors.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

// ---------------------------------------------------------------- corpus

struct Corpus::Slot {
  std::once_flag once;
  std::unique_ptr<ClassificationRecord> rec;
};

Corpus::Corpus()
    : evaluator_(std::make_shared<Evaluator>()),
      records_mutex_(std::make_shared<std::mutex>()),
      records_(std::make_shared<std::map<std::string, std::shared_ptr<Slot>>>()) {}

bool Corpus::add(std::string_view spec, std::string origin) {
  Ring r = evaluator_->eval(spec);
  for (const auto& e : entries_)
    if (e.spec == r->name()) return false;
  entries_.push_back(CorpusEntry{r->name(), r, std::move(origin)});
  return true;
}

void Corpus::add_ring(Ring ring, std::string origin) {
  entries_.push_back(CorpusEntry{ring->name(), ring, std::move(origin)});
}

const ClassificationRecord& Corpus::record(const FiniteRing& r) const {
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard lock(*records_mutex_);
    auto& s = (*records_)[r.name()];
    if (!s) s = std::make_shared<Slot>();
    slot = s;
  }
  std::call_once(slot->once, [&] { slot->rec = std::make_unique<ClassificationRecord>(classify(r)); });
  return *slot->rec;
}

std::vector<std::string> default_atom_specs() {
  std::vector<std::string> out;
  for (int n = 1; n <= 16; ++n) out.push_back("Zn(" + std::to_string(n) + ")");
  out.push_back("Zn(27)");
  for (int q : {2, 3, 4, 5, 7, 8, 9}) out.push_back("GF(" + std::to_string(q) + ")");
  const std::vector<std::string> small = {"Zn(2)", "Zn(3)", "Zn(4)", "GF(4)"};
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j) out.push_back("Prod(" + small[i] + ", " + small[j] + ")");
  for (const char* r : {"Zn(2)", "Zn(3)", "Zn(4)"}) out.push_back(std::string("Mat(2, ") + r + ")");
  out.push_back("Mat(3, Zn(2))");
  for (const char* c : {"UT", "SD"})
    for (int k : {2, 3})
      for (const char* r : {"Zn(2)", "Zn(3)"}) out.push_back(std::string(c) + "(" + std::to_string(k) + ", " + r + ")");
  for (const char* r : {"Zn(2)", "Zn(3)", "Zn(4)"})
    for (int k : {2, 3}) out.push_back(std::string("Trunc(") + r + ", " + std::to_string(k) + ")");
  out.push_back("Snm(2, 2, Zn(2))");
  out.push_back("Tnm(2, 2, Zn(2))");
  out.push_back("Un(3, Zn(2))");
  for (const char* r : {"Zn(2)", "Zn(3)", "Zn(4)"}) out.push_back(std::string("Triv(") + r + ")");
  for (const char* r : {"Zn(2)", "Zn(3)", "Zn(4)"})
    for (const char* g : {"C2", "C3", "C4", "C2xC2"}) out.push_back(std::string("Grp(") + r + ", " + g + ")");
  out.push_back("SkewTrunc(GF(4), frob, 2)");
  return out;
}

namespace {

std::string index_list_text(const std::vector<Elem>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "]";
}

}  // namespace

Corpus default_corpus() {
  Corpus c;
  std::vector<Ring> atoms;
  for (const auto& spec : default_atom_specs()) {
    try {
      if (c.add(spec, "atom")) atoms.push_back(c.entries().back().ring);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::order_cap) throw;
    }
  }
  for (const auto& r : atoms) {
    const auto& j = jacobson(*r);
    if (j.size() <= 1) continue;
    c.add("Quot(" + r->name() + ", " + index_list_text(ideal_generators(*r, j)) + ")", "jacobson-quotient");
  }
  for (const auto& r : atoms) {
    std::vector<Ring> kept;
    for (Elem e : idempotents(*r).members()) {
      if (e == r->zero() || e == r->one()) continue;
      if (kept.size() >= kCornersPerAtom) break;
      Ring cr = c.eval("Corner(" + r->name() + ", " + std::to_string(e) + ")");
      bool dup = std::any_of(kept.begin(), kept.end(), [&](const Ring& k) { return k->same_tables(*cr); });
      if (dup) continue;
      kept.push_back(cr);
      c.add(cr->name(), "corner");
    }
  }
  return c;
}

Corpus corpus_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot read corpus file " + path);
  Corpus c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string spec = line.substr(first, last - first + 1);
    try {
      c.add(spec, "file");
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.offset(), e.expected(), std::string(path) + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(e.code(), path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return c;
}

void add_fuzz(Corpus& corpus, std::size_t count, std::uint64_t seed) {
  std::vector<Ring> pool;
  for (const auto& e : corpus.entries())
    if (!e.ring->is_zero_ring() && e.ring->order() <= 64) pool.push_back(e.ring);
  if (pool.empty()) return;
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::size_t added = 0;
  for (std::size_t attempt = 0; added < count && attempt < 50 * count + 50; ++attempt) {
    const Ring& a = pool[pick(pool.size())];
    std::string spec;
    if (rng() % 2 == 0) {
      const Ring& b = pool[pick(pool.size())];
      if (a->order() * b->order() > 512) continue;
      spec = "Prod(" + a->name() + ", " + b->name() + ")";
    } else {
      auto id = idempotents(*a).members();
      std::vector<Elem> nontrivial;
      for (Elem e : id)
        if (e != a->zero() && e != a->one()) nontrivial.push_back(e);
      if (nontrivial.empty()) continue;
      spec = "Corner(" + a->name() + ", " + std::to_string(nontrivial[pick(nontrivial.size())]) + ")";
    }
    if (corpus.add(spec, "fuzz")) ++added;
  }
}

// ---------------------------------------------------------------- claims

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::fails: return "fails";
    case ClaimStatus::vacuous: return "vacuous";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxWitnesses = 10;

class Tally {
 public:
  explicit Tally(std::string id) { res_.id = std::move(id); }

  void count(std::size_t k = 1) { res_.checked += k; }
  void hit() { ++hits_; }

  void fail(const FiniteRing& r, const std::vector<Elem>& elems, std::string why) {
    std::vector<std::string> labels;
    for (Elem e : elems) labels.push_back(r.label(e));
    fail(r.name(), std::move(labels), std::move(why));
  }
  void fail(std::string ring, std::vector<std::string> labels, std::string why) {
    ++failures_;
    if (res_.witnesses.size() < kMaxWitnesses)
      res_.witnesses.push_back(ClaimWitness{std::move(ring), std::move(labels), std::move(why)});
  }
  void note(std::string n) { res_.notes.push_back(std::move(n)); }

  // Implication instance: counted only when the antecedent holds.
  template <class F>
  void implies(bool antecedent, bool consequent, F&& on_fail) {
    if (!antecedent) return;
    count();
    hit();
    if (!consequent) on_fail();
  }

  ClaimResult finish() {
    if (failures_ > res_.witnesses.size())
      note(std::to_string(failures_ - res_.witnesses.size()) + " further counterexample(s) omitted");
    if (failures_) res_.status = ClaimStatus::fails;
    else if (hits_ == 0) res_.status = ClaimStatus::vacuous;
    else res_.status = ClaimStatus::holds;
    return std::move(res_);
  }

 private:
  ClaimResult res_;
  std::size_t hits_ = 0;
  std::size_t failures_ = 0;
};

// Nonzero corpus rings, in corpus order.
template <class F>
void each_ring(const Corpus& c, F&& f) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& e = c.entry(i);
    if (e.ring->is_zero_ring()) continue;
    f(*e.ring, c.record(i));
  }
}

std::vector<Elem> witness_elems(const ClassificationRecord& rec, std::string_view pred) {
  const Witness* w = rec.witness(pred);
  return w ? w->elements : std::vector<Elem>{};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

bool in_set(const FiniteRing& r, StructureSet s, std::int64_t k) { return structure_set(r, s).contains(r.int_embed(k)); }

// Equivalence check over several conditions: all must agree.
void all_agree(Tally& t, const FiniteRing& r, const std::vector<std::pair<std::string, bool>>& conds) {
  t.count();
  bool any = false, all = true;
  for (const auto& [name, v] : conds) {
    any = any || v;
    all = all && v;
  }
  if (any) t.hit();
  if (any && !all) {
    std::string why = "conditions disagree:";
    for (const auto& [name, v] : conds) why += " " + name + "=" + yes_no(v);
    t.fail(r, {}, why);
  }
}

// Orders of the simple blocks of a ring with J = 0, smallest first.
std::vector<std::size_t> block_orders(const FiniteRing& q) {
  std::vector<std::size_t> out;
  for (Elem e : primitive_central_idempotents(q)) out.push_back(corner(q, e).ring->order());
  std::sort(out.begin(), out.end());
  return out;
}

// Every block is Z2 or Z3 with at most (or, strictly, exactly) one Z3.
bool z2_z3_blocks(const std::vector<std::size_t>& orders, bool strict) {
  std::size_t threes = 0;
  for (auto o : orders) {
    if (o == 3) ++threes;
    else if (o != 2) return false;
  }
  return strict ? threes == 1 : threes <= 1;
}

const RingExpr* top_expr(const FiniteRing& r) { return r.provenance().get(); }

bool quotient_shape_ok(const FiniteRing& r) {
  auto shape = quotient_shape_B_Z3(*jacobson_quotient(r).ring);
  return shape != QuotientShape::Other;
}

ClaimResult c1(const Corpus& c) {
  Tally t("C1");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const bool covered = (units(r) | delta(r)).size() == r.order();
    const bool local = rec.flag("local");
    t.count();
    if (covered || local) t.hit();
    if (covered && !local) t.fail(r, {}, "R = U u Delta but R is not local");
    if (local && !covered) {
      Elem x = (units(r) | delta(r)).complement().members().at(0);
      t.fail(r, {x}, "local ring with an element outside U u Delta");
    }
  });
  return t.finish();
}

ClaimResult c2(const Corpus& c) {
  Tally t("C2");
  std::size_t local = 0, boolean = 0, third = 0, overlap = 0;
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const bool covered = (units(r) | delta(r) | idempotents(r)).size() == r.order();
    if (!covered) return;
    const bool b1 = rec.flag("local");
    const bool b2 = rec.flag("boolean");
    const bool b3 = !rec.flag("abelian") && rec.flag("dedekind_finite") && r.characteristic() == 2;
    local += b1;
    boolean += b2;
    third += b3;
    overlap += b1 && b2;
    t.implies(true, (b1 || b2 || b3) && !(b3 && (b1 || b2)) && !(b1 && b2 && r.order() != 2), [&] {
      t.fail(r, {}, "R = U u Delta u Id but local=" + yes_no(b1) + ", boolean=" + yes_no(b2) +
                        ", non-abelian Dedekind-finite char 2=" + yes_no(b3));
    });
  });
  t.note("branches: local " + std::to_string(local) + ", Boolean " + std::to_string(boolean) +
         ", non-abelian Dedekind-finite of characteristic 2 " + std::to_string(third));
  t.note("local and Boolean overlap on " + std::to_string(overlap) +
         " ring(s), all of order 2; the check requires at least one branch, branch three excluding the others, "
         "and any local Boolean ring to have order 2");
  if (third == 0) t.note("the non-abelian branch was not reached by any corpus ring");
  return t.finish();
}

const std::vector<std::string>& product_pair_atoms() {
  static const std::vector<std::string> v = {"Zn(2)", "Zn(3)", "Zn(4)", "Zn(5)", "GF(4)", "Zn(9)", "UT(2, Zn(2))",
                                             "Trunc(Zn(3), 2)"};
  return v;
}

const std::vector<std::string>& product_triple_atoms() {
  static const std::vector<std::string> v = {"Zn(2)", "Zn(3)", "Zn(4)", "Zn(5)", "GF(4)"};
  return v;
}

ClaimResult c3(const Corpus& c) {
  Tally t("C3");
  for (const auto& a : product_pair_atoms())
    for (const auto& b : product_pair_atoms()) {
      Ring r = c.eval(a), s = c.eval(b);
      const bool hyp = c.record(*r).flag("wdu") && c.record(*s).flag("du");
      if (!hyp) continue;
      Ring p = c.eval("Prod(" + a + ", " + b + ")");
      const auto& rec = c.record(*p);
      t.implies(true, rec.flag("wdu"), [&] { t.fail(*p, witness_elems(rec, "wdu"), "WDU x DU product is not WDU"); });
    }
  t.note("checked over ordered pairs of " + std::to_string(product_pair_atoms().size()) + " factor rings");
  return t.finish();
}

ClaimResult c4(const Corpus& c) {
  Tally t("C4");
  auto check = [&](const std::vector<std::string>& factors) {
    std::string spec = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) spec = "Prod(" + spec + ", " + factors[i] + ")";
    Ring p = c.eval(spec);
    bool all_wdu = true;
    std::size_t not_du = 0;
    for (const auto& f : factors) {
      const auto& fr = c.record(*c.eval(f));
      all_wdu = all_wdu && fr.flag("wdu");
      not_du += !fr.flag("du");
    }
    const bool rhs = all_wdu && not_du <= 1;
    const bool lhs = c.record(*p).flag("wdu");
    t.count();
    if (lhs || rhs) t.hit();
    if (lhs != rhs)
      t.fail(*p, {}, "product WDU=" + yes_no(lhs) + " but factors all WDU with at most one non-DU=" + yes_no(rhs));
  };
  const auto& pa = product_pair_atoms();
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = i; j < pa.size(); ++j) check({pa[i], pa[j]});
  const auto& ta = product_triple_atoms();
  for (std::size_t i = 0; i < ta.size(); ++i)
    for (std::size_t j = i; j < ta.size(); ++j)
      for (std::size_t k = j; k < ta.size(); ++k) check({ta[i], ta[j], ta[k]});
  return t.finish();
}

ClaimResult c5(const Corpus& c) {
  Tally t("C5");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    if (!rec.flag("wdu")) return;
    for (Elem e : idempotents(r).members()) {
      auto sub = corner(r, e);
      auto v = is_wdu(*sub.ring);
      t.implies(true, v.holds, [&] {
        t.fail(r, {e}, "corner at " + r.label(e) + " is not WDU: " + v.witness->explanation);
      });
    }
  });
  return t.finish();
}

ClaimResult c6(const Corpus& c) {
  Tally t("C6");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const RingExpr* e = top_expr(r);
    if (!e || e->name != "Mat" || e->args[0].value < 2) return;
    if (c.eval(e->args[1].expr)->is_zero_ring()) return;
    t.implies(true, !rec.flag("wdu"), [&] { t.fail(r, {}, "full matrix ring is WDU"); });
    if (const Witness* w = rec.witness("wdu"))
      t.note(r.name() + ": unit " + w->labels.at(0) + " is not +-1 + Delta");
  });
  return t.finish();
}

ClaimResult c7(const Corpus& c) {
  Tally t("C7");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    t.implies(rec.flag("wdu"), rec.flag("dedekind_finite"),
              [&] { t.fail(r, witness_elems(rec, "dedekind_finite"), "WDU ring is not Dedekind-finite"); });
  });
  t.note("every finite ring is Dedekind-finite, so this check has no discriminating power here");
  return t.finish();
}

ClaimResult c8(const Corpus& c) {
  Tally t("C8");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const bool hyp = rec.flag("wdu") && rec.flag("semisimple") && every_nonzero_right_ideal_has_idempotent(r).holds;
    t.implies(hyp, rec.flag("reduced"), [&] { t.fail(r, witness_elems(rec, "reduced"), "ring is not reduced"); });
  });
  return t.finish();
}

ClaimResult c9(const Corpus& c) {
  Tally t("C9");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    if (!rec.flag("wdu")) return;
    using S = StructureSet;
    t.count();
    t.hit();
    if (in_set(r, S::units, 3) != in_set(r, S::delta, 4)) t.fail(r, {}, "3 in U differs from 4 in Delta");
    if (in_set(r, S::units, 2) != in_set(r, S::delta, 3)) t.fail(r, {}, "2 in U differs from 3 in Delta");
    if (in_set(r, S::delta, 3) && idempotents(r).size() != 2) t.fail(r, {}, "3 in Delta but Id has more than {0, 1}");
    if (in_set(r, S::delta, 10) && !in_set(r, S::delta, 4)) t.fail(r, {}, "10 in Delta but 4 not in Delta");
  });
  return t.finish();
}

ClaimResult c10(const Corpus& c) {
  Tally t("C10");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const bool lhs = rec.flag("du");
    const bool rhs = rec.flag("wdu") && in_set(r, StructureSet::delta, 2);
    t.count();
    if (lhs || rhs) t.hit();
    if (lhs != rhs) t.fail(r, {}, "DU=" + yes_no(lhs) + " but (WDU and 2 in Delta)=" + yes_no(rhs));
  });
  return t.finish();
}

ClaimResult c11(const Corpus& c) {
  Tally t("C11");
  std::size_t n_div = 0, n_local = 0, n_ss = 0;
  std::vector<std::string> strict_gap;
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const bool wdu = rec.flag("wdu");
    t.count();
    if (wdu) t.hit();
    if (rec.flag("division")) {
      ++n_div;
      const bool rhs = r.order() == 2 || r.order() == 3;
      if (wdu != rhs) t.fail(r, {}, "(1) division ring: WDU=" + yes_no(wdu) + ", isomorphic to Z2 or Z3=" + yes_no(rhs));
    }
    const auto& q = *jacobson_quotient(r).ring;
    if (rec.flag("local")) {
      ++n_local;
      const bool rhs = q.order() == 2 || q.order() == 3;
      if (wdu != rhs) t.fail(r, {}, "(2) local ring: WDU=" + yes_no(wdu) + ", R/J is Z2 or Z3=" + yes_no(rhs));
    }
    const auto blocks = block_orders(q);
    if (rec.flag("semisimple")) {
      ++n_ss;
      const bool rhs = z2_z3_blocks(blocks, false);
      if (wdu != rhs) t.fail(r, {}, "(3) semisimple ring: WDU=" + yes_no(wdu) + ", Z2^k or Z2^k x Z3=" + yes_no(rhs));
      if (wdu && !z2_z3_blocks(blocks, true)) strict_gap.push_back(r.name());
    }
    const bool rhs4 = z2_z3_blocks(blocks, false);
    if (wdu != rhs4) t.fail(r, {}, "(4) WDU=" + yes_no(wdu) + ", R/J is Z2^k or Z2^k x Z3=" + yes_no(rhs4));
  });
  t.note("parts checked: (1) " + std::to_string(n_div) + " division rings, (2) " + std::to_string(n_local) +
         " local rings, (3) " + std::to_string(n_ss) + " semisimple rings, (4) all rings");
  std::string gap = "inclusive reading used: the factors are copies of Z2 with at most one Z3. The reading with "
                    "exactly one Z3 would fail on " + std::to_string(strict_gap.size()) + " semisimple WDU ring(s)";
  if (!strict_gap.empty()) {
    gap += ", e.g.";
    for (std::size_t i = 0; i < std::min<std::size_t>(3, strict_gap.size()); ++i) gap += " " + strict_gap[i];
  }
  t.note(gap);
  return t.finish();
}

ClaimResult c12(const Corpus& c) {
  Tally t("C12");
  std::size_t diverged = 0;
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    if (const Witness* w = rec.witness("weakly_delta_clean_routes")) {
      ++diverged;
      t.fail(r, w->elements, w->explanation);
    }
    const bool wdc = rec.flag("weakly_delta_clean");
    t.implies(wdc, rec.flag("wdu") && rec.flag("clean"), [&] {
      t.fail(r, {}, "weakly Delta-clean but WDU=" + yes_no(rec.flag("wdu")) + ", clean=" + yes_no(rec.flag("clean")));
    });
  });
  t.note(diverged ? "the two sign placements of the weakly Delta-clean decomposition diverged on " +
                        std::to_string(diverged) + " ring(s)"
                  : "both sign placements of the weakly Delta-clean decomposition agreed on every ring");
  return t.finish();
}

ClaimResult c13(const Corpus& c) {
  Tally t("C13");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    std::optional<Elem> bad;
    for (Elem a = 0; a < r.order() && !bad; ++a)
      if (is_clean_element(r, a) && !is_weakly_delta_clean_element(r, a)) bad = a;
    const bool lhs = rec.flag("wdu");
    const bool rhs = !bad;
    t.count();
    if (lhs || rhs) t.hit();
    if (lhs != rhs)
      t.fail(r, bad ? std::vector<Elem>{*bad} : std::vector<Elem>{},
             "WDU=" + yes_no(lhs) + " but every clean element weakly Delta-clean=" + yes_no(rhs));
  });
  return t.finish();
}

ClaimResult c14(const Corpus& c) {
  Tally t("C14");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const bool wdu = rec.flag("wdu"), wdc = rec.flag("weakly_delta_clean");
    all_agree(t, r,
              {{"clean WDU", rec.flag("clean") && wdu},
               {"a+-a^2 and a+-e in Delta", square_delta_condition(r).holds},
               {"weakly Delta-clean WDU", wdc && wdu},
               {"weakly Delta-clean", wdc}});
  });
  return t.finish();
}

ClaimResult c15(const Corpus& c) {
  Tally t("C15");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const bool wdu = rec.flag("wdu");
    all_agree(t, r,
              {{"exchange WDU", rec.flag("exchange") && wdu},
               {"clean WDU", rec.flag("clean") && wdu},
               {"weakly Delta-clean", rec.flag("weakly_delta_clean")},
               {"lifting and R/J in {B, Z3, B x Z3}", idempotents_lift(r).all_lift && quotient_shape_ok(r)}});
  });
  return t.finish();
}

ClaimResult c16(const Corpus& c) {
  Tally t("C16");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const bool wdu = rec.flag("wdu");
    all_agree(t, r,
              {{"semi-regular WDU", rec.flag("semi_regular") && wdu},
               {"exchange WDU", rec.flag("exchange") && wdu},
               {"semi-weakly Boolean", rec.flag("semi_weakly_boolean")}});
  });
  return t.finish();
}

ClaimResult c17(const Corpus& c) {
  Tally t("C17");
  std::size_t first = 0, second = 0;
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    if (rec.flag("wdu")) {
      ++first;
      const bool a = rec.flag("semi_regular"), b = rec.flag("exchange"), d = rec.flag("clean");
      t.implies(true, a == b && b == d, [&] {
        t.fail(r, {}, "WDU ring with semi-regular=" + yes_no(a) + ", exchange=" + yes_no(b) + ", clean=" + yes_no(d));
      });
    }
    if (rec.flag("exchange")) {
      ++second;
      t.implies(true, rec.flag("wdu") == rec.flag("wuj"), [&] {
        t.fail(r, {}, "exchange ring with WDU=" + yes_no(rec.flag("wdu")) + ", WUJ=" + yes_no(rec.flag("wuj")));
      });
    }
  });
  t.note("WDU rings checked: " + std::to_string(first) + "; exchange rings checked: " + std::to_string(second));
  return t.finish();
}

ClaimResult c18(const Corpus& c) {
  Tally t("C18");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const bool lhs = rec.flag("weakly_clean") && rec.flag("wdu") && in_set(r, StructureSet::units, 2);
    const bool rhs = quotient_shape_B_Z3(*jacobson_quotient(r).ring) == QuotientShape::Z3;
    t.count();
    if (lhs || rhs) t.hit();
    if (lhs != rhs) t.fail(r, {}, "weakly clean WDU with 2 a unit=" + yes_no(lhs) + " but R/J is Z3=" + yes_no(rhs));
  });
  return t.finish();
}

ClaimResult c19(const Corpus& c) {
  Tally t("C19");
  std::map<std::string, std::size_t> seen;
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const RingExpr* e = top_expr(r);
    if (!e) return;
    std::size_t base_arg;
    const std::string& n = e->name;
    if (n == "UT" || n == "SD" || n == "Un") base_arg = 1;
    else if (n == "Trunc" || n == "Triv") base_arg = 0;
    else if (n == "Snm" || n == "Tnm") base_arg = 2;
    else return;
    if (n == "UT" && e->args[0].value < 2) return;
    Ring base = c.eval(e->args[base_arg].expr);
    if (base->is_zero_ring()) return;
    const auto& brec = c.record(*base);
    ++seen[n];
    t.count();
    if (rec.flag("wdu") || brec.flag("wdu")) t.hit();
    if (n == "UT") {
      const bool a = rec.flag("wdu"), b = rec.flag("du"), d = brec.flag("du");
      if (!(a == b && b == d))
        t.fail(r, {}, "T_n(R) WDU=" + yes_no(a) + ", T_n(R) DU=" + yes_no(b) + ", R DU=" + yes_no(d));
    } else if (rec.flag("wdu") != brec.flag("wdu")) {
      t.fail(r, {}, "ring WDU=" + yes_no(rec.flag("wdu")) + " but base " + base->name() + " WDU=" + yes_no(brec.flag("wdu")));
    }
  });
  std::string kinds = "instances by constructor:";
  for (const auto& [k, v] : seen) kinds += " " + k + "=" + std::to_string(v);
  t.note(kinds);
  return t.finish();
}

ClaimResult c20(const Corpus& c) {
  Tally t("C20");
  std::size_t parts[5] = {0, 0, 0, 0, 0};
  std::size_t good = 0, pairs = 0;
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord& rec) {
    const RingExpr* e = top_expr(r);
    if (!e || e->name != "Grp") return;
    Ring base = c.eval(e->args[0].expr);
    if (base->is_zero_ring()) return;
    const GroupTable g = GroupTable::preset(e->args[1].text);
    const bool rg = rec.flag("wdu");
    const auto& brec = c.record(*base);
    if (rg) {
      ++parts[0];
      t.implies(true, brec.flag("wdu"), [&] { t.fail(r, {}, "(a) RG is WDU but R is not"); });
      GroupRing full = group_ring(base, g);
      for (const auto& h : g.small_subgroups()) {
        auto sub = group_subring(full, h);
        ++parts[1];
        ++pairs;
        if (is_good_subring(*full.ring, Subring{sub.sub.ring, sub.embedding})) ++good;
        auto v = is_wdu(*sub.sub.ring);
        t.implies(true, v.holds, [&] {
          t.fail(r, {}, "(b) subgroup ring " + sub.sub.ring->name() + " is not WDU: " + v.witness->explanation);
        });
      }
    }
    const std::size_t p = g.p_group_prime();
    if (p && brec.flag("wdu") && jacobson(*base).contains(base->int_embed(static_cast<std::int64_t>(p)))) {
      ++parts[2];
      t.implies(true, rg, [&] {
        t.fail(r, witness_elems(rec, "wdu"), "(c) R WDU, p in J(R), G a p-group, but RG is not WDU");
      });
    }
    if (rg && in_set(r, StructureSet::delta, 2)) {
      ++parts[3];
      t.implies(true, g.is_p_group(2), [&] { t.fail(r, {}, "(d) RG WDU with 2 in Delta but G is not a 2-group"); });
    }
    if (rg && in_set(r, StructureSet::delta, 3) && g.is_p_group(2)) {
      ++parts[4];
      t.implies(true, g.exponent() <= 2, [&] { t.fail(r, {}, "(e) G has exponent " + std::to_string(g.exponent())); });
    }
  });
  t.note("instances: (a) " + std::to_string(parts[0]) + ", (b) " + std::to_string(parts[1]) + ", (c) " +
         std::to_string(parts[2]) + ", (d) " + std::to_string(parts[3]) + ", (e) " + std::to_string(parts[4]));
  t.note("(b) subgroup rings that are good subrings of RG: " + std::to_string(good) + " of " + std::to_string(pairs));
  t.note("every finite group is torsion, so the torsion necessity condition is automatic here");
  return t.finish();
}

ClaimResult c21(const Corpus& c) {
  Tally t("C21");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord&) {
    t.implies(true, delta(r) == jacobson(r), [&] {
      Elem x = ((delta(r) - jacobson(r)) | (jacobson(r) - delta(r))).members().at(0);
      t.fail(r, {x}, "element in exactly one of Delta and J");
    });
  });
  return t.finish();
}

ClaimResult c22(const Corpus& c) {
  Tally t("C22");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord&) {
    const RingExpr* e = top_expr(r);
    if (!e || e->name != "Triv") return;
    Ring base = c.eval(e->args[0].expr);
    const std::size_t m = base->order();
    bool ok = true;
    for (Elem x = 0; x < r.order() && ok; ++x) {
      const Elem first = static_cast<Elem>(x / m);
      if (delta(r).contains(x) != delta(*base).contains(first)) {
        ok = false;
        t.fail(r, {x}, "Delta(T(R, R)) differs from pairs (d, m) with d in Delta(R)");
      } else if (units(r).contains(x) != units(*base).contains(first)) {
        ok = false;
        t.fail(r, {x}, "U(T(R, R)) differs from pairs (u, m) with u in U(R)");
      }
    }
    t.count();
    t.hit();
  });
  return t.finish();
}

ClaimResult c23(const Corpus& c) {
  Tally t("C23");
  each_ring(c, [&](const FiniteRing& r, const ClassificationRecord&) {
    auto sub = unit_generated_subring(r);
    ElementSet image = r.empty_set();
    jacobson(*sub.ring).for_each([&](Elem x) { image.insert(sub.embedding[x]); });
    t.implies(true, image == delta(r), [&] {
      Elem x = ((image - delta(r)) | (delta(r) - image)).members().at(0);
      t.fail(r, {x}, "Delta(R) differs from J of the unit-generated subring");
    });
  });
  return t.finish();
}

}  // namespace

const std::vector<Claim>& claims() {
  static const std::vector<Claim> registry = {
      {"C1", "R = U(R) u Delta(R) iff R is local", "nonzero rings", c1},
      {"C2", "R = U(R) u Delta(R) u Id(R) implies R is local, Boolean, or non-abelian Dedekind-finite of characteristic 2 (the last case excludes the other two)",
       "nonzero rings covered by U u Delta u Id", c2},
      {"C3", "R WDU and S DU implies R x S WDU", "products of fixed factor rings", c3},
      {"C4", "a finite product is WDU iff every factor is WDU and at most one factor is not DU",
       "pairs and triples of fixed factor rings", c4},
      {"C5", "R WDU implies eRe WDU for every idempotent e", "WDU rings", c5},
      {"C6", "M_n(R) is not WDU for n >= 2 and R nonzero", "full matrix rings", c6},
      {"C7", "every WDU ring is Dedekind-finite", "WDU rings", c7},
      {"C8", "R WDU, J(R) = 0 and every nonzero right ideal containing a nonzero idempotent implies R reduced",
       "WDU semisimple rings", c8},
      {"C9", "for WDU R: 3 in U iff 4 in Delta; 2 in U iff 3 in Delta; 3 in Delta implies Id = {0, 1}; 10 in Delta implies 4 in Delta",
       "WDU rings", c9},
      {"C10", "R is DU iff R is WDU and 2 in Delta(R)", "nonzero rings", c10},
      {"C11", "division, local, semisimple and semilocal rings are WDU exactly for the Z2/Z3 shapes",
       "nonzero rings", c11},
      {"C12", "weakly Delta-clean implies WDU and clean", "weakly Delta-clean rings", c12},
      {"C13", "R is WDU iff every clean element is weakly Delta-clean", "nonzero rings", c13},
      {"C14", "clean WDU iff a +- a^2 and a +- e in Delta iff weakly Delta-clean WDU iff weakly Delta-clean",
       "nonzero rings", c14},
      {"C15", "exchange WDU iff clean WDU iff weakly Delta-clean iff idempotents lift and R/J is B, Z3 or B x Z3",
       "nonzero rings", c15},
      {"C16", "semi-regular WDU iff exchange WDU iff semi-weakly Boolean", "nonzero rings", c16},
      {"C17", "for WDU rings semi-regular iff exchange iff clean; for exchange rings WDU iff WUJ",
       "WDU rings and exchange rings", c17},
      {"C18", "weakly clean WDU with 2 a unit iff R/J is Z3", "nonzero rings", c18},
      {"C19", "triangular, truncated, banded and trivial-extension rings are WDU exactly when the base ring is (DU for T_n)",
       "rings built by UT, SD, Trunc, Snm, Tnm, Un, Triv", c19},
      {"C20", "group ring heredity, p-group sufficiency, 2-group and exponent-2 necessity", "group rings", c20},
      {"C21", "Delta(R) = J(R)", "nonzero rings", c21},
      {"C22", "Delta(T(R, R)) = T(Delta(R), R) and U(T(R, R)) = T(U(R), R)", "trivial extensions", c22},
      {"C23", "Delta(R) = J(T) for T the subring generated by the units", "nonzero rings", c23},
  };
  return registry;
}

ClaimResult verify_claim(std::string_view id, const Corpus& corpus) {
  for (const auto& cl : claims())
    if (cl.id == id) return cl.check(corpus);
  throw Error(ErrorCode::unknown_claim, "unknown claim '" + std::string(id) + "'");
}

namespace {

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<ClaimResult> verify(const Corpus& corpus, std::string_view id, unsigned jobs) {
  std::vector<const Claim*> selected;
  for (const auto& cl : claims())
    if (id == "all" || cl.id == id) selected.push_back(&cl);
  if (selected.empty()) throw Error(ErrorCode::unknown_claim, "unknown claim '" + std::string(id) + "'");
  parallel_for(corpus.size(), jobs, [&](std::size_t i) { corpus.record(i); });
  std::vector<ClaimResult> out(selected.size());
  parallel_for(selected.size(), jobs, [&](std::size_t i) { out[i] = selected[i]->check(corpus); });
  return out;
}

std::vector<ClaimResult> verify_all(const Corpus& corpus, unsigned jobs) { return verify(corpus, "all", jobs); }

int verify_exit_code(const std::vector<ClaimResult>& results) {
  for (const auto& r : results)
    if (r.status == ClaimStatus::fails) return 1;
  return 0;
}

// ---------------------------------------------------------------- reports

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "markdown") return ReportFormat::markdown;
  throw Error(ErrorCode::bad_params, "unknown report format '" + std::string(name) + "'");
}

namespace {

std::string witness_text(const ClaimWitness& w) {
  std::string s = w.ring;
  if (!w.elements.empty()) {
    s += " [";
    for (std::size_t i = 0; i < w.elements.size(); ++i) s += (i ? ", " : "") + w.elements[i];
    s += "]";
  }
  return s + ": " + w.explanation;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string md_cell(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

const char* status_color(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return "\033[32m";
    case ClaimStatus::fails: return "\033[31m";
    case ClaimStatus::vacuous: return "\033[33m";
  }
  return "";
}

}  // namespace

std::string report(const std::vector<ClaimResult>& results, ReportFormat format, bool color) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::text:
      for (const auto& r : results) {
        std::string status = claim_status_name(r.status);
        if (color) status = status_color(r.status) + status + "\033[0m";
        out << r.id << " " << status << " (" << r.checked << (r.checked == 1 ? " instance)" : " instances)") << "\n";
        for (const auto& n : r.notes) out << "  note: " << n << "\n";
        for (const auto& w : r.witnesses) out << "  witness: " << witness_text(w) << "\n";
      }
      out << "note: the zero ring is excluded from every claim\n";
      break;
    case ReportFormat::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : results) {
        auto wit = nlohmann::ordered_json::array();
        for (const auto& w : r.witnesses)
          wit.push_back({{"ring", w.ring}, {"elements", w.elements}, {"explanation", w.explanation}});
        arr.push_back({{"id", r.id},
                       {"status", claim_status_name(r.status)},
                       {"checked", r.checked},
                       {"witnesses", wit},
                       {"notes", r.notes}});
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case ReportFormat::csv:
      out << "id,status,checked,witnesses\n";
      for (const auto& r : results) {
        std::string ws;
        for (const auto& w : r.witnesses) ws += (ws.empty() ? "" : "; ") + witness_text(w);
        out << r.id << "," << claim_status_name(r.status) << "," << r.checked << "," << csv_field(ws) << "\n";
      }
      break;
    case ReportFormat::markdown:
      out << "| id | status | checked | witnesses | notes |\n|---|---|---|---|---|\n";
      for (const auto& r : results) {
        std::string ws, ns;
        for (const auto& w : r.witnesses) ws += (ws.empty() ? "" : "; ") + witness_text(w);
        for (const auto& n : r.notes) ns += (ns.empty() ? "" : "; ") + n;
        out << "| " << r.id << " | " << claim_status_name(r.status) << " | " << r.checked << " | " << md_cell(ws)
            << " | " << md_cell(ns) << " |\n";
      }
      break;
  }
  return out.str();
}

}  // namespace ringlab
