#pragma once

// Seeded property suites shared by the unit tests and the acceptance binary.
// Each suite draws `cases` random instances and reports how many failed.

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "ringlab/cayley_io.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/structure.hpp"

namespace props {

using ringlab::Elem;
using ringlab::FiniteRing;
using ringlab::Ring;

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool passed() const { return failures == 0 && cases > 0; }
};

inline constexpr std::size_t kCases = 120;

inline const ringlab::Corpus& shared_corpus() {
  static const ringlab::Corpus c = ringlab::default_corpus();
  return c;
}

inline std::vector<Ring> small_rings() {
  static const char* specs[] = {
      "Zn(2)", "Zn(3)", "Zn(4)", "Zn(5)", "Zn(6)", "Zn(8)", "Zn(9)", "Zn(12)",
      "GF(4)", "GF(8)", "GF(9)", "Prod(Zn(2), Zn(2))", "Prod(Zn(2), Zn(3))",
      "UT(2, Zn(2))", "Trunc(Zn(2), 2)", "Trunc(Zn(2), 3)", "Trunc(Zn(3), 2)",
      "Triv(Zn(2))", "Triv(Zn(3))", "Grp(Zn(2), C2)", "Grp(Zn(2), C3)", "Grp(Zn(3), C2)",
      "SD(3, Zn(2))", "Mat(2, Zn(2))", "SkewTrunc(GF(4), frob, 2)", "Grp(Zn(4), C2)",
  };
  ringlab::Evaluator ev;
  std::vector<Ring> out;
  for (auto s : specs) out.push_back(ev.eval(s));
  return out;
}

// Changes one table entry of a small ring and checks that validation rejects
// the tables exactly when the brute-force axiom scan does.
inline SuiteResult axiom_perturbation(std::uint64_t seed, std::size_t cases = kCases) {
  SuiteResult res{"axiom perturbation"};
  const auto pool = small_rings();
  std::mt19937_64 rng(seed);
  std::size_t rejected = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    const Ring& base = pool[rng() % pool.size()];
    ringlab::RingTables t = base->tables();
    const std::size_t n = t.order;
    auto& table = rng() % 2 ? t.add : t.mul;
    const std::size_t cell = rng() % (n * n);
    table[cell] = static_cast<Elem>((table[cell] + 1 + rng() % (n - 1)) % n);
    oracle::Tables o{n, t.add, t.mul};
    const bool is_ring = oracle::is_ring(o);
    bool accepted = true;
    try {
      ringlab::FiniteRing::validate(t);
    } catch (const ringlab::AxiomViolation&) {
      accepted = false;
    }
    rejected += !accepted;
    res.check(accepted == is_ring, base->name() + ": validate " + (accepted ? "accepted" : "rejected") +
                                       " a perturbed table at cell " + std::to_string(cell));
    ++res.cases;
  }
  res.check(rejected > 0, "no perturbation was rejected");
  return res;
}

// try_inverse agrees with a brute-force inverse search, is symmetric, and
// inverts products in reverse order.
inline SuiteResult inverse_symmetry(std::uint64_t seed, std::size_t cases = kCases) {
  SuiteResult res{"inverse symmetry"};
  const auto& corpus = shared_corpus();
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const FiniteRing& r = *corpus.entry(rng() % corpus.size()).ring;
    const Elem a = static_cast<Elem>(rng() % r.order());
    const Elem b = static_cast<Elem>(rng() % r.order());
    const auto t = oracle::copy(r);
    const auto u = oracle::units(t);
    const auto ia = r.try_inverse(a);
    const std::string at = r.name() + " at " + r.label(a);
    res.check(ia.has_value() == u[a], at + ": unit status disagrees with brute force");
    if (ia) {
      res.check(r.mul(a, *ia) == r.one() && r.mul(*ia, a) == r.one(), at + ": inverse is one-sided");
      res.check(r.try_inverse(*ia) == a, at + ": inverse of inverse differs");
      if (auto ib = r.try_inverse(b)) {
        res.check(r.try_inverse(r.mul(a, b)) == r.mul(*ib, *ia), at + ": (ab)^-1 != b^-1 a^-1");
      }
    }
    ++res.cases;
  }
  return res;
}

// R/J(R) has zero radical; R/I has |R|/|I| elements and the projection is a
// ring map, for I generated by a random element.
inline SuiteResult quotient_radical_nullity(std::uint64_t seed, std::size_t cases = kCases) {
  SuiteResult res{"quotient radical nullity"};
  const auto& corpus = shared_corpus();
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const FiniteRing& r = *corpus.entry(rng() % corpus.size()).ring;
    const auto& q = ringlab::jacobson_quotient(r);
    res.check(ringlab::jacobson(*q.ring).size() == 1, r.name() + ": J(R/J) is nonzero");
    res.check(oracle::jacobson(oracle::copy(*q.ring)).size() == 1, r.name() + ": oracle finds J(R/J) nonzero");

    const Elem g = static_cast<Elem>(rng() % r.order());
    const Elem gens[] = {g};
    const auto ideal = ringlab::ideal_closure(r, gens, ringlab::Sidedness::two);
    const auto qi = ringlab::quotient(r, ideal);
    const std::string at = r.name() + " mod (" + r.label(g) + ")";
    res.check(qi.ring->order() * ideal.members.size() == r.order(), at + ": |R| != |I| |R/I|");
    for (int k = 0; k < 8; ++k) {
      const Elem x = static_cast<Elem>(rng() % r.order()), y = static_cast<Elem>(rng() % r.order());
      res.check(qi.projection[r.add(x, y)] == qi.ring->add(qi.projection[x], qi.projection[y]), at + ": + not preserved");
      res.check(qi.projection[r.mul(x, y)] == qi.ring->mul(qi.projection[x], qi.projection[y]), at + ": * not preserved");
    }
    // J(R) maps into J(R/I) under a surjection.
    const auto& jq = ringlab::jacobson(*qi.ring);
    for (Elem j : ringlab::jacobson(r).members()) res.check(jq.contains(qi.projection[j]), at + ": image of J leaves J(R/I)");
    ++res.cases;
  }
  return res;
}

// Implications that hold in every finite ring, plus the Delta-based flags
// against brute force.
inline SuiteResult implication_lattice(std::uint64_t seed, std::size_t cases = kCases) {
  SuiteResult res{"implication lattice"};
  ringlab::Corpus corpus = ringlab::default_corpus();
  ringlab::add_fuzz(corpus, 40, seed);
  std::mt19937_64 rng(seed);
  static const std::vector<std::pair<const char*, const char*>> implies = {
      {"du", "wdu"},          {"uj", "du"},           {"wuj", "wdu"},        {"uj", "wuj"},
      {"uu", "wuu"},          {"boolean", "abelian"}, {"boolean", "reduced"}, {"boolean", "weakly_boolean"},
      {"boolean", "du"},      {"division", "local"},  {"local", "abelian"},  {"delta_clean", "weakly_delta_clean"},
      {"j_clean", "delta_clean"}, {"clean", "weakly_clean"}, {"unit_regular", "regular"},
      {"strongly_regular", "unit_regular"}, {"regular", "semi_regular"}, {"semisimple", "regular"},
      {"regular", "semisimple"},
  };
  static const char* always[] = {"clean", "exchange", "semi_regular", "dedekind_finite"};
  for (std::size_t c = 0; c < cases; ++c) {
    const FiniteRing& r = *corpus.entry(rng() % corpus.size()).ring;
    const auto& rec = corpus.record(r);
    for (auto [a, b] : implies)
      res.check(!rec.flag(a) || rec.flag(b), r.name() + ": " + a + " without " + b);
    for (auto a : always) res.check(rec.flag(a), r.name() + ": finite ring is not " + a);
    const auto t = oracle::copy(r);
    res.check(rec.flag("wdu") == oracle::is_wdu(t), r.name() + ": wdu disagrees with brute force");
    res.check(rec.flag("du") == oracle::is_du(t), r.name() + ": du disagrees with brute force");
    res.check(rec.witness("weakly_delta_clean_routes") == nullptr, r.name() + ": weakly Delta-clean routes disagree");
    ++res.cases;
  }
  return res;
}

inline std::string random_spec(std::mt19937_64& rng, int depth) {
  auto n = [&](int lo, int hi) { return std::to_string(lo + static_cast<int>(rng() % (hi - lo + 1))); };
  auto sub = [&] { return random_spec(rng, depth - 1); };
  const int leaf_kinds = 3;
  const int kind = depth <= 0 ? static_cast<int>(rng() % leaf_kinds) : static_cast<int>(rng() % 15);
  switch (kind) {
    case 0: return "Zn(" + n(1, 99) + ")";
    case 1: return "GF(" + n(2, 9) + ")";
    case 2: return "File(\"dir/ring \\\"" + n(0, 9) + "\\\".json\")";
    case 3: return "Prod(" + sub() + ", " + sub() + ")";
    case 4: return "Mat(" + n(1, 4) + ", " + sub() + ")";
    case 5: return "UT(" + n(1, 4) + ", " + sub() + ")";
    case 6: return "SD(" + n(1, 4) + ", " + sub() + ")";
    case 7: return "Trunc(" + sub() + ", " + n(1, 5) + ")";
    case 8: return "Snm(" + n(1, 4) + ", " + n(1, 4) + ", " + sub() + ")";
    case 9: return "Tnm(" + n(1, 4) + ", " + n(1, 4) + ", " + sub() + ")";
    case 10: return "Un(" + n(1, 5) + ", " + sub() + ")";
    case 11: return "Triv(" + sub() + ")";
    case 12: return "Grp(" + sub() + ", " + (rng() % 2 ? "C2" : "S3") + ")";
    case 13: return "SkewTrunc(" + sub() + ", " + (rng() % 2 ? "id" : "frob") + ", " + n(1, 3) + ")";
    default: {
      std::string list = "[";
      const int len = static_cast<int>(rng() % 4);
      for (int i = 0; i < len; ++i) list += (i ? ", " : "") + n(0, 30);
      return rng() % 2 ? "Quot(" + sub() + ", " + list + "])" : "Corner(" + sub() + ", " + n(0, 30) + ")";
    }
  }
}

// Inserts random whitespace after every delimiter and removes the canonical
// single spaces, without touching string literals.
inline std::string scramble(const std::string& s, std::mt19937_64& rng) {
  static const char* ws[] = {"", " ", "  ", "\t", "\n "};
  std::string out;
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_string) {
      out += c;
      if (c == '\\') out += s[++i];
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == ' ') continue;
    out += c;
    if (c == '"') in_string = true;
    if (c == '(' || c == ',' || c == '[' || c == ')' || c == ']') out += ws[rng() % 5];
  }
  return ws[rng() % 5] + out;
}

inline SuiteResult parser_round_trip(std::uint64_t seed, std::size_t cases = kCases) {
  SuiteResult res{"parser round-trip"};
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const std::string spec = random_spec(rng, static_cast<int>(rng() % 4));
    try {
      const std::string printed = ringlab::print_expr(*ringlab::parse_spec(spec));
      res.check(printed == spec, "print(parse(" + spec + ")) = " + printed);
      res.check(ringlab::normalize_spec(printed) == printed, spec + ": normalize is not idempotent");
      res.check(ringlab::normalize_spec(scramble(spec, rng)) == spec, spec + ": whitespace changed the parse");
    } catch (const std::exception& e) {
      res.check(false, spec + ": " + e.what());
    }
    ++res.cases;
  }
  return res;
}

inline bool same_record(const ringlab::ClassificationRecord& a, const ringlab::ClassificationRecord& b) {
  if (a.order != b.order || a.flags != b.flags || a.sizes != b.sizes || a.witnesses.size() != b.witnesses.size())
    return false;
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    const auto& [na, wa] = a.witnesses[i];
    const auto& [nb, wb] = b.witnesses[i];
    if (na != nb || wa.elements != wb.elements || wa.labels != wb.labels) return false;
  }
  return true;
}

// Writes a random corpus ring to a Cayley file, reloads it through File(...)
// and compares classification records (everything except the spec string).
inline SuiteResult export_import(std::uint64_t seed, const std::filesystem::path& dir, std::size_t cases = kCases) {
  SuiteResult res{"export/import record equality"};
  const auto& corpus = shared_corpus();
  std::mt19937_64 rng(seed);
  std::filesystem::create_directories(dir);
  for (std::size_t c = 0; c < cases; ++c) {
    const auto& e = corpus.entry(rng() % corpus.size());
    const auto path = dir / ("ring" + std::to_string(c) + ".json");
    try {
      ringlab::write_cayley_file(*e.ring, path.string());
      ringlab::Evaluator ev;
      std::string quoted;
      for (char ch : path.string()) {
        if (ch == '"' || ch == '\\') quoted += '\\';
        quoted += ch;
      }
      const Ring back = ev.eval("File(\"" + quoted + "\")");
      res.check(back->same_tables(*e.ring), e.spec + ": reloaded tables differ");
      res.check(same_record(ringlab::classify(*e.ring), ringlab::classify(*back)), e.spec + ": records differ");
    } catch (const std::exception& ex) {
      res.check(false, e.spec + ": " + ex.what());
    }
    std::filesystem::remove(path);
    ++res.cases;
  }
  return res;
}

}  // namespace props
