#include "ringlab/ringlab.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include <json.hpp>

#include "ringlab/cayley_io.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/structure.hpp"

struct rl_ring {
  ringlab::Ring ring;
};

struct rl_corpus {
  ringlab::Corpus corpus;
};

namespace {

using namespace ringlab;

thread_local std::string last_error;

rl_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::shape: return RL_ERR_SHAPE;
    case ErrorCode::axiom: return RL_ERR_AXIOM;
    case ErrorCode::parse: return RL_ERR_PARSE;
    case ErrorCode::io: return RL_ERR_IO;
    case ErrorCode::index_out_of_range: return RL_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::not_two_sided: return RL_ERR_NOT_TWO_SIDED;
    case ErrorCode::not_idempotent: return RL_ERR_NOT_IDEMPOTENT;
    case ErrorCode::order_cap: return RL_ERR_ORDER_CAP;
    case ErrorCode::unsupported_order: return RL_ERR_UNSUPPORTED_ORDER;
    case ErrorCode::unknown_group: return RL_ERR_UNKNOWN_GROUP;
    case ErrorCode::not_endomorphism: return RL_ERR_NOT_ENDOMORPHISM;
    case ErrorCode::bad_params: return RL_ERR_BAD_PARAMS;
    case ErrorCode::syntax: return RL_ERR_SYNTAX;
    case ErrorCode::arity: return RL_ERR_ARITY;
    case ErrorCode::unknown_name: return RL_ERR_UNKNOWN_NAME;
    case ErrorCode::unknown_predicate: return RL_ERR_UNKNOWN_PREDICATE;
    case ErrorCode::unknown_claim: return RL_ERR_UNKNOWN_CLAIM;
    case ErrorCode::unknown_set: return RL_ERR_UNKNOWN_SET;
    case ErrorCode::nonzero_radical: return RL_ERR_NONZERO_RADICAL;
    case ErrorCode::embedding_mismatch: return RL_ERR_EMBEDDING_MISMATCH;
    case ErrorCode::cross_ring: return RL_ERR_CROSS_RING;
    case ErrorCode::internal: return RL_ERR_INTERNAL;
  }
  return RL_ERR_INTERNAL;
}

rl_status fail(rl_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class F>
rl_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return RL_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RL_ERR_INTERNAL, e.what());
  }
}

const CorpusEntry& entry_at(const Corpus& c, std::size_t i) {
  if (i >= c.size()) throw Error(ErrorCode::index_out_of_range, "corpus index " + std::to_string(i) + " out of range");
  return c.entry(i);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define RL_REQUIRE(cond)                                                   \
  do {                                                                     \
    if (!(cond)) return fail(RL_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

void check_elem(const FiniteRing& r, std::uint32_t a) {
  if (a >= r.order())
    throw Error(ErrorCode::index_out_of_range, "element " + std::to_string(a) + " out of range for " + r.name());
}

std::string render_set(const FiniteRing& r, const char* name, rl_render mode) {
  const auto which = parse_structure_set(name);
  const auto members = structure_set(r, which).members();
  if (mode == RL_RENDER_JSON) {
    nlohmann::ordered_json j;
    j["set"] = structure_set_name(which);
    j["members"] = members;
    auto labels = nlohmann::ordered_json::array();
    for (auto m : members) labels.push_back(r.label(m));
    j["labels"] = labels;
    return j.dump();
  }
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += mode == RL_RENDER_LABELS ? r.label(members[i]) : std::to_string(members[i]);
  }
  return out + "}";
}

}  // namespace

extern "C" {

const char* rl_last_error(void) { return last_error.c_str(); }

const char* rl_status_name(rl_status status) {
  switch (status) {
    case RL_OK: return "ok";
    case RL_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case RL_ERR_SHAPE: return "shape";
    case RL_ERR_AXIOM: return "axiom";
    case RL_ERR_PARSE: return "parse";
    case RL_ERR_IO: return "io";
    case RL_ERR_INDEX_OUT_OF_RANGE: return "index_out_of_range";
    case RL_ERR_NOT_TWO_SIDED: return "not_two_sided";
    case RL_ERR_NOT_IDEMPOTENT: return "not_idempotent";
    case RL_ERR_ORDER_CAP: return "order_cap";
    case RL_ERR_UNSUPPORTED_ORDER: return "unsupported_order";
    case RL_ERR_UNKNOWN_GROUP: return "unknown_group";
    case RL_ERR_NOT_ENDOMORPHISM: return "not_endomorphism";
    case RL_ERR_BAD_PARAMS: return "bad_params";
    case RL_ERR_SYNTAX: return "syntax";
    case RL_ERR_ARITY: return "arity";
    case RL_ERR_UNKNOWN_NAME: return "unknown_name";
    case RL_ERR_UNKNOWN_PREDICATE: return "unknown_predicate";
    case RL_ERR_UNKNOWN_CLAIM: return "unknown_claim";
    case RL_ERR_UNKNOWN_SET: return "unknown_set";
    case RL_ERR_NONZERO_RADICAL: return "nonzero_radical";
    case RL_ERR_EMBEDDING_MISMATCH: return "embedding_mismatch";
    case RL_ERR_CROSS_RING: return "cross_ring";
    case RL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void rl_string_free(char* s) { std::free(s); }

void rl_set_order_cap(size_t cap) { set_order_cap(cap); }
size_t rl_get_order_cap(void) { return order_cap(); }

rl_status rl_parse_normalize(const char* spec, char** out) {
  RL_REQUIRE(spec && out);
  return guarded([&] { *out = dup(normalize_spec(spec)); });
}

rl_status rl_ring_from_spec(const char* spec, rl_ring** out) {
  RL_REQUIRE(spec && out);
  return guarded([&] { *out = new rl_ring{eval_spec(spec)}; });
}

rl_status rl_ring_from_cayley_file(const char* path, rl_ring** out) {
  RL_REQUIRE(path && out);
  return guarded([&] { *out = new rl_ring{validate_tables(load_cayley_file(path))}; });
}

void rl_ring_free(rl_ring* ring) { delete ring; }

size_t rl_ring_order(const rl_ring* ring) { return ring ? ring->ring->order() : 0; }
size_t rl_ring_characteristic(const rl_ring* ring) { return ring ? ring->ring->characteristic() : 0; }
uint32_t rl_ring_zero(const rl_ring* ring) { return ring ? ring->ring->zero() : 0; }
uint32_t rl_ring_one(const rl_ring* ring) { return ring ? ring->ring->one() : 0; }

rl_status rl_ring_name(const rl_ring* ring, char** out) {
  RL_REQUIRE(ring && out);
  return guarded([&] { *out = dup(ring->ring->name()); });
}

rl_status rl_ring_label(const rl_ring* ring, uint32_t a, char** out) {
  RL_REQUIRE(ring && out);
  return guarded([&] {
    check_elem(*ring->ring, a);
    *out = dup(ring->ring->label(a));
  });
}

rl_status rl_ring_add(const rl_ring* ring, uint32_t a, uint32_t b, uint32_t* out) {
  RL_REQUIRE(ring && out);
  return guarded([&] { *out = element_arith(*ring->ring, ArithOp::add, a, b); });
}

rl_status rl_ring_mul(const rl_ring* ring, uint32_t a, uint32_t b, uint32_t* out) {
  RL_REQUIRE(ring && out);
  return guarded([&] { *out = element_arith(*ring->ring, ArithOp::mul, a, b); });
}

rl_status rl_ring_neg(const rl_ring* ring, uint32_t a, uint32_t* out) {
  RL_REQUIRE(ring && out);
  return guarded([&] { *out = element_arith(*ring->ring, ArithOp::neg, a); });
}

rl_status rl_ring_pow(const rl_ring* ring, uint32_t a, uint64_t e, uint32_t* out) {
  RL_REQUIRE(ring && out);
  return guarded([&] { *out = element_arith(*ring->ring, ArithOp::pow, a, e); });
}

rl_status rl_ring_inverse(const rl_ring* ring, uint32_t a, int* is_unit, uint32_t* out) {
  RL_REQUIRE(ring && is_unit && out);
  return guarded([&] {
    check_elem(*ring->ring, a);
    auto inv = ring->ring->try_inverse(a);
    *is_unit = inv.has_value();
    if (inv) *out = *inv;
  });
}

rl_status rl_ring_set_members(const rl_ring* ring, const char* set, uint32_t* buf, size_t capacity, size_t* count) {
  RL_REQUIRE(ring && set && count && (buf || capacity == 0));
  return guarded([&] {
    const auto members = structure_set(*ring->ring, parse_structure_set(set)).members();
    *count = members.size();
    for (std::size_t i = 0; i < members.size() && i < capacity; ++i) buf[i] = members[i];
  });
}

rl_status rl_ring_set_render(const rl_ring* ring, const char* set, rl_render mode, char** out) {
  RL_REQUIRE(ring && set && out);
  RL_REQUIRE(mode == RL_RENDER_INDICES || mode == RL_RENDER_LABELS || mode == RL_RENDER_JSON);
  return guarded([&] { *out = dup(render_set(*ring->ring, set, mode)); });
}

rl_status rl_ring_classify(const rl_ring* ring, int json, char** out) {
  RL_REQUIRE(ring && out);
  return guarded([&] {
    const auto rec = classify(*ring->ring);
    *out = dup(json ? record_json(rec) : record_text(rec));
  });
}

rl_status rl_ring_predicate(const rl_ring* ring, const char* name, int* holds) {
  RL_REQUIRE(ring && name && holds);
  return guarded([&] { *holds = predicate(*ring->ring, name).holds; });
}

rl_status rl_ring_export_cayley(const rl_ring* ring, const char* path) {
  RL_REQUIRE(ring && path);
  return guarded([&] { write_cayley_file(*ring->ring, path); });
}

rl_status rl_corpus_default(rl_corpus** out) {
  RL_REQUIRE(out);
  return guarded([&] { *out = new rl_corpus{default_corpus()}; });
}

rl_status rl_corpus_from_file(const char* path, rl_corpus** out) {
  RL_REQUIRE(path && out);
  return guarded([&] { *out = new rl_corpus{corpus_from_file(path)}; });
}

rl_status rl_corpus_add_fuzz(rl_corpus* corpus, size_t count, uint64_t seed) {
  RL_REQUIRE(corpus);
  return guarded([&] { add_fuzz(corpus->corpus, count, seed); });
}

void rl_corpus_free(rl_corpus* corpus) { delete corpus; }

size_t rl_corpus_size(const rl_corpus* corpus) { return corpus ? corpus->corpus.size() : 0; }

rl_status rl_corpus_spec(const rl_corpus* corpus, size_t i, char** out) {
  RL_REQUIRE(corpus && out);
  return guarded([&] { *out = dup(entry_at(corpus->corpus, i).spec); });
}

rl_status rl_corpus_origin(const rl_corpus* corpus, size_t i, char** out) {
  RL_REQUIRE(corpus && out);
  return guarded([&] { *out = dup(entry_at(corpus->corpus, i).origin); });
}

rl_status rl_corpus_ring(const rl_corpus* corpus, size_t i, rl_ring** out) {
  RL_REQUIRE(corpus && out);
  return guarded([&] { *out = new rl_ring{entry_at(corpus->corpus, i).ring}; });
}

rl_status rl_verify(const rl_corpus* corpus, const char* id, unsigned jobs, const char* format, int color,
                    char** report, int* any_failed) {
  RL_REQUIRE(corpus && id && format && report && any_failed);
  return guarded([&] {
    const auto fmt = parse_report_format(format);
    const auto results = verify(corpus->corpus, id, jobs == 0 ? 1 : jobs);
    *any_failed = verify_exit_code(results) != 0;
    *report = dup(ringlab::report(results, fmt, color != 0));
  });
}

}  // extern "C"
