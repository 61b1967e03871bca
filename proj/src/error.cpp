#include "ringlab/error.hpp"

#include <sstream>

namespace ringlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::shape: return "ShapeError";
    case ErrorCode::axiom: return "AxiomViolation";
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::io: return "IoError";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::not_two_sided: return "NotTwoSided";
    case ErrorCode::not_idempotent: return "NotIdempotent";
    case ErrorCode::order_cap: return "OrderCap";
    case ErrorCode::unsupported_order: return "UnsupportedOrder";
    case ErrorCode::unknown_group: return "UnknownGroup";
    case ErrorCode::not_endomorphism: return "NotEndomorphism";
    case ErrorCode::bad_params: return "BadParams";
    case ErrorCode::syntax: return "SyntaxError";
    case ErrorCode::arity: return "ArityError";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::unknown_predicate: return "UnknownPredicate";
    case ErrorCode::unknown_claim: return "UnknownClaim";
    case ErrorCode::unknown_set: return "UnknownSet";
    case ErrorCode::nonzero_radical: return "NonzeroRadical";
    case ErrorCode::embedding_mismatch: return "EmbeddingMismatch";
    case ErrorCode::cross_ring: return "CrossRing";
    case ErrorCode::internal: return "InternalInvariantViolation";
  }
  return "Error";
}

const char* axiom_kind_name(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::additive_identity_missing: return "additive identity missing";
    case AxiomKind::additive_not_associative: return "addition not associative";
    case AxiomKind::additive_not_commutative: return "addition not commutative";
    case AxiomKind::additive_inverse_missing: return "additive inverse missing";
    case AxiomKind::left_distributivity: return "left distributivity fails";
    case AxiomKind::right_distributivity: return "right distributivity fails";
    case AxiomKind::multiplicative_not_associative: return "multiplication not associative";
    case AxiomKind::multiplicative_identity_missing: return "multiplicative identity missing";
    case AxiomKind::identity_mismatch: return "declared identity does not match";
  }
  return "axiom violation";
}

namespace {

std::string describe_axiom(AxiomKind kind, const std::array<std::uint32_t, 3>& w) {
  std::ostringstream out;
  out << axiom_kind_name(kind);
  bool first = true;
  for (auto x : w) {
    if (x == AxiomViolation::npos) continue;
    out << (first ? " at (" : ", ") << x;
    first = false;
  }
  if (!first) out << ")";
  return out.str();
}

std::string describe_syntax(std::size_t offset, const std::vector<std::string>& expected,
                            const std::string& found) {
  std::ostringstream out;
  out << "syntax error at offset " << offset << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out << (i + 1 == expected.size() ? " or " : ", ");
    out << expected[i];
  }
  out << ", found " << found;
  return out.str();
}

}  // namespace

AxiomViolation::AxiomViolation(AxiomKind kind, std::array<std::uint32_t, 3> witness)
    : Error(ErrorCode::axiom, describe_axiom(kind, witness)), kind_(kind), witness_(witness) {}

ParseError::ParseError(std::string field, std::size_t line, const std::string& message)
    : Error(ErrorCode::parse,
            (line ? "line " + std::to_string(line) + ": " : std::string()) +
                (field.empty() ? message : field + ": " + message)),
      field_(std::move(field)),
      line_(line) {}

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorCode::syntax, describe_syntax(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace ringlab
