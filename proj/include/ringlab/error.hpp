#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

enum class ErrorCode {
  shape,
  axiom,
  parse,
  io,
  index_out_of_range,
  not_two_sided,
  not_idempotent,
  order_cap,
  unsupported_order,
  unknown_group,
  not_endomorphism,
  bad_params,
  syntax,
  arity,
  unknown_name,
  unknown_predicate,
  unknown_claim,
  unknown_set,
  nonzero_radical,
  embedding_mismatch,
  cross_ring,
  internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class AxiomKind {
  additive_identity_missing,
  additive_not_associative,
  additive_not_commutative,
  additive_inverse_missing,
  left_distributivity,
  right_distributivity,
  multiplicative_not_associative,
  multiplicative_identity_missing,
  identity_mismatch,
};

const char* axiom_kind_name(AxiomKind kind);

/// A failed ring law together with the elements that witness the failure.
/// Unused witness slots hold `npos`.
class AxiomViolation : public Error {
 public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  AxiomViolation(AxiomKind kind, std::array<std::uint32_t, 3> witness);
  AxiomKind kind() const noexcept { return kind_; }
  const std::array<std::uint32_t, 3>& witness() const noexcept { return witness_; }

 private:
  AxiomKind kind_;
  std::array<std::uint32_t, 3> witness_;
};

/// Malformed Cayley file input. `field` names the JSON path that failed,
/// `line` is 1-based (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(std::string field, std::size_t line, const std::string& message);
  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

/// Ring-spec DSL syntax error at a byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace ringlab
