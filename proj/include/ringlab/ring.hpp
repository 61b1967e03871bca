#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

struct RingExpr;

namespace detail {
struct DerivedCache;
}

/// Unvalidated Cayley-table description of a ring, as read from a file.
/// Tables are row-major: add[i][j] = i + j.
struct CayleySpec {
  std::size_t order = 0;
  std::vector<std::vector<std::int64_t>> add;
  std::vector<std::vector<std::int64_t>> mul;
  std::optional<std::int64_t> zero;
  std::optional<std::int64_t> one;
  std::vector<std::string> labels;  // empty when absent
  std::string name;                 // empty when absent
};

/// Flat tables as produced by the constructors. `add` and `mul` have
/// order*order entries.
struct RingTables {
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  std::vector<std::string> labels;
  std::string name;
  std::optional<Elem> zero;
  std::optional<Elem> one;
};

class FiniteRing;
using Ring = std::shared_ptr<const FiniteRing>;

/// Immutable finite unital ring on the elements 0..n-1. Instances are only
/// created through validation, so every FiniteRing satisfies the ring axioms.
/// Derived structural sets are cached per instance; the cache is safe for
/// concurrent readers.
class FiniteRing {
 public:
  struct Private;
  FiniteRing(const Private&, std::shared_ptr<const RingTables> tables, Elem zero, Elem one,
             std::vector<Elem> neg, std::shared_ptr<const RingExpr> provenance, std::string name);
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;
  ~FiniteRing();

  /// Checks every ring axiom, deriving zero, one and negation.
  /// Throws AxiomViolation for a failed law, Error(shape) for malformed tables.
  static Ring validate(RingTables tables);

  std::size_t order() const noexcept { return n_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  bool is_zero_ring() const noexcept { return n_ == 1; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * n_ + neg_[b]]; }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Two-sided inverse, verified on both sides.
  std::optional<Elem> try_inverse(Elem a) const;
  bool is_unit(Elem a) const { return try_inverse(a).has_value(); }

  /// k * one, computed additively.
  Elem int_embed(std::int64_t k) const noexcept;
  std::size_t characteristic() const noexcept;

  const std::string& name() const noexcept;
  bool has_labels() const noexcept;
  std::string label(Elem a) const;
  const std::shared_ptr<const RingExpr>& provenance() const noexcept { return provenance_; }

  /// Same tables, fresh cache, new provenance and display name.
  Ring with_provenance(std::shared_ptr<const RingExpr> expr, std::string name) const;

  bool same_tables(const FiniteRing& other) const noexcept;
  const RingTables& tables() const noexcept { return *tables_; }
  CayleySpec to_spec() const;

  ElementSet empty_set() const { return ElementSet(this, n_); }
  ElementSet full_set() const { return empty_set().complement(); }

  detail::DerivedCache& cache() const noexcept { return *cache_; }

 private:
  std::shared_ptr<const RingTables> tables_;
  std::size_t n_;
  const Elem* add_;
  const Elem* mul_;
  std::vector<Elem> neg_;
  Elem zero_;
  Elem one_;
  std::shared_ptr<const RingExpr> provenance_;
  std::string name_;
  std::shared_ptr<detail::DerivedCache> cache_;
};

/// Shape-checks a Cayley spec and validates it as a ring.
Ring validate_tables(const CayleySpec& spec);

enum class ArithOp { add, mul, neg, sub, pow };

/// Range-checked element arithmetic. `b` is the second operand, or the
/// exponent for pow; it is ignored for neg.
Elem element_arith(const FiniteRing& ring, ArithOp op, Elem a, std::uint64_t b = 0);

inline ElementSet::ElementSet(const FiniteRing& ring) : ElementSet(&ring, ring.order()) {}

}  // namespace ringlab
