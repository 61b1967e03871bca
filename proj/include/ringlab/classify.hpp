#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Elements demonstrating why a predicate fails, with their labels.
struct Witness {
  std::vector<Elem> elements;
  std::vector<std::string> labels;
  std::string explanation;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  explicit operator bool() const noexcept { return holds; }
};

/// U(R) = +-1 + Delta(R). The witness is a unit u with u-1, u+1 outside Delta.
Verdict is_wdu(const FiniteRing& r);
/// U(R) = 1 + Delta(R).
Verdict is_du(const FiniteRing& r);

/// Catalog order; these are the keys of ClassificationRecord::flags.
const std::vector<std::string>& predicate_names();
/// Error(unknown_predicate) for names outside the catalog.
Verdict predicate(const FiniteRing& r, std::string_view name);

/// For every a: a - a^2 or a + a^2 lies in Delta, and a - e or a + e lies in
/// Delta for some idempotent e.
Verdict square_delta_condition(const FiniteRing& r);

bool is_clean_element(const FiniteRing& r, Elem a);
/// a - e or a + e lies in Delta for some idempotent e.
bool is_weakly_delta_clean_element(const FiniteRing& r, Elem a);

/// Weakly Delta-clean decided by scanning e over Id(R) with both signs, and
/// independently by scanning f over Id(R) and -Id(R) with a - f in Delta.
struct WeaklyDeltaCleanRoutes {
  Verdict signed_sum;
  Verdict signed_set;
  bool agree() const noexcept { return signed_sum.holds == signed_set.holds; }
};
WeaklyDeltaCleanRoutes weakly_delta_clean_routes(const FiniteRing& r);

enum class QuotientShape { Boolean, Z3, BooleanTimesZ3, Other };
const char* quotient_shape_name(QuotientShape s);
/// Shape of a ring with zero Jacobson radical; Error(nonzero_radical) otherwise.
QuotientShape quotient_shape_B_Z3(const FiniteRing& q);

struct ClassificationRecord {
  std::string spec;
  std::size_t order = 0;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::pair<std::string, Witness>> witnesses;
  std::vector<std::pair<std::string, std::size_t>> sizes;

  /// Error(unknown_predicate) for names outside the catalog.
  bool flag(std::string_view name) const;
  const Witness* witness(std::string_view name) const;
  std::size_t size(std::string_view set) const;
};

/// Every catalog predicate plus set sizes. Throws Error(internal) when the
/// record violates du => wdu, uj => du, boolean => abelian or
/// local => Id = {0, 1}. Disagreement between the two weakly Delta-clean
/// routes is recorded as the witness "weakly_delta_clean_routes".
ClassificationRecord classify(const FiniteRing& r);

std::string record_json(const ClassificationRecord& rec, int indent = 2);
std::string record_text(const ClassificationRecord& rec);

}  // namespace ringlab
