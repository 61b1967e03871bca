#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class Sidedness { left, right, two };

struct Ideal {
  ElementSet members;
  Sidedness sided = Sidedness::two;
  bool two_sided() const noexcept { return sided == Sidedness::two; }
};

/// A unital subring materialized as its own ring. `embedding[i]` is the
/// element of the parent ring represented by element i of `ring`.
struct Subring {
  Ring ring;
  std::vector<Elem> embedding;
};

/// `projection[a]` is the coset of a; `representatives[c]` is the least
/// parent index in coset c.
struct Quotient {
  Ring ring;
  std::vector<Elem> projection;
  std::vector<Elem> representatives;
};

// Structural sets. All are cached on the ring and returned by reference.
const ElementSet& units(const FiniteRing& r);
const ElementSet& idempotents(const FiniteRing& r);
const ElementSet& nilpotents(const FiniteRing& r);
const ElementSet& center(const FiniteRing& r);
/// {r : 1 - x r is a unit for every x}.
const ElementSet& jacobson(const FiniteRing& r);
/// Unit-stable set {r : r + u is a unit for every unit u}. Throws
/// Error(internal) if the closure properties expected of it fail.
const ElementSet& delta(const FiniteRing& r);

bool is_nilpotent(const FiniteRing& r, Elem a);

/// Closure of `gens` together with 0 and 1 under +, -, *.
Subring subring_generated(const FiniteRing& r, std::span<const Elem> gens);
Subring unit_generated_subring(const FiniteRing& r);
/// Wraps an explicit member set as a subring; throws Error(embedding_mismatch)
/// when the set is not a unital subring.
Subring subring_from_members(const FiniteRing& r, const ElementSet& members);
/// True iff U(R) restricted to the image equals the image of U(S).
bool is_good_subring(const FiniteRing& r, const Subring& s);

Ideal ideal_closure(const FiniteRing& r, std::span<const Elem> gens, Sidedness sided);
bool is_ideal(const FiniteRing& r, const ElementSet& set, Sidedness sided);
/// Short generating list for a two-sided ideal, greedily chosen in index order.
std::vector<Elem> ideal_generators(const FiniteRing& r, const ElementSet& ideal);

Quotient quotient(const FiniteRing& r, const Ideal& ideal);
/// Cached R/J(R).
const Quotient& jacobson_quotient(const FiniteRing& r);

Subring corner(const FiniteRing& r, Elem e);
/// Primitive central idempotents, in index order. Their corners are the
/// indecomposable block factors of the ring.
std::vector<Elem> primitive_central_idempotents(const FiniteRing& r);

struct LiftResult {
  bool all_lift = true;
  /// (coset index in R/J, lifted idempotent of R) for every idempotent coset
  /// that lifts.
  std::vector<std::pair<Elem, Elem>> lifts;
  std::optional<Elem> failing_coset;
};
LiftResult idempotents_lift(const FiniteRing& r);

struct RightIdealIdempotentResult {
  bool holds = true;
  std::optional<Elem> witness;  // a with aR free of nonzero idempotents
};
RightIdealIdempotentResult every_nonzero_right_ideal_has_idempotent(const FiniteRing& r);

/// aR as a set.
ElementSet right_multiples(const FiniteRing& r, Elem a);

enum class StructureSet { units, idempotents, nilpotents, center, jacobson, delta };
StructureSet parse_structure_set(std::string_view name);
const char* structure_set_name(StructureSet s);
const ElementSet& structure_set(const FiniteRing& r, StructureSet s);

}  // namespace ringlab
