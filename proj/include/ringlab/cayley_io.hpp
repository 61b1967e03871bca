#pragma once

#include <string>
#include <string_view>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Parses the JSON Cayley format. Shape problems (missing fields, ragged
/// rows, out-of-range entries) raise ParseError naming the offending field.
/// Ring axioms are not checked here.
CayleySpec parse_cayley_json(std::string_view text);

/// Reads and parses a Cayley file; Error(io) when it cannot be read.
CayleySpec load_cayley_file(const std::string& path);

/// Emits {"name", "order", "zero", "one", "labels", "add", "mul"}; name and
/// labels are omitted when absent.
std::string emit_cayley_json(const CayleySpec& spec);
std::string emit_cayley_json(const FiniteRing& ring);

void write_cayley_file(const FiniteRing& ring, const std::string& path);

}  // namespace ringlab
