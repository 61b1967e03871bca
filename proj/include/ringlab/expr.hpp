#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

using ExprPtr = std::shared_ptr<const RingExpr>;

enum class ArgKind { integer, expr, list, ident, string };

struct ExprArg {
  ArgKind kind = ArgKind::integer;
  std::int64_t value = 0;
  ExprPtr expr;
  std::vector<std::int64_t> list;
  std::string text;  // ident or string literal contents
};

/// Ring-spec AST node: a constructor name applied to its arguments, e.g.
/// Mat(2, Zn(3)) or Quot(Zn(9), [3]).
struct RingExpr {
  std::string name;
  std::vector<ExprArg> args;
};

/// Node names with their argument kinds:
///   Zn(int) GF(int) Prod(e, e) Mat(int, e) UT(int, e) SD(int, e)
///   Trunc(e, int) Snm(int, int, e) Tnm(int, int, e) Un(int, e) Triv(e)
///   Grp(e, group) SkewTrunc(e, endo, int) Quot(e, [int, ...])
///   Corner(e, int) File("path")
/// Throws SyntaxError, Error(arity), Error(unknown_name), or Error(bad_params)
/// for integer parameters below 1 (element indices may be 0).
ExprPtr parse_spec(std::string_view text);

/// Canonical form with ", " separators; parse_spec(print_expr(e)) == e.
std::string print_expr(const RingExpr& e);
std::string normalize_spec(std::string_view text);

/// Evaluates specs to rings, reusing the ring of any subexpression already
/// seen by this evaluator. Each result is named by its normalized spec and
/// carries its expression as provenance. Safe for concurrent use.
class Evaluator {
 public:
  Ring eval(const ExprPtr& e);
  Ring eval(std::string_view text) { return eval(parse_spec(text)); }

 private:
  Ring eval_locked(const ExprPtr& e);
  std::recursive_mutex mutex_;
  std::map<std::string, Ring> memo_;
};

Ring eval_spec(std::string_view text);

}  // namespace ringlab
