#include "ringlab/expr.hpp"

#include <cctype>
#include <limits>

#include "ringlab/cayley_io.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

namespace {

struct Signature {
  const char* name;
  std::vector<ArgKind> args;
};

const std::vector<Signature>& signatures() {
  using K = ArgKind;
  static const std::vector<Signature> table = {
      {"Zn", {K::integer}},
      {"GF", {K::integer}},
      {"Prod", {K::expr, K::expr}},
      {"Mat", {K::integer, K::expr}},
      {"UT", {K::integer, K::expr}},
      {"SD", {K::integer, K::expr}},
      {"Trunc", {K::expr, K::integer}},
      {"Snm", {K::integer, K::integer, K::expr}},
      {"Tnm", {K::integer, K::integer, K::expr}},
      {"Un", {K::integer, K::expr}},
      {"Triv", {K::expr}},
      {"Grp", {K::expr, K::ident}},
      {"SkewTrunc", {K::expr, K::ident, K::integer}},
      {"Quot", {K::expr, K::list}},
      {"Corner", {K::expr, K::integer}},
      {"File", {K::string}},
  };
  return table;
}

const char* kind_name(ArgKind k) {
  switch (k) {
    case ArgKind::integer: return "integer";
    case ArgKind::expr: return "ring expression";
    case ArgKind::list: return "index list";
    case ArgKind::ident: return "identifier";
    case ArgKind::string: return "string";
  }
  return "?";
}

// Integer arguments that are element indices rather than sizes.
bool index_argument(const std::string& node, std::size_t pos) { return node == "Corner" && pos == 1; }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ExprPtr parse() {
    skip();
    auto e = expr();
    skip();
    if (pos_ != s_.size()) error({"end of input"});
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string found() const {
    if (pos_ >= s_.size()) return "end of input";
    std::size_t end = pos_ + 1;
    if (std::isalnum(static_cast<unsigned char>(s_[pos_])))
      while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
    return "'" + std::string(s_.substr(pos_, end - pos_)) + "'";
  }

  [[noreturn]] void error(std::vector<std::string> expected) const { throw SyntaxError(pos_, std::move(expected), found()); }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) error({std::string("'") + c + "'"});
    ++pos_;
  }

  bool at_name() const { return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'); }
  bool at_int() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip();
    if (!at_int()) error({"integer"});
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (at_int()) {
      const int d = s_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10)
        throw SyntaxError(start, {"integer"}, "integer too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::string string_literal() {
    ++pos_;  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= s_.size()) error({"'\"'"});
      char c = s_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= s_.size()) error({"escaped character"});
        c = s_[pos_++];
      }
      out += c;
    }
    return out;
  }

  ExprArg argument() {
    skip();
    ExprArg a;
    if (at_int()) {
      a.kind = ArgKind::integer;
      a.value = integer();
    } else if (pos_ < s_.size() && s_[pos_] == '[') {
      ++pos_;
      a.kind = ArgKind::list;
      if (!peek(']')) {
        a.list.push_back(integer());
        while (peek(',')) {
          ++pos_;
          a.list.push_back(integer());
        }
      }
      expect(']');
    } else if (pos_ < s_.size() && s_[pos_] == '"') {
      a.kind = ArgKind::string;
      a.text = string_literal();
    } else if (at_name()) {
      const std::size_t save = pos_;
      std::string n = name();
      if (peek('(')) {
        pos_ = save;
        a.kind = ArgKind::expr;
        a.expr = expr();
      } else {
        a.kind = ArgKind::ident;
        a.text = std::move(n);
      }
    } else {
      error({"integer", "'['", "string", "name"});
    }
    return a;
  }

  ExprPtr expr() {
    skip();
    if (!at_name()) error({"name"});
    const std::size_t start = pos_;
    auto node = std::make_shared<RingExpr>();
    node->name = name();
    const Signature* sig = nullptr;
    for (const auto& s : signatures())
      if (node->name == s.name) sig = &s;
    if (!sig) throw Error(ErrorCode::unknown_name, "unknown ring constructor '" + node->name + "' at offset " + std::to_string(start));
    if (!peek('(')) throw Error(ErrorCode::arity, node->name + " expects " + std::to_string(sig->args.size()) + " argument(s)");
    ++pos_;
    if (!peek(')')) {
      node->args.push_back(argument());
      while (peek(',')) {
        ++pos_;
        node->args.push_back(argument());
      }
    }
    expect(')');
    check_signature(*node, *sig);
    return node;
  }

  static void check_signature(const RingExpr& node, const Signature& sig) {
    if (node.args.size() != sig.args.size())
      throw Error(ErrorCode::arity, node.name + " expects " + std::to_string(sig.args.size()) + " argument(s), got " +
                                        std::to_string(node.args.size()));
    for (std::size_t i = 0; i < sig.args.size(); ++i) {
      const auto& a = node.args[i];
      if (a.kind != sig.args[i])
        throw Error(ErrorCode::arity, node.name + " argument " + std::to_string(i + 1) + " must be " +
                                          kind_name(sig.args[i]) + ", got " + kind_name(a.kind));
      if (a.kind == ArgKind::integer && !index_argument(node.name, i) && a.value < 1)
        throw Error(ErrorCode::bad_params, node.name + " argument " + std::to_string(i + 1) + " must be at least 1");
    }
  }
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::size_t as_size(std::int64_t v) { return static_cast<std::size_t>(v); }

Elem as_elem(const FiniteRing& r, std::int64_t v) {
  if (v < 0 || static_cast<std::uint64_t>(v) >= r.order())
    throw Error(ErrorCode::index_out_of_range, "element " + std::to_string(v) + " out of range for " + r.name());
  return static_cast<Elem>(v);
}

}  // namespace

ExprPtr parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const RingExpr& e) {
  std::string out = e.name + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ", ";
    const auto& a = e.args[i];
    switch (a.kind) {
      case ArgKind::integer: out += std::to_string(a.value); break;
      case ArgKind::expr: out += print_expr(*a.expr); break;
      case ArgKind::ident: out += a.text; break;
      case ArgKind::string: out += quote(a.text); break;
      case ArgKind::list:
        out += "[";
        for (std::size_t j = 0; j < a.list.size(); ++j) out += (j ? ", " : "") + std::to_string(a.list[j]);
        out += "]";
        break;
    }
  }
  return out + ")";
}

std::string normalize_spec(std::string_view text) { return print_expr(*parse_spec(text)); }

Ring Evaluator::eval(const ExprPtr& e) {
  std::lock_guard lock(mutex_);
  return eval_locked(e);
}

Ring Evaluator::eval_locked(const ExprPtr& e) {
  const std::string key = print_expr(*e);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const auto& n = e->name;
  const auto& a = e->args;
  auto sub = [&](std::size_t i) { return eval_locked(a[i].expr); };
  Ring r;
  if (n == "Zn") r = zmod(as_size(a[0].value));
  else if (n == "GF") r = galois_field(as_size(a[0].value));
  else if (n == "Prod") r = product(*sub(0), *sub(1));
  else if (n == "Mat") r = matrix_ring(as_size(a[0].value), *sub(1));
  else if (n == "UT") r = upper_triangular(as_size(a[0].value), *sub(1));
  else if (n == "SD") r = constant_diag_triangular(as_size(a[0].value), *sub(1));
  else if (n == "Trunc") r = trunc_poly(*sub(0), as_size(a[1].value));
  else if (n == "Snm") r = shaped_triangular(TriangularShape::Snm, as_size(a[0].value), as_size(a[1].value), *sub(2));
  else if (n == "Tnm") r = shaped_triangular(TriangularShape::Tnm, as_size(a[0].value), as_size(a[1].value), *sub(2));
  else if (n == "Un") r = shaped_triangular(TriangularShape::Un, as_size(a[0].value), 0, *sub(1));
  else if (n == "Triv") r = trivial_extension(*sub(0));
  else if (n == "Grp") r = group_ring(sub(0), GroupTable::preset(a[1].text)).ring;
  else if (n == "SkewTrunc") {
    auto base = sub(0);
    r = skew_trunc(*base, EndoMap::by_name(*base, a[1].text), as_size(a[2].value));
  } else if (n == "Quot") {
    auto base = sub(0);
    std::vector<Elem> gens;
    for (auto v : a[1].list) gens.push_back(as_elem(*base, v));
    r = quotient(*base, ideal_closure(*base, gens, Sidedness::two)).ring;
  } else if (n == "Corner") {
    auto base = sub(0);
    r = corner(*base, as_elem(*base, a[1].value)).ring;
  } else if (n == "File") {
    r = validate_tables(load_cayley_file(a[0].text));
  } else {
    throw Error(ErrorCode::unknown_name, "unknown ring constructor '" + n + "'");
  }
  r = r->with_provenance(e, key);
  memo_.emplace(key, r);
  return r;
}

Ring eval_spec(std::string_view text) {
  Evaluator ev;
  return ev.eval(text);
}

}  // namespace ringlab
