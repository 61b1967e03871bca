#include "ringlab/cayley_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ringlab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::int64_t as_index(const ordered_json& v, const std::string& field, std::size_t order) {
  if (!v.is_number_integer()) throw ParseError(field, 0, "expected an integer");
  auto x = v.get<std::int64_t>();
  if (x < 0 || static_cast<std::uint64_t>(x) >= order)
    throw ParseError(field, 0, "entry " + std::to_string(x) + " outside 0.." + std::to_string(order - 1));
  return x;
}

std::vector<std::vector<std::int64_t>> read_table(const ordered_json& doc, const char* key, std::size_t order) {
  if (!doc.contains(key)) throw ParseError(key, 0, "missing field");
  const auto& rows = doc.at(key);
  if (!rows.is_array()) throw ParseError(key, 0, "expected an array of rows");
  if (rows.size() != order)
    throw ParseError(key, 0, "expected " + std::to_string(order) + " rows, found " + std::to_string(rows.size()));
  std::vector<std::vector<std::int64_t>> out(order);
  for (std::size_t i = 0; i < order; ++i) {
    const std::string field = std::string(key) + "[" + std::to_string(i) + "]";
    const auto& row = rows[i];
    if (!row.is_array()) throw ParseError(field, 0, "expected an array");
    if (row.size() != order)
      throw ParseError(field, 0, "expected " + std::to_string(order) + " entries, found " + std::to_string(row.size()));
    out[i].reserve(order);
    for (std::size_t j = 0; j < order; ++j) out[i].push_back(as_index(row[j], field + "[" + std::to_string(j) + "]", order));
  }
  return out;
}

}  // namespace

CayleySpec parse_cayley_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", line_of(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  if (!doc.is_object()) throw ParseError("", 1, "top level must be an object");

  CayleySpec spec;
  if (!doc.contains("order")) throw ParseError("order", 0, "missing field");
  const auto& order = doc.at("order");
  if (!order.is_number_integer() || order.get<std::int64_t>() < 1) throw ParseError("order", 0, "expected a positive integer");
  spec.order = order.get<std::size_t>();

  spec.add = read_table(doc, "add", spec.order);
  spec.mul = read_table(doc, "mul", spec.order);
  if (doc.contains("zero")) spec.zero = as_index(doc.at("zero"), "zero", spec.order);
  if (doc.contains("one")) spec.one = as_index(doc.at("one"), "one", spec.order);
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ParseError("name", 0, "expected a string");
    spec.name = doc.at("name").get<std::string>();
  }
  if (doc.contains("labels")) {
    const auto& labels = doc.at("labels");
    if (!labels.is_array() || labels.size() != spec.order)
      throw ParseError("labels", 0, "expected an array of " + std::to_string(spec.order) + " strings");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].is_string()) throw ParseError("labels[" + std::to_string(i) + "]", 0, "expected a string");
      spec.labels.push_back(labels[i].get<std::string>());
    }
  }
  return spec;
}

CayleySpec load_cayley_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io, "cannot read " + path);
  return parse_cayley_json(buf.str());
}

std::string emit_cayley_json(const CayleySpec& spec) {
  ordered_json doc;
  if (!spec.name.empty()) doc["name"] = spec.name;
  doc["order"] = spec.order;
  if (spec.zero) doc["zero"] = *spec.zero;
  if (spec.one) doc["one"] = *spec.one;
  if (!spec.labels.empty()) doc["labels"] = spec.labels;
  doc["add"] = spec.add;
  doc["mul"] = spec.mul;
  return doc.dump() + "\n";
}

std::string emit_cayley_json(const FiniteRing& ring) { return emit_cayley_json(ring.to_spec()); }

void write_cayley_file(const FiniteRing& ring, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  out << emit_cayley_json(ring);
  if (!out) throw Error(ErrorCode::io, "write failed for " + path);
}

}  // namespace ringlab
