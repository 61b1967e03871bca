#include "ringlab/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ringlab/error.hpp"

namespace ringlab {

GroupTable::GroupTable(std::string name, std::vector<std::size_t> table, std::vector<std::string> element_names)
    : name_(std::move(name)), n_(element_names.size()), mul_(std::move(table)), names_(std::move(element_names)) {
  auto bad = [&](const std::string& msg) { throw Error(ErrorCode::bad_params, "group " + name_ + ": " + msg); };
  if (n_ == 0 || mul_.size() != n_ * n_) bad("table has the wrong shape");
  for (auto x : mul_)
    if (x >= n_) bad("table entry out of range");
  bool found = false;
  for (std::size_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) bad("no identity");
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) bad("not associative");
  inv_.assign(n_, n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inv_[a] = b;
  for (auto x : inv_)
    if (x == n_) bad("missing inverse");
}

namespace {

GroupTable cyclic(std::size_t m) {
  std::vector<std::size_t> mul(m * m);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = (i + j) % m;
  }
  return GroupTable("C" + std::to_string(m), std::move(mul), std::move(names));
}

// a^i b^j with a of order p, b of order q; element index q*i + j.
GroupTable abelian_pair(std::size_t p, std::size_t q, std::string name) {
  const std::size_t n = p * q;
  std::vector<std::size_t> mul(n * n);
  std::vector<std::string> names;
  auto power = [](const char* g, std::size_t k) -> std::string {
    if (k == 0) return "";
    return k == 1 ? std::string(g) : std::string(g) + "^" + std::to_string(k);
  };
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = power("a", x / q) + power("b", x % q);
    names.push_back(s.empty() ? "1" : s);
    for (std::size_t y = 0; y < n; ++y) mul[x * n + y] = ((x / q + y / q) % p) * q + (x % q + y % q) % q;
  }
  return GroupTable(std::move(name), std::move(mul), std::move(names));
}

GroupTable dihedral(std::size_t m, std::string name) {
  const std::size_t n = 2 * m;
  std::vector<std::size_t> mul(n * n);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % m, a = x / m;
    std::string s = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
    if (a) s += "s";
    names.push_back(s.empty() ? "1" : s);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t k = y % m, b = y / m;
      // r^i s^a r^k s^b = r^(i + (-1)^a k) s^(a+b)
      const std::size_t rot = a ? (i + m - k) % m : (i + k) % m;
      mul[x * n + y] = rot + m * ((a + b) % 2);
    }
  }
  return GroupTable(std::move(name), std::move(mul), std::move(names));
}

GroupTable quaternion() {
  // Units 1, i, j, k with signs; index = 4*sign + unit.
  // unit products: table[u][v] = (sign, unit).
  static const int sign_tab[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int unit_tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::size_t> mul(64);
  std::vector<std::string> names{"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t u = x % 4, v = y % 4;
      const std::size_t sign = (x / 4 + y / 4 + static_cast<std::size_t>(sign_tab[u][v])) % 2;
      mul[x * 8 + y] = 4 * sign + static_cast<std::size_t>(unit_tab[u][v]);
    }
  return GroupTable("Q8", std::move(mul), std::move(names));
}

}  // namespace

GroupTable GroupTable::preset(std::string_view name) {
  if (name.size() == 2 && name[0] == 'C' && name[1] >= '1' && name[1] <= '8') return cyclic(static_cast<std::size_t>(name[1] - '0'));
  if (name == "C2xC2") return abelian_pair(2, 2, "C2xC2");
  if (name == "C2xC4") return abelian_pair(2, 4, "C2xC4");
  if (name == "S3") return dihedral(3, "S3");
  if (name == "D4") return dihedral(4, "D4");
  if (name == "Q8") return quaternion();
  throw Error(ErrorCode::unknown_group, "unknown group '" + std::string(name) + "'");
}

std::vector<std::string> GroupTable::preset_names() {
  return {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "C2xC4", "S3", "D4", "Q8"};
}

std::size_t GroupTable::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::size_t GroupTable::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool GroupTable::is_p_group(std::size_t p) const {
  if (p < 2) return false;
  for (std::size_t a = 0; a < n_; ++a) {
    std::size_t k = element_order(a);
    while (k % p == 0) k /= p;
    if (k != 1) return false;
  }
  return true;
}

std::size_t GroupTable::p_group_prime() const {
  if (n_ == 1) return 0;
  std::size_t p = 2;
  while (n_ % p) ++p;
  return is_p_group(p) ? p : 0;
}

std::vector<std::size_t> GroupTable::cyclic_subgroup(std::size_t a) const {
  std::vector<std::size_t> out{identity_};
  for (std::size_t x = a; x != identity_; x = mul(x, a)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> GroupTable::small_subgroups() const {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < n_; ++a) {
    auto h = cyclic_subgroup(a);
    if (seen.insert(h).second) out.push_back(std::move(h));
  }
  std::vector<std::size_t> all(n_);
  std::iota(all.begin(), all.end(), 0);
  if (seen.insert(all).second) out.push_back(std::move(all));
  return out;
}

GroupTable GroupTable::subgroup(const std::vector<std::size_t>& members, std::string name) const {
  const std::size_t m = members.size();
  std::vector<std::size_t> local(n_, n_);
  for (std::size_t i = 0; i < m; ++i) local.at(members[i]) = i;
  std::vector<std::size_t> table(m * m);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(names_[members[i]]);
    for (std::size_t j = 0; j < m; ++j) {
      auto k = local[mul(members[i], members[j])];
      if (k == n_) throw Error(ErrorCode::bad_params, "member set is not a subgroup");
      table[i * m + j] = k;
    }
  }
  return GroupTable(std::move(name), std::move(table), std::move(names));
}

}  // namespace ringlab
