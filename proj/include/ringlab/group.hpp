#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ringlab {

/// Finite group given by its Cayley table. Element 0 is the identity for all
/// presets.
class GroupTable {
 public:
  /// Validates associativity, identity and inverses; Error(bad_params) otherwise.
  GroupTable(std::string name, std::vector<std::size_t> mul, std::vector<std::string> element_names);

  /// Presets: C1..C8, C2xC2, C2xC4, S3, D4, Q8. Error(unknown_group) otherwise.
  ///   Cn     element i is g^i.
  ///   C2xC2  element 2i+j is a^i b^j.
  ///   C2xC4  element 4i+j is a^i b^j (a of order 2, b of order 4).
  ///   S3, D4 dihedral of order 2m (m = 3, 4): element i + m*j is r^i s^j,
  ///          with s r = r^-1 s.
  ///   Q8     elements 1, i, j, k, -1, -i, -j, -k in that order.
  static GroupTable preset(std::string_view name);
  static std::vector<std::string> preset_names();

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return n_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const noexcept { return mul_[a * n_ + b]; }
  std::size_t inverse(std::size_t a) const noexcept { return inv_[a]; }
  const std::string& element_name(std::size_t a) const { return names_.at(a); }

  std::size_t element_order(std::size_t a) const;
  /// Least common multiple of the element orders.
  std::size_t exponent() const;
  /// True iff every element order is a power of p (the trivial group is a
  /// p-group for every p).
  bool is_p_group(std::size_t p) const;
  /// The prime p for which this is a p-group, or 0 (also 0 for the trivial group).
  std::size_t p_group_prime() const;

  /// Sorted member list of the cyclic subgroup generated by a.
  std::vector<std::size_t> cyclic_subgroup(std::size_t a) const;
  /// Distinct cyclic subgroups, plus the whole group when it is not cyclic.
  std::vector<std::vector<std::size_t>> small_subgroups() const;
  /// Subgroup on `members` (sorted) as a standalone table; members[i] is its
  /// element i.
  GroupTable subgroup(const std::vector<std::size_t>& members, std::string name) const;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<std::size_t> mul_;
  std::vector<std::string> names_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inv_;
};

}  // namespace ringlab
