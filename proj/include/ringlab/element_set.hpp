#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

using Elem = std::uint32_t;

class FiniteRing;

/// Dense bitset over the elements of one ring. Binary operations between
/// sets of different rings throw (ErrorCode::cross_ring).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(const FiniteRing& ring);
  ElementSet(const FiniteRing* ring, std::size_t universe)
      : ring_(ring), universe_(universe), words_((universe + 63) / 64, 0) {}

  const FiniteRing* ring() const noexcept { return ring_; }
  std::size_t universe() const noexcept { return universe_; }

  bool contains(Elem x) const noexcept {
    return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1u);
  }
  void insert(Elem x) {
    check_index(x);
    words_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  void erase(Elem x) {
    check_index(x);
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    ElementSet out = *this;
    for (auto& w : out.words_) w = ~w;
    out.trim();
    return out;
  }

  bool operator==(const ElementSet& other) const {
    check_same(other);
    return words_ == other.words_;
  }

  /// Members in increasing index order.
  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(size());
    for_each([&](Elem x) { out.push_back(x); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        auto bit = static_cast<unsigned>(std::countr_zero(w));
        f(static_cast<Elem>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  /// Smallest member satisfying `pred`, if any.
  template <class P>
  bool find_first(P&& pred, Elem& out) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        auto x = static_cast<Elem>(i * 64 + static_cast<unsigned>(std::countr_zero(w)));
        if (pred(x)) {
          out = x;
          return true;
        }
        w &= w - 1;
      }
    }
    return false;
  }

 private:
  void check_index(Elem x) const {
    if (x >= universe_) throw Error(ErrorCode::index_out_of_range, "element " + std::to_string(x) + " out of range");
  }
  void check_same(const ElementSet& other) const {
    if (ring_ != other.ring_ || universe_ != other.universe_)
      throw Error(ErrorCode::cross_ring, "element sets belong to different rings");
  }
  void trim() {
    if (universe_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  const FiniteRing* ring_ = nullptr;
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ringlab
