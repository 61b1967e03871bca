#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/structure.hpp"

namespace ringlab::detail {

template <class T>
class OnceCell {
 public:
  template <class F>
  const T& get(F&& init) {
    std::call_once(flag_, [&] { value_.emplace(init()); });
    return *value_;
  }

 private:
  std::once_flag flag_;
  std::optional<T> value_;
};

struct DerivedCache {
  OnceCell<std::vector<std::int64_t>> inverse;  // -1 when not a unit
  OnceCell<ElementSet> units;
  OnceCell<ElementSet> idempotents;
  OnceCell<ElementSet> nilpotents;
  OnceCell<ElementSet> center;
  OnceCell<ElementSet> jacobson;
  OnceCell<ElementSet> delta;
  OnceCell<Quotient> jacobson_quotient;
};

}  // namespace ringlab::detail
