#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

namespace latticestop {

// Disjoint-set forest over a fixed vertex range, with an activity flag per
// vertex and a live component counter. Union by size plus path compression
// keeps the whole activate/merge sequence near-linear.
class DsuState {
 public:
  explicit DsuState(std::size_t n) : parent_(n), size_(n, 1), active_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  bool active(int v) const { return active_[static_cast<std::size_t>(v)] != 0; }
  std::size_t components() const { return components_; }
  std::size_t active_count() const { return active_count_; }

  // Marks v as its own new component. Pre: not yet active.
  void activate(int v) {
    assert(!active(v));
    active_[static_cast<std::size_t>(v)] = 1;
    ++active_count_;
    ++components_;
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  // Joins the components of two active vertices. Returns true when they were
  // distinct (the counter drops by one).
  bool merge(int u, int v) {
    assert(active(u) && active(v));
    int ru = find(u);
    int rv = find(v);
    if (ru == rv) {
      return false;
    }
    if (size_[static_cast<std::size_t>(ru)] < size_[static_cast<std::size_t>(rv)]) {
      std::swap(ru, rv);
    }
    parent_[static_cast<std::size_t>(rv)] = ru;
    size_[static_cast<std::size_t>(ru)] += size_[static_cast<std::size_t>(rv)];
    --components_;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<std::int32_t> size_;
  std::vector<std::uint8_t> active_;
  std::size_t components_ = 0;
  std::size_t active_count_ = 0;
};

}  // namespace latticestop
