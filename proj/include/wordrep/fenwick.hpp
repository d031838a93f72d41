#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wordrep {

// Binary indexed tree over a fixed range of positions. Point update and
// prefix/range sum in O(log size). The public interface is 0-indexed; the
// classic 1-indexed layout is internal.
class FenwickTree {
 public:
  explicit FenwickTree(std::size_t length) : size_(length) {
    if (length == 0) throw std::invalid_argument("FenwickTree: length must be positive");
    tree_.assign(size_ + 1, 0);
  }

  std::size_t size() const { return size_; }

  void reset() {
    tree_.assign(size_ + 1, 0);
    updates_ = 0;
    queries_ = 0;
  }

  void update(std::size_t pos, std::int64_t delta) {
    if (pos >= size_) throw std::out_of_range("FenwickTree::update: position out of range");
    ++updates_;
    for (std::size_t i = pos + 1; i <= size_; i += i & (~i + 1)) tree_[i] += delta;
  }

  // Sum over [lo, hi]. The empty query lo == hi + 1 is legal and yields 0
  // (it arises whenever a letter's two occurrences are adjacent).
  std::int64_t rangesum(std::size_t lo, std::size_t hi) const {
    ++queries_;
    if (lo > hi) {
      if (lo > size_) throw std::out_of_range("FenwickTree::rangesum: bounds out of range");
      return 0;
    }
    if (hi >= size_) throw std::out_of_range("FenwickTree::rangesum: bounds out of range");
    std::int64_t s = prefix(hi);
    if (lo > 0) s -= prefix(lo - 1);
    return s;
  }

  // Call counters, used to verify the scan's query/update budget.
  std::uint64_t update_count() const { return updates_; }
  std::uint64_t query_count() const { return queries_; }

 private:
  std::int64_t prefix(std::size_t hi) const {
    std::int64_t s = 0;
    for (std::size_t i = hi + 1; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

  std::size_t size_ = 0;
  std::vector<std::int64_t> tree_;
  std::uint64_t updates_ = 0;
  mutable std::uint64_t queries_ = 0;
};

}  // namespace wordrep
