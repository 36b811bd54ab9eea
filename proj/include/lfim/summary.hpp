#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lfim {

// One simulated or observed d-dimensional summary.
using SummaryVector = std::vector<double>;

// Collection of M summaries of common dimension d. Semantically unordered:
// every consumer must be invariant to member order.
class SummarySet {
 public:
  explicit SummarySet(std::size_t dim);
  static SummarySet from_members(const std::vector<SummaryVector>& members);

  // Appends one member; rejects dimension mismatches and non-finite entries.
  void add(std::span<const double> member);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return size_; }
  std::span<const double> member(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }

 private:
  std::size_t dim_;
  std::size_t size_ = 0;
  std::vector<double> data_;  // row-major, size_ x dim_
};

// Indices of the members in lexicographic order of their values. Accumulating
// sums in this order makes measure evaluations bit-for-bit invariant to the
// order members were inserted.
std::vector<std::uint32_t> canonical_order(const SummarySet& set);

}  // namespace lfim
