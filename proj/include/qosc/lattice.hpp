#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qosc {

inline constexpr std::size_t kDefaultDimensionCap = 4096;

/// Tuples (k_1, ..., k_n) with 0 <= k_i < base, ranked with k_1 slowest and
/// k_n fastest. Shared by the occupation-number, monomial and grid bases so
/// that all three enumerate states identically.
class MixedRadix {
 public:
  /// Throws Resource when base^n exceeds `cap`.
  MixedRadix(int n, int base, std::size_t cap = kDefaultDimensionCap);

  int modes() const noexcept { return n_; }
  int base() const noexcept { return base_; }
  std::size_t size() const noexcept { return size_; }

  std::size_t rank(std::span<const int> digits) const;
  std::vector<int> digits(std::size_t rank) const;

  /// Stride of digit i (1-based), i.e. rank distance of a unit step in k_i.
  std::size_t stride(int i) const { return strides_[static_cast<std::size_t>(i - 1)]; }

 private:
  int n_;
  int base_;
  std::size_t size_;
  std::vector<std::size_t> strides_;
};

}  // namespace qosc
