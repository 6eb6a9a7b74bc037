#include "qosc/lattice.hpp"

#include <string>

#include "qosc/errors.hpp"

namespace qosc {

MixedRadix::MixedRadix(int n, int base, std::size_t cap) : n_(n), base_(base), size_(1) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "mode count must be >= 1");
  if (base < 1) throw Error(ErrorKind::InvalidParameter, "basis size per mode must be >= 1");
  strides_.assign(static_cast<std::size_t>(n), 1);
  for (int i = n; i >= 1; --i) {
    strides_[static_cast<std::size_t>(i - 1)] = size_;
    if (size_ > cap / static_cast<std::size_t>(base)) {
      throw Error(ErrorKind::Resource, "dimension " + std::to_string(base) + "^" +
                                           std::to_string(n) + " exceeds cap " +
                                           std::to_string(cap));
    }
    size_ *= static_cast<std::size_t>(base);
  }
}

std::size_t MixedRadix::rank(std::span<const int> digits) const {
  if (digits.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorKind::InvalidParameter, "index has wrong number of entries");
  }
  std::size_t r = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= base_) {
      throw Error(ErrorKind::InvalidParameter,
                  "index entry " + std::to_string(digits[i]) + " outside 0.." +
                      std::to_string(base_ - 1));
    }
    r += static_cast<std::size_t>(digits[i]) * strides_[i];
  }
  return r;
}

std::vector<int> MixedRadix::digits(std::size_t rank) const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = static_cast<int>(rank / strides_[i]);
    rank %= strides_[i];
  }
  return d;
}

}  // namespace qosc
