#pragma once

#include <cmath>
#include <compare>

#include "etalab/error.hpp"

namespace etalab::mp {

// Binary significand width. Default 192 bits (about 57 decimal digits).
class Precision {
 public:
  static constexpr long kMinBits = 64;
  static constexpr long kDefaultBits = 192;

  constexpr Precision() = default;
  explicit Precision(long bits) : bits_(bits) {
    if (bits < kMinBits) {
      throw DomainError("precision must be at least 64 bits, got " + std::to_string(bits));
    }
  }

  constexpr long bits() const { return bits_; }

  // floor(bits * log10(2)); formatted output never exceeds this many digits.
  long decimal_digits() const {
    return static_cast<long>(std::floor(static_cast<double>(bits_) * 0.30102999566398119521));
  }

  Precision plus(long guard) const { return Precision(bits_ + guard); }

  friend constexpr auto operator<=>(Precision, Precision) = default;

 private:
  long bits_ = kDefaultBits;
};

inline Precision max(Precision a, Precision b) { return a.bits() >= b.bits() ? a : b; }

}  // namespace etalab::mp
