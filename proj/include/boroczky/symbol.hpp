#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace boroczky {

/// One letter of the alphabet {-1,+1}^d. Lexicographic order with -1 < +1.
class Symbol {
 public:
  Symbol() = default;
  /// Throws ValidationError unless every entry is -1 or +1.
  explicit Symbol(const std::vector<int>& signs);

  static Symbol constant(std::size_t dim, int sign);
  /// Child-half bits to letter: bit 0 (lower half) is +1, bit 1 is -1.
  static Symbol from_half_bits(std::span<const std::uint8_t> bits);

  std::size_t dim() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  /// "+-+" style, one character per coordinate.
  std::string to_string() const;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  friend class SignedPermutation;
  std::vector<std::int8_t> signs_;
};

}  // namespace boroczky
