#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace boroczky {

using BigInt = boost::multiprecision::cpp_int;

/// Exact dyadic rational mantissa * 2^exponent, kept normalized (odd mantissa,
/// or zero with exponent 0) so that equality is structural.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt mantissa, std::int64_t exponent = 0);  // NOLINT: implicit from integers is intended
  template <std::integral I>
  Dyadic(I value) : Dyadic(BigInt(value), 0) {}  // NOLINT

  static Dyadic pow2(std::int64_t e) { return Dyadic(BigInt(1), e); }

  const BigInt& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  bool is_integer() const noexcept { return exponent_ >= 0; }
  int sign() const noexcept { return mantissa_.sign(); }

  /// Throws InvalidArgument when the value has a fractional part.
  BigInt to_integer() const;
  BigInt floor() const;
  BigInt ceil() const;

  /// Multiplication by 2^e, exact.
  Dyadic scaled(std::int64_t e) const;
  double to_double() const;

  /// Integers print in decimal; other values as "m/2^k".
  std::string to_string() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a);

  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  BigInt mantissa_{0};
  std::int64_t exponent_ = 0;
};

/// Closed interval [lo, hi] with exact endpoints.
struct Interval {
  Dyadic lo;
  Dyadic hi;

  Dyadic length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace boroczky
