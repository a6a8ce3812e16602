#include "boroczky/dyadic.hpp"

#include <cmath>

#include "boroczky/error.hpp"

namespace boroczky {

namespace {

BigInt shl(const BigInt& v, std::int64_t s) { return v << static_cast<unsigned>(s); }

// floor(v / 2^s) for s > 0
BigInt floor_shift(const BigInt& v, std::int64_t s) {
  BigInt divisor = shl(BigInt(1), s);
  BigInt q = v / divisor;  // truncates toward zero
  if (v.sign() < 0 && q * divisor != v) q -= 1;
  return q;
}

}  // namespace

Dyadic::Dyadic(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_.is_zero()) {
    exponent_ = 0;
    return;
  }
  auto tz = static_cast<std::int64_t>(boost::multiprecision::lsb(abs(mantissa_)));
  if (tz > 0) {
    mantissa_ >>= static_cast<unsigned>(tz);
    exponent_ += tz;
  }
}

BigInt Dyadic::to_integer() const {
  if (!is_integer()) throw Error(Errc::InvalidArgument, "dyadic " + to_string() + " is not an integer");
  return shl(mantissa_, exponent_);
}

BigInt Dyadic::floor() const {
  if (is_integer()) return shl(mantissa_, exponent_);
  return floor_shift(mantissa_, -exponent_);
}

BigInt Dyadic::ceil() const {
  if (is_integer()) return shl(mantissa_, exponent_);
  return -floor_shift(-mantissa_, -exponent_);
}

Dyadic Dyadic::scaled(std::int64_t e) const {
  if (mantissa_.is_zero()) return {};
  Dyadic r;
  r.mantissa_ = mantissa_;
  r.exponent_ = exponent_ + e;
  return r;
}

double Dyadic::to_double() const {
  return std::ldexp(mantissa_.convert_to<double>(), static_cast<int>(exponent_));
}

std::string Dyadic::to_string() const {
  if (is_integer()) return shl(mantissa_, exponent_).str();
  return mantissa_.str() + "/2^" + std::to_string(-exponent_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.mantissa_.is_zero()) return b;
  if (b.mantissa_.is_zero()) return a;
  std::int64_t e = std::min(a.exponent_, b.exponent_);
  return Dyadic(shl(a.mantissa_, a.exponent_ - e) + shl(b.mantissa_, b.exponent_ - e), e);
}

Dyadic operator-(const Dyadic& a) {
  Dyadic r = a;
  r.mantissa_ = -r.mantissa_;
  return r;
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace boroczky
