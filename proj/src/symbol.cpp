#include "boroczky/symbol.hpp"

#include "boroczky/error.hpp"

namespace boroczky {

Symbol::Symbol(const std::vector<int>& signs) {
  signs_.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) throw Error(Errc::ValidationError, "letter entry " + std::to_string(s) + " is not +1 or -1");
    signs_.push_back(static_cast<std::int8_t>(s));
  }
}

Symbol Symbol::constant(std::size_t dim, int sign) { return Symbol(std::vector<int>(dim, sign)); }

Symbol Symbol::from_half_bits(std::span<const std::uint8_t> bits) {
  Symbol s;
  s.signs_.reserve(bits.size());
  for (auto b : bits) s.signs_.push_back(b ? std::int8_t{-1} : std::int8_t{1});
  return s;
}

std::string Symbol::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (auto s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

}  // namespace boroczky
