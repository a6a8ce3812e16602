#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "boroczky/symbol.hpp"

namespace boroczky {

/// Element of the hyperoctahedral group B_d acting on {-1,+1}^d by
/// (g x)_i = sign_i * x_{perm_i}.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// perm must be a permutation of 0..d-1, signs entries in {-1,+1}.
  SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs);

  static SignedPermutation identity(std::size_t dim);
  /// Negates every coordinate.
  static SignedPermutation negation(std::size_t dim);

  std::size_t dim() const noexcept { return perm_.size(); }
  std::size_t source(std::size_t i) const { return perm_[i]; }
  int sign(std::size_t i) const { return signs_[i]; }
  bool is_identity() const noexcept;

  Symbol apply(const Symbol& x) const;

  /// (this * h) x == this(h(x)).
  SignedPermutation operator*(const SignedPermutation& h) const;
  SignedPermutation inverse() const;

  /// e.g. "[+x1,-x0]"; identity of B_1 is "[+x0]".
  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<std::uint8_t> perm_;
  std::vector<std::int8_t> signs_;
};

/// All 2^d * d! elements in a fixed order, identity first: permutations in
/// lexicographic order, sign patterns by bitmask within each.
std::vector<SignedPermutation> hyperoctahedral_group(std::size_t dim);

std::uint64_t hyperoctahedral_order(std::size_t dim);

}  // namespace boroczky
