#include "boroczky/signed_permutation.hpp"

#include <algorithm>
#include <numeric>

#include "boroczky/error.hpp"

namespace boroczky {

SignedPermutation::SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs) {
  if (perm.size() != signs.size()) throw Error(Errc::InvalidArgument, "permutation and sign vector differ in length");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw Error(Errc::InvalidArgument, "not a permutation");
    seen[p] = true;
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw Error(Errc::InvalidArgument, "sign entries must be +1 or -1");
  }
  perm_.assign(perm.begin(), perm.end());
  signs_.assign(signs.begin(), signs.end());
}

SignedPermutation SignedPermutation::identity(std::size_t dim) {
  std::vector<std::size_t> p(dim);
  std::iota(p.begin(), p.end(), 0);
  return {p, std::vector<int>(dim, 1)};
}

SignedPermutation SignedPermutation::negation(std::size_t dim) {
  std::vector<std::size_t> p(dim);
  std::iota(p.begin(), p.end(), 0);
  return {p, std::vector<int>(dim, -1)};
}

bool SignedPermutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i || signs_[i] != 1) return false;
  }
  return true;
}

Symbol SignedPermutation::apply(const Symbol& x) const {
  if (x.dim() != dim()) throw Error(Errc::InvalidArgument, "dimension mismatch in group action");
  Symbol out;
  out.signs_.resize(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.signs_[i] = static_cast<std::int8_t>(signs_[i] * x.signs_[perm_[i]]);
  return out;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& h) const {
  if (h.dim() != dim()) throw Error(Errc::InvalidArgument, "dimension mismatch in composition");
  // (g h x)_i = s^g_i (h x)_{p^g(i)} = s^g_i s^h_{p^g(i)} x_{p^h(p^g(i))}
  SignedPermutation r;
  r.perm_.resize(dim());
  r.signs_.resize(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    r.perm_[i] = h.perm_[perm_[i]];
    r.signs_[i] = static_cast<std::int8_t>(signs_[i] * h.signs_[perm_[i]]);
  }
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r;
  r.perm_.resize(dim());
  r.signs_.resize(dim());
  for (std::size_t i = 0; i < dim(); ++i) r.perm_[perm_[i]] = static_cast<std::uint8_t>(i);
  for (std::size_t i = 0; i < dim(); ++i) r.signs_[i] = signs_[r.perm_[i]];
  return r;
}

std::string SignedPermutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += ',';
    out += signs_[i] > 0 ? '+' : '-';
    out += 'x';
    out += std::to_string(perm_[i]);
  }
  return out + "]";
}

std::vector<SignedPermutation> hyperoctahedral_group(std::size_t dim) {
  std::vector<SignedPermutation> out;
  out.reserve(hyperoctahedral_order(dim));
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
      std::vector<int> signs(dim);
      for (std::size_t i = 0; i < dim; ++i) signs[i] = (mask >> i) & 1U ? -1 : 1;
      out.emplace_back(perm, signs);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t hyperoctahedral_order(std::size_t dim) {
  std::uint64_t order = std::uint64_t{1} << dim;
  for (std::size_t i = 2; i <= dim; ++i) order *= i;
  return order;
}

}  // namespace boroczky
