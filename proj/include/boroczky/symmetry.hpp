#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "boroczky/sequence.hpp"

namespace boroczky {

/// Abstract isomorphism type of Sym(T): Z x B_k or B_k, with B_0 trivial.
struct GroupDescriptor {
  enum class Kind { ZxB, B };
  Kind kind = Kind::B;
  std::size_t k = 0;

  bool has_translation() const noexcept { return kind == Kind::ZxB; }
  /// "Z x B1", "Z", "B2", "trivial".
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Caller's assertion that a finite word continues aperiodically, with
/// `bounded_coordinates` coordinates eventually constant. Neither property is
/// decidable from the prefix, so nothing here is inferred.
struct AperiodicAssumption {
  std::size_t bounded_coordinates = 0;
};

struct SymmetryReport {
  std::size_t dim = 0;
  std::size_t k = 0;
  GroupDescriptor group;
  std::optional<PeriodInfo> period;
  std::optional<EssentialPeriod> essential;
  /// d = 1 only: "half ring", "<q> rings" ("1 ring"), or "whole space".
  std::optional<std::string> fundamental_domain;
};

SymmetryReport classify_symmetry(const SequenceSpec& spec, std::optional<AperiodicAssumption> assumption = {});

}  // namespace boroczky
