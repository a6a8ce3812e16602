#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "boroczky/signed_permutation.hpp"
#include "boroczky/symbol.hpp"

namespace boroczky {

/// One coordinate of an eventually periodic sign sequence: `pre` followed by
/// `period` repeated forever. Entries are -1 or +1.
struct CoordinateWord {
  std::vector<int> pre;
  std::vector<int> period;

  friend bool operator==(const CoordinateWord&, const CoordinateWord&) = default;
};

/// The word s(T) = (sigma^(1), sigma^(2), ...) of the anchor tail, either as
/// per-coordinate eventually periodic words or as a finite prefix.
///
/// Eventually periodic coordinates are canonicalized on construction: the
/// period is reduced to its primitive root and the preperiod is shortened as
/// far as the period allows. Two specs describing the same sequence compare
/// equal.
class SequenceSpec {
 public:
  enum class Mode { EventuallyPeriodic, FiniteWord };

  static SequenceSpec eventually_periodic(std::vector<CoordinateWord> coords);
  static SequenceSpec finite_word(std::vector<Symbol> word);

  std::size_t dim() const noexcept { return dim_; }
  Mode mode() const noexcept { return mode_; }
  bool is_periodic_mode() const noexcept { return mode_ == Mode::EventuallyPeriodic; }

  /// Throws FiniteWordMode in FiniteWord mode.
  const std::vector<CoordinateWord>& coordinates() const;
  /// Empty in EventuallyPeriodic mode.
  const std::vector<Symbol>& word() const noexcept { return word_; }

  /// Number of letters available; nullopt when infinite.
  std::optional<std::int64_t> length() const;
  bool has_letter(std::int64_t j) const;

  /// sigma_i^(j) for j >= 1. Throws IndexBeyondWord past a finite word.
  int sign(std::int64_t j, std::size_t i) const;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  std::size_t dim_ = 0;
  Mode mode_ = Mode::EventuallyPeriodic;
  std::vector<CoordinateWord> coords_;
  std::vector<Symbol> word_;
};

/// sigma^(j), j >= 1.
Symbol seq_letter(const SequenceSpec& spec, std::int64_t j);

struct TailBehavior {
  enum class Kind { EventuallyConstant, BothSignsInfinitely };
  Kind kind;
  int value = 0;            ///< the eventual sign (EventuallyConstant only)
  std::int64_t onset = 0;   ///< first index j with sigma_i^(j') = value for all j' >= j

  bool eventually_constant() const noexcept { return kind == Kind::EventuallyConstant; }
};

TailBehavior coordinate_tail_behavior(const SequenceSpec& spec, std::size_t i);

struct PeriodInfo {
  std::size_t preperiod;
  std::size_t period;

  friend bool operator==(const PeriodInfo&, const PeriodInfo&) = default;
};

/// Minimal cofinal period of the whole d-dimensional sequence.
std::optional<PeriodInfo> minimal_period(const SequenceSpec& spec);

struct EssentialPeriod {
  std::size_t q;
  SignedPermutation witness;
};

/// Least q >= 1 with some g in B_d satisfying g sigma^(j) = sigma^(j+q) for
/// all large j. The witness is the first such g in hyperoctahedral_group order.
std::optional<EssentialPeriod> essential_period(const SequenceSpec& spec);

/// Applies g to every letter of the sequence.
SequenceSpec transformed(const SignedPermutation& g, const SequenceSpec& spec);

/// Drops the first n letters (a cofinal change).
SequenceSpec dropped(const SequenceSpec& spec, std::size_t n);

}  // namespace boroczky
