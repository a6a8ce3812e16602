#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boroczky/signed_permutation.hpp"
#include "boroczky/tiling.hpp"

namespace boroczky {

/// C_k(T): every tile within k facet-adjacency steps of the center.
struct Corona {
  TileAddress center;
  std::size_t radius = 0;
  TileComplex complex;
};

Corona corona_complex(const SequenceSpec& spec, const TileAddress& center, std::size_t k);

/// Orbit-minimal representative of a length-k tail prefix under the diagonal
/// B_d action (one group element applied to every letter).
struct CoronaCode {
  std::size_t dim = 0;
  std::vector<Symbol> word;

  std::size_t length() const noexcept { return word.size(); }
  /// Letters joined by '|', e.g. "+-|--"; the empty word prints as "".
  std::string to_string() const;
  static CoronaCode parse(std::size_t dim, const std::string& text);

  friend auto operator<=>(const CoronaCode&, const CoronaCode&) = default;
  friend bool operator==(const CoronaCode&, const CoronaCode&) = default;
};

CoronaCode canonical_code(std::size_t dim, std::span<const Symbol> word);
CoronaCode corona_code(const SequenceSpec& spec, const TileAddress& t, std::size_t k);

struct Stabilizer {
  std::vector<SignedPermutation> elements;    ///< in hyperoctahedral_group order
  std::vector<SignedPermutation> generators;  ///< greedy generating set

  std::size_t order() const noexcept { return elements.size(); }
};

/// All g in B_d fixing every letter of the code.
Stabilizer stabilizer(const CoronaCode& code);

/// Census window: cells lo..hi (inclusive) per coordinate at one layer.
struct CensusWindow {
  std::int64_t layer = 0;
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  /// Cells -half_width .. half_width-1 in every coordinate.
  static CensusWindow centered(std::size_t dim, std::int64_t layer, std::int64_t half_width);

  std::size_t dim() const noexcept { return lo.size(); }
  std::uint64_t tile_count() const;
  std::string to_string() const;

  friend bool operator==(const CensusWindow&, const CensusWindow&) = default;
};

struct CoronaClass {
  CoronaCode code;
  TileAddress witness;            ///< first window tile (address order) with this code
  std::uint64_t multiplicity = 0;
  std::uint64_t stabilizer_order = 0;
};

struct CensusReport {
  std::size_t dim = 0;
  std::size_t k = 0;
  CensusWindow window;
  std::vector<CoronaClass> classes;  ///< ordered by code

  std::size_t n_k() const noexcept { return classes.size(); }
};

/// Refuses (WindowTooSmall) unless every coordinate spans at least 2^(d*k) cells.
CensusReport census(const SequenceSpec& spec, std::size_t k, const CensusWindow& window);

/// Number of orbits of ({-1,+1}^d)^k under diagonal B_d, by Burnside's lemma.
std::uint64_t burnside_orbits(std::size_t dim, std::size_t k);

struct LocalTheoremViolation {
  std::size_t k = 0;
  int condition = 0;  ///< 1: N_{k+1} != N_k, 2: some stabilizer shrinks
  std::string detail;
};

struct LocalTheoremVerdict {
  bool crystallographic = false;
  std::optional<std::size_t> k;                   ///< least k where both conditions hold
  std::vector<LocalTheoremViolation> violations;  ///< one per k checked before that (or all)

  std::string to_string() const;
};

/// Censuses must be for k = 0, 1, ..., K (K >= 1) over the same dimension.
LocalTheoremVerdict local_theorem_check(std::span<const CensusReport> censuses);

}  // namespace boroczky
