#pragma once

#include <compare>
#include <optional>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "boroczky/dyadic.hpp"
#include "boroczky/sequence.hpp"

namespace boroczky {

using Cell = std::vector<std::int64_t>;
using HalfBits = std::vector<std::uint8_t>;

/// A tile named by its layer j (increasing along tails) and its lattice cell m
/// in that layer. The anchor tail is m = 0 at every layer j >= 0.
struct TileAddress {
  std::int64_t layer = 0;
  Cell cell;

  std::size_t dim() const noexcept { return cell.size(); }
  std::string to_string() const;

  friend auto operator<=>(const TileAddress&, const TileAddress&) = default;
  friend bool operator==(const TileAddress&, const TileAddress&) = default;
};

struct TileAddressHash {
  std::size_t operator()(const TileAddress& t) const noexcept;
};

/// Axis-aligned box on the E0 projection.
struct Box {
  std::vector<Interval> sides;

  std::size_t dim() const noexcept { return sides.size(); }
  bool contains(const Box& other) const;
  /// Product of the side lengths.
  Dyadic volume() const;

  static Box cube(std::size_t dim, const Dyadic& lo, const Dyadic& hi);

  friend bool operator==(const Box&, const Box&) = default;
};

/// Footprint of the anchor tail's tile at layer j.
struct AnchorCell {
  std::int64_t layer = 0;
  std::vector<Dyadic> low;
  std::vector<Dyadic> high;
};

/// Anchor corners via the footprint recurrence; a^(0) = (-1,..,-1),
/// b^(0) = (1,..,1). For j < 0 the grid keeps the corner a^(0) and the cell
/// width is 2^(j+1).
AnchorCell anchor_cell(const SequenceSpec& spec, std::int64_t j);

/// Lattice of one layer: cell m covers origin + [m, m+1] * width per coordinate.
struct LayerGrid {
  std::int64_t layer = 0;
  std::vector<Dyadic> origin;
  Dyadic width;

  Interval side(std::size_t i, std::int64_t m) const;
};

LayerGrid layer_grid(const SequenceSpec& spec, std::int64_t j);

/// Labels of the 2^d + 2d + 1 facets of a tile.
struct FacetLabel {
  enum class Kind : std::uint8_t { A, B, C };
  Kind kind = Kind::A;
  HalfBits half;          ///< B only: which b-facet (0 = lower half per coordinate)
  std::size_t axis = 0;   ///< C only
  int side = 0;           ///< C only, -1 or +1

  static FacetLabel lower() { return {}; }
  static FacetLabel upper(HalfBits half) { return {Kind::B, std::move(half), 0, 0}; }
  static FacetLabel aside(std::size_t axis, int side) { return {Kind::C, {}, axis, side}; }

  /// "A", "B(01)", "C(2,+)"; C axes are 1-based in text.
  std::string to_string() const;

  friend auto operator<=>(const FacetLabel&, const FacetLabel&) = default;
  friend bool operator==(const FacetLabel&, const FacetLabel&) = default;
};

std::vector<FacetLabel> all_facet_labels(std::size_t dim);

struct ParentStep {
  TileAddress address;
  Symbol letter;   ///< the tail letter of this step
  HalfBits half;   ///< which b-facet of the parent the tile sits on
};

ParentStep parent(const SequenceSpec& spec, const TileAddress& t);
TileAddress child(const SequenceSpec& spec, const TileAddress& t, std::span<const std::uint8_t> half);
TileAddress side_neighbor(const TileAddress& t, std::size_t axis, int side);
Box footprint(const SequenceSpec& spec, const TileAddress& t);

struct TailWord {
  std::vector<TileAddress> path;  ///< depth + 1 addresses, starting at t
  std::vector<Symbol> word;       ///< depth letters
};

TailWord tail_word(const SequenceSpec& spec, const TileAddress& t, std::size_t depth);

/// Letters of the first `depth` tail steps only; same as tail_word().word.
std::vector<Symbol> tail_letters(const SequenceSpec& spec, const TileAddress& t, std::size_t depth);

struct LayerRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const LayerRange&, const LayerRange&) = default;
};

/// Adjacency between two tiles of a complex; `from`/`to` index nodes().
/// A/B edges run child -> parent (from_facet A, to_facet B(half)); C edges run
/// m -> m + e_i (C(i,+) -> C(i,-)).
struct ComplexEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  FacetLabel from_facet;
  FacetLabel to_facet;

  bool horospheric() const noexcept { return from_facet.kind != FacetLabel::Kind::C; }
};

/// A finite set of tiles with every facet adjacency among them.
class TileComplex {
 public:
  /// Nodes are sorted (layer, then cell) and deduplicated.
  TileComplex(const SequenceSpec& spec, std::vector<TileAddress> nodes);

  const SequenceSpec& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return spec_.dim(); }
  const std::vector<TileAddress>& nodes() const noexcept { return nodes_; }
  const std::vector<ComplexEdge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  std::optional<std::size_t> index_of(const TileAddress& t) const;
  bool contains(const TileAddress& t) const { return index_of(t).has_value(); }

  LayerRange layers() const;
  /// Smallest box containing every footprint.
  Box bounding_box() const;

 private:
  SequenceSpec spec_;
  std::vector<TileAddress> nodes_;
  std::vector<ComplexEdge> edges_;
  std::unordered_map<TileAddress, std::size_t, TileAddressHash> index_;
};

/// Every tile of layers [lo, hi] whose footprint meets the interior of `box`.
TileComplex build_window(const SequenceSpec& spec, LayerRange layers, const Box& box);

/// Tiles one facet away from t, in the order parent, children (by half bits),
/// side neighbors (axis, then -/+).
std::vector<TileAddress> facet_neighbors(const SequenceSpec& spec, const TileAddress& t);

}  // namespace boroczky
