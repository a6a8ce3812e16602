#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boroczky/sequence.hpp"
#include "boroczky/tiling.hpp"

namespace boroczky {

/// A totally separating hyperplane x_axis = position of the anchor's pool.
struct Wall {
  enum class Bound { Lower, Upper };  ///< anchor pool lies at x >= position (Lower) or x <= position (Upper)

  std::size_t axis = 0;
  BigInt position;
  Bound bound = Bound::Lower;
  std::int64_t onset_layer = 0;  ///< first layer whose anchor corner sits on the wall
};

struct PoolReport {
  std::size_t dim = 0;
  std::size_t k = 0;                ///< number of bounded coordinates
  std::uint64_t pool_count = 1;     ///< 2^k
  std::vector<Wall> walls;          ///< one per bounded coordinate, ordered by axis
  std::size_t euclidean_dims = 0;   ///< m = d - k in E^m (+) octant^(d-m)
  std::size_t octant_dims = 0;      ///< d - m = k
};

PoolReport pool_analysis(const SequenceSpec& spec);

/// Side of every wall the tile lies on, +1 for x >= wall and -1 for x <= wall,
/// ordered like report.walls.
std::vector<int> pool_id(const SequenceSpec& spec, const PoolReport& report, const TileAddress& t);
std::vector<int> pool_id(const SequenceSpec& spec, const TileAddress& t);

/// Connected components of the window under horospheric (A/B) edges only,
/// as sorted node indices; components ordered by their smallest member.
std::vector<std::vector<std::size_t>> flood_pools(const TileComplex& window);

/// Components that contain a tile of `layer` whose footprint meets the interior
/// of `region`.
std::size_t components_meeting(const TileComplex& window, const std::vector<std::vector<std::size_t>>& components,
                               std::int64_t layer, const Box& region);

/// Window on which flood_pools() must reproduce the pool count.
///
/// Horizon h is the sequence's minimal preperiod (every bounded coordinate has
/// reached its wall by layer h) and P its minimal period. The window spans
/// layers [0, h + P + 2] over the cube of half-width 2^(h+1): it contains every
/// wall in its interior, and within the top layer each unbounded coordinate
/// has moved both anchor corners past the cube, so tiles of one pool are
/// already joined.
struct VerificationWindow {
  std::int64_t horizon = 0;
  std::int64_t top_layer = 0;
  Box box;
  TileComplex window;
};

VerificationWindow standard_verification_window(const SequenceSpec& spec);

}  // namespace boroczky
