#pragma once

#include <complex>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "boroczky/tiling.hpp"

namespace boroczky {

/// A tile in the upper half-space model: its E0 footprint times the height
/// band [2^j, 2^(j+1)]. The anchor layer occupies heights [1, 2].
struct HalfSpaceRegion {
  TileAddress tile;
  Box box;
  Dyadic low_height;
  Dyadic high_height;
};

HalfSpaceRegion embed_region(const SequenceSpec& spec, const TileAddress& t);

/// Closures of the two regions meet in a d-dimensional piece (exactly one
/// degenerate factor of the intersection box in R^(d+1)).
bool geometric_adjacent(const HalfSpaceRegion& a, const HalfSpaceRegion& b);

struct MetricReport {
  double layer_distance = 0;  ///< hyperbolic length of a vertical geodesic across the band
  Dyadic a_size;              ///< horospheric edge of the upper facet: width / high height
  Dyadic b_size;              ///< horospheric edge of the lower facet: width / low height
};

MetricReport metric_report(const SequenceSpec& spec, const TileAddress& t);

/// Hyperbolic distance between the bottom horospheres of layers j1 and j2.
double layer_distance(std::int64_t j1, std::int64_t j2);

/// Tiles within k steps of t, where a step joins geometrically adjacent
/// regions. Candidates come from build_window over layers [j-k, j+k] and a box
/// that k steps in the widest layer cannot leave; no neighbor rules are used.
std::set<TileAddress> geometric_corona(const SequenceSpec& spec, const TileAddress& t, std::size_t k);

/// d = 1 corona as (layer offset, lo, hi) intervals relative to the center:
/// translated so the center starts at 0, or reflected across the center's
/// right end. Two same-layer coronae are congruent under translations and
/// reflections in vertical lines iff some pair of shapes is equal.
using CoronaShape = std::vector<std::tuple<std::int64_t, Dyadic, Dyadic>>;
CoronaShape corona_shape(const SequenceSpec& spec, const TileAddress& t, const std::set<TileAddress>& members,
                         bool mirror);
bool congruent_d1(const SequenceSpec& spec, const TileAddress& a, const TileAddress& b, std::size_t k);

/// Cayley map (z - i) / (z + i): i goes to the center, infinite height to 1.
std::complex<double> to_disc(std::complex<double> z);

}  // namespace boroczky
