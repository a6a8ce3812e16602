#include "boroczky/pools.hpp"

#include <algorithm>
#include <numeric>

#include "boroczky/error.hpp"

namespace boroczky {

PoolReport pool_analysis(const SequenceSpec& spec) {
  if (!spec.is_periodic_mode()) throw Error(Errc::FiniteWordMode, "pool structure is undecidable from a finite word");
  PoolReport report;
  report.dim = spec.dim();
  for (std::size_t i = 0; i < spec.dim(); ++i) {
    const auto tb = coordinate_tail_behavior(spec, i);
    if (!tb.eventually_constant()) continue;
    // the anchor corner on the bounded side is frozen from layer onset-1 on
    const std::int64_t onset_layer = tb.onset - 1;
    const auto cell = anchor_cell(spec, onset_layer);
    Wall wall;
    wall.axis = i;
    wall.onset_layer = onset_layer;
    if (tb.value > 0) {
      wall.bound = Wall::Bound::Lower;
      wall.position = cell.low[i].to_integer();
    } else {
      wall.bound = Wall::Bound::Upper;
      wall.position = cell.high[i].to_integer();
    }
    report.walls.push_back(std::move(wall));
  }
  report.k = report.walls.size();
  report.pool_count = std::uint64_t{1} << report.k;
  report.octant_dims = report.k;
  report.euclidean_dims = report.dim - report.k;
  return report;
}

std::vector<int> pool_id(const SequenceSpec& spec, const PoolReport& report, const TileAddress& t) {
  std::vector<int> out;
  out.reserve(report.walls.size());
  if (report.walls.empty()) return out;
  const Box f = footprint(spec, t);
  for (const auto& wall : report.walls) {
    const Dyadic w(wall.position);
    const auto& side = f.sides[wall.axis];
    if (side.lo >= w) {
      out.push_back(+1);
    } else if (side.hi <= w) {
      out.push_back(-1);
    } else {
      throw Error(Errc::WallDissectsTile, "wall x" + std::to_string(wall.axis + 1) + " = " + wall.position.str() +
                                              " cuts tile " + t.to_string());
    }
  }
  return out;
}

std::vector<int> pool_id(const SequenceSpec& spec, const TileAddress& t) {
  return pool_id(spec, pool_analysis(spec), t);
}

std::vector<std::vector<std::size_t>> flood_pools(const TileComplex& window) {
  std::vector<std::size_t> root(window.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : window.edges()) {
    if (!e.horospheric()) continue;
    const auto a = find(e.from), b = find(e.to);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  // every root is the smallest index of its component, so ascending roots give
  // the required ordering
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> slot(window.size(), SIZE_MAX);
  for (std::size_t i = 0; i < window.size(); ++i) {
    const auto r = find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = components.size();
      components.emplace_back();
    }
    components[slot[r]].push_back(i);
  }
  return components;
}

std::size_t components_meeting(const TileComplex& window, const std::vector<std::vector<std::size_t>>& components,
                               std::int64_t layer, const Box& region) {
  std::size_t count = 0;
  for (const auto& comp : components) {
    const bool meets = std::any_of(comp.begin(), comp.end(), [&](std::size_t i) {
      const auto& t = window.nodes()[i];
      if (t.layer != layer) return false;
      const Box f = footprint(window.spec(), t);
      for (std::size_t a = 0; a < f.dim(); ++a) {
        if (!(f.sides[a].lo < region.sides[a].hi && region.sides[a].lo < f.sides[a].hi)) return false;
      }
      return true;
    });
    count += meets;
  }
  return count;
}

VerificationWindow standard_verification_window(const SequenceSpec& spec) {
  const auto mp = minimal_period(spec);  // throws FiniteWordMode
  const auto horizon = static_cast<std::int64_t>(mp->preperiod);
  const auto top = horizon + static_cast<std::int64_t>(mp->period) + 2;
  const Dyadic half = Dyadic::pow2(horizon + 1);
  Box box = Box::cube(spec.dim(), -half, half);
  auto window = build_window(spec, {0, top}, box);
  return {horizon, top, std::move(box), std::move(window)};
}

}  // namespace boroczky
