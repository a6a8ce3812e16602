#include "boroczky/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "boroczky/error.hpp"

namespace boroczky {

HalfSpaceRegion embed_region(const SequenceSpec& spec, const TileAddress& t) {
  return {t, footprint(spec, t), Dyadic::pow2(t.layer), Dyadic::pow2(t.layer + 1)};
}

namespace {

// -1: empty, 0: a single point, 1: positive length
int overlap(const Dyadic& lo1, const Dyadic& hi1, const Dyadic& lo2, const Dyadic& hi2) {
  const Dyadic& lo = lo1 < lo2 ? lo2 : lo1;
  const Dyadic& hi = hi1 < hi2 ? hi1 : hi2;
  if (hi < lo) return -1;
  return hi == lo ? 0 : 1;
}

}  // namespace

bool geometric_adjacent(const HalfSpaceRegion& a, const HalfSpaceRegion& b) {
  if (a.box.dim() != b.box.dim()) throw Error(Errc::InvalidArgument, "regions of different dimension");
  int degenerate = 0;
  for (std::size_t i = 0; i < a.box.dim(); ++i) {
    const int o = overlap(a.box.sides[i].lo, a.box.sides[i].hi, b.box.sides[i].lo, b.box.sides[i].hi);
    if (o < 0) return false;
    degenerate += o == 0;
  }
  const int o = overlap(a.low_height, a.high_height, b.low_height, b.high_height);
  if (o < 0) return false;
  degenerate += o == 0;
  return degenerate == 1;
}

namespace {

// width / height for powers of two, exactly
Dyadic ratio(const Dyadic& width, const Dyadic& height) {
  return width * Dyadic::pow2(-height.exponent());
}

}  // namespace

MetricReport metric_report(const SequenceSpec& spec, const TileAddress& t) {
  const auto region = embed_region(spec, t);
  const auto width = region.box.sides.at(0).length();
  return {std::log(region.high_height.to_double() / region.low_height.to_double()),
          ratio(width, region.high_height), ratio(width, region.low_height)};
}

double layer_distance(std::int64_t j1, std::int64_t j2) {
  // integral of dy / y from 2^j1 to 2^j2
  const auto steps = static_cast<double>(j1 < j2 ? j2 - j1 : j1 - j2);
  return steps * std::log(2.0);
}

std::set<TileAddress> geometric_corona(const SequenceSpec& spec, const TileAddress& t, std::size_t k) {
  const auto kk = static_cast<std::int64_t>(k);
  const auto reach = Dyadic(kk + 1) * Dyadic::pow2(t.layer + kk + 1);
  auto box = footprint(spec, t);
  for (auto& side : box.sides) {
    side.lo = side.lo - reach;
    side.hi = side.hi + reach;
  }
  const auto candidates = build_window(spec, {t.layer - kk, t.layer + kk}, box);
  std::vector<HalfSpaceRegion> regions;
  for (const auto& n : candidates.nodes()) regions.push_back(embed_region(spec, n));

  std::set<TileAddress> seen{t};
  std::vector<TileAddress> frontier{t};
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<TileAddress> next;
    for (const auto& f : frontier) {
      const auto rf = embed_region(spec, f);
      for (const auto& rn : regions) {
        if (geometric_adjacent(rf, rn) && seen.insert(rn.tile).second) next.push_back(rn.tile);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

CoronaShape corona_shape(const SequenceSpec& spec, const TileAddress& t, const std::set<TileAddress>& members,
                         bool mirror) {
  if (spec.dim() != 1) throw Error(Errc::UnsupportedDimension, "corona shapes are defined for d=1");
  const auto c = footprint(spec, t).sides[0];
  CoronaShape out;
  for (const auto& m : members) {
    const auto s = footprint(spec, m).sides[0];
    if (mirror) {
      out.emplace_back(m.layer - t.layer, c.hi - s.hi, c.hi - s.lo);
    } else {
      out.emplace_back(m.layer - t.layer, s.lo - c.lo, s.hi - c.lo);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool congruent_d1(const SequenceSpec& spec, const TileAddress& a, const TileAddress& b, std::size_t k) {
  if (a.layer != b.layer) return false;
  const auto ma = geometric_corona(spec, a, k), mb = geometric_corona(spec, b, k);
  const auto sa = corona_shape(spec, a, ma, false);
  return sa == corona_shape(spec, b, mb, false) || sa == corona_shape(spec, b, mb, true);
}

std::complex<double> to_disc(std::complex<double> z) {
  if (!(z.imag() >= 0)) throw Error(Errc::InvalidArgument, "to_disc needs a point of the closed upper half-plane");
  const std::complex<double> i(0, 1);
  return (z - i) / (z + i);
}

}  // namespace boroczky
