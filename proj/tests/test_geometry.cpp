#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "boroczky/error.hpp"
#include "boroczky/geometry.hpp"

using namespace boroczky;

namespace {

SequenceSpec d1(std::vector<int> pre, std::vector<int> period) {
  return SequenceSpec::eventually_periodic({{std::move(pre), std::move(period)}});
}

// cross-ratio (a, b; c, d)
std::complex<double> cross_ratio(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                                 std::complex<double> d) {
  return (a - c) * (b - d) / ((a - d) * (b - c));
}

}  // namespace

TEST_CASE("embed_region examples") {
  const auto r = embed_region(d1({}, {1}), {0, {0}});
  CHECK(r.box.sides[0].lo == Dyadic(-1));
  CHECK(r.box.sides[0].hi == Dyadic(1));
  CHECK(r.low_height == Dyadic(1));
  CHECK(r.high_height == Dyadic(2));
}

TEST_CASE("intrinsic facet sizes and stacked bands") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> cell(-50, 50), layer(-6, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = trial % 3 + 1;
    const auto spec = SequenceSpec::eventually_periodic(oracle::random_coords(rng, d));
    TileAddress t{layer(rng), {}};
    for (std::size_t i = 0; i < d; ++i) t.cell.push_back(cell(rng));
    const auto m = metric_report(spec, t);
    CHECK(m.a_size == Dyadic(1));
    CHECK(m.b_size == Dyadic(2));
    CHECK(std::abs(m.layer_distance - std::log(2.0)) < 1e-12);
    const auto r = embed_region(spec, t);
    for (const auto& side : r.box.sides) CHECK(side.length() == r.high_height);
    const auto p = embed_region(spec, parent(spec, t).address);
    CHECK(p.low_height == r.high_height);
  }
}

TEST_CASE("layer distance is additive") {
  CHECK(std::abs(layer_distance(0, 5) - 5 * std::log(2.0)) < 1e-12);
  CHECK(std::abs(layer_distance(3, -2) - 5 * std::log(2.0)) < 1e-12);
  CHECK(layer_distance(4, 4) == 0.0);
  for (std::int64_t j = -5; j < 5; ++j) {
    CHECK(std::abs(layer_distance(j, j + 5) - std::log(std::ldexp(1.0, j + 5) / std::ldexp(1.0, j))) < 1e-12);
  }
}

TEST_CASE("geometric adjacency examples") {
  const auto spec = d1({}, {1});
  const auto a = embed_region(spec, {0, {0}});
  CHECK(geometric_adjacent(a, embed_region(spec, {0, {1}})));
  CHECK(geometric_adjacent(a, embed_region(spec, parent(spec, {0, {0}}).address)));
  CHECK_FALSE(geometric_adjacent(a, a));
  CHECK_FALSE(geometric_adjacent(a, embed_region(spec, {0, {2}})));
  // corner contact only
  CHECK_FALSE(geometric_adjacent(a, embed_region(spec, {1, {1}})));
}

TEST_CASE("to_disc") {
  CHECK(std::abs(to_disc({0, 1})) < 1e-15);
  for (double x : {-100.0, -3.0, -0.5, 0.0, 0.25, 7.0, 1e4}) CHECK(std::abs(std::abs(to_disc({x, 0})) - 1) < 1e-12);
  for (double y : {0.1, 1.0, 8.0, 1e3}) CHECK(std::abs(to_disc({0.3, y})) < 1);
  CHECK(std::abs(to_disc({0, 1e12}) - std::complex<double>(1, 0)) < 1e-9);
  CHECK_THROWS_AS(to_disc({0, -1}), Error);

  const std::complex<double> a(0.5, 0.1), b(0.5, 0.7), c(0.5, 2.0), d(0.5, 5.5);
  const auto before = cross_ratio(a, b, c, d);
  const auto after = cross_ratio(to_disc(a), to_disc(b), to_disc(c), to_disc(d));
  CHECK(std::abs(before - after) < 1e-10);
}

TEST_CASE("to_disc preserves angles") {
  const double h = 1e-6;
  for (double x = -3; x <= 3; x += 0.75) {
    for (double y = 0.25; y <= 4; y *= 2) {
      const std::complex<double> z(x, y);
      for (double theta : {0.3, 1.1, 2.0}) {
        const auto u = std::polar(1.0, 0.0), v = std::polar(1.0, theta);
        const auto du = to_disc(z + h * u) - to_disc(z - h * u);
        const auto dv = to_disc(z + h * v) - to_disc(z - h * v);
        CHECK(std::abs(std::arg(dv / du) - theta) < 1e-8);
      }
    }
  }
}

TEST_CASE("combinatorial and geometric adjacency coincide") {
  std::mt19937_64 rng(9);
  const std::vector<std::pair<LayerRange, std::int64_t>> windows{{{-5, 4}, 16}, {{-2, 2}, 8}};
  for (std::size_t d = 1; d <= 2; ++d) {
    for (int trial = 0; trial < 2; ++trial) {
      const auto spec = SequenceSpec::eventually_periodic(oracle::random_coords(rng, d));
      const auto& [layers, half] = windows[d - 1];
      const auto w = build_window(spec, layers, Box::cube(d, Dyadic(-half), Dyadic(half)));
      REQUIRE(w.size() >= 1000);
      std::vector<HalfSpaceRegion> regions;
      for (const auto& t : w.nodes()) regions.push_back(embed_region(spec, t));
      std::set<std::pair<std::size_t, std::size_t>> combinatorial;
      for (const auto& e : w.edges()) combinatorial.insert(std::minmax(e.from, e.to));
      std::size_t geometric = 0;
      for (std::size_t a = 0; a < regions.size(); ++a) {
        for (std::size_t b = a + 1; b < regions.size(); ++b) {
          if (geometric_adjacent(regions[a], regions[b])) {
            ++geometric;
            CHECK(combinatorial.count({a, b}) == 1);
          }
        }
      }
      CHECK(geometric == combinatorial.size());
    }
  }
}
