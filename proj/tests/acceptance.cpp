// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"

#include "boroczky/corona.hpp"
#include "boroczky/error.hpp"
#include "boroczky/geometry.hpp"
#include "boroczky/pools.hpp"
#include "boroczky/symmetry.hpp"

using namespace boroczky;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// 1. N_k = 2^(k-1) for d=1, k = 1..8
Outcome corona_count() {
  Outcome o;
  const auto start = Clock::now();
  const auto specs = catalog::d1();
  for (std::size_t s = 0; s < specs.size(); ++s) {
    for (std::size_t k = 1; k <= 8; ++k) {
      const auto r = census(specs[s], k, CensusWindow::centered(1, 0, std::int64_t{1} << (k + 2)));
      if (r.n_k() != std::size_t{1} << (k - 1)) {
        o.fail("spec " + std::to_string(s) + " k=" + std::to_string(k) + ": N_k = " + std::to_string(r.n_k()));
      }
    }
  }
  const auto t = seconds_since(start);
  if (t >= 10) o.fail("took " + fmt_seconds(t));
  if (o.pass) o.detail = "10 specs x k=1..8 in " + fmt_seconds(t);
  return o;
}

// 2. pool counts, analytic and by flood fill
Outcome pool_counts() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t k = 0; k <= d; ++k) {
      std::vector<CoordinateWord> coords;
      for (std::size_t i = 0; i < d; ++i) {
        // bounded coordinates get varied preperiods and signs; the rest alternate
        if (i < k) coords.push_back({std::vector<int>(i, -1), {i % 2 ? -1 : 1}});
        else coords.push_back({{}, i % 2 ? std::vector<int>{1, 1, -1} : std::vector<int>{1, -1}});
      }
      const auto spec = SequenceSpec::eventually_periodic(coords);
      const auto expected = std::uint64_t{1} << k;
      const auto analytic = pool_analysis(spec).pool_count;
      const auto flood = flood_pools(standard_verification_window(spec).window).size();
      if (analytic != expected || flood != expected) {
        o.fail("d=" + std::to_string(d) + " k=" + std::to_string(k) + ": analytic " + std::to_string(analytic) +
               ", flood " + std::to_string(flood));
      }
      ++cases;
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " (d, k) cases";
  return o;
}

// 3. walls are coordinate hyperplanes on distinct axes; pools are E^(d-k) (+) octant^k
Outcome pool_geometry() {
  Outcome o;
  const auto specs = catalog::all();
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const auto& spec = specs[s];
    const auto d = spec.dim();
    const auto r = pool_analysis(spec);
    const auto tag = "spec " + std::to_string(s) + ": ";
    std::set<std::size_t> axes;
    for (const auto& w : r.walls) axes.insert(w.axis);
    if (axes.size() != r.walls.size() || r.walls.size() != r.k) o.fail(tag + "walls do not lie on distinct axes");
    // distinct coordinate hyperplanes meet in a (d-k)-plane
    if (r.euclidean_dims != d - r.k || r.octant_dims != r.k) o.fail(tag + "support signature mismatch");

    // every wall is totally separating inside the verification window, and all
    // 2^k sides are inhabited
    const auto v = standard_verification_window(spec);
    std::set<std::vector<int>> ids;
    for (const auto& comp : flood_pools(v.window)) {
      const auto id = pool_id(spec, r, v.window.nodes()[comp.front()]);
      ids.insert(id);
      for (auto n : comp) {
        const auto f = footprint(spec, v.window.nodes()[n]);
        for (std::size_t w = 0; w < r.walls.size(); ++w) {
          const auto& side = f.sides[r.walls[w].axis];
          const Dyadic pos(r.walls[w].position);
          const bool ok = id[w] > 0 ? pos <= side.lo : side.hi <= pos;
          if (!ok) o.fail(tag + "tile " + v.window.nodes()[n].to_string() + " crosses wall " + std::to_string(w));
        }
      }
    }
    if (ids.size() != r.pool_count) o.fail(tag + "not every side of the walls holds a pool");

    // the anchor tower grows without bound in both directions of every free
    // axis and away from the wall along bounded ones
    const auto period = minimal_period(spec).value();
    const auto j0 = static_cast<std::int64_t>(period.preperiod + 1);
    const auto j1 = j0 + static_cast<std::int64_t>(period.period);
    const auto lo = anchor_cell(spec, j0), hi = anchor_cell(spec, j1);
    for (std::size_t i = 0; i < d; ++i) {
      const auto wall = std::find_if(r.walls.begin(), r.walls.end(), [&](const Wall& w) { return w.axis == i; });
      const bool grows_down = hi.low[i] < lo.low[i], grows_up = lo.high[i] < hi.high[i];
      bool ok = false;
      if (wall == r.walls.end()) ok = grows_down && grows_up;
      else if (wall->bound == Wall::Bound::Lower) ok = !grows_down && grows_up && hi.low[i] == Dyadic(wall->position);
      else ok = grows_down && !grows_up && hi.high[i] == Dyadic(wall->position);
      if (!ok) o.fail(tag + "anchor growth on axis " + std::to_string(i + 1) + " contradicts the signature");
    }
  }
  if (o.pass) o.detail = std::to_string(specs.size()) + " catalog specs";
  return o;
}

// 4. symmetry descriptors
Outcome symmetry_table() {
  Outcome o;
  struct Row {
    SequenceSpec spec;
    std::optional<AperiodicAssumption> assumption;
    std::string group;
  };
  auto s = catalog::spec;
  auto word = [](std::vector<std::vector<int>> letters) {
    std::vector<Symbol> w;
    for (auto& l : letters) w.emplace_back(l);
    return SequenceSpec::finite_word(std::move(w));
  };
  const std::vector<Row> table{
      {s({{{}, {1}}}), {}, "Z x B1"},
      {s({{{}, {-1}}}), {}, "Z x B1"},
      {s({{{1}, {-1}}}), {}, "Z x B1"},
      {s({{{}, {1, -1}}}), {}, "Z"},
      {s({{{}, {1, 1, -1, -1}}}), {}, "Z"},
      {s({{{}, {1}}, {{}, {1}}}), {}, "Z x B2"},
      {s({{{}, {1}}, {{}, {1, -1}}}), {}, "Z x B1"},
      {s({{{}, {1, -1}}, {{}, {1, 1, -1}}}), {}, "Z"},
      {s({{{}, {1}}, {{}, {1}}, {{}, {-1}}}), {}, "Z x B3"},
      {word({{1}, {-1}, {-1}, {1}}), AperiodicAssumption{0}, "trivial"},
      {word({{1, 1}, {-1, 1}}), AperiodicAssumption{1}, "B1"},
      {word({{1, 1, -1}, {-1, 1, -1}}), AperiodicAssumption{2}, "B2"},
  };
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto got = classify_symmetry(table[i].spec, table[i].assumption).group.to_string();
    if (got != table[i].group) o.fail("row " + std::to_string(i + 1) + ": " + got + " != " + table[i].group);
  }
  if (o.pass) o.detail = std::to_string(table.size()) + " rows";
  return o;
}

// 5. period 4, essential period 2 by a sign flip
Outcome essential_period_example() {
  Outcome o;
  const auto spec = catalog::spec({{{}, {1, 1, -1, -1}}});
  const auto p = minimal_period(spec).value();
  const auto e = essential_period(spec).value();
  if (p.period != 4 || p.preperiod != 0) o.fail("minimal period " + std::to_string(p.period));
  if (e.q != 2) o.fail("essential period " + std::to_string(e.q));
  if (e.witness != SignedPermutation::negation(1)) o.fail("witness " + e.witness.to_string());
  if (o.pass) o.detail = "period 4, essential 2, witness " + e.witness.to_string();
  return o;
}

// 6. anchor cells have edge 2^(j+1) and are tiled by their descendants
Outcome tower_footprints() {
  Outcome o;
  std::size_t tiles = 0;
  for (const auto& spec : catalog::all()) {
    const auto d = spec.dim();
    for (std::int64_t j = -8; j <= 64; ++j) {
      const auto a = anchor_cell(spec, j);
      for (std::size_t i = 0; i < d; ++i) {
        if (a.high[i] - a.low[i] != Dyadic::pow2(j + 1)) o.fail("edge at layer " + std::to_string(j));
      }
    }
    const std::size_t depth = 6;
    for (const std::int64_t j : d == 3 ? std::vector<std::int64_t>{3} : std::vector<std::int64_t>{0, 3, 9}) {
      const auto a = anchor_cell(spec, j);
      Box box;
      for (std::size_t i = 0; i < d; ++i) box.sides.push_back({a.low[i], a.high[i]});
      std::vector<TileAddress> level{{j, Cell(d, 0)}};
      for (std::size_t r = 1; r <= depth; ++r) {
        std::vector<TileAddress> next;
        Dyadic volume(0);
        for (const auto& t : level) {
          for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
            HalfBits h(d);
            for (std::size_t i = 0; i < d; ++i) h[i] = (mask >> i) & 1U;
            auto c = child(spec, t, h);
            const auto f = footprint(spec, c);
            if (!box.contains(f)) o.fail("descendant " + c.to_string() + " leaves the anchor cell");
            volume = volume + f.volume();
            next.push_back(std::move(c));
          }
        }
        // closed boxes inside the cell with total volume equal to the cell's cover it
        if (volume != box.volume()) o.fail("depth " + std::to_string(r) + " below layer " + std::to_string(j));
        tiles += next.size();
        level = std::move(next);
      }
    }
  }
  if (o.pass) o.detail = "j = -8..64 edges; " + std::to_string(tiles) + " descendant footprints";
  return o;
}

// 7. Local Theorem verdicts
Outcome local_theorem() {
  Outcome o;
  for (const auto& spec : catalog::d1()) {
    std::vector<CensusReport> reports;
    for (std::size_t k = 0; k <= 5; ++k) reports.push_back(census(spec, k, CensusWindow::centered(1, 0, 32)));
    const auto v = local_theorem_check(reports);
    if (v.to_string() != "NonCrystallographic(condition 2 at k=0)") o.fail(v.to_string());
  }
  const std::vector<CensusReport> stable{
      {1, 0, CensusWindow::centered(1, 0, 1), {{CoronaCode{1, {}}, {0, {0}}, 2, 1}}},
      {1, 1, CensusWindow::centered(1, 0, 2), {{CoronaCode::parse(1, "+"), {0, {0}}, 2, 1}}},
  };
  const auto v = local_theorem_check(stable);
  if (v.to_string() != "Crystallographic(0)") o.fail("synthetic census: " + v.to_string());
  if (o.pass) o.detail = "10 specs non-crystallographic at k=0 (condition 2); synthetic Crystallographic(0)";
  return o;
}

// 8. ln 2 between horospheres, b/a = 2
Outcome metric_facts() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t n = 0;
  for (const auto& spec : catalog::all()) {
    const auto d = spec.dim();
    const auto w = build_window(spec, {-3, 4}, Box::cube(d, Dyadic(-4), Dyadic(4)));
    for (const auto& t : w.nodes()) {
      const auto m = metric_report(spec, t);
      if (std::abs(m.layer_distance - std::log(2.0)) > 1e-12) o.fail("layer distance at " + t.to_string());
      const double ratio = m.b_size.to_double() / m.a_size.to_double();
      if (std::abs(ratio - 2) > 1e-12) o.fail("b/a at " + t.to_string());
      ++n;
    }
  }
  for (std::int64_t j = -5; j <= 5; ++j) {
    if (std::abs(layer_distance(j, j + 5) - 5 * std::log(2.0)) > 1e-12) o.fail("additivity at " + std::to_string(j));
  }
  const auto t = seconds_since(start);
  if (t >= 1) o.fail("took " + fmt_seconds(t));
  if (o.pass) o.detail = std::to_string(n) + " tiles in " + fmt_seconds(t);
  return o;
}

// 9. combinatorial adjacency equals geometric adjacency
Outcome adjacency_oracle() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t windows = 0, tiles = 0;
  for (const auto& spec : catalog::all()) {
    const auto d = spec.dim();
    if (d > 2) continue;
    const auto w = d == 1 ? build_window(spec, {-5, 4}, Box::cube(1, Dyadic(-16), Dyadic(16)))
                          : build_window(spec, {-2, 2}, Box::cube(2, Dyadic(-8), Dyadic(8)));
    if (w.size() < 1000) o.fail("window of only " + std::to_string(w.size()) + " tiles");
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : w.edges()) edges.insert(std::minmax(e.from, e.to));
    std::vector<HalfSpaceRegion> regions;
    for (const auto& t : w.nodes()) regions.push_back(embed_region(spec, t));
    for (std::size_t a = 0; a < regions.size(); ++a) {
      for (std::size_t b = a + 1; b < regions.size(); ++b) {
        if (geometric_adjacent(regions[a], regions[b]) != (edges.count({a, b}) == 1)) {
          o.fail(w.nodes()[a].to_string() + " vs " + w.nodes()[b].to_string());
        }
      }
    }
    ++windows;
    tiles += w.size();
  }
  const auto t = seconds_since(start);
  if (t >= 30) o.fail("took " + fmt_seconds(t));
  if (o.pass) o.detail = std::to_string(windows) + " windows, " + std::to_string(tiles) + " tiles in " + fmt_seconds(t);
  return o;
}

// 10. codes agree with geometric congruence (d=1) and with Burnside (d=2)
Outcome corona_model() {
  Outcome o;
  const auto specs = catalog::d1();
  std::size_t pairs = 0;
  for (const auto& spec : {specs[0], specs[3], specs[8]}) {
    std::vector<TileAddress> tiles;
    for (std::int64_t m = -32; m < 32; ++m) tiles.push_back({0, {m}});
    for (std::size_t k = 0; k <= 4; ++k) {
      std::vector<CoronaCode> codes;
      std::vector<CoronaShape> plain, mirrored;
      for (const auto& t : tiles) {
        codes.push_back(corona_code(spec, t, k));
        const auto members = geometric_corona(spec, t, k);
        plain.push_back(corona_shape(spec, t, members, false));
        mirrored.push_back(corona_shape(spec, t, members, true));
      }
      for (std::size_t a = 0; a < tiles.size(); ++a) {
        for (std::size_t b = a + 1; b < tiles.size(); ++b) {
          const bool congruent = plain[a] == plain[b] || plain[a] == mirrored[b];
          if ((codes[a] == codes[b]) != congruent) {
            o.fail("k=" + std::to_string(k) + " " + tiles[a].to_string() + " vs " + tiles[b].to_string());
          }
          ++pairs;
        }
      }
    }
  }
  for (const auto& spec : catalog::all()) {
    if (spec.dim() != 2) continue;
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto r = census(spec, k, CensusWindow::centered(2, 0, std::int64_t{1} << (2 * k)));
      if (r.n_k() != burnside_orbits(2, k)) {
        o.fail("d=2 k=" + std::to_string(k) + ": census " + std::to_string(r.n_k()) + ", Burnside " +
               std::to_string(burnside_orbits(2, k)));
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(pairs) + " tile pairs; d=2 N_0..N_3 = " + std::to_string(burnside_orbits(2, 0)) + "," +
               std::to_string(burnside_orbits(2, 1)) + "," + std::to_string(burnside_orbits(2, 2)) + "," +
               std::to_string(burnside_orbits(2, 3));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"corona count N_k = 2^(k-1)", corona_count},
      {"pool counts 2^k", pool_counts},
      {"pool geometry", pool_geometry},
      {"symmetry classification", symmetry_table},
      {"essential period", essential_period_example},
      {"tower footprints", tower_footprints},
      {"non-crystallographicity", local_theorem},
      {"metric facts", metric_facts},
      {"adjacency oracle", adjacency_oracle},
      {"corona model validation", corona_model},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("AC%-2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures ? 1 : 0;
}
