#include <cmath>
#include <functional>
#include <optional>
#include <set>

#include "cli.hpp"
#include "spec_io.hpp"

#include "boroczky/corona.hpp"
#include "boroczky/error.hpp"
#include "boroczky/geometry.hpp"
#include "boroczky/pools.hpp"
#include "boroczky/symmetry.hpp"

namespace boroczky::cli {

namespace {

using Witness = std::optional<std::string>;

std::vector<TileAddress> sample_tiles(std::size_t d, std::int64_t lo_layer, std::int64_t hi_layer) {
  const std::int64_t half = d == 1 ? 8 : d == 2 ? 4 : 2;
  std::vector<TileAddress> out;
  for (auto j = lo_layer; j <= hi_layer; ++j) {
    TileAddress t{j, Cell(d, -half)};
    for (bool more = true; more;) {
      out.push_back(t);
      more = false;
      for (std::size_t i = d; i-- > 0;) {
        if (t.cell[i] < half - 1) {
          ++t.cell[i];
          more = true;
          break;
        }
        t.cell[i] = -half;
      }
    }
  }
  return out;
}

std::vector<HalfBits> all_halves(std::size_t d) {
  std::vector<HalfBits> out;
  for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
    HalfBits h(d);
    for (std::size_t i = 0; i < d; ++i) h[i] = (mask >> i) & 1U;
    out.push_back(h);
  }
  return out;
}

Witness spec_roundtrip(const SequenceSpec& spec) {
  const auto text = io::spec_json(spec).dump();
  if (io::parse_spec(text) != spec) return "canonical document " + text + " parses to a different spec";
  return {};
}

Witness parent_child(const SequenceSpec& spec) {
  for (const auto& t : sample_tiles(spec.dim(), -2, 3)) {
    const auto p = parent(spec, t);
    if (child(spec, p.address, p.half) != t) return "child(parent(t)) != t for t = " + t.to_string();
    if (!footprint(spec, p.address).contains(footprint(spec, t))) {
      return "footprint of " + t.to_string() + " leaves its parent " + p.address.to_string();
    }
  }
  return {};
}

Witness tower_footprints(const SequenceSpec& spec) {
  const std::size_t d = spec.dim();
  const std::size_t depth = d == 1 ? 5 : d == 2 ? 3 : 2;
  const auto halves = all_halves(d);
  for (std::int64_t j = 0; j <= 4; ++j) {
    const auto a = anchor_cell(spec, j);
    Box anchor_box;
    for (std::size_t i = 0; i < d; ++i) anchor_box.sides.push_back({a.low[i], a.high[i]});
    const TileAddress root{j, Cell(d, 0)};
    if (footprint(spec, root) != anchor_box) return "anchor cell differs from footprint of " + root.to_string();
    std::vector<TileAddress> level{root};
    for (std::size_t r = 1; r <= depth; ++r) {
      std::vector<TileAddress> next;
      Dyadic volume(0);
      for (const auto& t : level) {
        for (const auto& h : halves) {
          auto c = child(spec, t, h);
          const auto f = footprint(spec, c);
          if (!anchor_box.contains(f)) return "descendant " + c.to_string() + " leaves the tower of " + root.to_string();
          volume = volume + f.volume();
          next.push_back(std::move(c));
        }
      }
      if (volume != anchor_box.volume()) {
        return "depth-" + std::to_string(r) + " descendants of " + root.to_string() + " do not cover the anchor cell";
      }
      level = std::move(next);
    }
  }
  return {};
}

Witness adjacency_oracle(const SequenceSpec& spec) {
  const std::size_t d = spec.dim();
  const auto w = build_window(spec, {-1, 1}, Box::cube(d, Dyadic(-4), Dyadic(4)));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : w.edges()) edges.insert(std::minmax(e.from, e.to));
  std::vector<HalfSpaceRegion> regions;
  for (const auto& t : w.nodes()) regions.push_back(embed_region(spec, t));
  for (std::size_t a = 0; a < regions.size(); ++a) {
    for (std::size_t b = a + 1; b < regions.size(); ++b) {
      if (geometric_adjacent(regions[a], regions[b]) != (edges.count({a, b}) == 1)) {
        return "tiles " + w.nodes()[a].to_string() + " and " + w.nodes()[b].to_string() +
               " disagree on adjacency";
      }
    }
  }
  return {};
}

Witness metric(const SequenceSpec& spec) {
  for (const auto& t : sample_tiles(spec.dim(), -3, 3)) {
    const auto m = metric_report(spec, t);
    if (m.a_size != Dyadic(1) || m.b_size != Dyadic(2)) return "facet sizes of " + t.to_string() + " are not 1 and 2";
    if (std::abs(m.layer_distance - std::log(2.0)) > 1e-12) return "layer distance at " + t.to_string() + " is not ln 2";
  }
  return {};
}

Witness pool_count(const SequenceSpec& spec) {
  const auto report = pool_analysis(spec);
  const auto v = standard_verification_window(spec);
  const auto comps = flood_pools(v.window);
  if (comps.size() != report.pool_count) {
    return "flood finds " + std::to_string(comps.size()) + " components, analysis predicts " +
           std::to_string(report.pool_count);
  }
  for (const auto& comp : comps) {
    const auto first = pool_id(spec, report, v.window.nodes()[comp.front()]);
    for (auto n : comp) {
      if (pool_id(spec, report, v.window.nodes()[n]) != first) {
        return "pool_id changes inside a component at " + v.window.nodes()[n].to_string();
      }
    }
  }
  return {};
}

Witness census_burnside(const SequenceSpec& spec) {
  const std::size_t d = spec.dim();
  const std::size_t top = d == 1 ? 5 : d == 2 ? 3 : 1;
  for (std::size_t k = 0; k <= top; ++k) {
    const auto r = census(spec, k, CensusWindow::centered(d, 0, std::int64_t{1} << (d * k)));
    if (r.n_k() != burnside_orbits(d, k)) {
      return "k=" + std::to_string(k) + ": census " + std::to_string(r.n_k()) + ", Burnside " +
             std::to_string(burnside_orbits(d, k));
    }
  }
  return {};
}

Witness corona_congruence(const SequenceSpec& spec) {
  for (std::size_t k = 0; k <= 3; ++k) {
    std::vector<TileAddress> tiles;
    for (std::int64_t m = -8; m < 8; ++m) tiles.push_back({0, {m}});
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
          return "k=" + std::to_string(k) + ": " + tiles[a].to_string() + " and " + tiles[b].to_string() +
                 (congruent ? " are congruent but coded differently" : " share a code but are not congruent");
        }
      }
    }
  }
  return {};
}

Witness local_theorem(const SequenceSpec& spec) {
  std::vector<CensusReport> reports;
  for (std::size_t k = 0; k <= 3; ++k) reports.push_back(census(spec, k, CensusWindow::centered(1, 0, 8)));
  const auto v = local_theorem_check(reports);
  if (v.crystallographic || v.violations.front().k != 0 || v.violations.front().condition != 2) {
    return "verdict " + v.to_string() + ", expected condition 2 at k=0";
  }
  return {};
}

Witness symmetry(const SequenceSpec& spec) {
  const auto r = classify_symmetry(spec);
  if (r.group.k != pool_analysis(spec).k) return "group " + r.group.to_string() + " disagrees with the pool count";
  if (r.essential && r.period) {
    const auto q = static_cast<std::int64_t>(r.essential->q);
    const auto from = static_cast<std::int64_t>(r.period->preperiod) + 1;
    for (auto j = from; j < from + 2 * static_cast<std::int64_t>(r.period->period); ++j) {
      if (r.essential->witness.apply(seq_letter(spec, j)) != seq_letter(spec, j + q)) {
        return "witness " + r.essential->witness.to_string() + " does not map letter " + std::to_string(j) +
               " to letter " + std::to_string(j + q);
      }
    }
  }
  return {};
}

}  // namespace

std::vector<PropertyOutcome> verify_spec(const std::string& spec_text) {
  const auto spec = io::parse_spec(spec_text);
  const std::vector<std::pair<std::string, std::function<Witness(const SequenceSpec&)>>> suite{
      {"spec-roundtrip", spec_roundtrip},
      {"parent-child-inverse", parent_child},
      {"tower-footprints", tower_footprints},
      {"adjacency-oracle", adjacency_oracle},
      {"metric", metric},
      {"pool-count", pool_count},
      {"census-burnside", census_burnside},
      {"corona-congruence", corona_congruence},
      {"local-theorem", local_theorem},
      {"symmetry", symmetry},
  };
  std::vector<PropertyOutcome> out;
  for (const auto& [name, check] : suite) {
    PropertyOutcome o{name, PropertyOutcome::Status::Pass, {}};
    if ((name == "corona-congruence" || name == "local-theorem") && spec.dim() != 1) {
      o.status = PropertyOutcome::Status::Skip;
      o.detail = "d=1 only";
    } else {
      try {
        if (auto w = check(spec)) {
          o.status = PropertyOutcome::Status::Fail;
          o.detail = *w;
        }
      } catch (const Error& e) {
        if (e.code() != Errc::IndexBeyondWord && e.code() != Errc::FiniteWordMode) throw;
        o.status = PropertyOutcome::Status::Skip;
        o.detail = e.what();
      }
    }
    out.push_back(o);
    if (o.status == PropertyOutcome::Status::Fail) break;
  }
  return out;
}

}  // namespace boroczky::cli
