#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "spec_io.hpp"

#include "boroczky/corona.hpp"
#include "boroczky/error.hpp"
#include "boroczky/pools.hpp"
#include "boroczky/render.hpp"
#include "boroczky/symmetry.hpp"

namespace boroczky::cli {

namespace {

namespace fs = std::filesystem;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

std::int64_t parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) throw Error(Errc::ParseError, what + ": '" + text + "' is not an integer");
  return v;
}

// "A..B" or a single "A"
Range parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_integer(text, what);
    return {v, v};
  }
  Range r{parse_integer(text.substr(0, dots), what), parse_integer(text.substr(dots + 2), what)};
  if (r.hi < r.lo) throw Error(Errc::ValidationError, what + ": empty range " + text);
  return r;
}

struct RunConfig {
  std::string spec_path;
  std::string inline_spec;
  std::string k_range;
  std::string layers;
  std::int64_t half_width = 0;
  std::string model = "half-plane";
  std::string out;
  bool assume_aperiodic = false;
  std::size_t bounded_coords = 0;
  std::vector<std::string> style;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read spec file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string spec_text(const RunConfig& cfg) {
  if (cfg.spec_path.empty() == cfg.inline_spec.empty()) {
    throw Error(Errc::ParseError, "give exactly one of --spec PATH and --inline JSON");
  }
  return cfg.spec_path.empty() ? cfg.inline_spec : read_file(cfg.spec_path);
}

void write_text(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + cfg.out + "'");
  f << text;
}

std::int64_t positive_half_width(const RunConfig& cfg, std::int64_t fallback) {
  const auto h = cfg.half_width ? cfg.half_width : fallback;
  if (h < 1) throw Error(Errc::ValidationError, "--half-width must be positive");
  return h;
}

Range k_range(const RunConfig& cfg, Range fallback) {
  const auto r = cfg.k_range.empty() ? fallback : parse_range(cfg.k_range, "--k");
  if (r.lo < 0) throw Error(Errc::ValidationError, "--k must be non-negative");
  return r;
}

// census cells per coordinate: [-N, N-1]; default N = 2^(d * kmax)
CensusWindow census_window(const RunConfig& cfg, std::size_t d, std::int64_t kmax) {
  const auto shift = static_cast<std::int64_t>(d) * kmax;
  if (!cfg.half_width && shift > 40) throw Error(Errc::InvalidArgument, "default census window too large; give --half-width");
  return CensusWindow::centered(d, 0, positive_half_width(cfg, std::int64_t{1} << shift));
}

fs::path census_file(const fs::path& dir, const SequenceSpec& spec, std::size_t k, const CensusWindow& w) {
  std::string tag = "census-" + io::hex(io::spec_hash(spec)) + "-k" + std::to_string(k) + "-L" +
                    std::to_string(w.layer);
  for (std::size_t i = 0; i < w.dim(); ++i) tag += "_" + std::to_string(w.lo[i]) + "_" + std::to_string(w.hi[i]);
  return dir / (tag + ".json");
}

io::Json census_document(const SequenceSpec& spec, const CensusReport& r) {
  auto doc = io::to_json(r);
  io::Json out{{"spec", io::spec_json(spec)}, {"spec_hash", io::hex(io::spec_hash(spec))}};
  for (auto& [key, value] : doc.items()) out[key] = value;
  if (r.dim <= 4 && r.k <= 6) out["burnside_orbits"] = burnside_orbits(r.dim, r.k);
  return out;
}

// Reuse a persisted census when one exists for the same spec, k and window.
CensusReport load_or_run_census(const SequenceSpec& spec, std::size_t k, const CensusWindow& w, const fs::path& dir,
                                std::ostream& err) {
  const auto path = census_file(dir, spec, k, w);
  if (fs::exists(path)) {
    io::Json doc;
    try {
      doc = io::Json::parse(read_file(path.string()));
    } catch (const io::Json::parse_error& e) {
      throw Error(Errc::ParseError, "corrupt census file " + path.string() + ": " + e.what());
    }
    if (doc.value("spec", io::Json()) == io::spec_json(spec)) {
      auto r = io::census_from_json(doc);
      if (r.k == k && r.window == w) {
        err << "reusing " << path.string() << "\n";
        return r;
      }
    }
  }
  auto r = census(spec, k, w);
  fs::create_directories(dir);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
  f << census_document(spec, r).dump(2) << "\n";
  return r;
}

int cmd_pools(const RunConfig& cfg, std::ostream& out) {
  const auto spec = io::parse_spec(spec_text(cfg));
  write_text(cfg, out, io::to_json(pool_analysis(spec)).dump(2) + "\n");
  return 0;
}

int cmd_symmetry(const RunConfig& cfg, std::ostream& out) {
  const auto spec = io::parse_spec(spec_text(cfg));
  std::optional<AperiodicAssumption> assumption;
  if (cfg.assume_aperiodic) assumption = AperiodicAssumption{cfg.bounded_coords};
  else if (cfg.bounded_coords) throw Error(Errc::ValidationError, "--bounded-coords needs --assume-aperiodic");
  write_text(cfg, out, io::to_json(classify_symmetry(spec, assumption)).dump(2) + "\n");
  return 0;
}

int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto spec = io::parse_spec(spec_text(cfg));
  const auto ks = k_range(cfg, {1, 4});
  const auto w = census_window(cfg, spec.dim(), ks.hi);
  const fs::path dir = cfg.out.empty() ? fs::path("census") : fs::path(cfg.out);
  out << "k\tN_k\tburnside\tfile\n";
  for (auto k = ks.lo; k <= ks.hi; ++k) {
    const auto r = load_or_run_census(spec, static_cast<std::size_t>(k), w, dir, err);
    const auto d = spec.dim();
    const std::string predicted = d <= 4 && k <= 6 ? std::to_string(burnside_orbits(d, static_cast<std::size_t>(k))) : "-";
    out << k << "\t" << r.n_k() << "\t" << predicted << "\t"
        << census_file(dir, spec, static_cast<std::size_t>(k), w).string() << "\n";
  }
  return 0;
}

int cmd_local_theorem(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto spec = io::parse_spec(spec_text(cfg));
  const auto ks = k_range(cfg, {0, 4});
  if (ks.lo != 0) throw Error(Errc::InsufficientData, "local-theorem needs censuses from k = 0");
  const auto w = census_window(cfg, spec.dim(), ks.hi);
  const fs::path dir = cfg.out.empty() ? fs::path("census") : fs::path(cfg.out);
  std::vector<CensusReport> reports;
  for (std::int64_t k = 0; k <= ks.hi; ++k) {
    reports.push_back(load_or_run_census(spec, static_cast<std::size_t>(k), w, dir, err));
  }
  auto doc = io::to_json(local_theorem_check(reports));
  io::Json counts = io::Json::array();
  for (const auto& r : reports) counts.push_back({{"k", r.k}, {"N_k", r.n_k()}});
  doc["censuses"] = std::move(counts);
  out << doc.dump(2) << "\n";
  return 0;
}

TileComplex window_of(const RunConfig& cfg, const SequenceSpec& spec, Range fallback_layers, std::int64_t fallback_half) {
  const auto layers = cfg.layers.empty() ? fallback_layers : parse_range(cfg.layers, "--layers");
  const auto h = positive_half_width(cfg, fallback_half);
  return build_window(spec, {layers.lo, layers.hi}, Box::cube(spec.dim(), Dyadic(-h), Dyadic(h)));
}

int cmd_window(const RunConfig& cfg, std::ostream& out) {
  const auto spec = io::parse_spec(spec_text(cfg));
  write_text(cfg, out, io::to_json(window_of(cfg, spec, {0, 1}, 4)).dump(2) + "\n");
  return 0;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  const auto spec = io::parse_spec(spec_text(cfg));
  const auto model = parse_model(cfg.model);
  std::map<std::string, std::string> table;
  for (const auto& kv : cfg.style) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(Errc::ParseError, "--style expects key=value, got '" + kv + "'");
    table[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const auto style = StyleOptions::from_table(table);
  if (model != Model::Footprint && spec.dim() != 1) {
    throw Error(Errc::UnsupportedDimension, std::string("model ") + to_string(model) + " renders d=1 only");
  }
  write_text(cfg, out, render_svg(window_of(cfg, spec, {0, 2}, 8), model, style));
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  for (const auto& o : verify_spec(spec_text(cfg))) {
    switch (o.status) {
      case PropertyOutcome::Status::Pass: out << "ok   " << o.name << "\n"; break;
      case PropertyOutcome::Status::Skip: out << "skip " << o.name << ": " << o.detail << "\n"; break;
      case PropertyOutcome::Status::Fail: out << "FAIL " << o.name << ": " << o.detail << "\n"; return 1;
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boroczky tilings: pools, symmetry, corona census and figures", "boroczky"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec_path, "spec document (JSON)");
    sub->add_option("--inline", cfg.inline_spec, "spec document given inline");
  };
  auto* pools = app.add_subcommand("pools", "pool count, walls and support signature");
  auto* sym = app.add_subcommand("symmetry", "symmetry group descriptor");
  auto* cen = app.add_subcommand("census", "corona census for a range of k, persisted under --out DIR");
  auto* lt = app.add_subcommand("local-theorem", "crystallographicity verdict from censuses k = 0..K");
  auto* win = app.add_subcommand("window", "tile complex of a window");
  auto* ren = app.add_subcommand("render", "SVG figure of a window");
  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  for (auto* sub : {pools, sym, cen, lt, win, ren, ver}) add_spec(sub);
  for (auto* sub : {pools, sym, win, ren}) sub->add_option("--out", cfg.out, "output file");
  for (auto* sub : {cen, lt}) {
    sub->add_option("--out", cfg.out, "census directory (default ./census)");
    sub->add_option("--k", cfg.k_range, "k range A..B");
    sub->add_option("--half-width", cfg.half_width, "census cells -N..N-1 per coordinate at layer 0");
  }
  for (auto* sub : {win, ren}) {
    sub->add_option("--layers", cfg.layers, "layer range A..B");
    sub->add_option("--half-width", cfg.half_width, "E0 box [-N, N] per coordinate");
  }
  sym->add_flag("--assume-aperiodic", cfg.assume_aperiodic, "treat a finite word as aperiodic");
  sym->add_option("--bounded-coords", cfg.bounded_coords, "eventually constant coordinates under --assume-aperiodic");
  ren->add_option("--model", cfg.model, "half-plane | disc | footprint");
  ren->add_option("--style", cfg.style, "key=value (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (pools->parsed()) return cmd_pools(cfg, out);
    if (sym->parsed()) return cmd_symmetry(cfg, out);
    if (cen->parsed()) return cmd_census(cfg, out, err);
    if (lt->parsed()) return cmd_local_theorem(cfg, out, err);
    if (win->parsed()) return cmd_window(cfg, out);
    if (ren->parsed()) return cmd_render(cfg, out);
    if (ver->parsed()) return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace boroczky::cli
