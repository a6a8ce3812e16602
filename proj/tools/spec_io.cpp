#include "spec_io.hpp"

#include <limits>

#include "boroczky/error.hpp"

namespace boroczky::io {

namespace {

const Json& field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
  return *it;
}

std::vector<int> letters(const Json& arr, const std::string& what) {
  if (!arr.is_array()) throw Error(Errc::ParseError, what + " must be an array");
  std::vector<int> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw Error(Errc::ParseError, what + " must hold integers");
    const auto x = v.get<std::int64_t>();
    if (x != 1 && x != -1) throw Error(Errc::ValidationError, what + " holds " + std::to_string(x) + ", not +1/-1");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

}  // namespace

SequenceSpec parse_spec(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "spec must be a JSON object");
  const auto& dim_field = field(doc, "dim");
  if (!dim_field.is_number_integer()) throw Error(Errc::ParseError, "'dim' must be an integer");
  const auto dim = dim_field.get<std::int64_t>();
  if (dim < 1) throw Error(Errc::ValidationError, "'dim' must be at least 1");
  const bool has_coords = doc.contains("coords"), has_word = doc.contains("word");
  if (has_coords == has_word) throw Error(Errc::ParseError, "spec needs exactly one of 'coords' and 'word'");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dim" && key != "coords" && key != "word") throw Error(Errc::ParseError, "unknown key '" + key + "'");
  }

  if (has_coords) {
    const auto& coords = doc["coords"];
    if (!coords.is_array()) throw Error(Errc::ParseError, "'coords' must be an array");
    if (coords.size() != static_cast<std::size_t>(dim)) {
      throw Error(Errc::ValidationError, "'coords' has " + std::to_string(coords.size()) + " entries for dim " +
                                             std::to_string(dim));
    }
    std::vector<CoordinateWord> words;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const auto& c = coords[i];
      if (!c.is_object()) throw Error(Errc::ParseError, "each coordinate must be an object");
      const auto name = "coordinate " + std::to_string(i + 1);
      words.push_back({letters(field(c, "pre"), name + " 'pre'"), letters(field(c, "period"), name + " 'period'")});
      if (words.back().period.empty()) throw Error(Errc::ValidationError, name + " has an empty period");
    }
    return SequenceSpec::eventually_periodic(std::move(words));
  }

  const auto& word = doc["word"];
  if (!word.is_array()) throw Error(Errc::ParseError, "'word' must be an array");
  std::vector<Symbol> symbols;
  for (std::size_t j = 0; j < word.size(); ++j) {
    auto l = letters(word[j], "letter " + std::to_string(j + 1));
    if (l.size() != static_cast<std::size_t>(dim)) {
      throw Error(Errc::ValidationError, "letter " + std::to_string(j + 1) + " has the wrong length");
    }
    symbols.emplace_back(l);
  }
  if (symbols.empty()) throw Error(Errc::ValidationError, "'word' is empty");
  return SequenceSpec::finite_word(std::move(symbols));
}

Json spec_json(const SequenceSpec& spec) {
  Json out;
  out["dim"] = spec.dim();
  if (spec.is_periodic_mode()) {
    Json coords = Json::array();
    for (const auto& c : spec.coordinates()) coords.push_back({{"pre", c.pre}, {"period", c.period}});
    out["coords"] = std::move(coords);
  } else {
    Json word = Json::array();
    for (const auto& s : spec.word()) word.push_back(std::vector<int>(s.signs().begin(), s.signs().end()));
    out["word"] = std::move(word);
  }
  return out;
}

std::uint64_t spec_hash(const SequenceSpec& spec) {
  // FNV-1a over the compact canonical document
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : spec_json(spec).dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, value >>= 4) out[static_cast<std::size_t>(i)] = digits[value & 0xF];
  return out;
}

Json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

Json to_json(const Dyadic& value) {
  if (value.is_integer()) return to_json(value.to_integer());
  return value.to_string();
}

Json to_json(const TileAddress& t) { return {{"layer", t.layer}, {"cell", t.cell}}; }

TileAddress tile_from_json(const Json& j) {
  try {
    return {j.at("layer").get<std::int64_t>(), j.at("cell").get<Cell>()};
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad tile address: ") + e.what());
  }
}

std::string support_signature(const PoolReport& report) {
  std::string out;
  if (report.euclidean_dims) out += "E^" + std::to_string(report.euclidean_dims);
  if (report.octant_dims) out += (out.empty() ? "" : " (+) ") + std::string("octant^") + std::to_string(report.octant_dims);
  return out;
}

Json to_json(const PoolReport& report) {
  Json walls = Json::array();
  for (const auto& w : report.walls) {
    walls.push_back({{"axis", w.axis + 1},
                     {"position", to_json(w.position)},
                     {"bound", w.bound == Wall::Bound::Lower ? "lower" : "upper"},
                     {"onset_layer", w.onset_layer}});
  }
  return {{"dim", report.dim},
          {"k", report.k},
          {"pool_count", report.pool_count},
          {"walls", std::move(walls)},
          {"support_signature", support_signature(report)}};
}

Json to_json(const SymmetryReport& report) {
  Json out{{"dim", report.dim}, {"k", report.k}, {"group", report.group.to_string()}};
  out["period"] = report.period ? Json{{"preperiod", report.period->preperiod}, {"period", report.period->period}}
                                : Json(nullptr);
  out["essential_period"] =
      report.essential ? Json{{"q", report.essential->q}, {"witness", report.essential->witness.to_string()}}
                       : Json(nullptr);
  out["fundamental_domain"] = report.fundamental_domain ? Json(*report.fundamental_domain) : Json(nullptr);
  return out;
}

Json to_json(const TileComplex& window) {
  Json nodes = Json::array();
  for (const auto& t : window.nodes()) {
    Json row = Json::array({t.layer});
    for (auto m : t.cell) row.push_back(m);
    nodes.push_back(std::move(row));
  }
  Json edges = Json::array();
  for (const auto& e : window.edges()) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"from_facet", e.from_facet.to_string()},
                     {"to_facet", e.to_facet.to_string()}});
  }
  return {{"spec", spec_json(window.spec())}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Json to_json(const CensusWindow& window) {
  return {{"layer", window.layer}, {"lo", window.lo}, {"hi", window.hi}};
}

Json to_json(const CensusReport& report) {
  Json classes = Json::array();
  for (const auto& c : report.classes) {
    classes.push_back({{"code", c.code.to_string()},
                       {"witness", to_json(c.witness)},
                       {"multiplicity", c.multiplicity},
                       {"stabilizer_order", c.stabilizer_order}});
  }
  return {{"dim", report.dim},
          {"k", report.k},
          {"window", to_json(report.window)},
          {"N_k", report.n_k()},
          {"classes", std::move(classes)}};
}

CensusReport census_from_json(const Json& j) {
  try {
    CensusReport r;
    r.dim = j.at("dim").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    const auto& w = j.at("window");
    r.window = {w.at("layer").get<std::int64_t>(), w.at("lo").get<std::vector<std::int64_t>>(),
                w.at("hi").get<std::vector<std::int64_t>>()};
    for (const auto& c : j.at("classes")) {
      r.classes.push_back({CoronaCode::parse(r.dim, c.at("code").get<std::string>()), tile_from_json(c.at("witness")),
                           c.at("multiplicity").get<std::uint64_t>(), c.at("stabilizer_order").get<std::uint64_t>()});
    }
    if (j.at("N_k").get<std::size_t>() != r.classes.size()) {
      throw Error(Errc::ValidationError, "census file N_k disagrees with its class list");
    }
    return r;
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad census document: ") + e.what());
  }
}

Json to_json(const LocalTheoremVerdict& verdict) {
  Json violations = Json::array();
  for (const auto& v : verdict.violations) {
    violations.push_back({{"k", v.k}, {"condition", v.condition}, {"detail", v.detail}});
  }
  return {{"verdict", verdict.to_string()},
          {"crystallographic", verdict.crystallographic},
          {"k", verdict.k ? Json(*verdict.k) : Json(nullptr)},
          {"violations", std::move(violations)}};
}

}  // namespace boroczky::io
