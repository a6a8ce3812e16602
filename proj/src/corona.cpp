#include "boroczky/corona.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "boroczky/error.hpp"

namespace boroczky {

Corona corona_complex(const SequenceSpec& spec, const TileAddress& center, std::size_t k) {
  std::unordered_set<TileAddress, TileAddressHash> seen{center};
  std::vector<TileAddress> frontier{center};
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<TileAddress> next;
    for (const auto& t : frontier) {
      for (auto& n : facet_neighbors(spec, t)) {
        if (seen.insert(n).second) next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  return {center, k, TileComplex(spec, {seen.begin(), seen.end()})};
}

std::string CoronaCode::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '|';
    out += word[i].to_string();
  }
  return out;
}

CoronaCode CoronaCode::parse(std::size_t dim, const std::string& text) {
  CoronaCode code{dim, {}};
  if (text.empty()) return code;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto bar = text.find('|', start);
    const auto piece = text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    if (piece.size() != dim) throw Error(Errc::ParseError, "corona code letter '" + piece + "' has the wrong length");
    std::vector<int> signs;
    for (char c : piece) {
      if (c != '+' && c != '-') throw Error(Errc::ParseError, "corona code letter '" + piece + "' is not made of +/-");
      signs.push_back(c == '+' ? 1 : -1);
    }
    code.word.emplace_back(signs);
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return code;
}

namespace {

CoronaCode canonical_code_with(const std::vector<SignedPermutation>& group, std::size_t dim,
                               std::span<const Symbol> word) {
  std::vector<Symbol> best(word.begin(), word.end());
  std::vector<Symbol> image(word.size());
  for (const auto& g : group) {
    for (std::size_t i = 0; i < word.size(); ++i) image[i] = g.apply(word[i]);
    if (image < best) best = image;
  }
  return {dim, std::move(best)};
}

}  // namespace

CoronaCode canonical_code(std::size_t dim, std::span<const Symbol> word) {
  for (const auto& s : word) {
    if (s.dim() != dim) throw Error(Errc::InvalidArgument, "letter dimension mismatch in canonical_code");
  }
  return canonical_code_with(hyperoctahedral_group(dim), dim, word);
}

CoronaCode corona_code(const SequenceSpec& spec, const TileAddress& t, std::size_t k) {
  const auto word = tail_letters(spec, t, k);
  return canonical_code(spec.dim(), word);
}

Stabilizer stabilizer(const CoronaCode& code) {
  Stabilizer out;
  for (const auto& g : hyperoctahedral_group(code.dim)) {
    const bool fixes = std::all_of(code.word.begin(), code.word.end(), [&](const Symbol& s) { return g.apply(s) == s; });
    if (fixes) out.elements.push_back(g);
  }
  // greedy generators: add any element outside the subgroup generated so far
  std::vector<SignedPermutation> generated{SignedPermutation::identity(code.dim)};
  for (const auto& g : out.elements) {
    if (std::find(generated.begin(), generated.end(), g) != generated.end()) continue;
    out.generators.push_back(g);
    for (std::size_t i = 0; i < generated.size(); ++i) {
      for (const auto& gen : out.generators) {
        auto h = generated[i] * gen;
        if (std::find(generated.begin(), generated.end(), h) == generated.end()) generated.push_back(std::move(h));
      }
    }
  }
  return out;
}

CensusWindow CensusWindow::centered(std::size_t dim, std::int64_t layer, std::int64_t half_width) {
  if (half_width < 1) throw Error(Errc::InvalidArgument, "census half-width must be positive");
  return {layer, std::vector<std::int64_t>(dim, -half_width), std::vector<std::int64_t>(dim, half_width - 1)};
}

std::uint64_t CensusWindow::tile_count() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim(); ++i) n *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
  return n;
}

std::string CensusWindow::to_string() const {
  std::string out = "layer " + std::to_string(layer) + " cells";
  for (std::size_t i = 0; i < dim(); ++i) out += " [" + std::to_string(lo[i]) + "," + std::to_string(hi[i]) + "]";
  return out;
}

CensusReport census(const SequenceSpec& spec, std::size_t k, const CensusWindow& window) {
  const std::size_t d = spec.dim();
  if (window.dim() != d) throw Error(Errc::InvalidArgument, "census window dimension does not match the spec");
  if (d * k >= 62) throw Error(Errc::InvalidArgument, "corona radius too large");
  const std::uint64_t needed = std::uint64_t{1} << (d * k);
  for (std::size_t i = 0; i < d; ++i) {
    if (window.hi[i] < window.lo[i]) throw Error(Errc::EmptyWindow, "census window is empty");
    const auto span = static_cast<std::uint64_t>(window.hi[i] - window.lo[i] + 1);
    if (span < needed) {
      throw Error(Errc::WindowTooSmall, "coordinate " + std::to_string(i + 1) + " spans " + std::to_string(span) +
                                            " cells; radius " + std::to_string(k) + " needs " +
                                            std::to_string(needed));
    }
  }
  constexpr std::uint64_t max_tiles = 20'000'000;
  if (window.tile_count() > max_tiles) throw Error(Errc::InvalidArgument, "census window is too large");

  const auto group = hyperoctahedral_group(d);
  std::map<CoronaCode, CoronaClass> classes;
  TileAddress t{window.layer, window.lo};
  for (bool more = true; more;) {
    auto code = canonical_code_with(group, d, tail_letters(spec, t, k));
    auto [it, inserted] = classes.try_emplace(code);
    if (inserted) {
      it->second.code = std::move(code);
      it->second.witness = t;
    }
    ++it->second.multiplicity;
    more = false;
    for (std::size_t i = d; i-- > 0;) {
      if (t.cell[i] < window.hi[i]) {
        ++t.cell[i];
        more = true;
        break;
      }
      t.cell[i] = window.lo[i];
    }
  }

  CensusReport report{d, k, window, {}};
  report.classes.reserve(classes.size());
  for (auto& [code, cls] : classes) {
    cls.stabilizer_order = stabilizer(cls.code).order();
    report.classes.push_back(std::move(cls));
  }
  return report;
}

std::uint64_t burnside_orbits(std::size_t dim, std::size_t k) {
  if (dim == 0 || dim > 4 || k > 6) throw Error(Errc::InvalidArgument, "burnside_orbits supports d <= 4, k <= 6");
  // enumerate letters as bitmasks and count fixed points per group element
  const auto group = hyperoctahedral_group(dim);
  std::uint64_t total = 0;
  for (const auto& g : group) {
    std::uint64_t fixed = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < dim && ok; ++i) {
        const int xi = (mask >> i) & 1U ? -1 : 1;
        const int src = (mask >> g.source(i)) & 1U ? -1 : 1;
        ok = g.sign(i) * src == xi;
      }
      fixed += ok;
    }
    std::uint64_t power = 1;
    for (std::size_t r = 0; r < k; ++r) power *= fixed;
    total += power;
  }
  return total / group.size();
}

std::string LocalTheoremVerdict::to_string() const {
  if (crystallographic) return "Crystallographic(" + std::to_string(*k) + ")";
  if (violations.empty()) return "NonCrystallographic";
  const auto& v = violations.front();
  return "NonCrystallographic(condition " + std::to_string(v.condition) + " at k=" + std::to_string(v.k) + ")";
}

LocalTheoremVerdict local_theorem_check(std::span<const CensusReport> censuses) {
  if (censuses.size() < 2) throw Error(Errc::InsufficientData, "need censuses for k = 0..K with K >= 1");
  for (std::size_t i = 0; i < censuses.size(); ++i) {
    if (censuses[i].k != i) throw Error(Errc::InsufficientData, "censuses must cover k = 0, 1, 2, ... consecutively");
    if (censuses[i].dim != censuses[0].dim) throw Error(Errc::InvalidArgument, "censuses mix dimensions");
  }
  const auto group = hyperoctahedral_group(censuses[0].dim);

  LocalTheoremVerdict verdict;
  for (std::size_t k = 0; k + 1 < censuses.size(); ++k) {
    const auto& lower = censuses[k];
    const auto& upper = censuses[k + 1];
    if (upper.n_k() != lower.n_k()) {
      verdict.violations.push_back({k, 1, "N_" + std::to_string(k + 1) + " = " + std::to_string(upper.n_k()) +
                                              " but N_" + std::to_string(k) + " = " + std::to_string(lower.n_k())});
      continue;
    }
    // classes of radius k+1 restrict to classes of radius k through their prefix
    std::optional<LocalTheoremViolation> shrink;
    for (const auto& cls : upper.classes) {
      const std::span<const Symbol> prefix(cls.code.word.data(), k);
      const auto restricted = canonical_code_with(group, lower.dim, prefix);
      const auto it = std::find_if(lower.classes.begin(), lower.classes.end(),
                                   [&](const CoronaClass& c) { return c.code == restricted; });
      if (it == lower.classes.end()) {
        throw Error(Errc::InvalidArgument, "census for k=" + std::to_string(k + 1) + " has a class with no k=" +
                                               std::to_string(k) + " restriction");
      }
      if (it->stabilizer_order != cls.stabilizer_order) {
        shrink = LocalTheoremViolation{k, 2, "class '" + it->code.to_string() + "' has stabilizer order " +
                                                  std::to_string(it->stabilizer_order) + " at k=" + std::to_string(k) +
                                                  " but " + std::to_string(cls.stabilizer_order) + " at k=" +
                                                  std::to_string(k + 1)};
        break;
      }
    }
    if (shrink) {
      verdict.violations.push_back(std::move(*shrink));
      continue;
    }
    verdict.crystallographic = true;
    verdict.k = k;
    return verdict;
  }
  return verdict;
}

}  // namespace boroczky
