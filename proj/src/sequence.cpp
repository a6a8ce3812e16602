#include "boroczky/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "boroczky/error.hpp"

namespace boroczky {

namespace {

void check_letters(const std::vector<int>& w, const char* what) {
  for (int s : w) {
    if (s != 1 && s != -1) {
      throw Error(Errc::ValidationError, std::string(what) + " contains " + std::to_string(s) + ", expected +1 or -1");
    }
  }
}

std::size_t primitive_root_length(const std::vector<int>& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

CoordinateWord canonicalize(CoordinateWord c) {
  c.period.resize(primitive_root_length(c.period));
  // pre + (p)^inf == pre[:-1] + (rotate_right(p))^inf whenever pre.back() == p.back()
  while (!c.pre.empty() && c.pre.back() == c.period.back()) {
    c.pre.pop_back();
    std::rotate(c.period.rbegin(), c.period.rbegin() + 1, c.period.rend());
  }
  return c;
}

int coordinate_sign(const CoordinateWord& c, std::int64_t j) {
  auto idx = static_cast<std::size_t>(j - 1);
  if (idx < c.pre.size()) return c.pre[idx];
  return c.period[(idx - c.pre.size()) % c.period.size()];
}

void require_periodic(const SequenceSpec& spec, const char* op) {
  if (!spec.is_periodic_mode()) {
    throw Error(Errc::FiniteWordMode, std::string(op) + " is undecidable from a finite word");
  }
}

}  // namespace

SequenceSpec SequenceSpec::eventually_periodic(std::vector<CoordinateWord> coords) {
  if (coords.empty()) throw Error(Errc::ValidationError, "dimension must be at least 1");
  SequenceSpec s;
  s.dim_ = coords.size();
  s.mode_ = Mode::EventuallyPeriodic;
  for (auto& c : coords) {
    check_letters(c.pre, "preperiod");
    check_letters(c.period, "period");
    if (c.period.empty()) throw Error(Errc::ValidationError, "period word must be nonempty");
    s.coords_.push_back(canonicalize(std::move(c)));
  }
  return s;
}

SequenceSpec SequenceSpec::finite_word(std::vector<Symbol> word) {
  if (word.empty()) throw Error(Errc::ValidationError, "finite word must contain at least one letter");
  const std::size_t d = word.front().dim();
  if (d == 0) throw Error(Errc::ValidationError, "dimension must be at least 1");
  for (const auto& s : word) {
    if (s.dim() != d) throw Error(Errc::ValidationError, "letters of a finite word must share one dimension");
  }
  SequenceSpec s;
  s.dim_ = d;
  s.mode_ = Mode::FiniteWord;
  s.word_ = std::move(word);
  return s;
}

const std::vector<CoordinateWord>& SequenceSpec::coordinates() const {
  require_periodic(*this, "per-coordinate access");
  return coords_;
}

std::optional<std::int64_t> SequenceSpec::length() const {
  if (is_periodic_mode()) return std::nullopt;
  return static_cast<std::int64_t>(word_.size());
}

bool SequenceSpec::has_letter(std::int64_t j) const {
  if (j < 1) return false;
  return is_periodic_mode() || j <= static_cast<std::int64_t>(word_.size());
}

int SequenceSpec::sign(std::int64_t j, std::size_t i) const {
  if (j < 1) throw Error(Errc::InvalidArgument, "letter index must be >= 1, got " + std::to_string(j));
  if (i >= dim_) throw Error(Errc::InvalidArgument, "coordinate " + std::to_string(i) + " out of range");
  if (is_periodic_mode()) return coordinate_sign(coords_[i], j);
  if (j > static_cast<std::int64_t>(word_.size())) {
    throw Error(Errc::IndexBeyondWord, "letter " + std::to_string(j) + " requested from a word of length " +
                                           std::to_string(word_.size()));
  }
  return word_[static_cast<std::size_t>(j - 1)][i];
}

Symbol seq_letter(const SequenceSpec& spec, std::int64_t j) {
  if (!spec.is_periodic_mode()) {
    if (j < 1) throw Error(Errc::InvalidArgument, "letter index must be >= 1");
    if (!spec.has_letter(j)) (void)spec.sign(j, 0);  // raises IndexBeyondWord
    return spec.word()[static_cast<std::size_t>(j - 1)];
  }
  std::vector<int> signs(spec.dim());
  for (std::size_t i = 0; i < spec.dim(); ++i) signs[i] = spec.sign(j, i);
  return Symbol(signs);
}

TailBehavior coordinate_tail_behavior(const SequenceSpec& spec, std::size_t i) {
  require_periodic(spec, "coordinate_tail_behavior");
  if (i >= spec.dim()) throw Error(Errc::InvalidArgument, "coordinate out of range");
  const auto& c = spec.coordinates()[i];
  if (c.period.size() == 1) {
    return {TailBehavior::Kind::EventuallyConstant, c.period[0], static_cast<std::int64_t>(c.pre.size()) + 1};
  }
  return {TailBehavior::Kind::BothSignsInfinitely, 0, 0};
}

std::optional<PeriodInfo> minimal_period(const SequenceSpec& spec) {
  require_periodic(spec, "minimal_period");
  PeriodInfo info{0, 1};
  for (const auto& c : spec.coordinates()) {
    info.preperiod = std::max(info.preperiod, c.pre.size());
    info.period = std::lcm(info.period, c.period.size());
  }
  return info;
}

std::optional<EssentialPeriod> essential_period(const SequenceSpec& spec) {
  require_periodic(spec, "essential_period");
  const auto info = *minimal_period(spec);
  const auto group = hyperoctahedral_group(spec.dim());
  const auto start = static_cast<std::int64_t>(info.preperiod) + 1;
  const auto period = static_cast<std::int64_t>(info.period);

  std::vector<Symbol> letters;
  letters.reserve(static_cast<std::size_t>(2 * period));
  for (std::int64_t j = start; j < start + 2 * period; ++j) letters.push_back(seq_letter(spec, j));

  // Both sides are periodic with the minimal period past the preperiod, so one
  // full cycle of j decides the cofinal identity.
  for (std::int64_t q = 1; q <= period; ++q) {
    for (const auto& g : group) {
      bool ok = true;
      for (std::int64_t r = 0; r < period && ok; ++r) {
        ok = g.apply(letters[static_cast<std::size_t>(r)]) == letters[static_cast<std::size_t>(r + q)];
      }
      if (ok) return EssentialPeriod{static_cast<std::size_t>(q), g};
    }
  }
  return EssentialPeriod{info.period, SignedPermutation::identity(spec.dim())};
}

SequenceSpec transformed(const SignedPermutation& g, const SequenceSpec& spec) {
  if (g.dim() != spec.dim()) throw Error(Errc::InvalidArgument, "dimension mismatch in transformed()");
  if (!spec.is_periodic_mode()) {
    std::vector<Symbol> w;
    w.reserve(spec.word().size());
    for (const auto& s : spec.word()) w.push_back(g.apply(s));
    return SequenceSpec::finite_word(std::move(w));
  }
  const auto& src = spec.coordinates();
  std::vector<CoordinateWord> coords(spec.dim());
  for (std::size_t i = 0; i < spec.dim(); ++i) {
    const auto& from = src[g.source(i)];
    const int s = g.sign(i);
    for (int v : from.pre) coords[i].pre.push_back(s * v);
    for (int v : from.period) coords[i].period.push_back(s * v);
  }
  return SequenceSpec::eventually_periodic(std::move(coords));
}

SequenceSpec dropped(const SequenceSpec& spec, std::size_t n) {
  if (!spec.is_periodic_mode()) {
    if (n >= spec.word().size()) throw Error(Errc::IndexBeyondWord, "cannot drop the whole finite word");
    return SequenceSpec::finite_word({spec.word().begin() + static_cast<std::ptrdiff_t>(n), spec.word().end()});
  }
  std::vector<CoordinateWord> coords;
  for (const auto& c : spec.coordinates()) {
    CoordinateWord out;
    // Materialize enough of the coordinate to cover the dropped prefix and one period.
    const std::size_t keep_pre = c.pre.size() > n ? c.pre.size() - n : 0;
    for (std::size_t t = 0; t < keep_pre; ++t) out.pre.push_back(c.pre[n + t]);
    const auto first_periodic = static_cast<std::int64_t>(std::max(n, c.pre.size())) + 1;
    for (std::size_t t = 0; t < c.period.size(); ++t) {
      out.period.push_back(coordinate_sign(c, first_periodic + static_cast<std::int64_t>(t)));
    }
    coords.push_back(std::move(out));
  }
  return SequenceSpec::eventually_periodic(std::move(coords));
}

}  // namespace boroczky
