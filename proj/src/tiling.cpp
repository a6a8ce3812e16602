#include "boroczky/tiling.hpp"

#include <algorithm>
#include <limits>

#include "boroczky/error.hpp"

namespace boroczky {

namespace {

// 1 when the letter sigma_i^(j) is -1, i.e. the parent extends in the negative
// direction and the child occupies the upper half. Letters at j <= 0 are
// implicitly +1: upward grids are refinements anchored at a^(0).
int reversed_half(const SequenceSpec& spec, std::int64_t j, std::size_t i) {
  if (j <= 0) return 0;
  return spec.sign(j, i) < 0 ? 1 : 0;
}

void require_letter(const SequenceSpec& spec, std::int64_t j) {
  if (j >= 1 && !spec.has_letter(j)) {
    throw Error(Errc::IndexBeyondWord, "layer step " + std::to_string(j) + " lies beyond the finite word");
  }
}

std::int64_t floor_div2(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::InvalidArgument, "cell index " + v.str() + " exceeds the 64-bit address range");
  }
  return v.convert_to<std::int64_t>();
}

void check_cell_range(std::int64_t m) {
  constexpr std::int64_t limit = std::int64_t{1} << 61;
  if (m > limit || m < -limit) throw Error(Errc::InvalidArgument, "cell index out of supported range");
}

}  // namespace

std::string TileAddress::to_string() const {
  std::string out = "(" + std::to_string(layer) + ",[";
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cell[i]);
  }
  return out + "])";
}

std::size_t TileAddressHash::operator()(const TileAddress& t) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(t.layer);
  for (auto m : t.cell) h = (h ^ static_cast<std::uint64_t>(m)) * 1099511628211ULL + 0x9e3779b97f4a7c15ULL;
  return static_cast<std::size_t>(h);
}

bool Box::contains(const Box& other) const {
  if (other.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (other.sides[i].lo < sides[i].lo || other.sides[i].hi > sides[i].hi) return false;
  }
  return true;
}

Dyadic Box::volume() const {
  Dyadic v = 1;
  for (const auto& s : sides) v = v * s.length();
  return v;
}

Box Box::cube(std::size_t dim, const Dyadic& lo, const Dyadic& hi) {
  return Box{std::vector<Interval>(dim, Interval{lo, hi})};
}

AnchorCell anchor_cell(const SequenceSpec& spec, std::int64_t j) {
  require_letter(spec, j);
  const std::size_t d = spec.dim();
  AnchorCell cell{j, std::vector<Dyadic>(d, Dyadic(-1)), std::vector<Dyadic>(d, Dyadic(1))};
  if (j < 0) {
    for (auto& b : cell.high) b = Dyadic(-1) + Dyadic::pow2(j + 1);
    return cell;
  }
  for (std::int64_t step = 1; step <= j; ++step) {
    for (std::size_t i = 0; i < d; ++i) {
      const Dyadic extent = cell.high[i] - cell.low[i];
      const int s = spec.sign(step, i);
      // a' = a + (s-1)/2 (b-a),  b' = b + (s+1)/2 (b-a)
      if (s < 0) {
        cell.low[i] -= extent;
      } else {
        cell.high[i] += extent;
      }
    }
  }
  return cell;
}

Interval LayerGrid::side(std::size_t i, std::int64_t m) const {
  const Dyadic lo = origin[i] + Dyadic(BigInt(m)) * width;
  return {lo, lo + width};
}

LayerGrid layer_grid(const SequenceSpec& spec, std::int64_t j) {
  auto a = anchor_cell(spec, j);
  return {j, std::move(a.low), Dyadic::pow2(j + 1)};
}

std::string FacetLabel::to_string() const {
  switch (kind) {
    case Kind::A: return "A";
    case Kind::B: {
      std::string out = "B(";
      for (auto b : half) out += b ? '1' : '0';
      return out + ")";
    }
    case Kind::C: return "C(" + std::to_string(axis + 1) + "," + (side > 0 ? "+" : "-") + ")";
  }
  return "?";
}

std::vector<FacetLabel> all_facet_labels(std::size_t dim) {
  std::vector<FacetLabel> out{FacetLabel::lower()};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    HalfBits half(dim);
    for (std::size_t i = 0; i < dim; ++i) half[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    out.push_back(FacetLabel::upper(std::move(half)));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    out.push_back(FacetLabel::aside(i, -1));
    out.push_back(FacetLabel::aside(i, +1));
  }
  return out;
}

ParentStep parent(const SequenceSpec& spec, const TileAddress& t) {
  if (t.dim() != spec.dim()) throw Error(Errc::InvalidArgument, "address dimension does not match the spec");
  const std::int64_t j = t.layer;
  require_letter(spec, j + 1);
  ParentStep step;
  step.address.layer = j + 1;
  step.address.cell.resize(t.dim());
  step.half.resize(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const std::int64_t shifted = t.cell[i] + reversed_half(spec, j + 1, i);
    step.address.cell[i] = floor_div2(shifted);
    step.half[i] = static_cast<std::uint8_t>(shifted - 2 * step.address.cell[i]);
  }
  step.letter = Symbol::from_half_bits(step.half);
  return step;
}

TileAddress child(const SequenceSpec& spec, const TileAddress& t, std::span<const std::uint8_t> half) {
  if (t.dim() != spec.dim() || half.size() != spec.dim()) {
    throw Error(Errc::InvalidArgument, "dimension mismatch in child()");
  }
  require_letter(spec, t.layer);
  TileAddress c{t.layer - 1, Cell(t.dim())};
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (half[i] > 1) throw Error(Errc::InvalidArgument, "half bits must be 0 or 1");
    check_cell_range(t.cell[i]);
    c.cell[i] = 2 * t.cell[i] + half[i] - reversed_half(spec, t.layer, i);
  }
  return c;
}

TileAddress side_neighbor(const TileAddress& t, std::size_t axis, int side) {
  if (axis >= t.dim()) throw Error(Errc::InvalidArgument, "axis out of range");
  if (side != 1 && side != -1) throw Error(Errc::InvalidArgument, "side must be +1 or -1");
  TileAddress n = t;
  n.cell[axis] += side;
  return n;
}

Box footprint(const SequenceSpec& spec, const TileAddress& t) {
  if (t.dim() != spec.dim()) throw Error(Errc::InvalidArgument, "address dimension does not match the spec");
  const auto grid = layer_grid(spec, t.layer);
  Box box;
  box.sides.reserve(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) box.sides.push_back(grid.side(i, t.cell[i]));
  return box;
}

TailWord tail_word(const SequenceSpec& spec, const TileAddress& t, std::size_t depth) {
  TailWord out;
  out.path.reserve(depth + 1);
  out.word.reserve(depth);
  out.path.push_back(t);
  for (std::size_t k = 0; k < depth; ++k) {
    auto step = parent(spec, out.path.back());
    out.word.push_back(std::move(step.letter));
    out.path.push_back(std::move(step.address));
  }
  return out;
}

std::vector<Symbol> tail_letters(const SequenceSpec& spec, const TileAddress& t, std::size_t depth) {
  if (t.dim() != spec.dim()) throw Error(Errc::InvalidArgument, "address dimension does not match the spec");
  require_letter(spec, t.layer + static_cast<std::int64_t>(depth));
  std::vector<Symbol> word;
  word.reserve(depth);
  Cell m = t.cell;
  HalfBits half(m.size());
  for (std::size_t k = 0; k < depth; ++k) {
    const std::int64_t next = t.layer + static_cast<std::int64_t>(k) + 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::int64_t shifted = m[i] + reversed_half(spec, next, i);
      m[i] = floor_div2(shifted);
      half[i] = static_cast<std::uint8_t>(shifted - 2 * m[i]);
    }
    word.push_back(Symbol::from_half_bits(half));
  }
  return word;
}

std::vector<TileAddress> facet_neighbors(const SequenceSpec& spec, const TileAddress& t) {
  std::vector<TileAddress> out;
  const std::size_t d = t.dim();
  if (t.layer + 1 <= 0 || spec.has_letter(t.layer + 1)) out.push_back(parent(spec, t).address);
  if (t.layer <= 0 || spec.has_letter(t.layer)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      HalfBits half(d);
      for (std::size_t i = 0; i < d; ++i) half[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
      out.push_back(child(spec, t, half));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    out.push_back(side_neighbor(t, i, -1));
    out.push_back(side_neighbor(t, i, +1));
  }
  return out;
}

TileComplex::TileComplex(const SequenceSpec& spec, std::vector<TileAddress> nodes)
    : spec_(spec), nodes_(std::move(nodes)) {
  for (const auto& t : nodes_) {
    if (t.dim() != spec_.dim()) throw Error(Errc::InvalidArgument, "tile " + t.to_string() + " has the wrong dimension");
  }
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& t = nodes_[i];
    if (t.layer + 1 <= 0 || spec_.has_letter(t.layer + 1)) {
      auto step = parent(spec_, t);
      if (auto p = index_of(step.address)) {
        edges_.push_back({i, *p, FacetLabel::lower(), FacetLabel::upper(std::move(step.half))});
      }
    }
    for (std::size_t axis = 0; axis < t.dim(); ++axis) {
      if (auto n = index_of(side_neighbor(t, axis, +1))) {
        edges_.push_back({i, *n, FacetLabel::aside(axis, +1), FacetLabel::aside(axis, -1)});
      }
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const ComplexEdge& a, const ComplexEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
}

std::optional<std::size_t> TileComplex::index_of(const TileAddress& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LayerRange TileComplex::layers() const {
  if (nodes_.empty()) return {};
  return {nodes_.front().layer, nodes_.back().layer};
}

Box TileComplex::bounding_box() const {
  Box out;
  for (const auto& t : nodes_) {
    const Box f = footprint(spec_, t);
    if (out.sides.empty()) {
      out = f;
      continue;
    }
    for (std::size_t i = 0; i < f.dim(); ++i) {
      out.sides[i].lo = std::min(out.sides[i].lo, f.sides[i].lo);
      out.sides[i].hi = std::max(out.sides[i].hi, f.sides[i].hi);
    }
  }
  return out;
}

TileComplex build_window(const SequenceSpec& spec, LayerRange layers, const Box& box) {
  if (box.dim() != spec.dim()) throw Error(Errc::InvalidArgument, "window box dimension does not match the spec");
  if (layers.lo > layers.hi) throw Error(Errc::EmptyWindow, "layer range is empty");
  for (const auto& s : box.sides) {
    if (!(s.lo < s.hi)) throw Error(Errc::EmptyWindow, "window box has zero volume");
  }
  require_letter(spec, layers.hi);

  constexpr std::uint64_t max_tiles = 50'000'000;
  std::uint64_t total = 0;
  std::vector<TileAddress> nodes;
  const std::size_t d = spec.dim();
  for (std::int64_t j = layers.lo; j <= layers.hi; ++j) {
    const auto grid = layer_grid(spec, j);
    std::vector<std::int64_t> lo(d), hi(d);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
      // cell m meets (lo, hi) iff origin + m w < hi and origin + (m+1) w > lo
      lo[i] = to_int64((box.sides[i].lo - grid.origin[i]).scaled(-(j + 1)).floor());
      hi[i] = to_int64((box.sides[i].hi - grid.origin[i]).scaled(-(j + 1)).ceil()) - 1;
      count *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
    }
    total += count;
    if (total > max_tiles) throw Error(Errc::InvalidArgument, "window exceeds " + std::to_string(max_tiles) + " tiles");
    Cell m = lo;
    for (bool more = true; more;) {
      nodes.push_back({j, m});
      more = false;
      for (std::size_t i = d; i-- > 0;) {
        if (m[i] < hi[i]) {
          ++m[i];
          more = true;
          break;
        }
        m[i] = lo[i];
      }
    }
  }
  return TileComplex(spec, std::move(nodes));
}

}  // namespace boroczky
