#include "boroczky/render.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <set>
#include <sstream>

#include "boroczky/error.hpp"
#include "boroczky/geometry.hpp"
#include "boroczky/pools.hpp"

namespace boroczky {

Model parse_model(const std::string& name) {
  if (name == "half-plane") return Model::HalfPlane;
  if (name == "disc") return Model::Disc;
  if (name == "footprint") return Model::Footprint;
  throw Error(Errc::ParseError, "unknown model '" + name + "' (half-plane, disc, footprint)");
}

const char* to_string(Model model) {
  switch (model) {
    case Model::HalfPlane: return "half-plane";
    case Model::Disc: return "disc";
    case Model::Footprint: return "footprint";
  }
  return "?";
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw Error(Errc::ParseError, "expected an integer, got '" + text + "'");
  return v;
}

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw Error(Errc::ParseError, "expected true/false, got '" + text + "'");
}

}  // namespace

TileAddress parse_tile(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::ParseError, "tile '" + text + "' is not of the form j:m1,m2");
  TileAddress t;
  t.layer = parse_int(text.substr(0, colon));
  for (const auto& part : split(text.substr(colon + 1), ',')) t.cell.push_back(parse_int(part));
  if (t.cell.empty()) throw Error(Errc::ParseError, "tile '" + text + "' has no cell coordinates");
  return t;
}

StyleOptions StyleOptions::from_table(const std::map<std::string, std::string>& table) {
  StyleOptions style;
  for (const auto& [key, value] : table) {
    if (key == "stroke-width") {
      try {
        style.stroke_width = std::stod(value);
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "stroke-width '" + value + "' is not a number");
      }
      if (!(style.stroke_width > 0)) throw Error(Errc::ValidationError, "stroke-width must be positive");
    } else if (key == "palette") {
      style.palette = split(value, ',');
      if (style.palette.empty()) throw Error(Errc::ValidationError, "palette is empty");
    } else if (key == "pools") {
      style.color_pools = parse_bool(value);
    } else if (key == "highlight-color") {
      style.highlight_color = value;
    } else if (key == "highlight") {
      for (const auto& t : split(value, ';')) style.highlight.push_back(parse_tile(t));
    } else if (key == "tail") {
      style.tail = parse_tile(value);
    } else if (key == "tower") {
      style.tower = parse_tile(value);
    } else if (key == "layer") {
      style.layer = parse_int(value);
    } else {
      throw Error(Errc::ParseError, "unknown style key '" + key + "'");
    }
  }
  return style;
}

namespace {

constexpr double kPage = 800.0;
constexpr double kMargin = 10.0;

struct Frame {
  Model model;
  double xmin = 0, ymax = 0, scale = 1;
  double width = 0, height = 0;

  Point page(std::complex<double> z) const {
    if (model == Model::Disc) {
      const auto w = to_disc(z);
      const double r = kPage / 2;
      return {kMargin + r + r * w.real(), kMargin + r - r * w.imag()};
    }
    return {kMargin + (z.real() - xmin) * scale, kMargin + (ymax - z.imag()) * scale};
  }
};

Frame make_frame(const TileComplex& window, Model model) {
  Frame f{model};
  if (model == Model::Disc) {
    f.width = f.height = kPage + 2 * kMargin;
    return f;
  }
  const auto box = window.bounding_box();
  const auto layers = window.layers();
  f.xmin = box.sides[0].lo.to_double();
  const double xmax = box.sides[0].hi.to_double();
  const double ymin = std::ldexp(1.0, static_cast<int>(layers.lo));
  f.ymax = std::ldexp(1.0, static_cast<int>(layers.hi + 1));
  f.scale = kPage / (xmax - f.xmin);
  f.width = kPage + 2 * kMargin;
  f.height = (f.ymax - ymin) * f.scale + 2 * kMargin;
  return f;
}

void require_dim(const TileComplex& window, Model model) {
  if (window.size() == 0) throw Error(Errc::EmptyWindow, "nothing to render");
  const std::size_t need = model == Model::Footprint ? 2 : 1;
  if (window.dim() != need) {
    throw Error(Errc::UnsupportedDimension, std::string("model ") + to_string(model) + " renders d=" +
                                                std::to_string(need) + " only, window has d=" +
                                                std::to_string(window.dim()));
  }
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string pt(Point p) { return num(p.x) + "," + num(p.y); }

// SVG command from a to b following the image of a straight half-plane segment
std::string edge_command(const Frame& f, std::complex<double> za, std::complex<double> zb) {
  const Point b = f.page(zb);
  if (f.model != Model::Disc) return " L " + pt(b);
  const Point a = f.page(za);
  const Point m = f.page((za + zb) / 2.0);
  const double ax = m.x - a.x, ay = m.y - a.y, bx = b.x - m.x, by = b.y - m.y;
  const double cross = ax * by - ay * bx;
  const double chord = std::hypot(b.x - a.x, b.y - a.y);
  if (std::abs(cross) <= 1e-12 * chord * chord) return " L " + pt(b);
  // circumcircle of a, m, b
  const double d = 2 * (a.x * (m.y - b.y) + m.x * (b.y - a.y) + b.x * (a.y - m.y));
  const double a2 = a.x * a.x + a.y * a.y, m2 = m.x * m.x + m.y * m.y, b2 = b.x * b.x + b.y * b.y;
  const double cx = (a2 * (m.y - b.y) + m2 * (b.y - a.y) + b2 * (a.y - m.y)) / d;
  const double cy = (a2 * (b.x - m.x) + m2 * (a.x - b.x) + b2 * (m.x - a.x)) / d;
  const double r = std::hypot(a.x - cx, a.y - cy);
  const bool sweep = cross > 0;
  double t0 = std::atan2(a.y - cy, a.x - cx), t1 = std::atan2(b.y - cy, b.x - cx);
  double swept = sweep ? t1 - t0 : t0 - t1;
  while (swept < 0) swept += 2 * M_PI;
  const bool large = swept > M_PI;
  return " A " + num(r) + "," + num(r) + " 0 " + (large ? "1" : "0") + "," + (sweep ? "1" : "0") + " " + pt(b);
}

struct TileShape {
  std::complex<double> ll, lr, ur, ul;
};

TileShape shape(const SequenceSpec& spec, const TileAddress& t) {
  const auto r = embed_region(spec, t);
  const double x0 = r.box.sides[0].lo.to_double(), x1 = r.box.sides[0].hi.to_double();
  const double y0 = r.low_height.to_double(), y1 = r.high_height.to_double();
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

std::set<TileAddress> highlighted(const TileComplex& window, const StyleOptions& style) {
  const auto& spec = window.spec();
  std::set<TileAddress> out(style.highlight.begin(), style.highlight.end());
  if (style.tail) {
    const auto top = window.layers().hi;
    if (style.tail->layer <= top) {
      const auto path = tail_word(spec, *style.tail, static_cast<std::size_t>(top - style.tail->layer)).path;
      out.insert(path.begin(), path.end());
    }
  }
  if (style.tower) {
    const auto root = footprint(spec, *style.tower);
    for (const auto& t : window.nodes()) {
      if (t.layer <= style.tower->layer && root.contains(footprint(spec, t))) out.insert(t);
    }
  }
  return out;
}

std::string fill_of(const TileComplex& window, const StyleOptions& style, const std::set<TileAddress>& marked,
                    const std::optional<PoolReport>& pools, const TileAddress& t) {
  if (marked.count(t)) return style.highlight_color;
  if (!pools) return "none";
  std::vector<int> id;
  try {
    id = pool_id(window.spec(), *pools, t);
  } catch (const Error&) {
    return "none";
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < id.size(); ++i) index |= static_cast<std::size_t>(id[i] < 0) << i;
  return style.palette[index % style.palette.size()];
}

std::string header(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
}

std::string render_footprint(const TileComplex& window, const StyleOptions& style) {
  const auto& spec = window.spec();
  const auto layer = style.layer.value_or(window.layers().lo);
  std::vector<TileAddress> tiles;
  for (const auto& t : window.nodes()) {
    if (t.layer == layer) tiles.push_back(t);
  }
  if (tiles.empty()) throw Error(Errc::EmptyWindow, "window has no tiles in layer " + std::to_string(layer));
  std::vector<Box> boxes;
  for (const auto& t : tiles) boxes.push_back(footprint(spec, t));
  double x0 = boxes[0].sides[0].lo.to_double(), x1 = boxes[0].sides[0].hi.to_double();
  double y0 = boxes[0].sides[1].lo.to_double(), y1 = boxes[0].sides[1].hi.to_double();
  for (const auto& b : boxes) {
    x0 = std::min(x0, b.sides[0].lo.to_double());
    x1 = std::max(x1, b.sides[0].hi.to_double());
    y0 = std::min(y0, b.sides[1].lo.to_double());
    y1 = std::max(y1, b.sides[1].hi.to_double());
  }
  const double scale = kPage / std::max(x1 - x0, y1 - y0);
  const double w = (x1 - x0) * scale + 2 * kMargin, h = (y1 - y0) * scale + 2 * kMargin;
  const auto marked = highlighted(window, style);
  std::optional<PoolReport> pools;
  if (style.color_pools) pools = pool_analysis(spec);

  std::string out = header(w, h);
  for (std::size_t n = 0; n < tiles.size(); ++n) {
    const auto& b = boxes[n];
    const double bx = kMargin + (b.sides[0].lo.to_double() - x0) * scale;
    const double by = kMargin + (y1 - b.sides[1].hi.to_double()) * scale;
    out += "  <rect class=\"footprint\" data-tile=\"" + tiles[n].to_string() + "\" x=\"" + num(bx) + "\" y=\"" +
           num(by) + "\" width=\"" + num(b.sides[0].length().to_double() * scale) + "\" height=\"" +
           num(b.sides[1].length().to_double() * scale) + "\" fill=\"" +
           fill_of(window, style, marked, pools, tiles[n]) + "\" stroke=\"#000\" stroke-width=\"" +
           num(style.stroke_width) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::vector<TileOutline> tile_outlines(const TileComplex& window, Model model, PageFrame* frame) {
  if (model == Model::Footprint) throw Error(Errc::InvalidArgument, "tile outlines exist for half-plane and disc only");
  require_dim(window, model);
  const auto f = make_frame(window, model);
  if (frame) *frame = {f.width, f.height};
  std::vector<TileOutline> out;
  out.reserve(window.size());
  for (const auto& t : window.nodes()) {
    const auto s = shape(window.spec(), t);
    out.push_back({t, {f.page(s.ll), f.page(s.lr), f.page(s.ur), f.page(s.ul)}, f.page((s.ll + s.lr) / 2.0)});
  }
  return out;
}

std::string render_svg(const TileComplex& window, Model model, const StyleOptions& style) {
  require_dim(window, model);
  if (style.palette.empty()) throw Error(Errc::ValidationError, "palette is empty");
  if (model == Model::Footprint) return render_footprint(window, style);

  const auto& spec = window.spec();
  const auto f = make_frame(window, model);
  const auto marked = highlighted(window, style);
  std::optional<PoolReport> pools;
  if (style.color_pools) pools = pool_analysis(spec);

  std::string out = header(f.width, f.height);
  if (model == Model::Disc) {
    out += "  <circle class=\"boundary\" cx=\"" + num(kMargin + kPage / 2) + "\" cy=\"" + num(kMargin + kPage / 2) +
           "\" r=\"" + num(kPage / 2) + "\" fill=\"none\" stroke=\"#888\" stroke-width=\"" +
           num(style.stroke_width) + "\"/>\n";
  }
  for (const auto& t : window.nodes()) {
    const auto s = shape(spec, t);
    std::string d = "M " + pt(f.page(s.ll));
    d += edge_command(f, s.ll, s.lr);  // b-edge
    d += edge_command(f, s.lr, s.ur);  // c-edge
    d += edge_command(f, s.ur, s.ul);  // a-edge
    d += " Z";                          // c-edge back to the start
    out += "  <path class=\"tile\" data-tile=\"" + t.to_string() + "\" d=\"" + d + "\" fill=\"" +
           fill_of(window, style, marked, pools, t) + "\" stroke=\"#000\" stroke-width=\"" +
           num(style.stroke_width) + "\"/>\n";
    // b-edge subdivision tick, a tenth of the way up the tile
    const auto mid = (s.ll + s.lr) / 2.0;
    const auto p0 = f.page(mid);
    const auto p1 = f.page(mid + std::complex<double>(0, 0.1 * (s.ul.imag() - s.ll.imag())));
    out += "  <line class=\"tick\" x1=\"" + num(p0.x) + "\" y1=\"" + num(p0.y) + "\" x2=\"" + num(p1.x) +
           "\" y2=\"" + num(p1.y) + "\" stroke=\"#000\" stroke-width=\"" + num(style.stroke_width) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace boroczky
