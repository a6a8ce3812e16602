#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boroczky/tiling.hpp"

namespace boroczky {

enum class Model { HalfPlane, Disc, Footprint };

Model parse_model(const std::string& name);
const char* to_string(Model model);

struct StyleOptions {
  double stroke_width = 1.0;
  std::vector<std::string> palette{"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                   "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};
  bool color_pools = false;
  std::string highlight_color = "#e41a1c";
  std::vector<TileAddress> highlight;
  std::optional<TileAddress> tail;   ///< highlight this tile's tail inside the window
  std::optional<TileAddress> tower;  ///< highlight this tile's tower inside the window
  std::optional<std::int64_t> layer; ///< Footprint model: layer to draw (default: lowest)

  /// Keys: stroke-width, palette (comma list), pools (true/false),
  /// highlight-color, highlight ("j:m1,m2;..."), tail, tower, layer.
  static StyleOptions from_table(const std::map<std::string, std::string>& table);
};

/// "j:m1,m2,..." as used by the style table.
TileAddress parse_tile(const std::string& text);

struct Point {
  double x = 0;
  double y = 0;
};

/// Page geometry of one d = 1 tile: corners in path order (b-edge first:
/// lower-left, lower-right, upper-right, upper-left) and the b-edge midpoint.
struct TileOutline {
  TileAddress tile;
  std::array<Point, 4> corners;
  Point b_mid;
};

struct PageFrame {
  double width = 0;
  double height = 0;
};

/// Outlines in page coordinates for Model::HalfPlane or Model::Disc.
std::vector<TileOutline> tile_outlines(const TileComplex& window, Model model, PageFrame* frame = nullptr);

/// SVG 1.1 document. HalfPlane and Disc need d = 1; Footprint needs d = 2.
/// Throws UnsupportedDimension otherwise.
std::string render_svg(const TileComplex& window, Model model, const StyleOptions& style = {});

}  // namespace boroczky
