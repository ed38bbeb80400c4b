#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "edgetess/errors.hpp"
#include "edgetess/ext_scalar.hpp"
#include "edgetess/geometry.hpp"
#include "edgetess/tiling.hpp"

namespace edgetess {

struct RenderStyle {
  double stroke_width = 1.5;  // pixels
  double scale = 60.0;        // pixels per field unit
  std::string seed_fill = "#e4572e";
  std::string tile_fill = "#f4efe1";
  std::string stroke = "#2b2b2b";
  bool label_vertices = false;
};

inline constexpr int kSvgDigits = 12;

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Exact rational value of a finite double.
inline ExtScalar exact_double(double v) { return ExtScalar(Rational(v)); }

}  // namespace detail

/// SVG 1.1 document with one closed path per tile, seed first in its own
/// fill. The y axis is flipped so the figure reads as in the plane.
/// Output depends only on the patch and style.
inline std::string render_svg(const Patch& patch, const RenderStyle& style = {}) {
  if (!(style.scale > 0)) throw argument_out_of_range("render scale must be positive");
  if (!(style.stroke_width > 0)) throw argument_out_of_range("stroke width must be positive");
  if (patch.tiles.empty()) throw argument_out_of_range("cannot render an empty patch");

  const auto& first = patch.tiles.front().verts.front();
  ExtScalar xmin = first.x, xmax = first.x, ymin = first.y, ymax = first.y;
  for (const auto& [v, _] : patch.vertex_index) {
    if (compare(v.x, xmin) < 0) xmin = v.x;
    if (compare(v.x, xmax) > 0) xmax = v.x;
    if (compare(v.y, ymin) < 0) ymin = v.y;
    if (compare(v.y, ymax) > 0) ymax = v.y;
  }
  const ExtScalar width = xmax - xmin;
  const ExtScalar height = ymax - ymin;
  const ExtScalar margin = max_value(width, height) * ExtScalar(Rational(1, 20));
  const ExtScalar view_w = width + 2 * margin;
  const ExtScalar view_h = height + 2 * margin;
  const ExtScalar scale = detail::exact_double(style.scale);

  std::map<Point2, std::string, PointLess> coords;
  auto coord = [&](const Point2& p) -> const std::string& {
    auto it = coords.find(p);
    if (it == coords.end()) it = coords.emplace(p, p.x.approx(kSvgDigits) + " " + (-p.y).approx(kSvgDigits)).first;
    return it->second;
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
  out += " width=\"" + (view_w * scale).approx(kSvgDigits) + "\"";
  out += " height=\"" + (view_h * scale).approx(kSvgDigits) + "\"";
  out += " viewBox=\"" + (xmin - margin).approx(kSvgDigits) + " " + (-(ymax + margin)).approx(kSvgDigits) + " " +
         view_w.approx(kSvgDigits) + " " + view_h.approx(kSvgDigits) + "\">\n";
  out += "<g stroke=\"" + detail::xml_escape(style.stroke) + "\" stroke-width=\"" +
         (detail::exact_double(style.stroke_width) / scale).approx(kSvgDigits) +
         "\" stroke-linejoin=\"round\">\n";

  auto emit = [&](const Tile& t, const std::string& fill, const char* cls) {
    out += "<path class=\"";
    out += cls;
    out += "\" fill=\"" + detail::xml_escape(fill) + "\" d=\"";
    for (std::size_t i = 0; i < t.verts.size(); ++i) {
      out += i == 0 ? "M " : " L ";
      out += coord(t.verts[i]);
    }
    out += " Z\"/>\n";
  };
  // Seed last so its outline sits on top.
  std::optional<std::size_t> seed_index;
  for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
    if (patch.tiles[i].generation == 0) {
      seed_index = i;
      continue;
    }
    emit(patch.tiles[i], style.tile_fill, "tile");
  }
  if (seed_index) emit(patch.tiles[*seed_index], style.seed_fill, "seed");
  out += "</g>\n";

  if (style.label_vertices && seed_index) {
    const Tile& seed = patch.tiles[*seed_index];
    const ExtScalar font = ExtScalar(14) / scale;
    out += "<g font-family=\"sans-serif\" font-size=\"" + font.approx(kSvgDigits) + "\" fill=\"#000000\">\n";
    for (std::size_t i = 0; i < seed.verts.size(); ++i) {
      auto a = seed.angle_at(i);
      const Point2& v = seed.verts[i];
      out += "<text x=\"" + v.x.approx(kSvgDigits) + "\" y=\"" + (-v.y).approx(kSvgDigits) + "\">" +
             (a ? std::to_string(*a) : std::string("?")) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace edgetess
