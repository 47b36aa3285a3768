#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wvp/polygon.hpp"

namespace wvp {

using Json = nlohmann::json;

// Polygon schema: {"outer": [[xnum, xden, ynum, yden], ...], "holes": [[...], ...]}.
// A vertex may also be [x, y] with integers or "a/b" strings. Numerators that do
// not fit in 64 bits are written as strings.
Json point_to_json(const Point2& p);
Point2 point_from_json(const Json& j);
Json ring_to_json(const Ring& r);
Ring ring_from_json(const Json& j);
Json polygon_to_json(const PolygonWithHoles& P);
PolygonWithHoles polygon_from_json(const Json& j);

/// Parses text; malformed JSON raises ParseError with line and column.
Json parse_json_text(const std::string& text);
PolygonWithHoles load_polygon(const std::string& path);
void save_polygon(const std::string& path, const PolygonWithHoles& P);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// "x1 y1 x2 y2" with rational tokens.
QuerySegment parse_segment(const std::string& text);

// "a/b" string form used inside larger structural dumps.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

struct SvgOverlay {
  std::vector<Ring> fills;          // WVP pieces, filled at 40% opacity
  std::vector<Segment> lines;       // thin auxiliary segments (cuts, constraints)
  std::optional<QuerySegment> query;
};

std::string render_svg(const PolygonWithHoles& P, const SvgOverlay& overlay);

}  // namespace wvp
