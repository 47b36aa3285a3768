#include "wvp/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace wvp {

namespace {

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Scalar s = parse_scalar(j.get<std::string>());
    if (s.get_den() != 1) throw Error(ErrorCode::ParseError, "expected an integer");
    return s.get_num();
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Scalar plain_scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  return Scalar(integer_from_json(j));
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return Json(to_string(s)); }

Scalar scalar_from_json(const Json& j) { return plain_scalar_from_json(j); }

Json point_to_json(const Point2& p) {
  return Json::array({integer_to_json(p.x.get_num()), integer_to_json(p.x.get_den()),
                      integer_to_json(p.y.get_num()), integer_to_json(p.y.get_den())});
}

Point2 point_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "vertex must be an array: " + j.dump());
  if (j.size() == 2) return {plain_scalar_from_json(j[0]), plain_scalar_from_json(j[1])};
  if (j.size() == 4) {
    mpz_class xd = integer_from_json(j[1]), yd = integer_from_json(j[3]);
    if (xd == 0 || yd == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    Scalar x(integer_from_json(j[0]), xd), y(integer_from_json(j[2]), yd);
    x.canonicalize();
    y.canonicalize();
    return {x, y};
  }
  throw Error(ErrorCode::ParseError, "vertex must have 2 or 4 entries: " + j.dump());
}

Json ring_to_json(const Ring& r) {
  Json a = Json::array();
  for (const auto& p : r) a.push_back(point_to_json(p));
  return a;
}

Ring ring_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "ring must be an array");
  Ring r;
  for (const auto& v : j) r.push_back(point_from_json(v));
  return r;
}

Json polygon_to_json(const PolygonWithHoles& P) {
  Json holes = Json::array();
  for (const auto& h : P.holes) holes.push_back(ring_to_json(h.vertices));
  return Json{{"outer", ring_to_json(P.outer.vertices)}, {"holes", holes}};
}

PolygonWithHoles polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("outer")) {
    throw Error(ErrorCode::ParseError, "polygon object needs an \"outer\" ring");
  }
  PolygonWithHoles P;
  P.outer = SimplePolygon(ring_from_json(j.at("outer")));
  if (j.contains("holes")) {
    for (const auto& h : j.at("holes")) P.holes.emplace_back(ring_from_json(h));
  }
  return P;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << content;
}

PolygonWithHoles load_polygon(const std::string& path) {
  return polygon_from_json(parse_json_text(read_file(path)));
}

void save_polygon(const std::string& path, const PolygonWithHoles& P) {
  write_file(path, polygon_to_json(P).dump() + "\n");
}

QuerySegment parse_segment(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.size() != 4) throw Error(ErrorCode::ParseError, "segment needs 4 numbers: '" + text + "'");
  return {{parse_scalar(tok[0]), parse_scalar(tok[1])}, {parse_scalar(tok[2]), parse_scalar(tok[3])}};
}

namespace {

struct Frame {
  double minx, miny, maxx, maxy, scale;
  double X(const Point2& p) const { return (to_double(p.x) - minx) * scale; }
  double Y(const Point2& p) const { return (maxy - to_double(p.y)) * scale; }
};

std::string path_of(const Ring& r, const Frame& f) {
  std::ostringstream s;
  s << std::setprecision(10);
  for (std::size_t i = 0; i < r.size(); ++i) s << (i ? " L " : "M ") << f.X(r[i]) << ' ' << f.Y(r[i]);
  s << " Z";
  return s.str();
}

}  // namespace

std::string render_svg(const PolygonWithHoles& P, const SvgOverlay& overlay) {
  auto [lo, hi] = bounding_box(P.rings());
  Frame f{to_double(lo.x), to_double(lo.y), to_double(hi.x), to_double(hi.y), 1.0};
  double w = std::max(f.maxx - f.minx, 1e-12), h = std::max(f.maxy - f.miny, 1e-12);
  f.scale = 800.0 / std::max(w, h);
  double pad = 10;
  std::ostringstream s;
  s << std::setprecision(10);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -pad << ' ' << -pad << ' '
    << w * f.scale + 2 * pad << ' ' << h * f.scale + 2 * pad << "\">\n";
  s << "<defs><pattern id=\"hatch\" width=\"8\" height=\"8\" patternUnits=\"userSpaceOnUse\" "
       "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" "
       "stroke=\"black\" stroke-width=\"1.5\"/></pattern></defs>\n";
  for (const Ring& r : overlay.fills) {
    s << "<path d=\"" << path_of(r, f)
      << "\" fill=\"#3070e0\" fill-opacity=\"0.4\" stroke=\"#3070e0\" stroke-width=\"1\"/>\n";
  }
  s << "<path d=\"" << path_of(P.outer.vertices, f)
    << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const auto& hole : P.holes) {
    s << "<path d=\"" << path_of(hole.vertices, f)
      << "\" fill=\"url(#hatch)\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const Segment& seg : overlay.lines) {
    s << "<line x1=\"" << f.X(seg.a) << "\" y1=\"" << f.Y(seg.a) << "\" x2=\"" << f.X(seg.b)
      << "\" y2=\"" << f.Y(seg.b) << "\" stroke=\"#888\" stroke-width=\"0.7\"/>\n";
  }
  if (overlay.query) {
    const auto& q = *overlay.query;
    s << "<line x1=\"" << f.X(q.p) << "\" y1=\"" << f.Y(q.p) << "\" x2=\"" << f.X(q.q)
      << "\" y2=\"" << f.Y(q.q) << "\" stroke=\"red\" stroke-width=\"3\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace wvp
