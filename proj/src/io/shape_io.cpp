#include "convexity/io/shape_io.hpp"

#include "convexity/error.hpp"

#include "json.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace convexity {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(where + key, "missing");
  return *it;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) field_error(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) field_error(field, "must be finite");
  return v;
}

Point point(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) field_error(field, "expected [x, y]");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
}

Ring ring(const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of points");
  Ring out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Ring> rings(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) field_error(field, "expected a non-empty array of rings");
  std::vector<Ring> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(ring(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

int integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < 0 || v > 1'000'000'000) field_error(field, "out of range");
  return static_cast<int>(v);
}

ShapeDocument document_from_json(const json& j, const std::string& prefix) {
  if (!j.is_object()) field_error(prefix.empty() ? "(root)" : prefix, "expected an object");
  const std::string at = prefix.empty() ? "" : prefix + ".";
  const json& type_j = member(j, "type", at);
  if (!type_j.is_string()) field_error(at + "type", "expected a string");
  const std::string type = type_j.get<std::string>();

  ShapeDocument doc{"", Shape::points({Point::Zero()})};
  if (const auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) field_error(at + "name", "expected a string");
    doc.name = it->get<std::string>();
  }

  if (type == "polygon") {
    auto rs = rings(member(j, "rings", at), at + "rings");
    Ring outer = std::move(rs.front());
    rs.erase(rs.begin());
    doc.shape = Shape::polygon(std::move(outer), std::move(rs));
  } else if (type == "multipolygon") {
    const json& polys = member(j, "polygons", at);
    if (!polys.is_array() || polys.empty()) field_error(at + "polygons", "expected a non-empty array of polygons");
    std::vector<std::vector<Ring>> all;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      all.push_back(rings(polys[i], at + "polygons[" + std::to_string(i) + "]"));
    }
    doc.shape = Shape::multipolygon(std::move(all));
  } else if (type == "pointset") {
    Ring pts = ring(member(j, "points", at), at + "points");
    doc.shape = Shape::points(std::move(pts));
  } else if (type == "lp") {
    LpRegion lp;
    lp.p = number(member(j, "p", at), at + "p");
    if (const auto it = j.find("scale"); it != j.end()) lp.scale = number(*it, at + "scale");
    if (const auto it = j.find("center"); it != j.end()) lp.center = point(*it, at + "center");
    if (const auto it = j.find("angle"); it != j.end()) lp.angle = number(*it, at + "angle");
    if (const auto it = j.find("vertices"); it != j.end()) lp.boundary_vertices = integer(*it, at + "vertices");
    doc.shape = Shape::lp(lp);
  } else if (type == "raster") {
    Raster r;
    r.origin = point(member(j, "origin", at), at + "origin");
    r.cell = number(member(j, "cell", at), at + "cell");
    const json& rows = member(j, "rows", at);
    if (!rows.is_array() || rows.empty()) field_error(at + "rows", "expected a non-empty array of bit strings");
    r.rows = static_cast<int>(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string field = at + "rows[" + std::to_string(i) + "]";
      if (!rows[i].is_string()) field_error(field, "expected a string of 0 and 1");
      const auto bits = rows[i].get<std::string>();
      if (i == 0) r.cols = static_cast<int>(bits.size());
      if (static_cast<int>(bits.size()) != r.cols) field_error(field, "row length differs from row 0");
      for (char c : bits) {
        if (c != '0' && c != '1') field_error(field, "expected only 0 and 1");
        r.mask.push_back(c == '1' ? 1 : 0);
      }
    }
    doc.shape = Shape::raster(std::move(r));
  } else {
    field_error(at + "type", "unknown shape type '" + type + "'");
  }
  return doc;
}

json as_json(const Point& p) { return json::array({p.x(), p.y()}); }

json as_json(const Ring& r) {
  json out = json::array();
  for (const auto& p : r) out.push_back(as_json(p));
  return out;
}

struct GeometryWriter {
  json& out;

  void operator()(const PolygonSet& ps) const {
    // Outer rings run counterclockwise; the clockwise rings after one are its holes.
    json polys = json::array();
    for (const auto& r : ps.rings) {
      if (signed_area(r) > 0 || polys.empty()) polys.push_back(json::array());
      polys.back().push_back(as_json(r));
    }
    if (polys.size() == 1) {
      out["type"] = "polygon";
      out["rings"] = polys[0];
    } else {
      out["type"] = "multipolygon";
      out["polygons"] = polys;
    }
  }
  void operator()(const PointSet& ps) const {
    out["type"] = "pointset";
    out["points"] = as_json(ps.points);
  }
  void operator()(const LpRegion& lp) const {
    out["type"] = "lp";
    out["p"] = lp.p;
    out["scale"] = lp.scale;
    out["center"] = as_json(lp.center);
    out["angle"] = lp.angle;
    out["vertices"] = lp.boundary_vertices;
  }
  void operator()(const Raster& r) const {
    out["type"] = "raster";
    out["origin"] = as_json(r.origin);
    out["cell"] = r.cell;
    json rows = json::array();
    for (int y = 0; y < r.rows; ++y) {
      std::string bits;
      for (int x = 0; x < r.cols; ++x) bits += r.at(x, y) ? '1' : '0';
      rows.push_back(bits);
    }
    out["rows"] = rows;
  }
};

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

std::vector<ShapeDocument> parse_shapes(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
  std::vector<ShapeDocument> out;
  if (j.is_array()) {
    if (j.empty()) throw Error(ErrorCode::ParseError, "field '(root)': empty document list");
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(document_from_json(j[i], "[" + std::to_string(i) + "]"));
  } else {
    out.push_back(document_from_json(j, ""));
  }
  return out;
}

ShapeDocument parse_shape(std::string_view text) {
  auto docs = parse_shapes(text);
  if (docs.size() != 1) throw Error(ErrorCode::ParseError, "field '(root)': expected exactly one shape document");
  return std::move(docs.front());
}

std::string serialize_shape(const ShapeDocument& doc) {
  json out = json::object();
  if (!doc.name.empty()) out["name"] = doc.name;
  std::visit(GeometryWriter{out}, doc.shape.geometry());
  return out.dump();
}

std::vector<ShapeDocument> load_shapes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<ShapeDocument> docs;
  try {
    docs = parse_shapes(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].name.empty()) {
      docs[i].name = path.stem().string();
      if (docs.size() > 1) docs[i].name += "#" + std::to_string(i);
    }
  }
  return docs;
}

bool same_geometry(const Shape& a, const Shape& b) {
  const auto& ga = a.geometry();
  const auto& gb = b.geometry();
  if (ga.index() != gb.index()) return false;
  if (const auto* x = std::get_if<PolygonSet>(&ga)) return x->rings == std::get<PolygonSet>(gb).rings;
  if (const auto* x = std::get_if<PointSet>(&ga)) return x->points == std::get<PointSet>(gb).points;
  if (const auto* x = std::get_if<LpRegion>(&ga)) {
    const auto& y = std::get<LpRegion>(gb);
    return x->p == y.p && x->scale == y.scale && x->center == y.center && x->angle == y.angle &&
           x->boundary_vertices == y.boundary_vertices;
  }
  const auto& x = std::get<Raster>(ga);
  const auto& y = std::get<Raster>(gb);
  return x.origin == y.origin && x.cell == y.cell && x.cols == y.cols && x.rows == y.rows && x.mask == y.mask;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace convexity
