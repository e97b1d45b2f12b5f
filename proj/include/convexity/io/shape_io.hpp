#pragma once

#include "convexity/geometry/shape.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace convexity {

/// A shape as stored on disk, with an optional display name.
///
///   {"type": "polygon", "rings": [[[0,0],[1,0],[1,1],[0,1]]]}
///   {"type": "multipolygon", "polygons": [[ring, hole...], ...]}
///   {"type": "pointset", "points": [[0,0], [1,0]]}
///   {"type": "lp", "p": 0.5, "scale": 1, "center": [0,0], "angle": 0, "vertices": 4096}
///   {"type": "raster", "origin": [0,0], "cell": 1, "rows": ["0110", "1111"]}
///
/// Raster rows are strings of 0/1, row 0 first (the row at origin.y).
struct ShapeDocument {
  std::string name;
  Shape shape;
};

/// One document (object) or several (array of objects). Throws ParseError
/// naming the line or field, and the shape constructors' InvariantViolation
/// or EmptyShape for invalid geometry.
std::vector<ShapeDocument> parse_shapes(std::string_view text);
/// Exactly one document.
ShapeDocument parse_shape(std::string_view text);

/// Compact JSON; doubles are written in shortest round-trip form.
std::string serialize_shape(const ShapeDocument& doc);

/// Throws IoError when the file cannot be read. Unnamed documents get the file
/// stem as name, suffixed with #k when the file holds several.
std::vector<ShapeDocument> load_shapes(const std::filesystem::path& path);

/// Exact equality of the stored geometries.
bool same_geometry(const Shape& a, const Shape& b);

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

}  // namespace convexity
