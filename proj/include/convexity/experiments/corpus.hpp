#pragma once

#include "convexity/geometry/shape.hpp"
#include "convexity/sampling/stream.hpp"

#include <string>
#include <vector>

namespace convexity {

/// Seeded shape generators shared by the experiments, the axiom suites and
/// the tests.
namespace corpus {

/// Axis-aligned square [x0, x0 + side] x [y0, y0 + side].
Ring square(double x0, double y0, double side);

/// Regular n-gon inscribed in the circle of radius r around c.
Ring circle(const Point& c, double r, int n);

/// Unit squares [0,1]^2 and [1+gap, 2+gap] x [0,1].
Shape two_squares(double gap);

/// Two copies of `a` side by side with `gap` between their bounding boxes.
Shape side_by_side(const Shape& a, const Shape& b, double gap);

/// The unit disc with the vertical slab |x| < gap/2 removed (two pieces).
/// `n` vertices are spread over the full circle.
Shape half_discs(double gap, int n = 1024);

/// Unit square with a rectangular notch of the given depth and width cut
/// into the middle of its top edge.
Shape notched_square(double depth, double width = 0.2);

/// Convex polygon: hull of random points on an ellipse with random axes.
Shape random_convex(Generator& gen, int min_vertices = 5, int max_vertices = 24);

/// Star-shaped polygon with random radii; non-convex with overwhelming
/// probability (the generator retries until area < 0.99 * hull area).
Shape random_star(Generator& gen, int min_vertices = 6, int max_vertices = 20);

/// Two random convex parts, well separated.
Shape random_two_part(Generator& gen);

/// A mixed draw over the generators above, used for metric property tests.
Shape random_shape(Generator& gen);

/// Rings of every polygon of a shape ({outer, holes...} per polygon). Point
/// sets are rejected; Lp regions and rasters use their boundary rings.
std::vector<std::vector<Ring>> polygons_of(const Shape& s);

}  // namespace corpus

}  // namespace convexity
