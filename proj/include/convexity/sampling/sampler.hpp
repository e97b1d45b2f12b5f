#pragma once

#include "convexity/geometry/shape.hpp"
#include "convexity/sampling/stream.hpp"

#include <string_view>
#include <vector>

namespace convexity {

/// Draws points uniformly from a shape of positive area.
///
/// Polygon sets and rasters use rejection from the bounding box. Lp regions
/// use rejection from the local square, or the marginal sampler (|x|^p drawn
/// from Beta(1/p, 1 + 1/p), y uniform on the chord) when p < 0.3 or the square
/// acceptance drops below 1e-3. Multi-part shapes with poor acceptance are
/// sampled component by component with area weights.
class UniformSampler {
 public:
  enum class Method { BoxRejection, ComponentRejection, LpRejection, LpMarginal };

  /// Throws ZeroAreaShape for point sets and other zero-area shapes and
  /// AcceptanceTooLow when no method reaches an acceptance of 1e-6.
  explicit UniformSampler(const Shape& shape);

  Point operator()(Generator& gen) const;

  Method method() const { return method_; }
  /// Expected fraction of proposals accepted.
  double acceptance() const { return acceptance_; }

 private:
  struct Part {
    Box box;
    double cumulative = 0.0;
    std::vector<int> rings;
  };

  Point lp_local(Generator& gen) const;
  bool owned_by(const Part& part, const Point& q) const;

  Shape shape_;
  Method method_ = Method::BoxRejection;
  double acceptance_ = 1.0;
  Box box_;
  std::vector<Part> parts_;
  LpRegion lp_;
};

std::string_view to_string(UniformSampler::Method method);

/// n points uniform on s, reproducible for a given stream.
std::vector<Point> sample_uniform(const Shape& s, const SeededStream& stream, std::size_t n);

}  // namespace convexity
