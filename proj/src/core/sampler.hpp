#pragma once

#include <cstdint>

#include "core/triangle.hpp"

namespace otk {

// splitmix64 finalizer. Everything downstream is counter based: the same
// (seed, index) pair always yields the same triangle, independent of call
// order, platform, or thread count.
std::uint64_t mix_bits(std::uint64_t z);

// Per-sample stream of doubles in [0, 1).
class DrawStream {
 public:
  DrawStream(std::uint64_t seed, std::uint64_t index, std::uint64_t salt);

  double next();
  double next_in(double lo, double hi);

 private:
  std::uint64_t state_;
};

// Vertices on a circle, counterclockwise, with inscribed angle alpha at the
// first vertex and beta at the second.
Triangle triangle_from_angles(double alpha, double beta, double radius,
                              double rotation, Point center);

enum class SampleShape { Uniform, Obtuse, NearEquilateral, NearDegenerate };

struct TriangleSampler {
  std::uint64_t seed = 0;
  SampleShape shape = SampleShape::Uniform;
  double min_angle = 1e-4;  // radians; floor reached by NearDegenerate

  Triangle at(std::uint64_t index) const;
};

}  // namespace otk
