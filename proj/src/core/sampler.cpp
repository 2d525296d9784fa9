#include "core/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace otk {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
const double kPi = std::acos(-1.0);

double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double min_angle_of(const Triangle& t) {
  const Tolerance tol;
  const auto cosines = angle_cosines(tol, t);
  const double largest_cos =
      std::max({cosines[0], cosines[1], cosines[2]});
  return std::acos(std::min(1.0, largest_cos));
}

double longest_side(const Triangle& t) {
  const auto s = side_lengths(t);
  return std::max({s[0], s[1], s[2]});
}

}  // namespace

std::uint64_t mix_bits(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

DrawStream::DrawStream(std::uint64_t seed, std::uint64_t index,
                       std::uint64_t salt)
    : state_(mix_bits(seed + kGolden * (salt + 1)) ^
             mix_bits(index + kGolden)) {}

double DrawStream::next() {
  state_ += kGolden;
  return unit_double(mix_bits(state_));
}

double DrawStream::next_in(double lo, double hi) {
  return lo + (hi - lo) * next();
}

Triangle triangle_from_angles(double alpha, double beta, double radius,
                              double rotation, Point center) {
  // Central arcs are twice the inscribed angles at the opposite vertices.
  const double gamma = kPi - alpha - beta;
  const double ta = rotation;
  const double tb = rotation + 2.0 * gamma;
  const double tc = rotation + 2.0 * gamma + 2.0 * alpha;
  const auto on_circle = [&](double t) {
    return center + radius * Point{std::cos(t), std::sin(t)};
  };
  return {on_circle(ta), on_circle(tb), on_circle(tc)};
}

Triangle TriangleSampler::at(std::uint64_t index) const {
  DrawStream s(seed, index, static_cast<std::uint64_t>(shape));

  if (shape == SampleShape::Uniform) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      Triangle t;
      t.a = {s.next_in(-1.5, 1.5), s.next_in(-1.5, 1.5)};
      t.b = {s.next_in(-1.5, 1.5), s.next_in(-1.5, 1.5)};
      t.c = {s.next_in(-1.5, 1.5), s.next_in(-1.5, 1.5)};
      if (std::abs(signed_area(t)) < 1e-12) continue;
      if (longest_side(t) < 0.1) continue;
      if (min_angle_of(t) < 1e-3) continue;
      return t;
    }
    raise(ErrorCode::InvalidArgument, "box sampler starved");  // unreachable
  }

  const double radius = s.next_in(0.5, 2.0);
  const double rotation = s.next_in(0.0, 2.0 * kPi);
  const Point center{s.next_in(-2.0, 2.0), s.next_in(-2.0, 2.0)};

  Triangle t;
  switch (shape) {
    case SampleShape::Obtuse: {
      const double alpha = s.next_in(kPi / 2.0 + 0.01, kPi - 0.1);
      const double beta = (kPi - alpha) * s.next_in(0.1, 0.9);
      t = triangle_from_angles(alpha, beta, radius, rotation, center);
      break;
    }
    case SampleShape::NearEquilateral: {
      const double eps = std::pow(10.0, s.next_in(-6.0, -2.0));
      t = triangle_from_angles(kPi / 3.0, kPi / 3.0, radius, rotation,
                               center);
      for (Point* v : {&t.a, &t.b, &t.c}) {
        const double r = eps * radius * std::sqrt(s.next());
        const double phi = s.next_in(0.0, 2.0 * kPi);
        *v = *v + r * Point{std::cos(phi), std::sin(phi)};
      }
      break;
    }
    case SampleShape::NearDegenerate: {
      const double m = min_angle * std::pow(10.0, s.next_in(0.0, 2.0));
      const double beta = s.next_in(m, kPi - 2.0 * m);
      t = triangle_from_angles(m, beta, radius, rotation, center);
      break;
    }
    default:  // Uniform handled above
      raise(ErrorCode::InvalidArgument, "unknown sample shape");
  }
  if (s.next() < 0.5) std::swap(t.b, t.c);  // mix both orientations
  return t;
}

}  // namespace otk
