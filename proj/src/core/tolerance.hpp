#pragma once

#include <algorithm>
#include <cmath>

namespace otk {

// Shared comparison policy. One instance is threaded through every module so
// all near-zero decisions agree on what "zero" means.
struct Tolerance {
  double absolute_eps = 1e-9;
  double relative_eps = 1e-9;

  // Threshold for a quantity that lives at the given scale.
  double scaled(double scale) const {
    return std::max(absolute_eps, relative_eps * std::abs(scale));
  }

  bool near_zero(double value, double scale) const {
    return std::abs(value) <= scaled(scale);
  }

  // Scale = the larger operand magnitude.
  bool close(double u, double v) const {
    return std::abs(u - v) <= scaled(std::max(std::abs(u), std::abs(v)));
  }

  bool valid() const {
    return std::isfinite(absolute_eps) && std::isfinite(relative_eps) &&
           absolute_eps > 0.0 && relative_eps > 0.0;
  }
};

}  // namespace otk
