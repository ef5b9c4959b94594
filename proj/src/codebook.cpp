#include "wpt/codebook.hpp"

#include <cmath>

#include "wpt/errors.hpp"

namespace wpt {

Codebook::Codebook(std::size_t n, double range, double center, const ArrayConfig& cfg)
    : cfg_(cfg), range_(range), center_(center) {
  if (n == 0) throw InvalidInput("codebook needs at least one code");
  if (!(range > 0.0) || range > 2.0 * kPi) throw InvalidInput("codebook range must lie in (0, 2*pi]");
  if (!std::isfinite(center)) throw InvalidInput("codebook center must be finite");
  cfg.validate();
  const double slice = range / static_cast<double>(n);
  const double start = center - range / 2.0;
  angles_.reserve(n);
  codes_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    angles_.push_back(start + (static_cast<double>(i) + 0.5) * slice);
    codes_.push_back(steering_vector(angles_.back(), cfg));
  }
}

const ComplexVector& Codebook::code(std::size_t i) const {
  if (i >= codes_.size()) throw IndexError("code index " + std::to_string(i) + " out of range");
  return codes_[i];
}

double Codebook::angle(std::size_t i) const {
  if (i >= angles_.size()) throw IndexError("code index " + std::to_string(i) + " out of range");
  return angles_[i];
}

std::size_t Codebook::nearest(double phi) const {
  const double target = std::cos(phi);
  std::size_t best = 0;
  double best_dist = std::abs(std::cos(angles_[0]) - target);
  for (std::size_t i = 1; i < angles_.size(); ++i) {
    const double d = std::abs(std::cos(angles_[i]) - target);
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

Codebook build_codebook(std::size_t n, double range, double center, const ArrayConfig& cfg) {
  return Codebook(n, range, center, cfg);
}

}  // namespace wpt
