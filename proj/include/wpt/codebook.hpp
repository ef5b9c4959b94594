#pragma once

#include <cstddef>
#include <vector>

#include "wpt/array.hpp"

namespace wpt {

// N steering-vector codes at the midpoints of N equal slices of
// [center - range/2, center + range/2]. Angles are in the transmitter's local
// frame; every transmitter shares the same codebook.
class Codebook {
 public:
  Codebook(std::size_t n, double range, double center, const ArrayConfig& cfg);

  std::size_t size() const { return codes_.size(); }
  double range() const { return range_; }
  double center() const { return center_; }
  const ArrayConfig& array() const { return cfg_; }

  const ComplexVector& code(std::size_t i) const;
  double angle(std::size_t i) const;
  const std::vector<double>& angles() const { return angles_; }

  // Index of the code whose cos(angle) is closest to cos(phi); lowest index
  // on ties.
  std::size_t nearest(double phi) const;

 private:
  ArrayConfig cfg_;
  double range_;
  double center_;
  std::vector<double> angles_;
  std::vector<ComplexVector> codes_;
};

Codebook build_codebook(std::size_t n, double range, double center, const ArrayConfig& cfg);

}  // namespace wpt
