#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wpt/array.hpp"
#include "wpt/codebook.hpp"
#include "wpt/link_table.hpp"

namespace wpt {

struct ScenarioParams {
  std::vector<Point> tx_positions{{0, 0}, {30, 0}, {30, 30}, {0, 30}};
  // Empty: each array axis is turned so the field centre sits at broadside.
  std::vector<double> tx_boresights;
  Point field_bounds{30.0, 30.0};
  std::size_t receivers = 5;
  // Non-empty: fixed placement, `receivers` is ignored.
  std::vector<Point> rx_positions;
  ArrayConfig array;
  std::size_t codes = 8;
  double code_range = kPi / 2;
  // Local frame. Defaults to broadside (pi/2).
  std::optional<double> code_center;
};

// Everything derived from one receiver placement. Immutable once built.
struct Scenario {
  Geometry geometry;
  Codebook codebook;
  std::vector<ComplexVector> link_rows;  // [j * L + p]
  LinkTable gains;
  // Code each transmitter is assumed to hold before it has ever acted:
  // the one nearest the field centre.
  std::vector<int> default_codes;

  const ComplexVector& link(std::size_t j, std::size_t p) const {
    return link_rows[j * geometry.transmitters() + p];
  }
};

std::vector<Point> place_receivers(std::size_t count, Point field_bounds, std::span<const Point> transmitters,
                                   std::uint64_t seed);

// Boresight that puts the field centre at local angle pi/2.
double broadside_boresight(Point tx, Point field_center);

Scenario make_scenario(const ScenarioParams& params, std::uint64_t placement_seed, Exec exec = Exec::Parallel);

}  // namespace wpt
