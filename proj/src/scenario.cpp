#include "wpt/scenario.hpp"

#include <algorithm>
#include <random>

#include "wpt/errors.hpp"
#include "wpt/kernels.hpp"
#include "wpt/seeding.hpp"

namespace wpt {

LinkTable::LinkTable(std::size_t receivers, std::size_t transmitters, std::size_t codes)
    : k_(receivers), l_(transmitters), n_(codes), g_(receivers * transmitters * codes, 0.0) {}

LinkTable::LinkTable(std::size_t receivers, std::size_t transmitters, std::size_t codes, std::vector<double> gains)
    : k_(receivers), l_(transmitters), n_(codes), g_(std::move(gains)) {
  if (g_.size() != k_ * l_ * n_) throw InvalidInput("gain table size does not match K x L x N");
  for (double v : g_)
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidInput("gain table entries must be finite and >= 0");
}

std::vector<Point> place_receivers(std::size_t count, Point field_bounds, std::span<const Point> transmitters,
                                   std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> ux(1.0, field_bounds.x - 1.0);
  std::uniform_real_distribution<double> uy(1.0, field_bounds.y - 1.0);
  std::vector<Point> out;
  out.reserve(count);
  while (out.size() < count) {
    const Point p{ux(rng), uy(rng)};
    if (std::find(transmitters.begin(), transmitters.end(), p) == transmitters.end()) out.push_back(p);
  }
  return out;
}

double broadside_boresight(Point tx, Point field_center) {
  if (tx == field_center) throw DegenerateGeometry("transmitter sits at the field centre");
  return wrap_angle(bearing(tx, field_center) - kPi / 2);
}

Scenario make_scenario(const ScenarioParams& params, std::uint64_t placement_seed, Exec exec) {
  Geometry geo;
  geo.tx_positions = params.tx_positions;
  geo.field_bounds = params.field_bounds;
  if (params.tx_boresights.empty()) {
    for (const Point& t : geo.tx_positions) geo.tx_boresights.push_back(broadside_boresight(t, geo.field_center()));
  } else {
    geo.tx_boresights = params.tx_boresights;
  }
  geo.rx_positions = params.rx_positions.empty()
                         ? place_receivers(params.receivers, params.field_bounds, params.tx_positions, placement_seed)
                         : params.rx_positions;
  geo.validate();
  params.array.validate();

  Codebook book(params.codes, params.code_range, params.code_center.value_or(kPi / 2), params.array);

  const std::size_t k = geo.receivers();
  const std::size_t l = geo.transmitters();
  std::vector<ComplexVector> rows;
  rows.reserve(k * l);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t p = 0; p < l; ++p) rows.push_back(los_link_response(p, j, geo, params.array));

  LinkTable gains = exec == Exec::Serial ? kernels::gain_table_serial(rows, book, k, l)
                                         : kernels::gain_table_parallel(rows, book, k, l);

  std::vector<int> defaults;
  for (std::size_t p = 0; p < l; ++p) {
    const double phi = angle_of_departure(p, geo.field_center(), geo);
    defaults.push_back(static_cast<int>(book.nearest(phi)));
  }

  return Scenario{std::move(geo), std::move(book), std::move(rows), std::move(gains), std::move(defaults)};
}

}  // namespace wpt
