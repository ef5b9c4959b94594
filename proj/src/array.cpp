#include "wpt/array.hpp"

#include <cmath>
#include <string>

#include "wpt/errors.hpp"

namespace wpt {

void ArrayConfig::validate() const {
  if (elements < 1) throw InvalidInput("array needs at least one element");
  if (!(spacing_phase > 0.0) || !std::isfinite(spacing_phase))
    throw InvalidInput("spacing phase must be positive and finite");
  if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz))
    throw InvalidInput("carrier frequency must be positive and finite");
}

void Geometry::validate() const {
  if (tx_positions.empty()) throw InvalidInput("geometry needs at least one transmitter");
  if (rx_positions.empty()) throw InvalidInput("geometry needs at least one receiver");
  if (tx_boresights.size() != tx_positions.size())
    throw InvalidInput("one boresight per transmitter required");
  if (!(field_bounds.x > 2.0) || !(field_bounds.y > 2.0))
    throw InvalidInput("field must be larger than 2 m on each axis");
  for (std::size_t j = 0; j < rx_positions.size(); ++j) {
    const Point r = rx_positions[j];
    if (r.x < 1.0 || r.x > field_bounds.x - 1.0 || r.y < 1.0 || r.y > field_bounds.y - 1.0)
      throw InvalidInput("receiver " + std::to_string(j) + " outside [1, bound - 1]");
    for (const Point& t : tx_positions)
      if (t == r) throw DegenerateGeometry("receiver " + std::to_string(j) + " coincides with a transmitter");
  }
}

double wrap_angle(double a) {
  double w = std::fmod(a, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  // fmod of a tiny negative number can round back up to exactly 2*pi.
  if (w >= 2.0 * kPi) w = 0.0;
  return w;
}

double bearing(Point from, Point to) { return std::atan2(to.y - from.y, to.x - from.x); }

ComplexVector steering_vector(double phi, const ArrayConfig& cfg) {
  if (!std::isfinite(phi)) throw InvalidInput("steering angle must be finite");
  cfg.validate();
  const double step = cfg.spacing_phase * std::cos(phi);
  ComplexVector a(cfg.elements);
  a[0] = Complex(1.0, 0.0);
  for (std::size_t m = 1; m < cfg.elements; ++m) a[m] = std::polar(1.0, step * static_cast<double>(m));
  return a;
}

double angle_of_departure(std::size_t tx_index, Point rx, const Geometry& geo) {
  if (tx_index >= geo.transmitters()) throw IndexError("transmitter index out of range");
  const Point tx = geo.tx_positions[tx_index];
  if (tx == rx) throw DegenerateGeometry("receiver coincides with transmitter");
  return wrap_angle(bearing(tx, rx) - geo.tx_boresights[tx_index]);
}

double path_gain(double distance, const ArrayConfig& cfg) {
  if (!(distance > 0.0) || !std::isfinite(distance)) throw InvalidInput("distance must be positive");
  return cfg.wavelength() / (4.0 * kPi * distance);
}

ComplexVector los_link_response(std::size_t tx_index, std::size_t rx_index, const Geometry& geo,
                                const ArrayConfig& cfg) {
  if (rx_index >= geo.receivers()) throw IndexError("receiver index out of range");
  const Point rx = geo.rx_positions[rx_index];
  const double phi = angle_of_departure(tx_index, rx, geo);
  const Point tx = geo.tx_positions[tx_index];
  const double alpha = path_gain(std::hypot(rx.x - tx.x, rx.y - tx.y), cfg);
  ComplexVector row = steering_vector(phi, cfg);
  for (Complex& v : row) v = alpha * std::conj(v);
  return row;
}

double beam_power_gain(std::span<const Complex> link, std::span<const Complex> code) {
  if (link.size() != code.size()) throw InvalidInput("link and code lengths differ");
  Complex acc{0.0, 0.0};
  for (std::size_t m = 0; m < link.size(); ++m) acc += link[m] * code[m];
  return std::norm(acc);
}

}  // namespace wpt
