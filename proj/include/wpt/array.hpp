#pragma once

// Uniform linear array model: steering vectors, geometry, free-space path
// gains and line-of-sight link responses.

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace wpt {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s
inline constexpr double kPi = std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct ArrayConfig {
  std::size_t elements = 64;
  // Phase advance between neighbouring elements per unit cos(phi). Treated
  // as an abstract constant; the physical element spacing is not modelled.
  double spacing_phase = kPi;
  // Only enters the path gain through the wavelength.
  double carrier_hz = 8e6;

  double wavelength() const { return kSpeedOfLight / carrier_hz; }
  void validate() const;
};

// Positions are metres in the global frame. Each transmitter carries the
// global bearing of its local phi = 0 direction (the array axis).
struct Geometry {
  std::vector<Point> tx_positions;
  std::vector<double> tx_boresights;
  std::vector<Point> rx_positions;
  Point field_bounds{30.0, 30.0};

  std::size_t transmitters() const { return tx_positions.size(); }
  std::size_t receivers() const { return rx_positions.size(); }
  Point field_center() const { return {field_bounds.x / 2, field_bounds.y / 2}; }
  void validate() const;
};

/// Entry m is exp(j * d * m * cos(phi)), m = 0..M-1.
ComplexVector steering_vector(double phi, const ArrayConfig& cfg);

/// Bearing of rx seen from transmitter `tx_index`, relative to that
/// transmitter's boresight, in [0, 2*pi).
double angle_of_departure(std::size_t tx_index, Point rx, const Geometry& geo);

/// Friis amplitude lambda / (4 pi r).
double path_gain(double distance, const ArrayConfig& cfg);

/// alpha * conj(a(phi)) for the tx -> rx link.
ComplexVector los_link_response(std::size_t tx_index, std::size_t rx_index, const Geometry& geo,
                                const ArrayConfig& cfg);

/// |<link, code>|^2 where <.,.> is the plain (unconjugated) row-times-column
/// product; the conjugation already lives in the link row.
double beam_power_gain(std::span<const Complex> link, std::span<const Complex> code);

// Global bearing from `from` to `to`, in (-pi, pi].
double bearing(Point from, Point to);

// Wraps an angle into [0, 2*pi).
double wrap_angle(double a);

}  // namespace wpt
