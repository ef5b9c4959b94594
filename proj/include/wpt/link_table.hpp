#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wpt {

enum class Exec { Serial, Parallel };

// Marks a transmitter that has not chosen a code yet.
inline constexpr int kUnset = -1;

// g[j][p][i]: power gain from transmitter p to receiver j when p uses code i,
// per unit transmit power.
class LinkTable {
 public:
  LinkTable() = default;
  LinkTable(std::size_t receivers, std::size_t transmitters, std::size_t codes);
  LinkTable(std::size_t receivers, std::size_t transmitters, std::size_t codes, std::vector<double> gains);

  std::size_t receivers() const { return k_; }
  std::size_t transmitters() const { return l_; }
  std::size_t codes() const { return n_; }

  double operator()(std::size_t j, std::size_t p, std::size_t i) const { return g_[(j * l_ + p) * n_ + i]; }
  double& operator()(std::size_t j, std::size_t p, std::size_t i) { return g_[(j * l_ + p) * n_ + i]; }
  std::span<const double> data() const { return g_; }

  friend bool operator==(const LinkTable&, const LinkTable&) = default;

 private:
  std::size_t k_ = 0;
  std::size_t l_ = 0;
  std::size_t n_ = 0;
  std::vector<double> g_;
};

// Expected energy at receiver j for a complete assignment. Every energy in the
// library goes through this so that oracle and environment totals agree
// bit for bit.
inline double receiver_energy(const LinkTable& t, std::size_t j, std::span<const int> codes, double duration) {
  double s = 0.0;
  for (std::size_t p = 0; p < t.transmitters(); ++p) s += t(j, p, static_cast<std::size_t>(codes[p]));
  return duration * s;
}

}  // namespace wpt
