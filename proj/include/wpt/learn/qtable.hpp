#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "wpt/env.hpp"

namespace wpt::learn {

using StateKey = std::vector<int>;

// Sparse action-value table; rows that were never written read as zeros.
class QTable {
 public:
  explicit QTable(std::size_t actions);

  std::size_t actions() const { return n_; }
  std::size_t size() const { return rows_.size(); }

  std::span<const double> row(const StateKey& s) const;
  double value(const StateKey& s, std::size_t a) const { return row(s)[a]; }
  void set(const StateKey& s, std::size_t a, double v);

  const std::map<StateKey, std::vector<double>>& rows() const { return rows_; }

  void save(std::ostream& out) const;
  static QTable load(std::istream& in);

  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  std::size_t n_;
  std::map<StateKey, std::vector<double>> rows_;
  std::vector<double> zeros_;
};

// q(s,a) += alpha * (r + gamma * max_a' q(s',a') - q(s,a))
void q_update(QTable& table, const StateKey& s, std::size_t a, double r, const StateKey& s_next, double alpha,
              double gamma);

// Committed codes followed by the pending rollout actions. Energies are left
// out: they are a function of the codes.
StateKey rollout_key(const EnvState& state);

// Joint action index <-> code tuple, transmitter 0 most significant.
std::size_t encode_joint(std::span<const int> codes, std::size_t n);
std::vector<int> decode_joint(std::size_t index, std::size_t n, std::size_t agents);

}  // namespace wpt::learn
