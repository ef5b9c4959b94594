#include "wpt/learn/qtable.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "wpt/errors.hpp"

namespace wpt::learn {

QTable::QTable(std::size_t actions) : n_(actions), zeros_(actions, 0.0) {
  if (actions == 0) throw InvalidInput("Q-table needs at least one action");
}

std::span<const double> QTable::row(const StateKey& s) const {
  const auto it = rows_.find(s);
  return it == rows_.end() ? std::span<const double>(zeros_) : std::span<const double>(it->second);
}

void QTable::set(const StateKey& s, std::size_t a, double v) {
  if (a >= n_) throw IndexError("action index out of range");
  if (!std::isfinite(v)) throw NumericalError("non-finite Q value");
  auto [it, inserted] = rows_.try_emplace(s, zeros_);
  it->second[a] = v;
}

void QTable::save(std::ostream& out) const {
  std::ostringstream os;
  os << "wpt-qtable 1\nactions " << n_ << "\nrows " << rows_.size() << '\n' << std::hexfloat;
  for (const auto& [key, vals] : rows_) {
    os << key.size();
    for (int k : key) os << ' ' << k;
    for (double v : vals) os << ' ' << v;
    os << '\n';
  }
  out << os.str();
}

namespace {

double parse_double(const std::string& tok) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') throw InvalidInput("bad number '" + tok + "' in checkpoint");
  return v;
}

}  // namespace

QTable QTable::load(std::istream& in) {
  std::string magic, word;
  int version = 0;
  std::size_t actions = 0, count = 0;
  if (!(in >> magic >> version) || magic != "wpt-qtable" || version != 1)
    throw InvalidInput("not a version-1 Q-table checkpoint");
  if (!(in >> word >> actions) || word != "actions") throw InvalidInput("missing action count");
  if (!(in >> word >> count) || word != "rows") throw InvalidInput("missing row count");
  QTable t(actions);
  for (std::size_t r = 0; r < count; ++r) {
    std::size_t len = 0;
    if (!(in >> len)) throw InvalidInput("truncated Q-table checkpoint");
    StateKey key(len);
    for (int& k : key)
      if (!(in >> k)) throw InvalidInput("truncated Q-table key");
    std::vector<double> vals(actions);
    for (double& v : vals) {
      std::string tok;
      if (!(in >> tok)) throw InvalidInput("truncated Q-table row");
      v = parse_double(tok);
    }
    t.rows_.emplace(std::move(key), std::move(vals));
  }
  return t;
}

void q_update(QTable& table, const StateKey& s, std::size_t a, double r, const StateKey& s_next, double alpha,
              double gamma) {
  const auto next = table.row(s_next);
  const double best_next = *std::max_element(next.begin(), next.end());
  const double q = table.value(s, a);
  table.set(s, a, q + alpha * (r + gamma * best_next - q));
}

StateKey rollout_key(const EnvState& state) {
  StateKey key(state.codes.begin(), state.codes.end());
  for (const PartialAction& pa : state.partial) key.push_back(pa.action);
  return key;
}

std::size_t encode_joint(std::span<const int> codes, std::size_t n) {
  std::size_t idx = 0;
  for (int c : codes) idx = idx * n + static_cast<std::size_t>(c);
  return idx;
}

std::vector<int> decode_joint(std::size_t index, std::size_t n, std::size_t agents) {
  std::vector<int> codes(agents);
  for (std::size_t p = agents; p-- > 0;) {
    codes[p] = static_cast<int>(index % n);
    index /= n;
  }
  return codes;
}

}  // namespace wpt::learn
