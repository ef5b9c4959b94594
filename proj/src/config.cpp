#include "wpt/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "wpt/errors.hpp"
#include "wpt/seeding.hpp"

namespace wpt {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(std::string_view key, std::string_view v, std::size_t line) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw ConfigError("'" + std::string(key) + "' expects a number, got '" + std::string(v) + "'", line);
  return out;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view v, std::size_t line) {
  Int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw ConfigError("'" + std::string(key) + "' expects a non-negative integer, got '" + std::string(v) + "'", line);
  return out;
}

bool parse_bool(std::string_view key, std::string_view v, std::size_t line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("'" + std::string(key) + "' expects true or false, got '" + std::string(v) + "'", line);
}

std::vector<double> parse_reals(std::string_view key, std::string_view v, std::size_t line) {
  std::vector<double> out;
  for (std::string_view tok : split(v, ',')) out.push_back(parse_real(key, tok, line));
  return out;
}

std::vector<Point> parse_points(std::string_view key, std::string_view v, std::size_t line) {
  std::vector<Point> out;
  if (v.empty()) return out;
  for (std::string_view pair : split(v, ';')) {
    const std::vector<double> xy = parse_reals(key, pair, line);
    if (xy.size() != 2) throw ConfigError("'" + std::string(key) + "' expects 'x,y; x,y; ...'", line);
    out.push_back({xy[0], xy[1]});
  }
  return out;
}

std::string fmt(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fmt_points(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "; " : "") + fmt(pts[i].x) + "," + fmt(pts[i].y);
  return s;
}

std::string fmt_reals(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s;
}

double deg_to_rad(double d) { return d * kPi / 180.0; }

}  // namespace

std::string_view to_string(AgentKind kind) {
  switch (kind) {
    case AgentKind::TabularRollout: return "tabular-rollout";
    case AgentKind::ActorCriticRollout: return "actor-critic-rollout";
    case AgentKind::JointTabular: return "joint-tabular";
  }
  return "?";
}

AgentKind parse_agent_kind(std::string_view text) {
  if (text == "tabular-rollout") return AgentKind::TabularRollout;
  if (text == "actor-critic-rollout") return AgentKind::ActorCriticRollout;
  if (text == "joint-tabular") return AgentKind::JointTabular;
  throw ConfigError("unknown agent kind '" + std::string(text) +
                    "' (expected tabular-rollout, actor-critic-rollout or joint-tabular)");
}

void set_config_key(RunConfig& c, std::string_view key, std::string_view v, std::size_t line) {
  auto real = [&] { return parse_real(key, v, line); };
  auto count = [&] { return parse_int<std::size_t>(key, v, line); };
  auto u64 = [&] { return parse_int<std::uint64_t>(key, v, line); };
  auto flag = [&] { return parse_bool(key, v, line); };

  if (key == "agent") {
    try {
      c.agent = parse_agent_kind(v);
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), line);
    }
  } else if (key == "episodes") c.episodes = count();
  else if (key == "seed") c.seed = u64();
  else if (key == "output") c.output = std::string(v);
  else if (key == "wall_clock") c.wall_clock = flag();
  else if (key == "enumeration_cap") c.enumeration_cap = u64();
  else if (key == "tx_positions") c.tx_positions = parse_points(key, v, line);
  else if (key == "tx_boresights_deg") {
    if (v == "auto") c.tx_boresights_deg.reset();
    else c.tx_boresights_deg = parse_reals(key, v, line);
  } else if (key == "field_x") c.field_x = real();
  else if (key == "field_y") c.field_y = real();
  else if (key == "receivers") c.receivers = count();
  else if (key == "rx_positions") c.rx_positions = v == "random" ? std::vector<Point>{} : parse_points(key, v, line);
  else if (key == "placement_seed") {
    if (v == "auto") c.placement_seed.reset();
    else c.placement_seed = u64();
  } else if (key == "resample_rx_per_episode") c.resample_rx_per_episode = flag();
  else if (key == "elements") c.elements = count();
  else if (key == "spacing_phase") c.spacing_phase = real();
  else if (key == "carrier_hz") c.carrier_hz = real();
  else if (key == "codes") c.codes = count();
  else if (key == "code_range_deg") c.code_range_deg = real();
  else if (key == "code_center_deg") {
    if (v == "auto") c.code_center_deg.reset();
    else c.code_center_deg = real();
  } else if (key == "transfer_time") c.transfer_time = real();
  else if (key == "e_min") c.e_min = real();
  else if (key == "max_steps") c.max_steps = count();
  else if (key == "gamma") c.gamma = real();
  else if (key == "q_lr") c.q_lr = real();
  else if (key == "actor_lr") c.actor_lr = real();
  else if (key == "critic_lr") c.critic_lr = real();
  else if (key == "epsilon_decay") c.epsilon_decay = real();
  else if (key == "epsilon_floor") c.epsilon_floor = real();
  else if (key == "hidden") c.hidden = count();
  else if (key == "workers") c.workers = count();
  else if (key == "shared_policy") c.shared_policy = flag();
  else if (key == "reward_scale") c.reward_scale = real();
  else throw ConfigError("unknown key '" + std::string(key) + "'", line);
}

void RunConfig::validate() const {
  auto fail = [](const std::string& m) { throw ConfigError(m); };
  if (episodes < 1) fail("episodes must be at least 1");
  if (tx_positions.empty()) fail("tx_positions must list at least one transmitter");
  if (tx_boresights_deg && tx_boresights_deg->size() != tx_positions.size())
    fail("tx_boresights_deg needs one entry per transmitter");
  if (!(field_x > 2.0) || !(field_y > 2.0)) fail("field must exceed 2 m on each axis");
  if (rx_positions.empty() && receivers < 1) fail("receivers must be at least 1");
  if (elements < 1) fail("elements must be at least 1");
  if (!(spacing_phase > 0.0)) fail("spacing_phase must be positive");
  if (!(carrier_hz > 0.0)) fail("carrier_hz must be positive");
  if (codes < 1) fail("codes must be at least 1");
  if (!(code_range_deg > 0.0 && code_range_deg <= 360.0)) fail("code_range_deg must lie in (0, 360]");
  if (!(transfer_time > 0.0)) fail("transfer_time must be positive");
  if (!(e_min >= 0.0)) fail("e_min must be non-negative");
  if (max_steps < 1) fail("max_steps must be at least 1");
  if (!(gamma >= 0.0 && gamma <= 1.0)) fail("gamma must lie in [0, 1]");
  if (!(q_lr > 0.0) || !(actor_lr > 0.0) || !(critic_lr > 0.0)) fail("learning rates must be positive");
  if (!(epsilon_decay > 0.0 && epsilon_decay <= 1.0)) fail("epsilon_decay must lie in (0, 1]");
  if (!(epsilon_floor >= 0.0 && epsilon_floor <= 1.0)) fail("epsilon_floor must lie in [0, 1]");
  if (hidden < 1) fail("hidden must be at least 1");
  if (workers < 1) fail("workers must be at least 1");
  if (!(reward_scale > 0.0)) fail("reward_scale must be positive");
  if (output.empty()) fail("output must not be empty");
}

ScenarioParams RunConfig::scenario_params() const {
  ScenarioParams p;
  p.tx_positions = tx_positions;
  if (tx_boresights_deg)
    for (double d : *tx_boresights_deg) p.tx_boresights.push_back(deg_to_rad(d));
  p.field_bounds = {field_x, field_y};
  p.receivers = receivers;
  p.rx_positions = rx_positions;
  p.array = ArrayConfig{elements, spacing_phase, carrier_hz};
  p.codes = codes;
  p.code_range = deg_to_rad(code_range_deg);
  if (code_center_deg) p.code_center = deg_to_rad(*code_center_deg);
  return p;
}

EnvParams RunConfig::env_params() const { return EnvParams{transfer_time, e_min, max_steps}; }

std::uint64_t RunConfig::effective_placement_seed() const {
  return placement_seed.value_or(derive_seed(seed, "placement"));
}

learn::TabularConfig RunConfig::tabular_config() const {
  return learn::TabularConfig{q_lr, gamma, learn::EpsilonSchedule{epsilon_decay, epsilon_floor}};
}

learn::ActorCriticConfig RunConfig::actor_critic_config() const {
  return learn::ActorCriticConfig{gamma, actor_lr, critic_lr, hidden, workers, shared_policy, reward_scale};
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line);
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key before '='", line);
    if (!seen.emplace(key).second) throw ConfigError("duplicate key '" + std::string(key) + "'", line);
    set_config_key(cfg, key, value, line);
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  return parse_config(in);
}

void write_config(std::ostream& out, const RunConfig& c) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  out << "agent = " << to_string(c.agent) << '\n'
      << "episodes = " << c.episodes << '\n'
      << "seed = " << c.seed << '\n'
      << "output = " << c.output << '\n'
      << "wall_clock = " << b(c.wall_clock) << '\n'
      << "enumeration_cap = " << c.enumeration_cap << '\n'
      << "tx_positions = " << fmt_points(c.tx_positions) << '\n'
      << "tx_boresights_deg = " << (c.tx_boresights_deg ? fmt_reals(*c.tx_boresights_deg) : "auto") << '\n'
      << "field_x = " << fmt(c.field_x) << '\n'
      << "field_y = " << fmt(c.field_y) << '\n'
      << "receivers = " << c.receivers << '\n'
      << "rx_positions = " << (c.rx_positions.empty() ? "random" : fmt_points(c.rx_positions)) << '\n'
      << "placement_seed = " << (c.placement_seed ? std::to_string(*c.placement_seed) : "auto") << '\n'
      << "resample_rx_per_episode = " << b(c.resample_rx_per_episode) << '\n'
      << "elements = " << c.elements << '\n'
      << "spacing_phase = " << fmt(c.spacing_phase) << '\n'
      << "carrier_hz = " << fmt(c.carrier_hz) << '\n'
      << "codes = " << c.codes << '\n'
      << "code_range_deg = " << fmt(c.code_range_deg) << '\n'
      << "code_center_deg = " << (c.code_center_deg ? fmt(*c.code_center_deg) : "auto") << '\n'
      << "transfer_time = " << fmt(c.transfer_time) << '\n'
      << "e_min = " << fmt(c.e_min) << '\n'
      << "max_steps = " << c.max_steps << '\n'
      << "gamma = " << fmt(c.gamma) << '\n'
      << "q_lr = " << fmt(c.q_lr) << '\n'
      << "actor_lr = " << fmt(c.actor_lr) << '\n'
      << "critic_lr = " << fmt(c.critic_lr) << '\n'
      << "epsilon_decay = " << fmt(c.epsilon_decay) << '\n'
      << "epsilon_floor = " << fmt(c.epsilon_floor) << '\n'
      << "hidden = " << c.hidden << '\n'
      << "workers = " << c.workers << '\n'
      << "shared_policy = " << b(c.shared_policy) << '\n'
      << "reward_scale = " << fmt(c.reward_scale) << '\n';
}

}  // namespace wpt
