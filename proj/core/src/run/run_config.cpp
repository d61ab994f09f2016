#include "bsc/run/run_config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bsc/agent/checkpoint.hpp"
#include "bsc/util/errors.hpp"

namespace bsc {

std::vector<std::pair<int, int>> load_fill_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open fill file: " + path);
  std::vector<std::pair<int, int>> fill;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (lineno == 1 && line == "sku,count") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ConfigError(path + " line " + std::to_string(lineno) + ": expected 'sku,count'");
    try {
      const int sku = std::stoi(line.substr(0, comma));
      const int count = std::stoi(line.substr(comma + 1));
      if (sku < 0 || count < 0) throw std::invalid_argument("negative");
      fill.emplace_back(sku, count);
    } catch (const std::exception&) {
      throw ConfigError(path + " line " + std::to_string(lineno) + ": bad 'sku,count' row");
    }
  }
  return fill;
}

void save_fill_file(const std::string& path, const std::vector<std::pair<int, int>>& fill) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write fill file: " + path);
  out << "sku,count\n";
  for (const auto& [sku, count] : fill) out << sku << ',' << count << '\n';
}

RunConfig RunConfig::load(const KvConfig& kv) {
  RunConfig rc;
  rc.raw = kv;
  rc.seed = static_cast<std::uint64_t>(kv.get_int("seed", 1));

  if (kv.has("layout.file")) {
    rc.layout = std::make_shared<WarehouseLayout>(WarehouseLayout::load_grid(kv.require_str("layout.file")));
  } else {
    PresetConfig pc;
    pc.width_cells = static_cast<int>(kv.get_int("layout.width_cells", 150));
    pc.depth_cells = static_cast<int>(kv.get_int("layout.depth_cells", 80));
    pc.cell_m = kv.get_num("layout.cell_m", 1.0);
    pc.input_docks = static_cast<int>(kv.get_int("layout.input_docks", 4));
    pc.output_docks = static_cast<int>(kv.get_int("layout.output_docks", 10));
    pc.stations = static_cast<int>(kv.get_int("layout.stations", 3));
    pc.lane_depth = static_cast<int>(kv.get_int("layout.lane_depth", 8));
    pc.corridor_every = static_cast<int>(kv.get_int("layout.corridor_every", 10));
    pc.amr_speed_mps = kv.get_num("layout.amr_speed_mps", 1.5);
    pc.handling_s = kv.get_num("layout.handling_s", 10.0);
    rc.layout = std::make_shared<WarehouseLayout>(WarehouseLayout::build_preset(pc));
  }
  rc.router = std::make_shared<Router>(*rc.layout);

  rc.battery.capacity_ah = kv.get_num("battery.capacity_ah", 52.0);
  rc.battery.draw_loaded_a = kv.get_num("battery.draw_loaded_a", 15.0);
  rc.battery.draw_unloaded_a = kv.get_num("battery.draw_unloaded_a", 10.0);
  rc.battery.full_charge_s = kv.get_num("battery.full_charge_s", 1800.0);
  if (rc.battery.capacity_ah <= 0 || rc.battery.draw_loaded_a <= 0 ||
      rc.battery.draw_unloaded_a <= 0 || rc.battery.full_charge_s <= 0)
    throw ConfigError("battery.*: all parameters must be positive");

  rc.num_amrs = static_cast<int>(kv.get_int("fleet.num_amrs", 40));
  if (rc.num_amrs < 1) throw ConfigError("fleet.num_amrs: need at least one AMR");
  rc.initial_battery_pct = kv.get_num("fleet.initial_battery_pct", 100.0);
  rc.cap_retrieval = static_cast<int>(kv.get_int("queues.retrieval_cap", 330));
  rc.cap_delivery = static_cast<int>(kv.get_int("queues.delivery_cap", 240));

  const std::string space = kv.get_str("rl.action_space", "full");
  if (space == "full") rc.action_space = ActionSpace::full();
  else if (space == "binary") rc.action_space = ActionSpace::binary();
  else throw ConfigError("rl.action_space: must be 'full' or 'binary'");

  rc.strategy.kind = strategy_kind_from_name(kv.get_str("strategy.kind", "fixed"));
  rc.strategy.th_lower = kv.get_num("strategy.th_lower", 20.0);
  rc.strategy.th_upper = kv.get_num("strategy.th_upper", 100.0);
  rc.strategy.th_interrupt = kv.get_num("strategy.th_interrupt", 50.0);
  rc.strategy.interrupt_enabled = kv.get_bool("strategy.interrupt", false);
  rc.strategy.validate();
  rc.checkpoint_path = kv.get_str("strategy.checkpoint", "");

  rc.reward.kind = reward_kind_from_name(kv.get_str("rl.reward", "queue"));
  rc.reward.st_cap_s = kv.get_num("rl.st_cap_s", 3600.0);
  rc.reward.composite_beta = kv.get_num("rl.composite_beta", 1.0);
  rc.reward.shaped_bonus = kv.get_num("rl.shaped_bonus", 1.0);
  rc.reward.shaped_penalty = kv.get_num("rl.shaped_penalty", 1.0);
  if (rc.reward.st_cap_s <= 0) throw ConfigError("rl.st_cap_s: must be positive");
  rc.reward.cap_retrieval = rc.cap_retrieval;
  rc.reward.cap_delivery = rc.cap_delivery;

  rc.caps.time_cap_s = kv.get_num("features.time_cap_s", 0.0);
  rc.caps.dist_cap_m = kv.get_num("features.dist_cap_m", 0.0);
  rc.caps.sku_count = static_cast<int>(kv.get_int("orders.sku_count", 20));
  rc.caps.fill_defaults(*rc.layout, rc.caps.sku_count);

  if (kv.has("fill.file")) {
    rc.initial_fill = load_fill_file(kv.require_str("fill.file"));
  } else if (kv.get_bool("orders.generate", false)) {
    ProfileParams pp;  // mirror load_orders(): generated runs reuse the profile's fill
    pp.weekly_orders = kv.get_num("orders.weekly", 31460.0);
    pp.retrieval_share = kv.get_num("orders.retrieval_share", 0.5);
    pp.sku_count = rc.caps.sku_count;
    pp.zipf_s = kv.get_num("orders.zipf_s", 1.0);
    pp.initial_fill_days = kv.get_num("orders.fill_days", 2.0);
    pp.capacity = rc.layout->storage_capacity();
    pp.input_docks = static_cast<int>(rc.layout->input_docks().size());
    pp.output_docks = static_cast<int>(rc.layout->output_docks().size());
    const ArrivalProfile prof = make_default_profile(pp);
    for (int s = 0; s < static_cast<int>(prof.initial_fill.size()); ++s)
      if (prof.initial_fill[s] > 0) rc.initial_fill.emplace_back(s, prof.initial_fill[s]);
  }
  return rc;
}

OrderStream RunConfig::load_orders() const {
  if (raw.has("orders.file")) return OrderStream::load(raw.require_str("orders.file"));
  if (!raw.get_bool("orders.generate", false))
    throw ConfigError("no order source: set orders.file or orders.generate = true");
  ProfileParams pp;
  pp.weekly_orders = raw.get_num("orders.weekly", 31460.0);
  pp.retrieval_share = raw.get_num("orders.retrieval_share", 0.5);
  pp.sku_count = caps.sku_count;
  pp.zipf_s = raw.get_num("orders.zipf_s", 1.0);
  pp.initial_fill_days = raw.get_num("orders.fill_days", 2.0);
  pp.capacity = layout->storage_capacity();
  pp.input_docks = static_cast<int>(layout->input_docks().size());
  pp.output_docks = static_cast<int>(layout->output_docks().size());
  const ArrivalProfile prof = make_default_profile(pp);
  const int weeks = static_cast<int>(raw.get_int("orders.weeks", 1));
  const std::uint64_t gen_seed = static_cast<std::uint64_t>(raw.get_int("orders.seed", static_cast<long long>(seed)));
  return generate(prof, weeks, gen_seed);
}

SimConfig RunConfig::sim_config(bool interrupt_enabled) const {
  SimConfig sc;
  sc.layout = layout;
  sc.router = router;
  sc.battery = battery;
  sc.num_amrs = num_amrs;
  sc.initial_battery_pct = initial_battery_pct;
  sc.action_space = action_space;
  sc.interrupt_enabled = interrupt_enabled;
  sc.interrupt_threshold_pct = strategy.th_interrupt;
  sc.cap_retrieval = cap_retrieval;
  sc.cap_delivery = cap_delivery;
  sc.initial_fill = initial_fill;
  return sc;
}

EnvConfig RunConfig::env_config(bool interrupt_enabled) const {
  EnvConfig ec;
  ec.sim = sim_config(interrupt_enabled);
  ec.reward = reward;
  ec.caps = caps;
  return ec;
}

std::string RunConfig::canonical_env_string() const {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "layout=%dx%d cell=%.17g speed=%.17g handling=%.17g capacity=%d docks=%zu/%zu "
                "stations=%zu amrs=%d battery=%.17g/%.17g/%.17g/%.17g caps=%.17g/%.17g/%d "
                "queues=%d/%d action=%s reward=%s st_cap=%.17g beta=%.17g shaped=%.17g/%.17g",
                layout->width(), layout->depth(), layout->cell_m(), layout->amr_speed_mps(),
                layout->handling_s(), layout->storage_capacity(), layout->input_docks().size(),
                layout->output_docks().size(), layout->stations().size(), num_amrs,
                battery.capacity_ah, battery.draw_loaded_a, battery.draw_unloaded_a,
                battery.full_charge_s, caps.time_cap_s, caps.dist_cap_m, caps.sku_count,
                cap_retrieval, cap_delivery, action_space.name().c_str(),
                reward_name(reward.kind), reward.st_cap_s, reward.composite_beta,
                reward.shaped_bonus, reward.shaped_penalty);
  return buf;
}

std::uint64_t RunConfig::env_hash() const { return config_fingerprint(canonical_env_string()); }

}  // namespace bsc
