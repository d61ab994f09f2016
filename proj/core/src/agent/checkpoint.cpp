#include "bsc/agent/checkpoint.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bsc/util/errors.hpp"

namespace bsc {

std::uint64_t config_fingerprint(const std::string& canonical) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

void write_doubles(std::ofstream& out, const char* name, const std::vector<double>& xs) {
  out << name << ' ' << xs.size() << '\n';
  char buf[40];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%a", xs[i]);
    out << buf << ((i % 4 == 3 || i + 1 == xs.size()) ? '\n' : ' ');
  }
}

std::vector<double> read_doubles(std::istream& in, const std::string& expect) {
  std::string name;
  std::size_t n = 0;
  if (!(in >> name >> n) || name != expect)
    throw ConfigError("checkpoint: expected section '" + expect + "', got '" + name + "'");
  std::vector<double> xs(n);
  std::string tok;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(in >> tok)) throw ConfigError("checkpoint: truncated section '" + expect + "'");
    char* end = nullptr;
    xs[i] = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str()) throw ConfigError("checkpoint: bad number in '" + expect + "'");
  }
  return xs;
}

void write_dims(std::ofstream& out, const char* name, const std::vector<int>& dims) {
  out << name << ' ' << dims.size();
  for (int d : dims) out << ' ' << d;
  out << '\n';
}

std::vector<int> read_dims(std::istream& in, const std::string& expect) {
  std::string name;
  std::size_t n = 0;
  if (!(in >> name >> n) || name != expect)
    throw ConfigError("checkpoint: expected section '" + expect + "'");
  std::vector<int> dims(n);
  for (auto& d : dims)
    if (!(in >> d)) throw ConfigError("checkpoint: truncated dims");
  return dims;
}

}  // namespace

void AgentCheckpoint::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write checkpoint: " + path);
  out << "bsc-checkpoint " << version << '\n';
  out << "config_hash " << config_hash << '\n';
  out << "step " << step << '\n';
  out << "adam_t " << adam_t << '\n';
  write_dims(out, "policy_dims", policy_dims);
  write_dims(out, "value_dims", value_dims);
  write_doubles(out, "policy_params", policy_params);
  write_doubles(out, "value_params", value_params);
  write_doubles(out, "policy_m", policy_m);
  write_doubles(out, "policy_v", policy_v);
  write_doubles(out, "value_m", value_m);
  write_doubles(out, "value_v", value_v);
}

AgentCheckpoint AgentCheckpoint::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open checkpoint: " + path);
  AgentCheckpoint c;
  std::string magic;
  if (!(in >> magic >> c.version) || magic != "bsc-checkpoint")
    throw ConfigError(path + ": not a checkpoint file");
  if (c.version != 1)
    throw ConfigError(path + ": unsupported checkpoint version " + std::to_string(c.version));
  std::string key;
  if (!(in >> key >> c.config_hash) || key != "config_hash")
    throw ConfigError(path + ": missing config_hash");
  if (!(in >> key >> c.step) || key != "step") throw ConfigError(path + ": missing step");
  if (!(in >> key >> c.adam_t) || key != "adam_t") throw ConfigError(path + ": missing adam_t");
  c.policy_dims = read_dims(in, "policy_dims");
  c.value_dims = read_dims(in, "value_dims");
  c.policy_params = read_doubles(in, "policy_params");
  c.value_params = read_doubles(in, "value_params");
  c.policy_m = read_doubles(in, "policy_m");
  c.policy_v = read_doubles(in, "policy_v");
  c.value_m = read_doubles(in, "value_m");
  c.value_v = read_doubles(in, "value_v");
  return c;
}

AgentCheckpoint AgentCheckpoint::from_result(const TrainResult& result, std::uint64_t config_hash,
                                             bool best) {
  AgentCheckpoint c;
  c.config_hash = config_hash;
  c.policy_dims = result.policy_dims;
  c.value_dims = result.value_dims;
  if (best) {
    c.step = result.best_step;
    c.policy_params = result.best_policy;
    c.value_params = result.best_value;
  } else {
    c.step = result.steps_done;
    c.adam_t = result.adam_t;
    c.policy_params = result.last_policy;
    c.value_params = result.last_value;
    c.policy_m = result.policy_m;
    c.policy_v = result.policy_v;
    c.value_m = result.value_m;
    c.value_v = result.value_v;
  }
  return c;
}

}  // namespace bsc
