#include "bsc/util/kv_config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bsc/util/errors.hpp"

namespace bsc {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

KvConfig KvConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return from_string(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

KvConfig KvConfig::from_string(const std::string& text) {
  KvConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    cfg.kv_[key] = value;
  }
  return cfg;
}

void KvConfig::set(const std::string& key, const std::string& value) { kv_[key] = value; }

void KvConfig::set_num(const std::string& key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  kv_[key] = buf;
}

void KvConfig::set_int(const std::string& key, long long value) { kv_[key] = std::to_string(value); }

void KvConfig::merge(const KvConfig& other) {
  for (const auto& [k, v] : other.kv_) kv_[k] = v;
}

void KvConfig::apply_override(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override must be key=value, got '" + spec + "'");
  kv_[trim(spec.substr(0, eq))] = trim(spec.substr(eq + 1));
}

std::optional<std::string> KvConfig::lookup(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return std::nullopt;
  return it->second;
}

std::string KvConfig::get_str(const std::string& key, const std::string& fallback) const {
  return lookup(key).value_or(fallback);
}

double KvConfig::get_num(const std::string& key, double fallback) const {
  const auto v = lookup(key);
  if (!v) return fallback;
  char* end = nullptr;
  const double x = std::strtod(v->c_str(), &end);
  if (end == v->c_str() || *end != '\0')
    throw ConfigError("key '" + key + "': not a number: '" + *v + "'");
  return x;
}

long long KvConfig::get_int(const std::string& key, long long fallback) const {
  const auto v = lookup(key);
  if (!v) return fallback;
  char* end = nullptr;
  const long long x = std::strtoll(v->c_str(), &end, 10);
  if (end == v->c_str() || *end != '\0')
    throw ConfigError("key '" + key + "': not an integer: '" + *v + "'");
  return x;
}

bool KvConfig::get_bool(const std::string& key, bool fallback) const {
  const auto v = lookup(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "on" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "off" || *v == "0" || *v == "no") return false;
  throw ConfigError("key '" + key + "': not a boolean: '" + *v + "'");
}

std::string KvConfig::require_str(const std::string& key) const {
  const auto v = lookup(key);
  if (!v) throw ConfigError("missing required key '" + key + "'");
  return *v;
}

double KvConfig::require_num(const std::string& key) const {
  if (!has(key)) throw ConfigError("missing required key '" + key + "'");
  return get_num(key, 0.0);
}

std::string KvConfig::dump() const {
  std::string out;
  for (const auto& [k, v] : kv_) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace bsc
