#pragma once

#include <map>
#include <optional>
#include <string>

namespace bsc {

/// Flat key-value configuration with dotted keys ("battery.capacity_ah").
/// File format: one `key = value` per line, `#` comments, blank lines ignored.
class KvConfig {
 public:
  KvConfig() = default;

  static KvConfig from_file(const std::string& path);
  static KvConfig from_string(const std::string& text);

  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  void set(const std::string& key, const std::string& value);
  void set_num(const std::string& key, double value);
  void set_int(const std::string& key, long long value);

  /// `other` wins on conflicts.
  void merge(const KvConfig& other);

  /// Parses a single "key=value" override (CLI --set).
  void apply_override(const std::string& spec);

  std::string get_str(const std::string& key, const std::string& fallback) const;
  double get_num(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  std::string require_str(const std::string& key) const;
  double require_num(const std::string& key) const;

  /// Canonical dump, keys sorted, one `key = value` per line.
  std::string dump() const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::optional<std::string> lookup(const std::string& key) const;
  std::map<std::string, std::string> kv_;
};

}  // namespace bsc
