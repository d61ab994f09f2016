#pragma once

#include <stdexcept>
#include <string>

namespace bsc {

/// Bad or inconsistent user configuration (files, keys, CLI values).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Violation of a simulation contract. These indicate caller bugs
/// (e.g. scheduling into the past, taking a masked action) and abort the run.
class SimError : public std::logic_error {
 public:
  explicit SimError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bsc
