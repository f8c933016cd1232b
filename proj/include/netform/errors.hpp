#pragma once

#include <stdexcept>
#include <string>

namespace netform {

/// Raised when a run configuration is missing, malformed, or inconsistent.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a decision policy cannot produce a usable decision
/// (endpoint unreachable, retries exhausted, unparseable responses).
class PolicyError : public std::runtime_error {
public:
  explicit PolicyError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when external data (edge lists, attribute tables, artifacts,
/// decision logs) is malformed or fails integrity checks.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netform
