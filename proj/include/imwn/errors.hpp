#pragma once

#include <stdexcept>
#include <string>

namespace imwn {

// Rejected input: bad configuration value, malformed file, out-of-range argument.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The analytical and packet-level engines disagree, or a simulation invariant broke.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace imwn
