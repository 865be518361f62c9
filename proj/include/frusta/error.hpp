#pragma once

#include <stdexcept>
#include <string>

namespace frusta {

// Every recoverable failure in the library is reported as an Error with a
// human-readable message; verdict-style outcomes (a tiling that does not
// close, a congruence that does not exist) are return values, not errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frusta
