#pragma once

#include <stdexcept>
#include <string>

namespace semmap {

// Thrown on any structural violation: invalid face data, polyhedrality
// failures, inadmissible cutting cycles, malformed input documents.
class MapError : public std::runtime_error {
public:
  explicit MapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace semmap
