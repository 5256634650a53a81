#pragma once

#include <stdexcept>
#include <string>

namespace eulervol {

/* raised when a configured resource budget (hull point cap, Groebner pair or
   degree cap) is hit; distinct from invalid input or a failed verification */
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eulervol
