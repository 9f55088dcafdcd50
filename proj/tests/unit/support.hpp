#pragma once

#include <optional>

#include "suzuki/error.hpp"

namespace suzuki::testing {

// Error code thrown by fn, or nullopt when it returns normally.
template <class Fn>
std::optional<Errc> errc_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace suzuki::testing
