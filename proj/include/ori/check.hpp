#pragma once

#include <stdexcept>
#include <string>

namespace ori {

struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// Always-on invariant check (assert would vanish under NDEBUG).
#define ORI_CHECK(cond, msg)                                        \
  do {                                                              \
    if (!(cond)) throw ::ori::InvariantError(std::string(msg));     \
  } while (0)

}  // namespace ori
