#pragma once

#include <cstdint>
#include <string>

#include "hcyl/knots.hpp"

namespace hcyl {

struct RunConfig {
  int deg = 6;             // Magnus degree cap
  int depth = 5;           // validation depth Q
  long precision = 128;    // starting interval precision, bits
  std::uint64_t seed = 1;
  KnotSearchBounds knots;
  int tower_height = 1;    // gamma search height
  std::string out;         // empty: stdout

  // Throws ValidationError on nonpositive caps or a precision that is not a power of two.
  void validate() const;
  // HCYL_PRECISION, when set, replaces `precision`; then installs it as the default.
  void apply();
};

}  // namespace hcyl
