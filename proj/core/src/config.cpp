#include "hcyl/config.hpp"

#include <cstdlib>

#include "hcyl/error.hpp"
#include "hcyl/interval.hpp"

namespace hcyl {

void RunConfig::validate() const {
  if (deg < 1) throw ValidationError("--deg must be positive");
  if (depth < 2) throw ValidationError("--depth must be at least 2");
  if (precision < 2 || (precision & (precision - 1)) != 0)
    throw ValidationError("--precision must be a power of two");
  if (precision > kMaxPrecision) throw ValidationError("--precision exceeds " + std::to_string(kMaxPrecision));
  if (knots.max_torus < 3 || knots.max_support < 1 || knots.max_coeff < 1 || knots.first_exponent < 1)
    throw ValidationError("knot search bounds must be positive");
  if (tower_height < 0) throw ValidationError("tower height must be nonnegative");
}

void RunConfig::apply() {
  if (const char* env = std::getenv("HCYL_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') throw ValidationError("HCYL_PRECISION is not an integer");
    precision = v;
  }
  validate();
  set_default_precision(precision);
}

}  // namespace hcyl
