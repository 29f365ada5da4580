#include "doctest.h"

#include <cstdlib>

#include "hcyl/config.hpp"
#include "hcyl/error.hpp"
#include "hcyl/interval.hpp"

using namespace hcyl;

TEST_CASE("defaults validate") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.precision == 128);
}

TEST_CASE("invalid settings") {
  RunConfig c;
  c.precision = 100;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c.precision = 1L << 17;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = RunConfig{};
  c.deg = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = RunConfig{};
  c.knots.max_coeff = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("environment overrides precision") {
  RunConfig c;
  c.precision = 256;
  ::setenv("HCYL_PRECISION", "512", 1);
  c.apply();
  CHECK(c.precision == 512);
  CHECK(default_precision() == 512);
  ::setenv("HCYL_PRECISION", "abc", 1);
  CHECK_THROWS_AS(c.apply(), ValidationError);
  ::setenv("HCYL_PRECISION", "96", 1);
  CHECK_THROWS_AS(c.apply(), ValidationError);
  ::unsetenv("HCYL_PRECISION");
  c.precision = 128;
  c.apply();
  CHECK(default_precision() == 128);
}
