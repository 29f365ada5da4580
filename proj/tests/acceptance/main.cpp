#include <cstdio>
#include <cstdlib>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  int failed = 0;
  hcyl::acceptance::run_all(seed, [&](const hcyl::acceptance::Result& r) {
    std::printf("%s criterion %d: %s (%.1fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  return failed == 0 ? 0 : 1;
}
