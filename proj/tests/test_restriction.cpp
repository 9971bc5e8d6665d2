#include <doctest.h>

#include "symj/sweep.hpp"

using namespace symj;

// When the full symmetric span anticommutes, its restriction to C = {sigma = +-1}
// should satisfy the +-1-oriented criterion on C.
TEST_SUITE("restriction") {

TEST_CASE("anticommutativity restricts to C") {
  SweepConfig cfg;
  cfg.max_order = 16;
  cfg.rings = {"z4", "z8", "z4xz4", "z4xz2", "dual-z4"};
  const auto recs = omp::evaluate(enumerate_instances(cfg), Mode::Classify, 4);
  std::size_t checked = 0, violations = 0;
  std::string first;
  for (const auto& r : recs) {
    if (!r.direct || r.c_is_kernel) continue;
    ++checked;
    if (r.gp14 != Gp14Tag::None) continue;
    if (violations++ == 0) first = record_to_json(r, Mode::Classify).dump();
  }
  MESSAGE("instances with direct = true and C != N: " << checked << ", violations: " << violations);
  CHECK(checked > 0);
  CHECK_MESSAGE(violations == 0, "first violation: " << first);
}

}  // TEST_SUITE
