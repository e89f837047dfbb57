#define DOCTEST_CONFIG_IMPLEMENT
#include <atomic>
#include <cstdio>

#include "doctest.h"
#include "resint/resolution.hpp"

// Every resolution built by a test is audited: d o d = 0, and for complete
// resolutions the alternating Betti sum equals the Hilbert numerator.
int main(int argc, char** argv) {
  static std::atomic<long> seen{0}, bad_dd{0}, bad_hilbert{0};
  resint::set_resolution_audit([](const resint::GradedModule& M, const resint::FreeResolution& res, bool complete) {
    ++seen;
    if (!resint::composes_to_zero(res)) ++bad_dd;
    if (complete && resint::betti_table(res).alternating_sum() != resint::module_hilbert(M).numerator) ++bad_hilbert;
  });
  doctest::Context ctx(argc, argv);
  const int rc = ctx.run();
  if (ctx.shouldExit()) return rc;
  std::printf("resolution audit: %ld resolutions, %ld with d o d != 0, %ld with Hilbert mismatch\n", seen.load(),
              bad_dd.load(), bad_hilbert.load());
  return rc != 0 || bad_dd || bad_hilbert ? 1 : rc;
}
