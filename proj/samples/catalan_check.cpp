// Runs the bijection check on classical Dyck paths for a few schedules.

#include <iostream>

#include "sweepmap/sweepmap.hpp"

int main() {
  using namespace sweepmap;

  int failures = 0;
  for (int n = 1; n <= 7; ++n) {
    const StepMultiset type({{1, n}, {-1, n}});
    for (const auto& schedule : {PermSchedule::reverse(), PermSchedule::identity(), PermSchedule::cycle()}) {
      const auto report = verify_bijection({type, FamilyKind::dyck}, schedule);
      std::cout << report.family << "  " << report.schedule << "  size " << report.size << "  "
                << (report.pass ? "pass" : "FAIL") << '\n';
      failures += report.pass ? 0 : 1;
    }
  }
  return failures == 0 ? 0 : 1;
}
