// Inverts the sweep map on a small Dyck path and shows the intermediate
// diagrams.

#include <iostream>

#include "sweepmap/sweepmap.hpp"

int main() {
  using namespace sweepmap;

  const Path d{2, 0, 2, -3, 1, -2};
  const auto result = inv_osweep_traced(d, PermSchedule::reverse());

  std::cout << "path           " << d << '\n'
            << "minimal        " << result.minimal << '\n'
            << "balanced       " << result.vib.balanced << '\n'
            << "vib moves      " << result.vib.trace.moves.size() << '\n'
            << "preimage       " << result.preimage << '\n'
            << "sweep(preimage)" << ' ' << sweep(result.preimage) << '\n';
  std::cout << render_ascii(result.vib.balanced);
}
