#pragma once

#include <utility>
#include <vector>

#include "loopmc/loops.hpp"

namespace loopmc {

// Height of the oriented configuration at the dual point (x, t) with
// x = u + 1/2, normalized by h(-1/2, 0) = 0.  Defined as the signed flux of
// tau across a dual path that leaves the box to the left at time 0, climbs
// outside, and re-enters at time t:
//   h(u+1/2, t) = sum_{n<=u} tau(n, t) - sum_{n<=-1} tau(n, 0).
// Only capped boxes carry a single-valued height.
int height_at(const OrientedConfiguration& oc, double x, double t);

// Same flux accumulated along an explicit axis-aligned dual path inside the
// box (waypoints share one coordinate leg by leg).  Crossing site n rightward
// adds +tau(n, t); vertical legs cross nothing but throw PathBlocked if a
// rung time on their slab falls inside the leg.
int height_flux(const OrientedConfiguration& oc,
                const std::vector<std::pair<double, double>>& waypoints);

}  // namespace loopmc
