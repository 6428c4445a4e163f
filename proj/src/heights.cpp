#include "loopmc/heights.hpp"

#include <cmath>
#include <stdexcept>

namespace loopmc {

namespace {

int dual_site(double x, int L) {
  const int u = static_cast<int>(std::lround(x - 0.5));
  if (std::abs(x - 0.5 - u) > 1e-9 || u < -L || u > L)
    throw OutOfRange("height: x must be a half-integer within the box");
  return u;
}

}  // namespace

int height_at(const OrientedConfiguration& oc, double x, double t) {
  const auto& box = oc.dec->box;
  if (box.bc != Bc::CappedAlternating)
    throw NotApplicable("height is single-valued only on capped boxes");
  const int u = dual_site(x, box.L);
  int h = 0;
  for (int n = box.site_lo(); n <= u; ++n) h += oc.tau(n, t);
  for (int n = box.site_lo(); n <= -1; ++n) h -= oc.tau(n, 0.0);
  return h;
}

int height_flux(const OrientedConfiguration& oc,
                const std::vector<std::pair<double, double>>& waypoints) {
  const auto& box = oc.dec->box;
  if (box.bc != Bc::CappedAlternating)
    throw NotApplicable("height is single-valued only on capped boxes");
  if (waypoints.size() < 2)
    throw std::invalid_argument("height_flux: need at least two waypoints");

  int h = 0;
  for (size_t i = 1; i < waypoints.size(); ++i) {
    const auto [x1, t1] = waypoints[i - 1];
    const auto [x2, t2] = waypoints[i];
    if (x1 == x2) {
      const double cf = x1 + box.L - 1.5;
      const int c = static_cast<int>(std::lround(cf));
      if (std::abs(cf - c) < 0.25 && c >= 0 && c <= 2 * box.L - 2) {
        const double lo = std::min(t1, t2), hi = std::max(t1, t2);
        for (double tr : oc.dec->config.column(c))
          if (lo <= tr && tr <= hi)
            throw PathBlocked("height_flux: vertical leg crosses a rung");
      }
    } else if (t1 == t2) {
      const int dir = x2 > x1 ? +1 : -1;
      const double lo = std::min(x1, x2), hi = std::max(x1, x2);
      const int n_lo = std::max(box.site_lo(),
                                static_cast<int>(std::ceil(lo + 0.5)));
      const int n_hi = std::min(box.site_hi(),
                                static_cast<int>(std::floor(hi - 0.5)));
      for (int n = n_lo; n <= n_hi; ++n) h += dir * oc.tau(n, t1);
    } else {
      throw std::invalid_argument("height_flux: path legs must be axis-aligned");
    }
  }
  return h;
}

}  // namespace loopmc
