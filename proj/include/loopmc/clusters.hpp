#pragma once

#include <vector>

#include "loopmc/params.hpp"
#include "loopmc/rung_config.hpp"

namespace loopmc {

// Connected regions of the box complement of the loops.  Every region lies in
// a single column slab (the strip between two neighbouring lines) or in the
// outer region.  A rung at (c, t) cuts slab c at time t and opens a corridor
// joining the two flanking slabs c-1 and c+1 (same sublattice as each other).
// On capped boxes the outer region is a single wired node reached through the
// open top/bottom ends of the uncapped columns and through rungs on the edge
// columns; on a time-periodic cylinder the outer region splits into a left
// and a right strip; on the torus there is no outer region.
struct ClusterDecomposition {
  SpaceTimeBox box;
  std::vector<std::vector<double>> cuts;          // own rung times per column
  std::vector<std::vector<int>> interval_cluster; // cluster id per interval
  int outside_cluster = -1;     // capped boxes
  int left_strip_cluster = -1;  // time-periodic open chain
  int right_strip_cluster = -1;
  int n_A = 0;
  int n_B = 0;
  int n_clusters() const { return n_A + n_B; }

  // Sublattice of the outer region(s): the one the column (L, L+1) would
  // carry if the pattern continued.
  ColumnType outside_type() const {
    return (box.L % 2 == 0) ? ColumnType::A : ColumnType::B;
  }

  int interval_index(int c, double t) const;
  int cluster_at_column(int c, double t) const;
  // Dual coordinates: x strictly between neighbouring sites maps to that
  // column's slab; x beyond the chain ends maps to the outer region(s).
  int cluster_at(double x, double t) const;
  bool touches_outside(int c, double t) const;
};

ClusterDecomposition decompose_clusters(const SpaceTimeBox& box,
                                        const RungConfiguration& cfg);

// Free clusters of one sublattice restricted to a space-time window: nodes
// are the in-window intervals of same-type columns cut at their own in-window
// rung times; a rung on an opposite-type column bridges the two flanking
// columns when both lie inside the window.  No outer node, no caps, no time
// wrap: everything beyond the window acts as a free boundary.
struct WindowSpec {
  int c_lo = 0;
  int c_hi = 0;  // inclusive column range
  double t_lo = 0;
  double t_hi = 0;
};

struct WindowClusters {
  WindowSpec win;
  ColumnType type = ColumnType::A;
  std::vector<std::vector<double>> cuts;  // per box column; empty if not ours
  std::vector<std::vector<int>> ids;
  int n_clusters = 0;

  // -1 when the column is outside the window or of the other sublattice.
  int cluster_at(int column, double t) const;
  bool connected(int c1, double t1, int c2, double t2) const;
};

WindowClusters window_clusters(const SpaceTimeBox& box,
                               const RungConfiguration& cfg,
                               const WindowSpec& win, ColumnType type);

}  // namespace loopmc
