#include "loopmc/clusters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace loopmc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int interval_of(const std::vector<double>& cuts, double t, bool cyclic) {
  const int k = static_cast<int>(cuts.size());
  const int ub = static_cast<int>(
      std::upper_bound(cuts.begin(), cuts.end(), t) - cuts.begin());
  if (!cyclic) return ub;
  if (k == 0) return 0;
  return ub == 0 ? k - 1 : ub - 1;
}

int n_intervals_of(const std::vector<double>& cuts, bool cyclic) {
  const int k = static_cast<int>(cuts.size());
  return cyclic ? std::max(k, 1) : k + 1;
}

}  // namespace

int ClusterDecomposition::interval_index(int c, double t) const {
  return interval_of(cuts[c], t, box.time_periodic());
}

int ClusterDecomposition::cluster_at_column(int c, double t) const {
  if (c < 0 || c >= box.n_columns())
    throw OutOfRange("cluster_at_column: no such column");
  return interval_cluster[c][interval_index(c, t)];
}

int ClusterDecomposition::cluster_at(double x, double t) const {
  if (x < box.site_lo()) {
    if (box.space_periodic()) throw OutOfRange("cluster_at: x outside torus");
    return box.time_periodic() ? left_strip_cluster : outside_cluster;
  }
  if (x > box.site_hi()) {
    if (box.space_periodic()) throw OutOfRange("cluster_at: x outside torus");
    return box.time_periodic() ? right_strip_cluster : outside_cluster;
  }
  const double cf = x + box.L - 1.5;  // column whose midpoint is x
  const int c = static_cast<int>(std::lround(cf));
  if (std::abs(cf - c) > 0.25 || c < 0 || c >= 2 * box.L - 1)
    throw OutOfRange("cluster_at: x does not lie inside a column");
  return cluster_at_column(c, t);
}

bool ClusterDecomposition::touches_outside(int c, double t) const {
  if (outside_cluster < 0)
    throw NotApplicable("touches_outside: box has no wired outer region");
  return cluster_at_column(c, t) == outside_cluster;
}

ClusterDecomposition decompose_clusters(const SpaceTimeBox& box,
                                        const RungConfiguration& cfg) {
  if (cfg.n_columns() != box.n_columns())
    throw std::invalid_argument(
        "decompose_clusters: configuration/box column mismatch");

  ClusterDecomposition cd;
  cd.box = box;
  const int nc = box.n_columns();
  const bool cyclic = box.time_periodic();

  cd.cuts.resize(nc);
  for (int c = 0; c < nc; ++c) cd.cuts[c] = cfg.column(c);

  std::vector<int> offset(nc + 1, 0);
  for (int c = 0; c < nc; ++c)
    offset[c + 1] = offset[c] + n_intervals_of(cd.cuts[c], cyclic);
  int n_nodes = offset[nc];
  int outside_node = -1, left_node = -1, right_node = -1;
  if (box.bc == Bc::CappedAlternating) outside_node = n_nodes++;
  if (box.bc == Bc::PeriodicTime) {
    left_node = n_nodes++;
    right_node = n_nodes++;
  }

  UnionFind uf(n_nodes);

  // Open top/bottom ends of uncapped columns lead into the outer region.
  if (box.bc == Bc::CappedAlternating) {
    for (int c = 0; c < nc; ++c) {
      if (box.is_capped_column(c)) continue;
      uf.unite(outside_node, offset[c]);  // bottom interval
      uf.unite(outside_node, offset[c + 1] - 1);
    }
  }

  // Each rung bridges the slabs flanking its column.
  auto slab_node = [&](int c, double t) {
    return offset[c] + interval_of(cd.cuts[c], t, cyclic);
  };
  for (int c = 0; c < nc; ++c) {
    for (double t : cd.cuts[c]) {
      int ln, rn;
      if (box.space_periodic()) {
        ln = slab_node((c + nc - 1) % nc, t);
        rn = slab_node((c + 1) % nc, t);
      } else {
        if (c == 0)
          ln = box.time_periodic() ? left_node : outside_node;
        else
          ln = slab_node(c - 1, t);
        if (c == nc - 1)
          rn = box.time_periodic() ? right_node : outside_node;
        else
          rn = slab_node(c + 1, t);
      }
      uf.unite(ln, rn);
    }
  }

  // Compact cluster ids and per-sublattice counts.  A root's sublattice is
  // well defined: bridges only ever join regions of equal type.
  std::vector<int> id_of_root(n_nodes, -1);
  std::vector<ColumnType> type_of_node(n_nodes);
  for (int c = 0; c < nc; ++c)
    for (int i = offset[c]; i < offset[c + 1]; ++i)
      type_of_node[i] = box.column_type(c);
  for (int n : {outside_node, left_node, right_node})
    if (n >= 0) type_of_node[n] = cd.outside_type();

  int next_id = 0;
  for (int n = 0; n < n_nodes; ++n) {
    const int r = uf.find(n);
    if (id_of_root[r] == -1) {
      id_of_root[r] = next_id++;
      if (type_of_node[r] == ColumnType::A)
        ++cd.n_A;
      else
        ++cd.n_B;
    }
  }

  cd.interval_cluster.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const int ni = offset[c + 1] - offset[c];
    cd.interval_cluster[c].resize(ni);
    for (int i = 0; i < ni; ++i)
      cd.interval_cluster[c][i] = id_of_root[uf.find(offset[c] + i)];
  }
  if (outside_node >= 0)
    cd.outside_cluster = id_of_root[uf.find(outside_node)];
  if (left_node >= 0) cd.left_strip_cluster = id_of_root[uf.find(left_node)];
  if (right_node >= 0)
    cd.right_strip_cluster = id_of_root[uf.find(right_node)];
  return cd;
}

int WindowClusters::cluster_at(int column, double t) const {
  if (column < win.c_lo || column > win.c_hi) return -1;
  if (t < win.t_lo || t > win.t_hi) return -1;
  if (ids[column].empty()) return -1;  // other sublattice
  const int idx = static_cast<int>(
      std::upper_bound(cuts[column].begin(), cuts[column].end(), t) -
      cuts[column].begin());
  return ids[column][idx];
}

bool WindowClusters::connected(int c1, double t1, int c2, double t2) const {
  const int a = cluster_at(c1, t1);
  const int b = cluster_at(c2, t2);
  if (a < 0 || b < 0) throw OutOfRange("WindowClusters: point outside window");
  return a == b;
}

WindowClusters window_clusters(const SpaceTimeBox& box,
                               const RungConfiguration& cfg,
                               const WindowSpec& win, ColumnType type) {
  if (win.c_lo < 0 || win.c_hi >= box.n_columns() || win.c_lo > win.c_hi ||
      win.t_lo >= win.t_hi)
    throw OutOfRange("window_clusters: bad window");

  WindowClusters wc;
  wc.win = win;
  wc.type = type;
  wc.cuts.resize(box.n_columns());
  wc.ids.resize(box.n_columns());

  std::vector<int> offset(box.n_columns() + 1, 0);
  for (int c = 0; c < box.n_columns(); ++c) {
    offset[c + 1] = offset[c];
    if (c < win.c_lo || c > win.c_hi || box.column_type(c) != type) continue;
    for (double t : cfg.column(c))
      if (t >= win.t_lo && t <= win.t_hi) wc.cuts[c].push_back(t);
    offset[c + 1] += static_cast<int>(wc.cuts[c].size()) + 1;
  }
  UnionFind uf(offset[box.n_columns()]);

  for (int c = win.c_lo; c <= win.c_hi; ++c) {
    if (box.column_type(c) == type) continue;
    if (c - 1 < win.c_lo || c + 1 > win.c_hi) continue;
    for (double t : cfg.column(c)) {
      if (t < win.t_lo || t > win.t_hi) continue;
      auto node = [&](int cc) {
        return offset[cc] +
               static_cast<int>(std::upper_bound(wc.cuts[cc].begin(),
                                                 wc.cuts[cc].end(), t) -
                                wc.cuts[cc].begin());
      };
      uf.unite(node(c - 1), node(c + 1));
    }
  }

  std::vector<int> id_of_root(offset[box.n_columns()], -1);
  for (int c = 0; c < box.n_columns(); ++c) {
    const int ni = offset[c + 1] - offset[c];
    if (ni == 0) continue;
    wc.ids[c].resize(ni);
    for (int i = 0; i < ni; ++i) {
      const int r = uf.find(offset[c] + i);
      if (id_of_root[r] == -1) id_of_root[r] = wc.n_clusters++;
      wc.ids[c][i] = id_of_root[r];
    }
  }
  return wc;
}

}  // namespace loopmc
