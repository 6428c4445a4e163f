#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "loopmc/params.hpp"
#include "loopmc/rung_config.hpp"

namespace loopmc::testutil {

// Independent loop counter: port-graph union-find over line segments, no
// tracing, no directions.  Used to cross-check the walk-based decomposition.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }
  int n_classes() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }

 private:
  std::vector<int> parent_;
};

inline int brute_force_loop_count(const SpaceTimeBox& box,
                                  const RungConfiguration& cfg) {
  const int n_lines = box.n_lines();
  const bool per = box.time_periodic();
  // per-line sorted event times
  std::vector<std::vector<double>> events(n_lines);
  for (int c = 0; c < box.n_columns(); ++c) {
    const int a = box.line_of_site(box.column_lower_site(c));
    const int b = box.line_of_site(box.column_upper_site(c));
    for (double t : cfg.column(c)) {
      events[a].push_back(t);
      events[b].push_back(t);
    }
  }
  std::vector<int> base(n_lines + 1, 0);
  for (int li = 0; li < n_lines; ++li) {
    std::sort(events[li].begin(), events[li].end());
    const int k = static_cast<int>(events[li].size());
    base[li + 1] = base[li] + (per ? std::max(k, 1) : k + 1);
  }
  UnionFind uf(base[n_lines]);

  auto seg_below = [&](int li, double t) {
    const auto& ev = events[li];
    const int k = static_cast<int>(ev.size());
    const int pos = static_cast<int>(
        std::lower_bound(ev.begin(), ev.end(), t) - ev.begin());
    if (!per) return base[li] + pos;           // segment pos ends at ev[pos]
    return base[li] + (pos - 1 + k) % k;       // cyclic
  };
  auto seg_above = [&](int li, double t) {
    const auto& ev = events[li];
    const int k = static_cast<int>(ev.size());
    const int pos = static_cast<int>(
        std::lower_bound(ev.begin(), ev.end(), t) - ev.begin());
    if (!per) return base[li] + pos + 1;
    return base[li] + pos % k;
  };

  for (int c = 0; c < box.n_columns(); ++c) {
    const int a = box.line_of_site(box.column_lower_site(c));
    const int b = box.line_of_site(box.column_upper_site(c));
    for (double t : cfg.column(c)) {
      uf.unite(seg_below(a, t), seg_below(b, t));
      uf.unite(seg_above(a, t), seg_above(b, t));
    }
  }
  if (!per) {
    for (int li = 0; li < n_lines; ++li) {
      const int pa = box.cap_partner_line(li);
      uf.unite(base[li], base[pa]);                  // bottom caps
      uf.unite(base[li + 1] - 1, base[pa + 1] - 1);  // top caps
    }
  }
  return uf.n_classes();
}

// Random configuration with Poisson(intensity * beta) rungs per column.
inline RungConfiguration random_config(const SpaceTimeBox& box,
                                       std::mt19937& gen, double intensity) {
  RungConfiguration cfg(box.n_columns());
  std::poisson_distribution<int> pois(intensity * box.beta);
  std::uniform_real_distribution<double> uni(box.t_lo(), box.t_hi());
  for (int c = 0; c < box.n_columns(); ++c) {
    const int n = pois(gen);
    for (int i = 0; i < n; ++i)
      while (!cfg.insert(c, uni(gen))) {
      }
  }
  return cfg;
}

}  // namespace loopmc::testutil
