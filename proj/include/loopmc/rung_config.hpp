#pragma once

#include <cstdint>
#include <vector>

#include "loopmc/params.hpp"

namespace loopmc {

struct Rung {
  int column = 0;
  double t = 0.0;
};

// Transversal rungs of one configuration, kept sorted by time per column.
// Times within a column are unique (duplicates are rejected at insertion;
// the sampler re-draws on collision).
class RungConfiguration {
 public:
  RungConfiguration() = default;
  explicit RungConfiguration(int n_columns) : times_(n_columns) {}

  int n_columns() const { return static_cast<int>(times_.size()); }
  int total() const { return total_; }
  const std::vector<double>& column(int c) const { return times_[c]; }

  // Returns false if a rung with this exact time already exists in the column.
  bool insert(int c, double t);
  void erase(int c, int index_in_column);
  // Removes the rung at exactly (c, t); throws OutOfRange if absent.
  void erase_time(int c, double t);
  bool contains(int c, double t) const;

  // Maps a flat index in [0, total()) to a rung, in (column, time) order.
  Rung nth(int flat_index) const;

  std::vector<Rung> all() const;
  void clear();

  bool operator==(const RungConfiguration& o) const {
    return times_ == o.times_;
  }

 private:
  std::vector<std::vector<double>> times_;
  int total_ = 0;
};

}  // namespace loopmc
