#include "loopmc/rung_config.hpp"

#include <algorithm>
#include <cassert>

namespace loopmc {

bool RungConfiguration::insert(int c, double t) {
  auto& v = times_[c];
  auto it = std::lower_bound(v.begin(), v.end(), t);
  if (it != v.end() && *it == t) return false;
  v.insert(it, t);
  ++total_;
  return true;
}

void RungConfiguration::erase(int c, int index_in_column) {
  auto& v = times_[c];
  assert(index_in_column >= 0 && index_in_column < static_cast<int>(v.size()));
  v.erase(v.begin() + index_in_column);
  --total_;
}

void RungConfiguration::erase_time(int c, double t) {
  auto& v = times_[c];
  auto it = std::lower_bound(v.begin(), v.end(), t);
  if (it == v.end() || *it != t)
    throw OutOfRange("erase_time: no rung at this (column, time)");
  v.erase(it);
  --total_;
}

bool RungConfiguration::contains(int c, double t) const {
  const auto& v = times_[c];
  auto it = std::lower_bound(v.begin(), v.end(), t);
  return it != v.end() && *it == t;
}

Rung RungConfiguration::nth(int flat_index) const {
  assert(flat_index >= 0 && flat_index < total_);
  for (int c = 0; c < n_columns(); ++c) {
    int k = static_cast<int>(times_[c].size());
    if (flat_index < k) return Rung{c, times_[c][flat_index]};
    flat_index -= k;
  }
  assert(false && "flat index out of range");
  return Rung{};
}

std::vector<Rung> RungConfiguration::all() const {
  std::vector<Rung> out;
  out.reserve(total_);
  for (int c = 0; c < n_columns(); ++c)
    for (double t : times_[c]) out.push_back(Rung{c, t});
  return out;
}

void RungConfiguration::clear() {
  for (auto& v : times_) v.clear();
  total_ = 0;
}

}  // namespace loopmc
