#include "loopmc/loops.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace loopmc {

namespace {

struct Cursor {
  int li;
  int j;
  int dir;
  bool operator==(const Cursor& o) const {
    return li == o.li && j == o.j && dir == o.dir;
  }
};

}  // namespace

int LoopDecomposition::seg_index(int li, double t) const {
  const auto& ev = line_events[li];
  const int k = static_cast<int>(ev.size());
  auto ub = std::upper_bound(
      ev.begin(), ev.end(), t,
      [](double x, const Event& e) { return x < e.t; });
  const int u = static_cast<int>(ub - ev.begin());
  if (box.time_periodic()) {
    if (k == 0) return 0;
    return u == 0 ? k - 1 : u - 1;
  }
  return u;
}

int LoopDecomposition::loop_at(int site, double t) const {
  if (site < box.site_lo() || site > box.site_hi())
    throw OutOfRange("loop_at: site outside box");
  const int li = box.line_of_site(site);
  return seg_loop[li][seg_index(li, t)];
}

signed char LoopDecomposition::trace_dir_at(int site, double t) const {
  const int li = box.line_of_site(site);
  return seg_dir[li][seg_index(li, t)];
}

signed char LoopDecomposition::plus_dir_at(int site, double t) const {
  const int li = box.line_of_site(site);
  const int j = seg_index(li, t);
  const LoopInfo& info = loops[seg_loop[li][j]];
  if (info.turning == 0) return 0;
  return static_cast<signed char>(seg_dir[li][j] * info.turning);
}

LoopDecomposition decompose(const SpaceTimeBox& box,
                            const RungConfiguration& cfg) {
  if (cfg.n_columns() != box.n_columns())
    throw std::invalid_argument("decompose: configuration/box column mismatch");

  LoopDecomposition dec;
  dec.box = box;
  dec.config = cfg;

  const int n_lines = box.n_lines();
  dec.line_events.assign(n_lines, {});
  for (int c = 0; c < box.n_columns(); ++c) {
    for (double t : cfg.column(c)) {
      dec.line_events[box.line_of_site(box.column_lower_site(c))].push_back(
          {t, c});
      dec.line_events[box.line_of_site(box.column_upper_site(c))].push_back(
          {t, c});
    }
  }
  for (auto& ev : dec.line_events) {
    std::sort(ev.begin(), ev.end(),
              [](const LoopDecomposition::Event& a,
                 const LoopDecomposition::Event& b) { return a.t < b.t; });
    for (size_t i = 1; i < ev.size(); ++i)
      if (ev[i].t == ev[i - 1].t)
        throw std::invalid_argument(
            "decompose: two rungs share a time on one line");
  }

  dec.seg_loop.resize(n_lines);
  dec.seg_dir.resize(n_lines);
  for (int li = 0; li < n_lines; ++li) {
    const int k = static_cast<int>(dec.line_events[li].size());
    const int segs = box.time_periodic() ? std::max(k, 1) : k + 1;
    dec.seg_loop[li].assign(segs, -1);
    dec.seg_dir[li].assign(segs, 0);
  }

  auto event_count = [&](int li) {
    return static_cast<int>(dec.line_events[li].size());
  };
  auto idx_of_time = [&](int li, double t) {
    const auto& ev = dec.line_events[li];
    auto it = std::lower_bound(
        ev.begin(), ev.end(), t,
        [](const LoopDecomposition::Event& e, double x) { return e.t < x; });
    if (it == ev.end() || it->t != t)
      throw std::logic_error("decompose: inconsistent event tables");
    return static_cast<int>(it - ev.begin());
  };

  // One step of the loop trace: from segment (li, j) traversed in direction
  // dir, turn at the far end and land on the next segment.  Accumulates
  // turning and winding data of the current loop.
  auto advance = [&](Cursor cur, LoopInfo& info, int& half_turns) -> Cursor {
    const int li = cur.li, j = cur.j, dir = cur.dir;
    const int k = event_count(li);
    const int u = box.site_of_line(li);

    if (box.time_periodic() && (k == 0 || j == k - 1)) info.winding_t += dir;
    if (box.time_periodic() && k == 0) return cur;  // full-circle segment

    bool cap_top = false, cap_bottom = false;
    const LoopDecomposition::Event* e = nullptr;
    if (box.time_periodic()) {
      e = dir > 0 ? &dec.line_events[li][(j + 1) % k] : &dec.line_events[li][j];
    } else {
      if (dir > 0 && j == k)
        cap_top = true;
      else if (dir < 0 && j == 0)
        cap_bottom = true;
      else
        e = dir > 0 ? &dec.line_events[li][j] : &dec.line_events[li][j - 1];
    }

    if (cap_top || cap_bottom) {
      const int lp = box.cap_partner_line(li);
      const int h = box.site_of_line(lp) - u;
      half_turns += (dir * h < 0) ? +1 : -1;
      return {lp, cap_top ? event_count(lp) : 0, -dir};
    }

    const int c = e->column;
    const int v = (box.column_lower_site(c) == u) ? box.column_upper_site(c)
                                                  : box.column_lower_site(c);
    int h;
    if (box.space_periodic() && c == 2 * box.L - 1) {
      h = (u == box.site_hi()) ? +1 : -1;
      info.winding_x += h;
    } else {
      h = v - u;
    }
    half_turns += (dir * h < 0) ? +1 : -1;

    const int lp = box.line_of_site(v);
    const int idx = idx_of_time(lp, e->t);
    const int kp = event_count(lp);
    int jp;
    if (dir > 0)
      jp = box.time_periodic() ? (idx + kp - 1) % kp : idx;
    else
      jp = box.time_periodic() ? idx : idx + 1;
    return {lp, jp, -dir};
  };

  long total_segments = 0;
  for (int li = 0; li < n_lines; ++li) total_segments += dec.seg_loop[li].size();

  for (int li0 = 0; li0 < n_lines; ++li0) {
    for (int j0 = 0; j0 < static_cast<int>(dec.seg_loop[li0].size()); ++j0) {
      if (dec.seg_loop[li0][j0] != -1) continue;
      const int id = static_cast<int>(dec.loops.size());
      dec.loops.push_back({});
      LoopInfo& info = dec.loops.back();
      int half_turns = 0;

      Cursor start{li0, j0, +1};
      Cursor cur = start;
      long guard = total_segments + 2;
      do {
        if (--guard < 0)
          throw std::logic_error("decompose: loop trace failed to close");
        dec.seg_loop[cur.li][cur.j] = id;
        dec.seg_dir[cur.li][cur.j] = static_cast<signed char>(cur.dir);
        ++info.n_segments;
        cur = advance(cur, info, half_turns);
      } while (!(cur.li == start.li && cur.j == start.j));
      if (cur.dir != start.dir)
        throw std::logic_error("decompose: loop closed with reversed sense");

      if (half_turns % 2 != 0)
        throw std::logic_error("decompose: odd number of half-turns");
      info.turning = half_turns / 2;
      if (info.winds() ? info.turning != 0 : std::abs(info.turning) != 1)
        throw std::logic_error("decompose: turning/winding mismatch");
    }
  }
  return dec;
}

bool same_loop(const LoopDecomposition& dec, int u, double tu, int v,
               double tv) {
  return dec.loop_at(u, tu) == dec.loop_at(v, tv);
}

namespace {

// Which cut end at the probe time the upward walk from (start_site, t0)
// reaches first.
enum class Hit { StartUp, OtherUp, OtherDown };

Hit walk_from(const SpaceTimeBox& box, const RungConfiguration& cfg,
              int start_site, int other_site, double t0, int skip_column,
              double skip_t) {
  auto next_in_column = [&](int c, double from,
                            int dir) -> std::optional<double> {
    const auto& ts = cfg.column(c);
    if (dir > 0) {
      auto it = std::upper_bound(ts.begin(), ts.end(), from);
      if (c == skip_column && it != ts.end() && *it == skip_t) ++it;
      if (it == ts.end()) return std::nullopt;
      return *it;
    }
    auto it = std::lower_bound(ts.begin(), ts.end(), from);
    if (it == ts.begin()) return std::nullopt;
    --it;
    if (c == skip_column && *it == skip_t) {
      if (it == ts.begin()) return std::nullopt;
      --it;
    }
    return *it;
  };

  int u = start_site;
  double t = t0;
  int dir = +1;
  long guard = 4l * (cfg.total() + box.n_lines()) + 16;
  while (guard-- > 0) {
    const int lc = box.left_column_of_site(u);
    const int rc = box.right_column_of_site(u);
    std::optional<double> bl =
        lc >= 0 ? next_in_column(lc, t, dir) : std::nullopt;
    std::optional<double> br =
        rc >= 0 ? next_in_column(rc, t, dir) : std::nullopt;

    bool have = false;
    double et = 0;
    int ec = -1;
    if (bl) {
      et = *bl;
      ec = lc;
      have = true;
    }
    if (br && (!have || (dir > 0 ? *br < et : *br > et))) {
      et = *br;
      ec = rc;
      have = true;
    }

    const double reach = have ? et : (dir > 0 ? box.t_hi() : box.t_lo());
    const bool passes_t0 =
        dir > 0 ? (t < t0 && t0 < reach) : (reach < t0 && t0 < t);
    if (passes_t0) {
      if (u == start_site && dir > 0) return Hit::StartUp;
      if (u == other_site) return dir > 0 ? Hit::OtherUp : Hit::OtherDown;
    }

    if (!have) {
      if (box.time_periodic()) {
        t = dir > 0 ? box.t_lo() : box.t_hi();  // cross the time seam
      } else {
        const int lp = box.cap_partner_line(box.line_of_site(u));
        u = box.site_of_line(lp);
        t = reach;
        dir = -dir;
      }
      continue;
    }
    u = (box.column_lower_site(ec) == u) ? box.column_upper_site(ec)
                                         : box.column_lower_site(ec);
    t = et;
    dir = -dir;
  }
  throw std::logic_error("loop walk failed to terminate");
}

}  // namespace

int delta_n_insert_walk(const SpaceTimeBox& box, const RungConfiguration& cfg,
                        int column, double t) {
  const int lo = box.column_lower_site(column);
  const int hi = box.column_upper_site(column);
  switch (walk_from(box, cfg, lo, hi, t, -1, 0.0)) {
    case Hit::StartUp:
      return -1;  // endpoints on distinct loops: merge
    case Hit::OtherDown:
      return +1;  // same loop, the new rung splits it
    case Hit::OtherUp:
      return 0;  // same loop rewired across the time seam
  }
  return 0;  // unreachable
}

int delta_n_erase_walk(const SpaceTimeBox& box, const RungConfiguration& cfg,
                       int column, double t) {
  if (!cfg.contains(column, t))
    throw std::invalid_argument("delta_n_erase_walk: no such rung");
  const int lo = box.column_lower_site(column);
  const int hi = box.column_upper_site(column);
  switch (walk_from(box, cfg, lo, hi, t, column, t)) {
    case Hit::StartUp:
      return +1;  // sides joined only through the rung itself: removal splits
    case Hit::OtherDown:
      return -1;  // sides on loops that merge without the rung
    case Hit::OtherUp:
      return 0;
  }
  return 0;  // unreachable
}

int delta_n_if_insert(const LoopDecomposition& dec, int column, double t) {
  const auto& box = dec.box;
  const int lo = box.column_lower_site(column);
  const int hi = box.column_upper_site(column);
  if (dec.loop_at(lo, t) != dec.loop_at(hi, t)) return -1;
  if (!box.time_periodic()) return +1;
  return delta_n_insert_walk(box, dec.config, column, t);
}

int encircling_count(const LoopDecomposition& dec, double x, double t) {
  const auto& box = dec.box;
  double tt = t;
  for (int attempt = 0; attempt < 8; ++attempt) {
    bool collision = false;
    std::vector<int> crossings(dec.n_loops(), 0);
    for (int li = 0; li < box.n_lines() && !collision; ++li) {
      if (box.site_of_line(li) <= x) continue;
      for (const auto& e : dec.line_events[li])
        if (e.t == tt) collision = true;
      if (collision) break;
      crossings[dec.seg_loop[li][dec.seg_index(li, tt)]]++;
    }
    if (collision) {
      tt = t + std::ldexp(box.beta, -50) * (attempt + 1);
      continue;
    }
    int n = 0;
    for (int id = 0; id < dec.n_loops(); ++id)
      if (!dec.loops[id].winds() && (crossings[id] & 1)) ++n;
    return n;
  }
  throw std::logic_error("encircling_count: unresolved event-time collision");
}

OrientedConfiguration sample_orientations(const LoopDecomposition& dec,
                                          double lambda, RngStream& rng) {
  OrientedConfiguration oc;
  oc.dec = &dec;
  oc.sigma.resize(dec.n_loops());
  for (int id = 0; id < dec.n_loops(); ++id) {
    const int w = dec.loops[id].turning;
    const double p_keep = 1.0 / (1.0 + std::exp(-2.0 * lambda * w));
    oc.sigma[id] = static_cast<signed char>(rng.uniform01() < p_keep ? 1 : -1);
  }
  return oc;
}

void dump_segments(const LoopDecomposition& dec, std::ostream& os) {
  const SpaceTimeBox& box = dec.box;
  for (int li = 0; li < box.n_lines(); ++li) {
    const auto& evs = dec.line_events[li];
    const int k = static_cast<int>(evs.size());
    const int n_seg = dec.n_segments_on_line(li);
    for (int j = 0; j < n_seg; ++j) {
      double lo, hi;
      if (box.time_periodic()) {
        lo = (k == 0) ? box.t_lo() : evs[j].t;
        hi = (k == 0) ? box.t_hi() : evs[(j + 1) % k].t;
      } else {
        lo = (j == 0) ? box.t_lo() : evs[j - 1].t;
        hi = (j == k) ? box.t_hi() : evs[j].t;
      }
      os << dec.seg_loop[li][j] << ' ' << box.site_of_line(li) << ' ' << lo
         << ' ' << hi << '\n';
    }
  }
}

}  // namespace loopmc
