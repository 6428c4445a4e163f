#pragma once

#include <iosfwd>
#include <vector>

#include "loopmc/params.hpp"
#include "loopmc/rng.hpp"
#include "loopmc/rung_config.hpp"

namespace loopmc {

struct LoopInfo {
  int n_segments = 0;
  // (left U-turns - right U-turns)/2 under the traced orientation.  A
  // contractible loop has turning +-1 (+1 = counterclockwise); a loop that
  // winds around a periodic direction has turning 0.
  int turning = 0;
  int winding_t = 0;  // net time-seam crossings under the traced orientation
  int winding_x = 0;  // net space-seam crossings
  bool winds() const { return winding_t != 0 || winding_x != 0; }
};

// Partition of the vertical lines into loops, induced by the rungs (each rung
// forces a U-turn pair) and the boundary condition (caps / identifications).
//
// Lines are cut into maximal vertical segments at the rung times of their two
// adjacent columns.  Segment conventions per line with k events:
//   capped       : k+1 segments, segment j spans (ev[j-1].t, ev[j].t) with
//                  sentinels at -beta/2 (bottom cap) and +beta/2 (top cap);
//   time-periodic: max(k,1) cyclic segments, segment j spans ev[j].t upward
//                  to ev[(j+1)%k].t (segment k-1 wraps the seam); a line with
//                  no events is a single winding segment.
struct LoopDecomposition {
  SpaceTimeBox box;
  RungConfiguration config;

  struct Event {
    double t;
    int column;
  };
  std::vector<std::vector<Event>> line_events;      // per line, sorted by t
  std::vector<std::vector<int>> seg_loop;           // loop id per segment
  std::vector<std::vector<signed char>> seg_dir;    // +1 if trace went up here
  std::vector<LoopInfo> loops;

  int n_loops() const { return static_cast<int>(loops.size()); }
  int n_segments_on_line(int li) const {
    return static_cast<int>(seg_loop[li].size());
  }

  int seg_index(int li, double t) const;
  int loop_at(int site, double t) const;
  signed char trace_dir_at(int site, double t) const;
  // Vertical direction at (site, t) of the orientation with turning number
  // +1 (the counterclockwise one); 0 for winding loops.
  signed char plus_dir_at(int site, double t) const;
};

LoopDecomposition decompose(const SpaceTimeBox& box,
                            const RungConfiguration& cfg);

bool same_loop(const LoopDecomposition& dec, int u, double tu, int v,
               double tv);

// Loop-count change if a rung were inserted at (column, t).  Equals
// decompose-after minus decompose-before: -1 when the endpoints lie on
// different loops (merge), +1 when they share a loop and the insertion splits
// it.  On capped boxes a shared loop always splits; on time-periodic boxes a
// shared loop can instead be rewired across the seam leaving the count
// unchanged (0).
int delta_n_if_insert(const LoopDecomposition& dec, int column, double t);

// Same quantities computed by a local loop walk on the raw rung structure,
// with no decomposition required.  Used by the sampler.
int delta_n_insert_walk(const SpaceTimeBox& box, const RungConfiguration& cfg,
                        int column, double t);
int delta_n_erase_walk(const SpaceTimeBox& box, const RungConfiguration& cfg,
                       int column, double t);

// Number of loops with winding number +-1 around the dual point (x, t)
// (ray crossing parity along t = const toward +infinity; loops that wind
// around a periodic direction encircle no point).
int encircling_count(const LoopDecomposition& dec, double x, double t);

// Independent orientation of every loop.  tau(site, t) = sigma[loop] *
// trace_dir; sigma is sampled so that the orientation with turning number +1
// carries weight e^{+lambda}:  P(sigma = +trace) =
// e^{lambda*turning} / (e^{lambda*turning} + e^{-lambda*turning}).
struct OrientedConfiguration {
  const LoopDecomposition* dec = nullptr;
  std::vector<signed char> sigma;  // per loop, relative to the traced sense

  int tau(int site, double t) const {
    int id = dec->loop_at(site, t);
    return sigma[id] * dec->trace_dir_at(site, t);
  }
};

OrientedConfiguration sample_orientations(const LoopDecomposition& dec,
                                          double lambda, RngStream& rng);

// Fixture-test dump: one line per segment, "loopId site t_lo t_hi".  On
// time-periodic boxes the segment through the seam prints t_lo > t_hi.
void dump_segments(const LoopDecomposition& dec, std::ostream& os);

}  // namespace loopmc
