#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "loopmc/loops.hpp"
#include "loopmc/params.hpp"
#include "loopmc/rng.hpp"
#include "loopmc/rung_config.hpp"

namespace loopmc {

// Birth/death Metropolis chain targeting the loop-weighted rung measure
//   mu(dw) ~ sqrt(Q)^(N_loops(w)) rho(dw),
// rho the unit-rate Poisson process on columns x [-beta/2, beta/2).  One
// sweep makes ceil(V) proposals, V = n_columns * beta; each proposal is a
// birth (uniform location, accept V/(n+1) * sqrt(Q)^dN) or a death (uniform
// rung, accept n/V * sqrt(Q)^dN) with equal probability.  dN comes from a
// local loop walk; at Q = 1 the walk is skipped since the weight is 1.
class ChainState {
 public:
  ChainState(const ModelParams& p, std::uint64_t master_seed,
             std::uint64_t chain_index);

  const ModelParams& params() const { return params_; }
  const SpaceTimeBox& box() const { return box_; }
  const RungConfiguration& config() const { return cfg_; }
  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t chain_index() const { return chain_index_; }
  long long sweeps_done() const { return sweeps_done_; }

  void init_empty();
  void init_poisson();  // draw from rho (stationary at Q = 1)
  void sweep();

  // Rebuilt on demand after accepted moves; valid until the next sweep.
  const LoopDecomposition& decomposition();
  // Fresh independent orientation of the current decomposition.
  OrientedConfiguration orientation();

  // Accepted-move tallies of the walk result dN (index dN + 1); unused at
  // Q = 1 where the walk is skipped.
  std::array<long long, 3> insert_delta_tally{{0, 0, 0}};
  std::array<long long, 3> erase_delta_tally{{0, 0, 0}};
  long long proposals = 0;
  long long accepted_births = 0;
  long long accepted_deaths = 0;

  void save(std::ostream& os) const;
  static ChainState load(std::istream& is);

 private:
  ModelParams params_;
  SpaceTimeBox box_;
  RungConfiguration cfg_;
  RngStream sweep_rng_;
  RngStream orient_rng_;
  std::uint64_t master_seed_;
  std::uint64_t chain_index_;
  long long sweeps_done_ = 0;
  bool q_is_one_;

  LoopDecomposition dec_;
  bool dec_dirty_ = true;
};

struct RunSchedule {
  long burnin_sweeps = 20000;
  long measure_sweeps = 100000;  // divisible by thinning * batches
  int thinning = 1;
  int batches = 100;
  void validate() const;
};

// Batch-means summary of a stationary series.
struct BatchStats {
  double mean = 0;
  double stderr_mean = 0;
  double n_eff = 0;
  double tau_int = 0.5;
  long n_samples = 0;
};

BatchStats batch_statistics(const std::vector<double>& samples, int batches);

}  // namespace loopmc
