#include "loopmc/sampler.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace loopmc {

ChainState::ChainState(const ModelParams& p, std::uint64_t master_seed,
                       std::uint64_t chain_index)
    : params_(p),
      box_(make_box(p)),
      cfg_(box_.n_columns()),
      sweep_rng_(master_seed, chain_index, StreamPurpose::Sweep),
      orient_rng_(master_seed, chain_index, StreamPurpose::Orientation),
      master_seed_(master_seed),
      chain_index_(chain_index),
      q_is_one_(std::abs(p.sqrt_q - 1.0) < 1e-12) {}

void ChainState::init_empty() {
  cfg_.clear();
  dec_dirty_ = true;
}

void ChainState::init_poisson() {
  cfg_.clear();
  RngStream init_rng(master_seed_, chain_index_, StreamPurpose::Init);
  for (int c = 0; c < box_.n_columns(); ++c) {
    const long n = init_rng.poisson(box_.beta);
    for (long k = 0; k < n; ++k) {
      double t;
      do {
        t = init_rng.uniform(box_.t_lo(), box_.t_hi());
      } while (!cfg_.insert(c, t));
    }
  }
  dec_dirty_ = true;
}

void ChainState::sweep() {
  const double V = box_.total_intensity();
  const long n_props = static_cast<long>(std::ceil(V));
  for (long k = 0; k < n_props; ++k) {
    ++proposals;
    if (sweep_rng_.uniform01() < 0.5) {
      const int c = static_cast<int>(sweep_rng_.uniform_int(box_.n_columns()));
      double t;
      do {
        t = sweep_rng_.uniform(box_.t_lo(), box_.t_hi());
      } while (cfg_.contains(c, t));
      int dn = 0;
      double weight = 1.0;
      if (!q_is_one_) {
        dn = delta_n_insert_walk(box_, cfg_, c, t);
        weight = std::pow(params_.sqrt_q, dn);
      }
      const double acc = V / (cfg_.total() + 1.0) * weight;
      if (acc >= 1.0 || sweep_rng_.uniform01() < acc) {
        cfg_.insert(c, t);
        dec_dirty_ = true;
        ++accepted_births;
        if (!q_is_one_) ++insert_delta_tally[dn + 1];
      }
    } else {
      const int n = cfg_.total();
      if (n == 0) continue;  // death from the empty state: rejected proposal
      const Rung r = cfg_.nth(static_cast<int>(sweep_rng_.uniform_int(n)));
      int dn = 0;
      double weight = 1.0;
      if (!q_is_one_) {
        dn = delta_n_erase_walk(box_, cfg_, r.column, r.t);
        weight = std::pow(params_.sqrt_q, dn);
      }
      const double acc = n / V * weight;
      if (acc >= 1.0 || sweep_rng_.uniform01() < acc) {
        cfg_.erase_time(r.column, r.t);
        dec_dirty_ = true;
        ++accepted_deaths;
        if (!q_is_one_) ++erase_delta_tally[dn + 1];
      }
    }
  }
  ++sweeps_done_;
}

const LoopDecomposition& ChainState::decomposition() {
  if (dec_dirty_) {
    dec_ = decompose(box_, cfg_);
    dec_dirty_ = false;
  }
  return dec_;
}

OrientedConfiguration ChainState::orientation() {
  return sample_orientations(decomposition(), params_.lam(), orient_rng_);
}

void ChainState::save(std::ostream& os) const {
  os << "loopmc-checkpoint 1\n";
  os << std::setprecision(17);
  os << "L " << params_.L << "\n";
  os << "beta " << params_.beta << "\n";
  os << "bc " << bc_name(params_.bc) << "\n";
  os << "Q " << params_.Q << "\n";
  if (params_.has_xxz)
    os << "lambda " << params_.lambda << "\n";
  else
    os << "lambda none\n";
  os << "seed " << master_seed_ << "\n";
  os << "chain " << chain_index_ << "\n";
  os << "sweeps " << sweeps_done_ << "\n";
  os << "proposals " << proposals << "\n";
  os << "births " << accepted_births << "\n";
  os << "deaths " << accepted_deaths << "\n";
  os << "itally " << insert_delta_tally[0] << " " << insert_delta_tally[1]
     << " " << insert_delta_tally[2] << "\n";
  os << "etally " << erase_delta_tally[0] << " " << erase_delta_tally[1] << " "
     << erase_delta_tally[2] << "\n";
  os << "columns " << cfg_.n_columns() << "\n";
  for (int c = 0; c < cfg_.n_columns(); ++c) {
    os << "col " << cfg_.column(c).size();
    for (double t : cfg_.column(c)) os << " " << t;
    os << "\n";
  }
  os << "sweeprng ";
  sweep_rng_.save_state(os);
  os << "\norientrng ";
  orient_rng_.save_state(os);
  os << "\nend\n";
}

namespace {

std::string expect_key(std::istream& is, const std::string& key) {
  std::string k;
  if (!(is >> k) || k != key)
    throw IoError("checkpoint: expected field '" + key + "'");
  return k;
}

}  // namespace

ChainState ChainState::load(std::istream& is) {
  std::string magic, version;
  if (!(is >> magic >> version) || magic != "loopmc-checkpoint" ||
      version != "1")
    throw IoError("checkpoint: bad header");

  int L;
  double beta, Q;
  std::string bcs, lam_s;
  expect_key(is, "L");
  is >> L;
  expect_key(is, "beta");
  is >> beta;
  expect_key(is, "bc");
  is >> bcs;
  expect_key(is, "Q");
  is >> Q;
  expect_key(is, "lambda");
  is >> lam_s;

  ParamInput in;
  in.Q = Q;
  if (lam_s != "none") in.lambda = std::stod(lam_s);
  const ModelParams p = normalize_params(in, L, beta, bc_from_name(bcs));

  std::uint64_t seed, chain;
  expect_key(is, "seed");
  is >> seed;
  expect_key(is, "chain");
  is >> chain;

  ChainState st(p, seed, chain);
  expect_key(is, "sweeps");
  is >> st.sweeps_done_;
  expect_key(is, "proposals");
  is >> st.proposals;
  expect_key(is, "births");
  is >> st.accepted_births;
  expect_key(is, "deaths");
  is >> st.accepted_deaths;
  expect_key(is, "itally");
  is >> st.insert_delta_tally[0] >> st.insert_delta_tally[1] >>
      st.insert_delta_tally[2];
  expect_key(is, "etally");
  is >> st.erase_delta_tally[0] >> st.erase_delta_tally[1] >>
      st.erase_delta_tally[2];

  int n_cols;
  expect_key(is, "columns");
  is >> n_cols;
  if (n_cols != st.box_.n_columns())
    throw IoError("checkpoint: column count does not match geometry");
  for (int c = 0; c < n_cols; ++c) {
    expect_key(is, "col");
    std::size_t n;
    is >> n;
    for (std::size_t k = 0; k < n; ++k) {
      double t;
      is >> t;
      if (!st.cfg_.insert(c, t))
        throw IoError("checkpoint: duplicate rung time");
    }
  }
  expect_key(is, "sweeprng");
  st.sweep_rng_.load_state(is);
  expect_key(is, "orientrng");
  st.orient_rng_.load_state(is);
  expect_key(is, "end");
  if (!is) throw IoError("checkpoint: truncated stream");
  st.dec_dirty_ = true;
  return st;
}

void RunSchedule::validate() const {
  if (burnin_sweeps < 0) throw ConfigError("burnin must be >= 0");
  if (measure_sweeps <= 0) throw ConfigError("measure sweeps must be > 0");
  if (thinning < 1) throw ConfigError("thinning must be >= 1");
  if (batches < 10) throw ConfigError("need at least 10 batches");
  if (measure_sweeps % (static_cast<long>(thinning) * batches) != 0)
    throw ConfigError(
        "measure sweeps must be divisible by thinning * batches");
}

BatchStats batch_statistics(const std::vector<double>& samples, int batches) {
  BatchStats st;
  const long n = static_cast<long>(samples.size());
  if (batches < 2 || n < batches || n % batches != 0)
    throw InsufficientData("batch_statistics: need n divisible by batches");
  st.n_samples = n;
  const long per = n / batches;

  double grand = 0;
  for (double x : samples) grand += x;
  grand /= n;
  st.mean = grand;

  double s2 = 0;
  for (double x : samples) s2 += (x - grand) * (x - grand);
  s2 /= (n - 1);

  double bvar = 0;
  for (int b = 0; b < batches; ++b) {
    double m = 0;
    for (long k = b * per; k < (b + 1) * per; ++k) m += samples[k];
    m /= per;
    bvar += (m - grand) * (m - grand);
  }
  bvar /= (batches - 1);
  const double var_mean = bvar / batches;

  if (s2 <= 0 || var_mean <= 0) {
    st.stderr_mean = 0;
    st.n_eff = static_cast<double>(n);
    st.tau_int = 0.5;
    return st;
  }
  st.stderr_mean = std::sqrt(var_mean);
  st.n_eff = s2 / var_mean;
  st.tau_int = std::max(0.5, n * var_mean / (2.0 * s2));
  return st;
}

}  // namespace loopmc
