#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loopmc/clusters.hpp"
#include "loopmc/loops.hpp"
#include "loopmc/params.hpp"

namespace loopmc {

// Everything derived from one retained sample that an estimator may need.
// Orientation and clusters are only present when some observable asked.
struct SampleView {
  const LoopDecomposition* dec = nullptr;
  const OrientedConfiguration* orient = nullptr;
  const ClusterDecomposition* clusters = nullptr;
  const ModelParams* params = nullptr;
};

// A named per-sample estimator.  Conditional (Rao-Blackwellized) forms are
// used where the loop geometry determines the conditional expectation:
//   connectivity   P[(u,0) <-> (v,t)]            args u;v;t
//   spin_spin      (-1)^(u-v) C_S 1[conn]        args u;v;t   (C_S = S(S+1)/3)
//   dimer_order    1[(2n-1,0)<->(2n,0)] - 1[(2n,0)<->(2n+1,0)]   args n
//   stagg_mag_raw  (2L)^-1 sum_u (-1)^u tau(u,0)              (no args)
//   stagg_mag_rb   (2L)^-1 sum_u (-1)^u tanh(l) plus_dir(u,0) (no args)
//   boundary_mag   tau(u, 0) at a chain end, u in {-L+1, L}    args u
//   boundary_touch 1[the A-region holding the dual point (1/2,0) reaches the
//                  boundary of the centred nested box of column half-width
//                  ell and time half-height t]                 args ell;t
//   nesting_count  loops encircling the dual point              args x;t
//   rung_count     |w|                                          (no args)
//   corr_length    derived row: fitted xi from the translation-averaged
//                  connectivity curve p(r), r in [r_lo, r_hi]  args r_lo;r_hi
struct ObservableSpec {
  enum class Kind {
    Connectivity,
    SpinSpin,
    DimerOrder,
    StaggMagRaw,
    StaggMagRb,
    BoundaryMag,
    BoundaryTouch,
    NestingCount,
    RungCount,
    CorrLength
  };
  Kind kind = Kind::RungCount;
  int u = 0;
  int v = 0;
  int pair_index = 0;
  int ell = 0;
  int r_lo = 0;
  int r_hi = 0;  // 0 = to be resolved as L/2 against the parameter point
  double t = 0;
  double x = 0;

  static ObservableSpec parse(const std::string& name, const std::string& args);
  std::string name() const;
  std::string args_text() const;  // canonical ';'-separated form

  bool needs_orientation() const;
  bool needs_clusters() const;
  // Range/applicability checks against a parameter point; throws ConfigError
  // subclasses.
  void validate(const ModelParams& p) const;

  double eval(const SampleView& s) const;
};

// Translation-averaged equal-time connectivity at separation r.
double mean_connectivity_at_distance(const LoopDecomposition& dec, int r);

struct CorrFit {
  double xi = 0;  // +infinity flags a non-decaying curve
  double xi_stderr = 0;
  double r_squared = 0;
  int n_points = 0;
};

// Least-squares fit of log p against r (p ~ A exp(-r/xi)).  Points with
// p <= 0 are dropped; throws InsufficientData when fewer than three remain.
// When value_stderr is non-empty it must match separation_value in length
// and weights the fit by 1/sigma^2 with sigma = stderr/p in log space.
CorrFit fit_correlation_length(
    const std::vector<std::pair<double, double>>& separation_value,
    const std::vector<double>& value_stderr = {});

}  // namespace loopmc
