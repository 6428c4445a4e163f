#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "loopmc/params.hpp"

namespace loopmc {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Hilbert-space dimension (2S+1)^(2L); throws DimensionCap beyond dim_cap.
long spin_space_dim(int L, double S, long dim_cap);

// Exact finite-chain computations on 2L spins of size S.  Site u occupies
// tensor slot u + L - 1; slot 0 varies fastest in the basis index.  The local
// basis |d> encodes m = S - d, so d = 0 is the highest weight.
class SpinChainOracle {
 public:
  SpinChainOracle(int L, double S, long dim_cap = 4096);

  int L() const { return L_; }
  int q() const { return q_; }
  double S() const { return S_; }
  long dim() const { return dim_; }

  // Embeds a q x q operator at one site, or a q^2 x q^2 operator at an
  // ordered site pair (row index d_a * q + d_b).
  Matrix site_op(const Matrix& local, int site) const;
  Matrix pair_op(const Matrix& local2, int site_a, int site_b) const;

  Matrix sz(int site) const;
  Matrix splus(int site) const;

  // Projector onto the two-site total-spin-0 state:
  //   (2S+1)^{-1} sum_{m,m'} (-1)^{m-m'} |m,-m><m',-m'|.
  Matrix projector_p0(int u, int v) const;

  // H_AF = -sum_u (2S+1) P0_{u,u+1}; periodic adds the (L, -L+1) bond.
  Matrix hamiltonian_af(bool periodic = false) const;

  // Spin-1/2 XXZ family (q must be 2), Delta = cosh(lambda):
  //   Open:            -1/2 sum [txtx + tyty - Delta (tztz - 1)]
  //   OpenFieldPlus:   Open + sinh(l)(-1)^L (tz_{-L+1} - tz_L)/2
  //   OpenFieldMinus:  Open - sinh(l)(-1)^L (tz_{-L+1} - tz_L)/2
  //   Periodic:        Open + wrap bond (L, -L+1)
  //   Kform:           -sum_u K_{u,u+1}             (no wrap)
  //   KformPeriodic:   -sum_u K_{u,u+1} - K_{L,-L+1}
  enum class Xxz { Open, OpenFieldPlus, OpenFieldMinus, Periodic, Kform,
                   KformPeriodic };
  Matrix hamiltonian_xxz(double lambda, Xxz variant) const;

  // Two-site bond K = |-,+><+,-| + |+,-><-,+| + e^l |-,+><-,+|
  //                 + e^-l |+,-><+,-|  (q = 2, index d_a * 2 + d_b).
  Matrix k_bond(double lambda) const;

  // Diagonal gauge exp(i pi/2 sum_u (-1)^u Sz_u); conjugation flips the sign
  // of the xx and yy couplings on every bond.
  Matrix gauge() const;

  // Seeds (unnormalized).
  Vector seed_dimer() const;              // dimer product of pair singlets
  Vector seed_neel(double lambda) const;  // q = 2 staggered seed

 private:
  int L_;
  int q_;
  double S_;
  long dim_;
  std::vector<long> stride_;  // q^slot
};

// Eigen-decomposition with a residual guarantee:
// ||H v - e v|| <= 1e-10 * max(1, |E|_max) for every eigenpair.
struct EigenSystem {
  Eigen::VectorXd energies;  // ascending
  Matrix vectors;            // orthonormal columns
};
EigenSystem diagonalize(const Matrix& H);

// <seed| e^(-bH/2) F e^(-bH/2) |seed> / <seed| e^(-bH) |seed>.
double seeded_expectation(const EigenSystem& es, const Vector& seed,
                          double beta, const Matrix& F);

// Time-ordered two-point insertion in the seeded state,
// -beta/2 < ta <= tb < beta/2:
// <seed| e^(-(b/2-tb)H) Fb e^(-(tb-ta)H) Fa e^(-(ta+b/2)H) |seed> / norm.
double seeded_two_time(const EigenSystem& es, const Vector& seed, double beta,
                       const Matrix& Fa, double ta, const Matrix& Fb,
                       double tb);

// tr( e^(-(b/2-tN)H) FN ... F1 e^(-(t1+b/2)H) ) / tr e^(-bH), with insertion
// times ascending in [-beta/2, beta/2).  No insertions gives 1.
double tracial_time_ordered(const EigenSystem& es, double beta,
                            const std::vector<std::pair<Matrix, double>>& ins);

// Total squared overlap of the (normalized) seed with the ground space.
double ground_overlap(const EigenSystem& es, const Vector& seed);

// One checked operator identity.  pass == (max_deviation <= threshold) for
// tolerance checks; strict-inequality checks set threshold 0 and a positive
// deviation only on violation.
struct IdentityResult {
  std::string name;
  double max_deviation = 0;
  double threshold = 0;
  bool pass = false;
};

// The operator-identity suite at one parameter point.  Checks that need only
// the spin-1/2 chain run there; projector-side checks use the given S.  beta
// enters the semigroup, trace-bound and tracial-symmetry checks.
std::vector<IdentityResult> run_identity_suite(int L, double S, double lambda,
                                               double beta,
                                               long dim_cap = 4096);

// One JSON object per line: {"name":...,"maxDeviation":...,"threshold":...,
// "pass":...}.
std::string identity_report_json(const std::vector<IdentityResult>& results);

}  // namespace loopmc
