#include "loopmc/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "loopmc/csv.hpp"
#include "loopmc/errors.hpp"

namespace loopmc {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

int spin_multiplicity(double S) {
  const double two_s = 2.0 * S;
  const long r = std::lround(two_s);
  if (r < 0 || std::abs(two_s - r) > 1e-9)
    throw ConfigError("S must be a non-negative half-integer");
  return static_cast<int>(r) + 1;
}

double imag_checked(std::complex<double> z) {
  if (std::abs(z.imag()) > 1e-9 * (1.0 + std::abs(z.real())))
    throw std::logic_error("expectation has a non-negligible imaginary part");
  return z.real();
}

}  // namespace

long spin_space_dim(int L, double S, long dim_cap) {
  const int q = spin_multiplicity(S);
  long dim = 1;
  for (int k = 0; k < 2 * L; ++k) {
    if (dim > dim_cap / q + 1) throw DimensionCap("Hilbert space exceeds cap");
    dim *= q;
    if (dim > dim_cap) throw DimensionCap("Hilbert space exceeds cap");
  }
  return dim;
}

SpinChainOracle::SpinChainOracle(int L, double S, long dim_cap)
    : L_(L), q_(spin_multiplicity(S)), S_(S) {
  if (L < 1) throw OutOfRange("oracle: L must be >= 1");
  dim_ = spin_space_dim(L, S, dim_cap);
  stride_.resize(2 * L_);
  long s = 1;
  for (int k = 0; k < 2 * L_; ++k) {
    stride_[k] = s;
    s *= q_;
  }
}

Matrix SpinChainOracle::site_op(const Matrix& local, int site) const {
  if (local.rows() != q_ || local.cols() != q_)
    throw std::invalid_argument("site_op: local operator must be q x q");
  if (site < -L_ + 1 || site > L_) throw OutOfRange("site_op: site outside chain");
  const long st = stride_[site + L_ - 1];
  Matrix M = Matrix::Zero(dim_, dim_);
  for (long i = 0; i < dim_; ++i) {
    const int d = static_cast<int>((i / st) % q_);
    for (int dp = 0; dp < q_; ++dp) {
      const auto elem = local(dp, d);
      if (elem == std::complex<double>(0.0, 0.0)) continue;
      M(i + (dp - d) * st, i) += elem;
    }
  }
  return M;
}

Matrix SpinChainOracle::pair_op(const Matrix& local2, int site_a,
                                int site_b) const {
  if (local2.rows() != q_ * q_ || local2.cols() != q_ * q_)
    throw std::invalid_argument("pair_op: local operator must be q^2 x q^2");
  if (site_a == site_b) throw std::invalid_argument("pair_op: equal sites");
  for (int site : {site_a, site_b})
    if (site < -L_ + 1 || site > L_)
      throw OutOfRange("pair_op: site outside chain");
  const long sa = stride_[site_a + L_ - 1];
  const long sb = stride_[site_b + L_ - 1];
  Matrix M = Matrix::Zero(dim_, dim_);
  for (long i = 0; i < dim_; ++i) {
    const int da = static_cast<int>((i / sa) % q_);
    const int db = static_cast<int>((i / sb) % q_);
    for (int dap = 0; dap < q_; ++dap) {
      for (int dbp = 0; dbp < q_; ++dbp) {
        const auto elem = local2(dap * q_ + dbp, da * q_ + db);
        if (elem == std::complex<double>(0.0, 0.0)) continue;
        M(i + (dap - da) * sa + (dbp - db) * sb, i) += elem;
      }
    }
  }
  return M;
}

Matrix SpinChainOracle::sz(int site) const {
  Matrix local = Matrix::Zero(q_, q_);
  for (int d = 0; d < q_; ++d) local(d, d) = S_ - d;
  return site_op(local, site);
}

Matrix SpinChainOracle::splus(int site) const {
  Matrix local = Matrix::Zero(q_, q_);
  for (int d = 1; d < q_; ++d) {
    const double m = S_ - d;  // S+ |m> = sqrt(S(S+1) - m(m+1)) |m+1>
    local(d - 1, d) = std::sqrt(S_ * (S_ + 1.0) - m * (m + 1.0));
  }
  return site_op(local, site);
}

Matrix SpinChainOracle::projector_p0(int u, int v) const {
  Matrix local = Matrix::Zero(q_ * q_, q_ * q_);
  for (int d = 0; d < q_; ++d) {
    for (int dp = 0; dp < q_; ++dp) {
      // |m,-m><m',-m'|: m = S-d pairs with -m at digit q-1-d.
      const int sign = (d - dp) % 2 == 0 ? 1 : -1;  // (-1)^(m-m')
      local(d * q_ + (q_ - 1 - d), dp * q_ + (q_ - 1 - dp)) =
          static_cast<double>(sign) / q_;
    }
  }
  return pair_op(local, u, v);
}

Matrix SpinChainOracle::hamiltonian_af(bool periodic) const {
  if (periodic && L_ < 2)
    throw NotApplicable("periodic chain needs at least 4 sites");
  Matrix H = Matrix::Zero(dim_, dim_);
  for (int u = -L_ + 1; u < L_; ++u)
    H -= static_cast<double>(q_) * projector_p0(u, u + 1);
  if (periodic) H -= static_cast<double>(q_) * projector_p0(L_, -L_ + 1);
  return H;
}

Matrix SpinChainOracle::k_bond(double lambda) const {
  if (q_ != 2) throw NotApplicable("k_bond requires spin 1/2");
  Matrix K = Matrix::Zero(4, 4);
  // indices: |+,-> = 0*2+1 = 1,  |-,+> = 1*2+0 = 2
  K(2, 1) = 1.0;
  K(1, 2) = 1.0;
  K(2, 2) = std::exp(lambda);
  K(1, 1) = std::exp(-lambda);
  return K;
}

Matrix SpinChainOracle::hamiltonian_xxz(double lambda, Xxz variant) const {
  if (q_ != 2) throw NotApplicable("XXZ Hamiltonians require spin 1/2");
  const double delta = std::cosh(lambda);

  Matrix tx(2, 2), ty(2, 2), tz(2, 2), id2(2, 2);
  tx << 0, 1, 1, 0;
  ty << 0, -kI, kI, 0;
  tz << 1, 0, 0, -1;
  id2 << 1, 0, 0, 1;
  auto kron2 = [&](const Matrix& a, const Matrix& b) {
    Matrix m(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
    return m;
  };
  const Matrix bond =
      -0.5 * (kron2(tx, tx) + kron2(ty, ty) -
              delta * (kron2(tz, tz) - kron2(id2, id2)));

  if ((variant == Xxz::Periodic || variant == Xxz::KformPeriodic) && L_ < 2)
    throw NotApplicable("periodic chain needs at least 4 sites");
  Matrix H = Matrix::Zero(dim_, dim_);
  switch (variant) {
    case Xxz::Open:
    case Xxz::OpenFieldPlus:
    case Xxz::OpenFieldMinus:
    case Xxz::Periodic: {
      for (int u = -L_ + 1; u < L_; ++u) H += pair_op(bond, u, u + 1);
      if (variant == Xxz::Periodic) H += pair_op(bond, L_, -L_ + 1);
      if (variant == Xxz::OpenFieldPlus || variant == Xxz::OpenFieldMinus) {
        const double sgn =
            (variant == Xxz::OpenFieldPlus ? 1.0 : -1.0) * (L_ % 2 ? -1.0 : 1.0);
        H += sgn * std::sinh(lambda) * 0.5 *
             (site_op(tz, -L_ + 1) - site_op(tz, L_));
      }
      break;
    }
    case Xxz::Kform:
    case Xxz::KformPeriodic: {
      const Matrix K = k_bond(lambda);
      for (int u = -L_ + 1; u < L_; ++u) H -= pair_op(K, u, u + 1);
      if (variant == Xxz::KformPeriodic) H -= pair_op(K, L_, -L_ + 1);
      break;
    }
  }
  return H;
}

Matrix SpinChainOracle::gauge() const {
  Matrix U = Matrix::Zero(dim_, dim_);
  for (long i = 0; i < dim_; ++i) {
    std::complex<double> phase = 1.0;
    for (int k = 0; k < 2 * L_; ++k) {
      const int d = static_cast<int>((i / stride_[k]) % q_);
      const double m = S_ - d;
      const int site = k - L_ + 1;
      const double sgn = (site % 2 == 0) ? 1.0 : -1.0;
      phase *= std::exp(kI * (M_PI / 2.0) * sgn * m);
    }
    U(i, i) = phase;
  }
  return U;
}

Vector SpinChainOracle::seed_dimer() const {
  Vector v = Vector::Zero(dim_);
  // Pairs occupy slots (2j, 2j+1); the pair state is
  // sum_m (-1)^(S-m) |m, -m>, i.e. digits (d, q-1-d) with sign (-1)^d...
  // (-1)^(S-m) with m = S-d is (-1)^d.
  std::vector<int> digit(2 * L_, 0);
  long n_terms = 1;
  for (int j = 0; j < L_; ++j) n_terms *= q_;
  for (long term = 0; term < n_terms; ++term) {
    long rest = term;
    long idx = 0;
    int sign = 1;
    for (int j = 0; j < L_; ++j) {
      const int d = static_cast<int>(rest % q_);
      rest /= q_;
      idx += d * stride_[2 * j] + (q_ - 1 - d) * stride_[2 * j + 1];
      if (d % 2 == 1) sign = -sign;
    }
    v(idx) += sign;
  }
  return v;
}

Vector SpinChainOracle::seed_neel(double lambda) const {
  if (q_ != 2) throw NotApplicable("seed_neel requires spin 1/2");
  Vector v = Vector::Zero(dim_);
  // Per pair: e^(-lambda/2) |+,-> + e^(lambda/2) |-,+>, digits (0,1) / (1,0).
  for (long term = 0; term < (1L << L_); ++term) {
    long idx = 0;
    double w = 1.0;
    for (int j = 0; j < L_; ++j) {
      if ((term >> j) & 1) {
        idx += 1 * stride_[2 * j] + 0 * stride_[2 * j + 1];
        w *= std::exp(lambda / 2.0);
      } else {
        idx += 0 * stride_[2 * j] + 1 * stride_[2 * j + 1];
        w *= std::exp(-lambda / 2.0);
      }
    }
    v(idx) += w;
  }
  return v;
}

EigenSystem diagonalize(const Matrix& H) {
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("diagonalize: matrix is not self-adjoint");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(H);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("diagonalize: eigensolver failed");
  EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
  const double tol =
      1e-10 * std::max(1.0, es.energies.cwiseAbs().maxCoeff());
  for (long a = 0; a < es.energies.size(); ++a) {
    const double res =
        (H * es.vectors.col(a) - es.energies(a) * es.vectors.col(a)).norm();
    if (res > tol)
      throw std::runtime_error("diagonalize: eigenpair residual too large");
  }
  return es;
}

namespace {

Eigen::VectorXd boltzmann_half(const EigenSystem& es, double span) {
  const double e0 = es.energies(0);
  return ((es.energies.array() - e0) * (-span)).exp();
}

}  // namespace

double seeded_expectation(const EigenSystem& es, const Vector& seed,
                          double beta, const Matrix& F) {
  const Vector c = es.vectors.adjoint() * seed;
  const Vector w = boltzmann_half(es, beta / 2).cast<std::complex<double>>()
                       .cwiseProduct(c);
  const Vector x = es.vectors * w;
  const std::complex<double> num = x.dot(F * x);
  const double den = w.squaredNorm();
  if (den <= 0) throw std::runtime_error("seeded_expectation: zero norm");
  return imag_checked(num) / den;
}

double seeded_two_time(const EigenSystem& es, const Vector& seed, double beta,
                       const Matrix& Fa, double ta, const Matrix& Fb,
                       double tb) {
  if (!(-beta / 2 < ta && ta <= tb && tb < beta / 2))
    throw OutOfRange("seeded_two_time: need -beta/2 < ta <= tb < beta/2");
  const Vector c = es.vectors.adjoint() * seed;
  auto evolve = [&](const Vector& v, double span) -> Vector {
    return boltzmann_half(es, span).cast<std::complex<double>>().cwiseProduct(
        v);
  };
  Vector r = evolve(c, ta + beta / 2);
  r = es.vectors.adjoint() * (Fa * (es.vectors * r));
  r = evolve(r, tb - ta);
  r = es.vectors.adjoint() * (Fb * (es.vectors * r));
  r = evolve(r, beta / 2 - tb);
  const std::complex<double> num = c.dot(r);
  const double den = evolve(c, beta / 2).squaredNorm();
  if (den <= 0) throw std::runtime_error("seeded_two_time: zero norm");
  return imag_checked(num) / den;
}

double tracial_time_ordered(
    const EigenSystem& es, double beta,
    const std::vector<std::pair<Matrix, double>>& ins) {
  const long dim = es.energies.size();
  for (size_t i = 0; i < ins.size(); ++i) {
    const double t = ins[i].second;
    if (t < -beta / 2 || t >= beta / 2)
      throw OutOfRange("tracial: insertion time outside [-beta/2, beta/2)");
    if (i > 0 && t < ins[i - 1].second)
      throw OutOfRange("tracial: insertion times must be ascending");
  }
  const double den = boltzmann_half(es, beta).sum();
  if (ins.empty()) return 1.0;

  Matrix M = Matrix::Identity(dim, dim);
  double prev = -beta / 2;
  for (const auto& [F, t] : ins) {
    const Eigen::VectorXd e = boltzmann_half(es, t - prev);
    M = e.cast<std::complex<double>>().asDiagonal() * M;
    M = (es.vectors.adjoint() * (F * es.vectors)) * M;
    prev = t;
  }
  const Eigen::VectorXd e = boltzmann_half(es, beta / 2 - prev);
  M = e.cast<std::complex<double>>().asDiagonal() * M;
  return imag_checked(M.trace()) / den;
}

double ground_overlap(const EigenSystem& es, const Vector& seed) {
  const double e0 = es.energies(0);
  const double nrm = seed.squaredNorm();
  if (nrm <= 0) throw std::invalid_argument("ground_overlap: zero seed");
  double acc = 0;
  for (long a = 0; a < es.energies.size(); ++a) {
    if (es.energies(a) - e0 > 1e-9 * std::max(1.0, std::abs(e0))) break;
    acc += std::norm(es.vectors.col(a).dot(seed));
  }
  return acc / nrm;
}

namespace {

double max_abs(const Matrix& M) {
  return M.size() ? M.cwiseAbs().maxCoeff() : 0.0;
}

double herm_dev(const Matrix& M) { return max_abs(M - Matrix(M.adjoint())); }

Matrix semigroup(const Matrix& H, double beta) {
  // exp(-beta (H - E0)); the dropped positive factor exp(-beta E0) cannot
  // change any entry's sign.
  const EigenSystem es = diagonalize(H);
  const Eigen::VectorXd w = boltzmann_half(es, beta);
  return es.vectors * w.cast<std::complex<double>>().asDiagonal() *
         es.vectors.adjoint();
}

// Largest violation of "entrywise real and nonnegative", relative to the
// largest entry magnitude.
double negativity(const Matrix& M) {
  const double scale = std::max(max_abs(M), 1e-300);
  double worst = 0;
  for (long j = 0; j < M.cols(); ++j)
    for (long i = 0; i < M.rows(); ++i) {
      const std::complex<double> z = M(i, j);
      worst = std::max(worst, std::max(-z.real(), std::abs(z.imag())));
    }
  return worst / scale;
}

}  // namespace

std::vector<IdentityResult> run_identity_suite(int L, double S, double lambda,
                                               double beta, long dim_cap) {
  std::vector<IdentityResult> out;
  auto push = [&](const std::string& name, double dev, double thr = 1e-12) {
    out.push_back({name, dev, thr, dev <= thr});
  };
  // Strict inequalities: the margin must be positive; the reported
  // deviation is the shortfall when it is not.
  auto push_strict = [&](const std::string& name, double margin) {
    out.push_back({name, std::max(0.0, -margin), 0.0, margin > 0});
  };
  using Xxz = SpinChainOracle::Xxz;

  // --- spin-1/2 chain: the anisotropic chain against the bond form ---
  SpinChainOracle xxz(L, 0.5, dim_cap);
  const int a = -L + 1, b = L;
  const Matrix h_open = xxz.hamiltonian_xxz(lambda, Xxz::Open);
  const Matrix h_k = xxz.hamiltonian_xxz(lambda, Xxz::Kform);
  const Matrix field = std::sinh(lambda) * (xxz.sz(a) - xxz.sz(b));
  push("xxz_kform_open_equality", max_abs(h_open + field - h_k));

  {
    Matrix z_tot = Matrix::Zero(xxz.dim(), xxz.dim());
    for (int u = a; u <= b; ++u) z_tot += xxz.sz(u);
    double dev = std::max(max_abs(h_open * z_tot - z_tot * h_open),
                          max_abs(h_k * z_tot - z_tot * h_k));
    double hdev = std::max(herm_dev(h_open), herm_dev(h_k));
    if (L >= 2) {
      const Matrix h_per = xxz.hamiltonian_xxz(lambda, Xxz::Periodic);
      const Matrix h_kper = xxz.hamiltonian_xxz(lambda, Xxz::KformPeriodic);
      push("xxz_kform_periodic_equality", max_abs(h_per - h_kper));
      push("xxz_periodic_lambda_symmetric",
           max_abs(h_kper - xxz.hamiltonian_xxz(-lambda, Xxz::KformPeriodic)));
      dev = std::max({dev, max_abs(h_per * z_tot - z_tot * h_per),
                      max_abs(h_kper * z_tot - z_tot * h_kper)});
      hdev = std::max({hdev, herm_dev(h_per), herm_dev(h_kper)});
      push("kform_periodic_semigroup_nonneg",
           negativity(semigroup(h_kper, beta)));

      // Tracial insertions are even in lambda (the periodic bond sums at
      // +/-lambda are the same operator, checked above; here the values).
      const EigenSystem es_p = diagonalize(h_kper);
      const EigenSystem es_m =
          diagonalize(xxz.hamiltonian_xxz(-lambda, Xxz::KformPeriodic));
      Matrix up(2, 2);
      up << 1, 0, 0, 0;  // projector onto tau^z = +1
      const Matrix p0 = xxz.site_op(up, 0);
      const Matrix p1 = xxz.site_op(up, 1);
      const double one_p = tracial_time_ordered(es_p, beta, {{p0, 0.0}});
      const double one_m = tracial_time_ordered(es_m, beta, {{p0, 0.0}});
      const double two_p = tracial_time_ordered(
          es_p, beta, {{p0, -beta / 4}, {p1, beta / 4}});
      const double two_m = tracial_time_ordered(
          es_m, beta, {{p0, -beta / 4}, {p1, beta / 4}});
      push("tracial_lambda_symmetric",
           std::max(std::abs(one_p - one_m), std::abs(two_p - two_m)));
    }
    push("xxz_sz_total_commutes", dev);
    push("xxz_hermitian", hdev);
  }

  {
    // Gauge conjugation turns the chain into its manifestly antiferromagnetic
    // form: 1/2 sum [txtx + tyty + Delta tztz - Delta].
    const Matrix U = xxz.gauge();
    const double delta = std::cosh(lambda);
    Matrix tx(2, 2), ty(2, 2), tz(2, 2), id2(2, 2);
    tx << 0, 1, 1, 0;
    ty << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
    tz << 1, 0, 0, -1;
    id2 << 1, 0, 0, 1;
    auto kron2 = [&](const Matrix& x, const Matrix& y) {
      Matrix m(4, 4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.block(2 * i, 2 * j, 2, 2) = x(i, j) * y;
      return m;
    };
    const Matrix bond_af =
        0.5 * (kron2(tx, tx) + kron2(ty, ty) + delta * kron2(tz, tz) -
               delta * kron2(id2, id2));
    Matrix rhs = Matrix::Zero(xxz.dim(), xxz.dim());
    for (int u = a; u < b; ++u) rhs += xxz.pair_op(bond_af, u, u + 1);
    push("xxz_gauge_antiferro_form",
         max_abs(U * h_open * U.adjoint() - rhs));
  }

  {
    const Matrix K = xxz.k_bond(lambda);
    const EigenSystem es = diagonalize(K);
    const double target = 2 * std::cosh(lambda);
    double dev = std::abs(es.energies(3) - target);
    for (int i = 0; i < 3; ++i) dev = std::max(dev, std::abs(es.energies(i)));
    push("k_bond_rank_one", dev);
  }
  push("kform_semigroup_nonneg", negativity(semigroup(h_k, beta)));

  if (L % 2 == 0) {
    // The end spins of the seeded bond-form state magnetize to exactly
    // -(left) / +(right) tanh(lambda) at every even L and every beta.
    const EigenSystem es_k = diagonalize(h_k);
    const Vector nl = xxz.seed_neel(lambda);
    const double right =
        seeded_expectation(es_k, nl, beta, 2.0 * xxz.sz(b));
    const double left =
        seeded_expectation(es_k, nl, beta, 2.0 * xxz.sz(a));
    const double th = std::tanh(lambda);
    push("seeded_boundary_tau",
         std::max(std::abs(right - th), std::abs(left + th)));
  }

  {
    Matrix z_tot = Matrix::Zero(xxz.dim(), xxz.dim());
    for (int u = a; u <= b; ++u) z_tot += xxz.sz(u);
    const Vector nl = xxz.seed_neel(lambda);
    push("neel_seed_sz_sector", (z_tot * nl).norm() / nl.norm());
  }

  // --- projector chain at the requested S ---
  SpinChainOracle af(L, S, dim_cap);
  const Matrix h_af = af.hamiltonian_af(false);
  {
    double hdev = herm_dev(h_af);
    Matrix z_tot = Matrix::Zero(af.dim(), af.dim());
    for (int u = a; u <= b; ++u) z_tot += af.sz(u);
    double cdev = max_abs(h_af * z_tot - z_tot * h_af);
    if (L >= 2) {
      const Matrix h_per = af.hamiltonian_af(true);
      hdev = std::max(hdev, herm_dev(h_per));
      cdev = std::max(cdev, max_abs(h_per * z_tot - z_tot * h_per));
    }
    push("af_hermitian", hdev);
    push("af_sz_total_commutes", cdev);
  }

  {
    const Matrix P = af.projector_p0(0, 1);
    const Matrix sp0 = af.splus(0), sp1 = af.splus(1);
    const Matrix sx = 0.5 * (sp0 + Matrix(sp0.adjoint()) + sp1 +
                             Matrix(sp1.adjoint()));
    const Matrix sy = std::complex<double>(0, -0.5) *
                      (sp0 - Matrix(sp0.adjoint()) + sp1 -
                       Matrix(sp1.adjoint()));
    const Matrix sz2 = af.sz(0) + af.sz(1);
    double dev = std::max({max_abs(sx * P), max_abs(sy * P),
                           max_abs(sz2 * P)});
    dev = std::max(dev, max_abs(P * P - P));
    // rank 1 on the pair, identity on the 2L-2 spectator sites
    const double tr_expected = static_cast<double>(af.dim()) / (af.q() * af.q());
    dev = std::max(dev, std::abs(P.trace() - std::complex<double>(tr_expected, 0)));
    push("pair_projector_kernel", dev);

    const Matrix G = af.gauge();
    push("gauged_projector_nonneg", negativity(G.adjoint() * P * G));
  }

  {
    const Matrix G = af.gauge();
    push("af_semigroup_nonneg_gauged",
         negativity(G.adjoint() * semigroup(h_af, beta) * G));
    if (L >= 2)
      push("af_periodic_semigroup_nonneg_gauged",
           negativity(G.adjoint() * semigroup(af.hamiltonian_af(true), beta) *
                      G));
  }

  {
    const EigenSystem es = diagonalize(h_af);
    const Vector d = af.seed_dimer();
    const Vector c = es.vectors.adjoint() * d;
    const Eigen::VectorXd w = boltzmann_half(es, beta);
    double num = 0;
    for (long i = 0; i < c.size(); ++i) num += w(i) * std::norm(c(i));
    const double den = w.sum();
    const double bound = std::pow(static_cast<double>(af.q()), -L);
    push_strict("dimer_seed_trace_bound", num / den - bound);
    push_strict("dimer_seed_ground_overlap", ground_overlap(es, d));
  }

  return out;
}

std::string identity_report_json(const std::vector<IdentityResult>& results) {
  std::string s;
  for (const auto& r : results) {
    s += "{\"name\":\"" + r.name + "\",\"maxDeviation\":" +
         format_g12(r.max_deviation) + ",\"threshold\":" +
         format_g12(r.threshold) + ",\"pass\":" +
         (r.pass ? "true" : "false") + "}\n";
  }
  return s;
}

}  // namespace loopmc
