#include <doctest.h>
#include <cmath>

#include "loopmc/errors.hpp"
#include "loopmc/oracle.hpp"

using namespace loopmc;

TEST_CASE("dimension accounting and the cap") {
  CHECK(spin_space_dim(2, 0.5, 4096) == 16);
  CHECK(spin_space_dim(2, 1.0, 4096) == 81);
  CHECK_THROWS_AS(spin_space_dim(8, 1.0, 4096), DimensionCap);
}

TEST_CASE("single-bond chain, S = 1/2: closed forms") {
  // H = -2 P0 on one bond: singlet at -2, triplet at 0.
  const double beta = 1.3;
  SpinChainOracle o(1, 0.5);
  const EigenSystem es = diagonalize(o.hamiltonian_af(false));
  CHECK(es.energies(0) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(es.energies(3) == doctest::Approx(0.0).epsilon(1e-12));

  // tracial <Sz_0 Sz_1> = (1 - e^{2b}) / (4 (3 + e^{2b}))
  const Matrix zz = o.sz(0) * o.sz(1);
  const double got = tracial_time_ordered(es, beta, {{zz, 0.0}});
  const double want =
      (1 - std::exp(2 * beta)) / (4 * (3 + std::exp(2 * beta)));
  CHECK(got == doctest::Approx(want).epsilon(1e-12));

  // seeded with the dimer (= singlet) state: exactly -1/4 at every beta
  const Vector d = o.seed_dimer();
  CHECK(seeded_expectation(es, d, beta, zz) ==
        doctest::Approx(-0.25).epsilon(1e-12));

  // the seed is the ground state here
  CHECK(ground_overlap(es, d) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-time insertion properties") {
  SpinChainOracle o(2, 0.5);
  const double beta = 2.0;
  const EigenSystem es = diagonalize(o.hamiltonian_af(false));
  const Vector d = o.seed_dimer();
  const Matrix a = o.sz(0), b = o.sz(1);

  // equal times at the centre reduce to a single product insertion
  CHECK(seeded_two_time(es, d, beta, a, 0.0, b, 0.0) ==
        doctest::Approx(seeded_expectation(es, d, beta, Matrix(a * b)))
            .epsilon(1e-12));

  // H and the seed are real, so the seeded state is time-reflection
  // symmetric: <a(t1) b(t2)> = <b(-t2) a(-t1)>
  CHECK(seeded_two_time(es, d, beta, a, -0.7, b, 0.2) ==
        doctest::Approx(seeded_two_time(es, d, beta, b, -0.2, a, 0.7))
            .epsilon(1e-12));

  // the tracial state is time-translation invariant (trace cyclicity)
  CHECK(tracial_time_ordered(es, beta, {{a, -0.4}, {b, -0.1}}) ==
        doctest::Approx(tracial_time_ordered(es, beta, {{a, 0.3}, {b, 0.6}}))
            .epsilon(1e-12));
}

TEST_CASE("time-ordering contract is enforced") {
  SpinChainOracle o(1, 0.5);
  const EigenSystem es = diagonalize(o.hamiltonian_af(false));
  const Vector d = o.seed_dimer();
  const Matrix a = o.sz(0);
  CHECK_THROWS_AS(seeded_two_time(es, d, 1.0, a, 0.4, a, 0.2), ConfigError);
  CHECK_THROWS_AS(seeded_two_time(es, d, 1.0, a, -0.5, a, 0.0), ConfigError);
  CHECK_THROWS_AS(
      tracial_time_ordered(es, 1.0, {{a, 0.3}, {a, 0.1}}), ConfigError);
  CHECK(tracial_time_ordered(es, 1.0, {}) == doctest::Approx(1.0));
}

TEST_CASE("identity suite passes on a default point") {
  for (const IdentityResult& r : run_identity_suite(2, 1.0, 0.7, 1.2)) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
}

TEST_CASE("the suite machinery detects genuine violations") {
  // The bond-form equality holds with the field sign of OpenFieldPlus; the
  // opposite sign must be visibly wrong, otherwise the check proves nothing.
  SpinChainOracle o(2, 0.5);
  const double lambda = 0.8;
  const Matrix k = o.hamiltonian_xxz(lambda, SpinChainOracle::Xxz::Kform);
  const Matrix good =
      o.hamiltonian_xxz(lambda, SpinChainOracle::Xxz::OpenFieldPlus);
  const Matrix bad =
      o.hamiltonian_xxz(lambda, SpinChainOracle::Xxz::OpenFieldMinus);
  const double dev_good = (good - k).cwiseAbs().maxCoeff();
  const double dev_bad = (bad - k).cwiseAbs().maxCoeff();
  CHECK(dev_good < 1e-12);
  CHECK(dev_bad > 0.5);  // sinh(0.8) apart

  // ... and an ungauged semigroup really does have negative entries
  const EigenSystem es = diagonalize(o.hamiltonian_af(false));
  Matrix sg = Matrix::Zero(o.dim(), o.dim());
  for (int i = 0; i < o.dim(); ++i)
    sg += std::exp(-(es.energies(i) - es.energies(0))) *
          es.vectors.col(i) * es.vectors.col(i).adjoint();
  CHECK(sg.real().minCoeff() < -1e-6);
}

TEST_CASE("boundary tau in the seeded chain equals tanh at both ends") {
  for (double lambda : {0.3, 1.0}) {
    for (double beta : {0.6, 2.5}) {
      SpinChainOracle o(2, 0.5);
      const EigenSystem es =
          diagonalize(o.hamiltonian_xxz(lambda, SpinChainOracle::Xxz::Kform));
      const Vector seed = o.seed_neel(lambda);
      const Matrix tz_r = 2.0 * o.sz(2), tz_l = 2.0 * o.sz(-1);
      CHECK(seeded_expectation(es, seed, beta, tz_r) ==
            doctest::Approx(std::tanh(lambda)).epsilon(1e-10));
      CHECK(seeded_expectation(es, seed, beta, tz_l) ==
            doctest::Approx(-std::tanh(lambda)).epsilon(1e-10));
    }
  }
}

TEST_CASE("identity report renders one JSON object per line") {
  std::vector<IdentityResult> rs = {{"alpha", 1e-15, 1e-12, true},
                                    {"beta", 2.0, 0.0, false}};
  const std::string json = identity_report_json(rs);
  CHECK(json ==
        "{\"name\":\"alpha\",\"maxDeviation\":1e-15,\"threshold\":1e-12,"
        "\"pass\":true}\n"
        "{\"name\":\"beta\",\"maxDeviation\":2,\"threshold\":0,"
        "\"pass\":false}\n");
}
