#include <doctest.h>
#include <random>
#include <sstream>

#include "loopmc/loops.hpp"
#include "test_util.hpp"

using namespace loopmc;

namespace {
RungConfiguration with_rungs(const SpaceTimeBox& box,
                             std::initializer_list<Rung> rungs) {
  RungConfiguration cfg(box.n_columns());
  for (const Rung& r : rungs) REQUIRE(cfg.insert(r.column, r.t));
  return cfg;
}
}  // namespace

TEST_CASE("empty capped box: one loop per capped pair") {
  const SpaceTimeBox box = make_box(2, 1.0, Bc::CappedAlternating);
  const auto dec = decompose(box, RungConfiguration(box.n_columns()));
  CHECK(dec.n_loops() == 2);
  CHECK(same_loop(dec, -1, 0.0, 0, 0.0));
  CHECK_FALSE(same_loop(dec, 0, 0.0, 1, 0.0));
  for (const LoopInfo& l : dec.loops) {
    CHECK(std::abs(l.turning) == 1);
    CHECK_FALSE(l.winds());
  }
}

TEST_CASE("empty periodic box: every line winds") {
  for (Bc bc : {Bc::PeriodicTime, Bc::PeriodicBoth}) {
    const SpaceTimeBox box = make_box(2, 1.0, bc);
    const auto dec = decompose(box, RungConfiguration(box.n_columns()));
    CHECK(dec.n_loops() == 4);
    for (const LoopInfo& l : dec.loops) {
      CHECK(l.turning == 0);
      CHECK(l.winding_t != 0);
    }
  }
}

TEST_CASE("one rung on the central column merges the two capped loops") {
  const SpaceTimeBox box = make_box(2, 1.0, Bc::CappedAlternating);
  const auto dec = decompose(box, with_rungs(box, {{1, 0.0}}));
  CHECK(dec.n_loops() == 1);
  CHECK(std::abs(dec.loops[0].turning) == 1);
  CHECK(same_loop(dec, 0, 0.3, 1, 0.3));
}

TEST_CASE("delta_N_if_insert matches the hand-traced values") {
  const SpaceTimeBox box = make_box(2, 1.0, Bc::CappedAlternating);
  const auto empty = decompose(box, RungConfiguration(box.n_columns()));
  // endpoints on different loops -> merge
  CHECK(delta_n_if_insert(empty, 1, 0.0) == -1);
  // endpoints on the same capped pair -> split
  CHECK(delta_n_if_insert(empty, 0, 0.0) == 1);

  const auto one = decompose(box, with_rungs(box, {{1, 0.0}}));
  CHECK(delta_n_if_insert(one, 1, 0.25) == 1);  // second rung splits back
}

TEST_CASE("decomposition agrees with the union-find recount on random boxes") {
  std::mt19937 gen(12345);
  for (Bc bc : {Bc::CappedAlternating, Bc::PeriodicTime, Bc::PeriodicBoth}) {
    for (int L : {1, 2, 3, 5}) {
      if (bc == Bc::PeriodicBoth && L < 2) continue;
      const SpaceTimeBox box = make_box(L, 1.7, bc);
      for (int rep = 0; rep < 60; ++rep) {
        const auto cfg = testutil::random_config(box, gen, 1.2);
        const auto dec = decompose(box, cfg);
        CAPTURE(bc_name(bc));
        CAPTURE(L);
        CAPTURE(cfg.total());
        CHECK(dec.n_loops() == testutil::brute_force_loop_count(box, cfg));
      }
    }
  }
}

TEST_CASE("turning invariants on random configurations") {
  std::mt19937 gen(777);
  for (Bc bc : {Bc::CappedAlternating, Bc::PeriodicTime, Bc::PeriodicBoth}) {
    const SpaceTimeBox box = make_box(3, 2.0, bc);
    for (int rep = 0; rep < 40; ++rep) {
      const auto dec = decompose(box, testutil::random_config(box, gen, 1.0));
      for (const LoopInfo& l : dec.loops) {
        if (l.winds()) {
          CHECK(l.turning == 0);
        } else {
          CHECK(std::abs(l.turning) == 1);
        }
        if (bc == Bc::CappedAlternating) CHECK_FALSE(l.winds());
      }
    }
  }
}

TEST_CASE("walk-based delta N equals decompose-twice recount") {
  std::mt19937 gen(999);
  std::uniform_real_distribution<double> uni(-0.85, 0.85);
  for (Bc bc : {Bc::CappedAlternating, Bc::PeriodicTime, Bc::PeriodicBoth}) {
    const SpaceTimeBox box = make_box(3, 1.7, bc);
    for (int rep = 0; rep < 50; ++rep) {
      auto cfg = testutil::random_config(box, gen, 1.0);
      const int before = decompose(box, cfg).n_loops();
      const int c = static_cast<int>(gen() % box.n_columns());
      double t = uni(gen);
      while (cfg.contains(c, t)) t = uni(gen);

      const int walk = delta_n_insert_walk(box, cfg, c, t);
      REQUIRE(cfg.insert(c, t));
      const int after = decompose(box, cfg).n_loops();
      CAPTURE(bc_name(bc));
      CHECK(walk == after - before);
      if (bc == Bc::CappedAlternating) CHECK(std::abs(walk) == 1);

      // erasing the same rung undoes the change exactly
      CHECK(delta_n_erase_walk(box, cfg, c, t) == before - after);
    }
  }
}

TEST_CASE("loop-count bound between capped and periodic counts") {
  std::mt19937 gen(4242);
  for (int L : {1, 2, 4}) {
    const SpaceTimeBox capped = make_box(L, 1.3, Bc::CappedAlternating);
    const SpaceTimeBox cyl = make_box(L, 1.3, Bc::PeriodicTime);
    for (int rep = 0; rep < 60; ++rep) {
      const auto cfg = testutil::random_config(capped, gen, 1.1);
      const int n = decompose(capped, cfg).n_loops();
      const int n_per = decompose(cyl, cfg).n_loops();
      CHECK(std::abs(n - n_per) <= L);
    }
  }
}

TEST_CASE("encircling counts on hand-built fixtures") {
  const SpaceTimeBox box = make_box(2, 1.0, Bc::CappedAlternating);
  const auto empty = decompose(box, RungConfiguration(box.n_columns()));
  // the capped pair loop around (-1/2, 0) encircles it
  CHECK(encircling_count(empty, -0.5, 0.0) == 1);
  CHECK(encircling_count(empty, 1.5, 0.0) == 1);
  CHECK(encircling_count(empty, 0.5, 0.0) == 0);

  // winding loops encircle no point
  const SpaceTimeBox cyl = make_box(2, 1.0, Bc::PeriodicTime);
  const auto wind = decompose(cyl, RungConfiguration(cyl.n_columns()));
  CHECK(encircling_count(wind, -0.5, 0.0) == 0);

  // two rungs on the same column cut out a nested rectangle around the
  // point; the merged outer loop surrounds the rectangle, so both count
  const auto nested = decompose(box, with_rungs(box, {{1, -0.3}, {1, 0.3}}));
  CHECK(encircling_count(nested, 0.5, 0.0) == 2);
  CHECK(encircling_count(nested, 0.5, 0.45) == 0);
}

TEST_CASE("orientation sampling respects the turning tilt") {
  const SpaceTimeBox box = make_box(2, 1.0, Bc::CappedAlternating);
  const auto dec = decompose(box, RungConfiguration(box.n_columns()));
  const double lambda = 1.0;
  RngStream rng(9, 0, StreamPurpose::Orientation);
  // P(tau at the rightmost site = +1) = e^lambda / (e^lambda + e^-lambda)
  const int n = 20000;
  int plus = 0;
  for (int i = 0; i < n; ++i) {
    const auto oc = sample_orientations(dec, lambda, rng);
    if (oc.tau(2, 0.0) == 1) ++plus;
  }
  const double want = std::exp(lambda) / (2 * std::cosh(lambda));
  const double got = static_cast<double>(plus) / n;
  const double sigma = std::sqrt(want * (1 - want) / n);
  CHECK(std::abs(got - want) < 4 * sigma);
}

TEST_CASE("plus_dir calibration: rightmost site carries +1") {
  std::mt19937 gen(31);
  const SpaceTimeBox box = make_box(2, 1.0, Bc::CappedAlternating);
  for (int rep = 0; rep < 20; ++rep) {
    const auto dec = decompose(box, testutil::random_config(box, gen, 1.0));
    CHECK(dec.plus_dir_at(2, 0.0) == 1);
  }
}

TEST_CASE("segment dump matches the documented shape") {
  const SpaceTimeBox box = make_box(1, 1.0, Bc::PeriodicTime);
  RungConfiguration cfg(box.n_columns());
  REQUIRE(cfg.insert(0, 0.25));
  const auto dec = decompose(box, cfg);
  std::ostringstream os;
  dump_segments(dec, os);
  // one event per line -> one cyclic segment each, t_lo == t_hi == 0.25
  CHECK(os.str() == "0 0 0.25 0.25\n0 1 0.25 0.25\n");
}
