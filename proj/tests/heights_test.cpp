#include <doctest.h>
#include <random>

#include "loopmc/errors.hpp"
#include "loopmc/heights.hpp"
#include "test_util.hpp"

using namespace loopmc;

namespace {
OrientedConfiguration all_plus(const LoopDecomposition& dec) {
  OrientedConfiguration oc;
  oc.dec = &dec;
  oc.sigma.assign(dec.n_loops(), 1);
  return oc;
}
}  // namespace

TEST_CASE("height of the empty box, anchored at (-1/2, 0)") {
  const SpaceTimeBox box = make_box(2, 1.0, Bc::CappedAlternating);
  const auto dec = decompose(box, RungConfiguration(box.n_columns()));
  const auto oc = all_plus(dec);  // traced sense; tau = trace_dir
  CHECK(height_at(oc, -0.5, 0.0) == 0);  // the anchor point itself
  // anchor sits inside the (-1, 0) pair loop, so the whole outer region
  // (crossing site -1 leftward) lies one step away
  const int outer = -oc.tau(-1, 0.0);
  CHECK(std::abs(outer) == 1);
  CHECK(height_at(oc, -1.5, 0.0) == outer);
  CHECK(height_at(oc, 0.5, 0.0) == outer);
  CHECK(height_at(oc, 2.5, 0.0) == outer);
  // crossing site 1 rightward adds tau(1, t)
  CHECK(height_at(oc, 1.5, 0.0) - height_at(oc, 0.5, 0.0) == oc.tau(1, 0.0));
}

TEST_CASE("height flux is path independent on random capped samples") {
  std::mt19937 gen(2024);
  const SpaceTimeBox box = make_box(3, 1.4, Bc::CappedAlternating);
  RngStream orient(5, 0, StreamPurpose::Orientation);
  std::uniform_real_distribution<double> ut(-0.6, 0.6);
  std::uniform_int_distribution<int> ux(-3, 3);
  int checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const auto cfg = testutil::random_config(box, gen, 0.8);
    const auto dec = decompose(box, cfg);
    const auto oc = sample_orientations(dec, 0.7, orient);
    const double x = ux(gen) + 0.5, t = ut(gen);
    // reference value via the canonical outside detour
    const int want = height_at(oc, x, t);
    // staircase path from (-1/2, 0): climb first, then walk right
    try {
      const int got = height_flux(
          oc, {{-0.5, 0.0}, {-0.5, t}, {x, t}});
      CHECK(got == want);
      ++checked;
    } catch (const PathBlocked&) {
      // the vertical leg crossed a rung time; path is genuinely unusable
    }
    // walk right at 0, then climb at x
    try {
      const int got = height_flux(
          oc, {{-0.5, 0.0}, {x, 0.0}, {x, t}});
      CHECK(got == want);
      ++checked;
    } catch (const PathBlocked&) {
    }
  }
  CHECK(checked > 100);  // most paths are usable at this density
}

TEST_CASE("vertical legs through a rung time raise PathBlocked") {
  const SpaceTimeBox box = make_box(2, 1.0, Bc::CappedAlternating);
  RungConfiguration cfg(box.n_columns());
  REQUIRE(cfg.insert(1, 0.2));  // on the slab of x = 0.5
  const auto dec = decompose(box, cfg);
  const auto oc = all_plus(dec);
  CHECK_THROWS_AS(height_flux(oc, {{0.5, 0.0}, {0.5, 0.4}}), PathBlocked);
  // the same leg on a clean slab is fine
  CHECK_NOTHROW(height_flux(oc, {{1.5, 0.0}, {1.5, 0.4}}));
}

TEST_CASE("crossing a rung changes the height by 0 or -+2") {
  std::mt19937 gen(606);
  const SpaceTimeBox box = make_box(3, 1.5, Bc::CappedAlternating);
  RngStream orient(8, 1, StreamPurpose::Orientation);
  int tested = 0;
  for (int rep = 0; rep < 150 && tested < 300; ++rep) {
    const auto cfg = testutil::random_config(box, gen, 1.0);
    const auto dec = decompose(box, cfg);
    const auto oc = sample_orientations(dec, 0.5, orient);
    for (int c = 0; c < box.n_columns(); ++c) {
      const double x = box.column_lower_site(c) + 0.5;
      for (double t : cfg.column(c)) {
        const double dt = 1e-4;
        if (t - dt <= box.t_lo() || t + dt >= box.t_hi()) continue;
        const int below = height_at(oc, x, t - dt);
        const int above = height_at(oc, x, t + dt);
        const int jump = above - below;
        CHECK((jump == 0 || jump == 2 || jump == -2));
        ++tested;
      }
    }
  }
  CHECK(tested >= 300);
}
