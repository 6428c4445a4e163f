#include <doctest.h>

#include "loopmc/errors.hpp"
#include "loopmc/rung_config.hpp"

using namespace loopmc;

TEST_CASE("insertion keeps columns sorted and rejects duplicates") {
  RungConfiguration cfg(3);
  CHECK(cfg.insert(1, 0.5));
  CHECK(cfg.insert(1, -0.25));
  CHECK(cfg.insert(0, 0.5));
  CHECK_FALSE(cfg.insert(1, 0.5));  // exact duplicate in the same column
  CHECK(cfg.total() == 3);
  CHECK(cfg.column(1)[0] == -0.25);
  CHECK(cfg.column(1)[1] == 0.5);
  CHECK(cfg.contains(0, 0.5));
  CHECK_FALSE(cfg.contains(2, 0.5));
}

TEST_CASE("nth walks rungs in (column, time) order") {
  RungConfiguration cfg(2);
  cfg.insert(1, 0.1);
  cfg.insert(0, 0.7);
  cfg.insert(0, -0.3);
  const Rung r0 = cfg.nth(0);
  CHECK(r0.column == 0);
  CHECK(r0.t == -0.3);
  CHECK(cfg.nth(1).t == 0.7);
  CHECK(cfg.nth(2).column == 1);
}

TEST_CASE("erase by index and by exact time") {
  RungConfiguration cfg(2);
  cfg.insert(0, 0.1);
  cfg.insert(0, 0.2);
  cfg.erase(0, 0);
  CHECK(cfg.total() == 1);
  CHECK(cfg.column(0)[0] == 0.2);
  cfg.erase_time(0, 0.2);
  CHECK(cfg.total() == 0);
  CHECK_THROWS_AS(cfg.erase_time(0, 0.2), OutOfRange);
}

TEST_CASE("equality and clear") {
  RungConfiguration a(2), b(2);
  a.insert(0, 0.5);
  CHECK_FALSE(a == b);
  b.insert(0, 0.5);
  CHECK(a == b);
  a.clear();
  CHECK(a.total() == 0);
  CHECK(a.n_columns() == 2);
}
