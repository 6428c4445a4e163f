#include <doctest.h>
#include <cmath>

#include "loopmc/errors.hpp"
#include "loopmc/observables.hpp"

using namespace loopmc;

namespace {
ModelParams capped_params(double S = 0.5, int L = 2, double beta = 1.0) {
  ParamInput in;
  in.S = S;
  return normalize_params(in, L, beta, Bc::CappedAlternating);
}

struct Fixture {
  ModelParams p;
  SpaceTimeBox box;
  RungConfiguration cfg;
  LoopDecomposition dec;
  OrientedConfiguration oc;
  ClusterDecomposition cl;
  SampleView view;

  Fixture(const ModelParams& params, std::initializer_list<Rung> rungs,
          std::initializer_list<int> sigma = {})
      : p(params), box(make_box(p)), cfg(box.n_columns()) {
    for (const Rung& r : rungs) REQUIRE(cfg.insert(r.column, r.t));
    dec = decompose(box, cfg);
    oc.dec = &dec;
    if (sigma.size() == 0) {
      oc.sigma.assign(dec.n_loops(), 1);
    } else {
      REQUIRE(static_cast<int>(sigma.size()) == dec.n_loops());
      for (int s : sigma) oc.sigma.push_back(static_cast<signed char>(s));
    }
    cl = decompose_clusters(box, cfg);
    view.dec = &dec;
    view.orient = &oc;
    view.clusters = &cl;
    view.params = &p;
  }
};
}  // namespace

TEST_CASE("spec parsing round-trips through args_text") {
  const auto c = ObservableSpec::parse("connectivity", "u=0;v=1;t=0.25");
  CHECK(c.kind == ObservableSpec::Kind::Connectivity);
  CHECK(c.u == 0);
  CHECK(c.v == 1);
  CHECK(c.t == 0.25);
  CHECK(c.args_text() == "u=0;v=1;t=0.25");
  CHECK(c.name() == "connectivity");

  const auto again =
      ObservableSpec::parse(c.name(), c.args_text());
  CHECK(again.args_text() == c.args_text());

  CHECK(ObservableSpec::parse("stagg_mag_rb", "").args_text() == "");
  CHECK(ObservableSpec::parse("dimer_order", "n=2").pair_index == 2);
  CHECK(ObservableSpec::parse("boundary_touch", "ell=1;t=0.5").ell == 1);
  const auto cl = ObservableSpec::parse("corr_length", "");
  CHECK(cl.r_lo == 2);
  CHECK(cl.r_hi == 0);  // resolved against the parameter point later

  CHECK_THROWS_AS(ObservableSpec::parse("no_such", ""), ConfigError);
  CHECK_THROWS_AS(ObservableSpec::parse("connectivity", "u=0"), ConfigError);
  CHECK_THROWS_AS(ObservableSpec::parse("connectivity", "u=0;v=1;t=0;w=9"),
                  ConfigError);
  CHECK_THROWS_AS(ObservableSpec::parse("rung_count", "u=1"), ConfigError);
}

TEST_CASE("validation against the parameter point") {
  const ModelParams p = capped_params();
  auto check_throws = [&](const char* name, const char* args,
                          const ModelParams& params) {
    CHECK_THROWS_AS(ObservableSpec::parse(name, args).validate(params),
                    ConfigError);
  };
  check_throws("connectivity", "u=0;v=3;t=0", p);     // site out of range
  check_throws("connectivity", "u=0;v=1;t=0.6", p);   // time out of range
  check_throws("boundary_mag", "u=0", p);             // interior site
  check_throws("boundary_touch", "ell=2;t=0.25", p);  // ell must be < L
  check_throws("dimer_order", "n=1", p);              // pair (1,2)... 2n+1=3
  CHECK_NOTHROW(ObservableSpec::parse("boundary_mag", "u=2").validate(p));
  CHECK_NOTHROW(ObservableSpec::parse("boundary_mag", "u=-1").validate(p));

  ParamInput q1;
  q1.Q = 1.0;
  const ModelParams pq1 = normalize_params(q1, 2, 1.0, Bc::CappedAlternating);
  check_throws("stagg_mag_rb", "", pq1);  // no orientation at Q = 1
  // Q = 1 still has S = 0, so spin_spin is legal (and identically zero).
  CHECK_NOTHROW(
      ObservableSpec::parse("spin_spin", "u=0;v=1;t=0").validate(pq1));

  ParamInput per;
  per.S = 0.5;
  const ModelParams pp = normalize_params(per, 2, 1.0, Bc::PeriodicTime);
  check_throws("boundary_mag", "u=2", pp);      // no boundary ends
  check_throws("boundary_touch", "ell=1;t=0.2", pp);
}

TEST_CASE("connectivity and spin-spin on the empty capped box") {
  Fixture f(capped_params(), {});
  const auto conn_in = ObservableSpec::parse("connectivity", "u=-1;v=0;t=0.3");
  const auto conn_out = ObservableSpec::parse("connectivity", "u=0;v=1;t=0");
  CHECK(conn_in.eval(f.view) == 1.0);
  CHECK(conn_out.eval(f.view) == 0.0);

  // spin_spin = (-1)^(u-v) C_S 1[conn];  C_S = 1/4 at S = 1/2
  const auto ss = ObservableSpec::parse("spin_spin", "u=-1;v=0;t=0");
  CHECK(ss.eval(f.view) == doctest::Approx(-0.25));
  const auto dim = ObservableSpec::parse("dimer_order", "n=0");
  CHECK(dim.eval(f.view) == 1.0);
}

TEST_CASE("orientation estimators on the empty capped box") {
  ParamInput in;
  in.S = 1.0;  // lambda = acosh(1.5)
  const ModelParams p = normalize_params(in, 2, 1.0, Bc::CappedAlternating);
  Fixture f(p, {});
  const double th = std::tanh(p.lambda);

  // every site contributes +tanh(lambda) to the staggered mean
  const auto rb = ObservableSpec::parse("stagg_mag_rb", "");
  CHECK(rb.eval(f.view) == doctest::Approx(th).epsilon(1e-12));

  // raw estimator must agree with the staggered hand-sum of tau
  const auto raw = ObservableSpec::parse("stagg_mag_raw", "");
  double hand = 0;
  for (int u = -1; u <= 2; ++u)
    hand += (u % 2 == 0 ? 1 : -1) * f.oc.tau(u, 0.0);
  CHECK(raw.eval(f.view) == doctest::Approx(hand / 4).epsilon(1e-12));

  const auto bm = ObservableSpec::parse("boundary_mag", "u=2");
  CHECK(std::abs(bm.eval(f.view)) == 1.0);

  const auto nest = ObservableSpec::parse("nesting_count", "x=-0.5;t=0");
  CHECK(nest.eval(f.view) == 1.0);
  const auto rc = ObservableSpec::parse("rung_count", "");
  CHECK(rc.eval(f.view) == 0.0);
}

TEST_CASE("boundary_touch distinguishes sealed-off regions") {
  const ModelParams p = capped_params(0.5, 2, 2.0);
  const auto spec = ObservableSpec::parse("boundary_touch", "ell=1;t=0.5");
  // empty box: the A-region at (1/2, 0) is the outside-wired cluster
  Fixture open_box(p, {});
  CHECK(spec.eval(open_box.view) == 1.0);

  // two rungs on the central A column bracket (1/2,0) but leave the interval
  // connected to nothing else: rungs at -+0.3 on column 1 cut it; the piece
  // holding t = 0 spans (-0.3, 0.3) inside the (-0.5, 0.5) x (|c-1| < 1) box
  Fixture sealed(p, {{1, -0.3}, {1, 0.3}});
  CHECK(spec.eval(sealed.view) == 0.0);

  // shrink the box below the cutting rungs: the member interval now pokes
  // out through the boundary and the event fires
  const auto shallow = ObservableSpec::parse("boundary_touch", "ell=1;t=0.29");
  CHECK(shallow.eval(sealed.view) == 1.0);
  // the full-height box still contains the interval strictly
  const auto full = ObservableSpec::parse("boundary_touch", "ell=1;t=1.0");
  CHECK(full.eval(sealed.view) == 0.0);
}

TEST_CASE("boundary_touch is monotone in the nested box") {
  const ModelParams p = capped_params(0.5, 3, 2.0);
  std::mt19937 gen(99);
  // random configs: the event 1[touch] can only grow as the box shrinks
  for (int rep = 0; rep < 30; ++rep) {
    SpaceTimeBox box = make_box(p);
    RungConfiguration cfg(box.n_columns());
    std::uniform_real_distribution<double> ut(box.t_lo(), box.t_hi());
    for (int c = 0; c < box.n_columns(); ++c)
      for (int i = 0; i < 3; ++i) cfg.insert(c, ut(gen));
    const auto dec = decompose(box, cfg);
    const auto cl = decompose_clusters(box, cfg);
    SampleView view;
    view.dec = &dec;
    view.clusters = &cl;
    view.params = &p;
    double prev = 1.0;
    for (const char* args : {"ell=1;t=0.25", "ell=2;t=0.5", "ell=2;t=0.9"}) {
      const double v =
          ObservableSpec::parse("boundary_touch", args).eval(view);
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("mean connectivity at distance and the exponential fit") {
  // synthetic exact curve p(r) = e^{-r/2} -> xi = 2
  std::vector<std::pair<double, double>> pts;
  for (int r = 1; r <= 6; ++r) pts.emplace_back(r, std::exp(-r / 2.0));
  const CorrFit fit = fit_correlation_length(pts);
  CHECK(fit.xi == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(fit.n_points == 6);
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-10));

  // weighted: down-weighted garbage point barely moves the estimate
  std::vector<double> errs(6, 1e-6);
  auto noisy = pts;
  noisy.emplace_back(7, std::exp(-3.5) * 2);
  errs.push_back(1e3);
  const CorrFit wfit = fit_correlation_length(noisy, errs);
  CHECK(wfit.xi == doctest::Approx(2.0).epsilon(1e-3));

  // non-decaying curve flags +infinity
  std::vector<std::pair<double, double>> flat = {{1, 0.5}, {2, 0.5}, {3, 0.5}};
  CHECK(std::isinf(fit_correlation_length(flat).xi));

  // too few usable points
  std::vector<std::pair<double, double>> few = {{1, 0.5}, {2, -0.1}, {3, 0.0}};
  CHECK_THROWS_AS(fit_correlation_length(few), InsufficientData);
}

TEST_CASE("translation-averaged connectivity on a fixture") {
  const ModelParams p = capped_params(0.5, 2, 1.0);
  Fixture f(p, {});
  // empty box: only the capped pairs are linked; distance 1 pairs are
  // (-1,0), (0,1), (1,2) of which 2 of 3 are capped partners
  CHECK(mean_connectivity_at_distance(f.dec, 1) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(mean_connectivity_at_distance(f.dec, 2) == 0.0);
  CHECK(mean_connectivity_at_distance(f.dec, 3) == 0.0);
}
