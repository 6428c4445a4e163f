#include "loopmc/commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "loopmc/clusters.hpp"
#include "loopmc/config_file.hpp"
#include "loopmc/csv.hpp"
#include "loopmc/errors.hpp"
#include "loopmc/observables.hpp"
#include "loopmc/oracle.hpp"
#include "loopmc/params.hpp"
#include "loopmc/sampler.hpp"

namespace loopmc {

const char* code_version() { return "0.1.0"; }

namespace {

void validate_run_id(const std::string& id) {
  if (id.empty()) throw ConfigError("run_id must not be empty");
  for (char ch : id) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '_' || ch == '-' ||
                    ch == '.';
    if (!ok)
      throw ConfigError("run_id may only use letters, digits, '_', '-', '.'");
  }
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// "name1, name2(k=v;k=v), ..." -> specs; commas inside parentheses belong
// to nobody (arguments separate with ';').
std::vector<ObservableSpec> parse_observable_list(const std::string& text) {
  std::vector<ObservableSpec> out;
  std::string item;
  int depth = 0;
  auto flush = [&]() {
    const std::string s = trim(item);
    item.clear();
    if (s.empty()) return;
    const auto open = s.find('(');
    std::string name = s, args;
    if (open != std::string::npos) {
      if (s.back() != ')')
        throw ConfigError("observable '" + s + "': missing ')'");
      name = trim(s.substr(0, open));
      args = s.substr(open + 1, s.size() - open - 2);
    }
    out.push_back(ObservableSpec::parse(name, args));
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      flush();
    } else {
      item += ch;
    }
  }
  if (depth != 0) throw ConfigError("unbalanced parentheses in observables");
  flush();
  if (out.empty()) throw ConfigError("observables list is empty");
  return out;
}

ModelParams params_from_view(KeyView& kv) {
  const double dL = kv.take_double("L");
  const int L = static_cast<int>(std::lround(dL));
  if (dL != L) throw ConfigError("L must be an integer");
  const double beta = kv.take_double("beta");
  const Bc bc = bc_from_name(kv.take_str("bc", "capped"));
  ParamInput in;
  in.S = kv.take_opt_double("S");
  in.Q = kv.take_opt_double("Q");
  in.lambda = kv.take_opt_double("lambda");
  in.delta = kv.take_opt_double("delta");
  return normalize_params(in, L, beta, bc);
}

// One config file can drive the whole sample -> oracle -> compare pipeline;
// subcommands that take no parameter point accept the shared top-level keys
// silently instead of rejecting them as unknown.
void discard_shared_params(KeyView& kv, bool keep_beta) {
  for (const char* k : {"L", "bc", "S", "Q", "lambda", "delta"}) kv.take(k);
  if (!keep_beta) kv.take("beta");
}

std::string join_path(const std::optional<std::string>& dir,
                      const std::string& name) {
  if (!dir || name.empty() || name.front() == '/') return name;
  std::string d = *dir;
  if (!d.empty() && d.back() != '/') d += '/';
  return d + name;
}

ResultRecord base_record(const ModelParams& p, const std::string& run_id,
                         std::uint64_t seed) {
  ResultRecord r;
  r.run_id = run_id;
  r.L = p.L;
  r.beta = p.beta;
  r.Q = p.Q;
  if (p.has_xxz) r.lambda = p.lambda;
  if (p.has_spin) r.S = p.S;
  r.bc = bc_name(p.bc);
  r.seed = seed;
  r.code_version = code_version();
  return r;
}

// Resolves defaults that depend on the parameter point (corr_length window).
std::vector<ObservableSpec> resolve_specs(std::vector<ObservableSpec> specs,
                                          const ModelParams& p) {
  for (auto& s : specs) {
    if (s.kind == ObservableSpec::Kind::CorrLength && s.r_hi == 0)
      s.r_hi = std::max(s.r_lo, p.L / 2);
    s.validate(p);
  }
  return specs;
}

// One full MC run at one parameter point.  chain_base offsets the RNG
// substream indices so scan points never share streams.
std::vector<ResultRecord> run_mc_point(
    const ModelParams& p, const RunSchedule& sched, int chains,
    std::uint64_t seed, std::uint64_t chain_base,
    const std::vector<ObservableSpec>& specs_in, const std::string& init,
    const std::string& run_id, bool* low_neff) {
  if (chains < 1) throw ConfigError("chains must be >= 1");
  sched.validate();
  const auto specs = resolve_specs(specs_in, p);

  bool want_orient = false, want_clusters = false;
  // series layout: direct estimators first, then the connectivity bins of
  // each corr_length spec
  std::vector<int> series_of_spec(specs.size(), -1);
  int n_series = 0;
  for (std::size_t k = 0; k < specs.size(); ++k) {
    if (specs[k].kind == ObservableSpec::Kind::CorrLength) continue;
    want_orient |= specs[k].needs_orientation();
    want_clusters |= specs[k].needs_clusters();
    series_of_spec[k] = n_series++;
  }
  for (std::size_t k = 0; k < specs.size(); ++k) {
    if (specs[k].kind != ObservableSpec::Kind::CorrLength) continue;
    series_of_spec[k] = n_series;
    n_series += specs[k].r_hi - specs[k].r_lo + 1;
  }

  const long retained =
      static_cast<long>(chains) * (sched.measure_sweeps / sched.thinning);
  std::vector<std::vector<double>> series(n_series);
  for (auto& s : series) s.reserve(retained);

  for (int ch = 0; ch < chains; ++ch) {
    ChainState st(p, seed, chain_base + static_cast<std::uint64_t>(ch));
    if (init == "empty") {
      st.init_empty();
    } else if (init == "poisson") {
      st.init_poisson();
    } else {
      throw ConfigError("init must be 'poisson' or 'empty'");
    }
    for (long i = 0; i < sched.burnin_sweeps; ++i) st.sweep();
    for (long i = 0; i < sched.measure_sweeps; ++i) {
      st.sweep();
      if ((i + 1) % sched.thinning != 0) continue;
      const LoopDecomposition& dec = st.decomposition();
      OrientedConfiguration oc;
      ClusterDecomposition cl;
      SampleView view;
      view.dec = &dec;
      view.params = &p;
      if (want_orient) {
        oc = st.orientation();
        view.orient = &oc;
      }
      if (want_clusters) {
        cl = decompose_clusters(st.box(), st.config());
        view.clusters = &cl;
      }
      for (std::size_t k = 0; k < specs.size(); ++k) {
        if (specs[k].kind == ObservableSpec::Kind::CorrLength) {
          int si = series_of_spec[k];
          for (int r = specs[k].r_lo; r <= specs[k].r_hi; ++r)
            series[si++].push_back(mean_connectivity_at_distance(dec, r));
        } else {
          series[series_of_spec[k]].push_back(specs[k].eval(view));
        }
      }
    }
  }

  std::vector<ResultRecord> rows;
  rows.reserve(specs.size());
  for (std::size_t k = 0; k < specs.size(); ++k) {
    ResultRecord r = base_record(p, run_id, seed);
    r.observable = specs[k].name();
    r.args = specs[k].args_text();
    if (specs[k].kind == ObservableSpec::Kind::CorrLength) {
      std::vector<std::pair<double, double>> pts;
      std::vector<double> errs;
      double neff_min = std::numeric_limits<double>::infinity();
      double tau_max = 0;
      int si = series_of_spec[k];
      for (int sep = specs[k].r_lo; sep <= specs[k].r_hi; ++sep, ++si) {
        const BatchStats bs = batch_statistics(series[si], sched.batches);
        if (bs.mean <= 0 || bs.n_eff < 100) continue;  // unusable bin
        pts.emplace_back(sep, bs.mean);
        errs.push_back(bs.stderr_mean);
        neff_min = std::min(neff_min, bs.n_eff);
        tau_max = std::max(tau_max, bs.tau_int);
      }
      try {
        const CorrFit fit = fit_correlation_length(pts, errs);
        r.mean = fit.xi;
        r.stderr_mean = fit.xi_stderr;
        r.n_eff = neff_min;
        r.tau_int = tau_max;
      } catch (const InsufficientData&) {
        r.mean = std::numeric_limits<double>::quiet_NaN();
        r.stderr_mean = std::numeric_limits<double>::quiet_NaN();
        r.n_eff = 0;
        r.tau_int = 0;
      }
    } else {
      const BatchStats bs =
          batch_statistics(series[series_of_spec[k]], sched.batches);
      r.mean = bs.mean;
      r.stderr_mean = bs.stderr_mean;
      r.n_eff = bs.n_eff;
      r.tau_int = bs.tau_int;
    }
    if (r.n_eff < 50 && low_neff) *low_neff = true;
    rows.push_back(std::move(r));
  }
  return rows;
}

RunSchedule schedule_from_view(KeyView& kv) {
  RunSchedule sched;
  sched.burnin_sweeps = kv.take_long("burnin", sched.burnin_sweeps);
  sched.measure_sweeps = kv.take_long("sweeps", sched.measure_sweeps);
  sched.thinning = static_cast<int>(kv.take_long("thinning", sched.thinning));
  sched.batches = static_cast<int>(kv.take_long("batches", sched.batches));
  return sched;
}

// ------------------------------ oracle math ------------------------------

// <T Sz_u(0) Sz_v(t)> in the state matching the boundary condition.
double exact_szsz(const ModelParams& p, int u, int v, double t, long cap) {
  SpinChainOracle af(p.L, p.spin(), cap);
  const Matrix su = af.sz(u), sv = af.sz(v);
  if (p.bc == Bc::CappedAlternating) {
    const EigenSystem es = diagonalize(af.hamiltonian_af(false));
    const Vector seed = af.seed_dimer();
    if (t >= 0)
      return seeded_two_time(es, seed, p.beta, su, 0.0, sv, t);
    return seeded_two_time(es, seed, p.beta, sv, t, su, 0.0);
  }
  const EigenSystem es =
      diagonalize(af.hamiltonian_af(p.bc == Bc::PeriodicBoth));
  std::vector<std::pair<Matrix, double>> ins;
  if (t >= 0) {
    ins = {{su, 0.0}, {sv, t}};
  } else {
    ins = {{sv, t}, {su, 0.0}};
  }
  return tracial_time_ordered(es, p.beta, ins);
}

double exact_connectivity(const ModelParams& p, int u, int v, double t,
                          long cap) {
  if (u == v && t == 0) return 1.0;
  const double S = p.spin();
  const double cs = S * (S + 1.0) / 3.0;
  const double parity = ((u - v) % 2 == 0) ? 1.0 : -1.0;
  return parity * exact_szsz(p, u, v, t, cap) / cs;
}

// <tau^z_u at time 0> in the spin-1/2 seeded chain, which matches the
// orientation marginal of the capped loop measure.  On periodic boxes the
// two measures part ways: a time-winding loop makes no U-turns, so its
// orientations weigh 2, not sqrt(Q), and no finite-chain state reproduces
// the sampled expectation.
double exact_tau(const ModelParams& p, int u, long cap) {
  const double lambda = p.lam();
  if (p.bc != Bc::CappedAlternating)
    throw NotApplicable(
        "orientation observables have a closed-form value only on capped "
        "boxes (winding loops decouple from the chain state)");
  if (p.L % 2 != 0)
    throw NotApplicable("the seeded-chain oracle needs even L");
  SpinChainOracle xxz(p.L, 0.5, cap);
  const Matrix tz = 2.0 * xxz.sz(u);
  const EigenSystem es =
      diagonalize(xxz.hamiltonian_xxz(lambda, SpinChainOracle::Xxz::Kform));
  return seeded_expectation(es, xxz.seed_neel(lambda), p.beta, tz);
}

double exact_value(const ModelParams& p, const ObservableSpec& spec,
                   long cap) {
  using Kind = ObservableSpec::Kind;
  switch (spec.kind) {
    case Kind::Connectivity:
      return exact_connectivity(p, spec.u, spec.v, spec.t, cap);
    case Kind::SpinSpin: {
      if (spec.u == spec.v && spec.t == 0) {
        const double S = p.spin();
        return S * (S + 1.0) / 3.0;
      }
      return exact_szsz(p, spec.u, spec.v, spec.t, cap);
    }
    case Kind::DimerOrder: {
      const int n = spec.pair_index;
      return exact_connectivity(p, 2 * n - 1, 2 * n, 0.0, cap) -
             exact_connectivity(p, 2 * n, 2 * n + 1, 0.0, cap);
    }
    case Kind::BoundaryMag:
      return exact_tau(p, spec.u, cap);
    case Kind::StaggMagRaw:
    case Kind::StaggMagRb: {
      // both estimators are unbiased for the same staggered moment
      double acc = 0;
      for (int u = -p.L + 1; u <= p.L; ++u) {
        const double sgn = (u % 2 == 0) ? 1.0 : -1.0;
        acc += sgn * exact_tau(p, u, cap);
      }
      return acc / (2 * p.L);
    }
    default:
      throw NotApplicable("observable '" + spec.name() +
                          "' has no exact-diagonalization value");
  }
}

}  // namespace

int cmd_sample(const CliOptions& cli) {
  if (cli.config_path.empty()) throw ConfigError("sample needs --config");
  const ConfigFile cf = ConfigFile::parse_file(cli.config_path);
  KeyView kv(cf.merged("sample"));
  const ModelParams p = params_from_view(kv);
  RunSchedule sched = schedule_from_view(kv);
  int chains = static_cast<int>(kv.take_long("chains", 1));
  if (cli.chains) chains = *cli.chains;
  std::uint64_t seed = kv.take_u64("seed", 1);
  if (cli.seed) seed = *cli.seed;
  const std::string run_id = kv.take_str("run_id", "run");
  validate_run_id(run_id);
  const std::string init = kv.take_str("init", "poisson");
  const std::string out_name = kv.take_str("out", run_id + ".csv");
  const auto obs_text = kv.take("observables");
  if (!obs_text) throw ConfigError("sample needs an 'observables' key");
  kv.reject_leftovers("sample");

  const auto specs = parse_observable_list(*obs_text);
  bool low = false;
  const auto rows =
      run_mc_point(p, sched, chains, seed, 0, specs, init, run_id, &low);
  write_csv(join_path(cli.out_dir, out_name), rows);
  if (low) {
    std::cerr << "warning: fewer than 50 effective samples for at least one "
                 "observable; error bars are unreliable\n";
    return 2;
  }
  return 0;
}

int cmd_scan(const CliOptions& cli) {
  if (cli.config_path.empty()) throw ConfigError("scan needs --config");
  const ConfigFile cf = ConfigFile::parse_file(cli.config_path);
  KeyView kv(cf.merged("scan"));

  // base point; vary_* keys replace fields one cartesian combination at a
  // time (order: L, beta, lambda, Q; inner loops vary fastest)
  const double base_L = kv.take_double("L");
  const double base_beta = kv.take_double("beta");
  const Bc bc = bc_from_name(kv.take_str("bc", "capped"));
  ParamInput base_in;
  base_in.S = kv.take_opt_double("S");
  base_in.Q = kv.take_opt_double("Q");
  base_in.lambda = kv.take_opt_double("lambda");
  base_in.delta = kv.take_opt_double("delta");

  auto list_or = [&](const char* key, double base) {
    const auto text = kv.take(key);
    if (!text) return std::vector<double>{base};
    const auto v = parse_double_list(*text);
    if (v.empty()) throw ConfigError(std::string(key) + " list is empty");
    return v;
  };
  const auto l_list = list_or("vary_L", base_L);
  const auto beta_list = list_or("vary_beta", base_beta);
  const auto lambda_text = kv.take("vary_lambda");
  const auto q_text = kv.take("vary_Q");

  RunSchedule sched = schedule_from_view(kv);
  int chains = static_cast<int>(kv.take_long("chains", 1));
  if (cli.chains) chains = *cli.chains;
  std::uint64_t seed = kv.take_u64("seed", 1);
  if (cli.seed) seed = *cli.seed;
  const std::string run_id = kv.take_str("run_id", "scan");
  validate_run_id(run_id);
  const std::string init = kv.take_str("init", "poisson");
  const std::string out_name = kv.take_str("out", run_id + ".csv");
  const auto obs_text = kv.take("observables");
  if (!obs_text) throw ConfigError("scan needs an 'observables' key");
  kv.reject_leftovers("scan");
  const auto specs = parse_observable_list(*obs_text);

  std::vector<double> lambda_list, q_list;
  if (lambda_text) lambda_list = parse_double_list(*lambda_text);
  if (q_text) q_list = parse_double_list(*q_text);
  if (!lambda_list.empty() && !q_list.empty())
    throw ConfigError("vary_lambda and vary_Q cannot be combined");

  std::vector<ResultRecord> rows;
  bool low = false;
  std::uint64_t point = 0;
  for (double dl : l_list) {
    for (double db : beta_list) {
      const std::size_t n_inner =
          std::max<std::size_t>(1, lambda_list.size() + q_list.size());
      for (std::size_t j = 0; j < n_inner; ++j) {
        ParamInput in = base_in;
        if (!lambda_list.empty()) {
          in = ParamInput{};
          in.lambda = lambda_list[j];
        } else if (!q_list.empty()) {
          in = ParamInput{};
          in.Q = q_list[j];
        }
        const int L = static_cast<int>(std::lround(dl));
        if (dl != L) throw ConfigError("vary_L entries must be integers");
        const ModelParams p = normalize_params(in, L, db, bc);
        auto point_rows =
            run_mc_point(p, sched, chains, seed,
                         point * static_cast<std::uint64_t>(chains), specs,
                         init, run_id, &low);
        for (auto& r : point_rows) rows.push_back(std::move(r));
        ++point;
      }
    }
  }
  write_csv(join_path(cli.out_dir, out_name), rows);
  if (low) {
    std::cerr << "warning: fewer than 50 effective samples for at least one "
                 "observable; error bars are unreliable\n";
    return 2;
  }
  return 0;
}

int cmd_oracle(const CliOptions& cli) {
  if (cli.config_path.empty()) throw ConfigError("oracle needs --config");
  const ConfigFile cf = ConfigFile::parse_file(cli.config_path);
  KeyView kv(cf.merged("oracle"));
  const ModelParams p = params_from_view(kv);
  long cap = kv.take_long("cap", 4096);
  if (cli.cap) cap = *cli.cap;
  const std::string run_id = kv.take_str("run_id", "oracle");
  validate_run_id(run_id);
  const std::string out_name = kv.take_str("out", run_id + ".csv");
  const auto obs_text = kv.take("observables");
  if (!obs_text) throw ConfigError("oracle needs an 'observables' key");
  kv.reject_leftovers("oracle");

  auto specs = resolve_specs(parse_observable_list(*obs_text), p);
  std::vector<ResultRecord> rows;
  for (const auto& spec : specs) {
    ResultRecord r = base_record(p, run_id, 0);
    r.observable = spec.name();
    r.args = spec.args_text();
    r.mean = exact_value(p, spec, cap);
    r.stderr_mean = 0;
    r.n_eff = 0;
    r.tau_int = 0;
    rows.push_back(std::move(r));
  }
  write_csv(join_path(cli.out_dir, out_name), rows);
  return 0;
}

int cmd_verify(const CliOptions& cli) {
  std::map<std::string, std::string> merged;
  if (!cli.config_path.empty())
    merged = ConfigFile::parse_file(cli.config_path).merged("verify");
  KeyView kv(merged);
  const auto s_list = parse_double_list(kv.take_str("S_list", "0.5 1"));
  const auto l_list = parse_double_list(kv.take_str("L_list", "1 2"));
  const auto lam_list = parse_double_list(kv.take_str("lambda_list",
                                                      "0 0.5 1"));
  const double beta = kv.take_double("beta", 1.0);
  long cap = kv.take_long("cap", 4096);
  if (cli.cap) cap = *cli.cap;
  const auto out_name = kv.take("out");
  discard_shared_params(kv, /*keep_beta=*/true);  // beta already consumed
  kv.reject_leftovers("verify");

  std::string report;
  bool all_pass = true;
  for (double S : s_list) {
    for (double dl : l_list) {
      const int L = static_cast<int>(std::lround(dl));
      if (dl != L || L < 1) throw ConfigError("L_list entries must be >= 1");
      bool fits = true;
      try {
        spin_space_dim(L, S, cap);
        spin_space_dim(L, 0.5, cap);
      } catch (const DimensionCap&) {
        fits = false;
      }
      if (!fits) {
        std::cerr << "note: skipping S=" << S << " L=" << L
                  << " (dimension over cap " << cap << ")\n";
        continue;
      }
      for (double lambda : lam_list) {
        auto results = run_identity_suite(L, S, lambda, beta, cap);
        std::ostringstream tag;
        tag << "[S=" << S << ",L=" << L << ",lambda=" << lambda << "]";
        for (auto& r : results) {
          r.name += tag.str();
          all_pass = all_pass && r.pass;
        }
        report += identity_report_json(results);
      }
    }
  }
  std::cout << report;
  if (out_name) write_text_atomic(join_path(cli.out_dir, *out_name), report);
  if (!all_pass) {
    std::cerr << "verify: at least one identity failed\n";
    return 1;
  }
  return 0;
}

int cmd_compare(const CliOptions& cli) {
  std::string mc_path, oracle_path;
  std::optional<std::string> out_name;
  if (cli.args.size() == 2) {
    mc_path = cli.args[0];
    oracle_path = cli.args[1];
  }
  if (!cli.config_path.empty()) {
    KeyView kv(ConfigFile::parse_file(cli.config_path).merged("compare"));
    if (mc_path.empty()) {
      mc_path = kv.take_str("mc", "");
      oracle_path = kv.take_str("oracle", "");
    } else {
      kv.take("mc");
      kv.take("oracle");
    }
    out_name = kv.take("out");
    discard_shared_params(kv, /*keep_beta=*/false);
    kv.reject_leftovers("compare");
  }
  if (mc_path.empty() || oracle_path.empty())
    throw ConfigError("compare needs the two inputs: either positional "
                      "arguments MC.csv ORACLE.csv or config keys mc/oracle");

  const auto mc_rows = read_csv(mc_path);
  const auto or_rows = read_csv(oracle_path);
  std::map<std::string, const ResultRecord*> oracle_by_key;
  for (const auto& r : or_rows) {
    if (!oracle_by_key.emplace(r.key(), &r).second)
      throw KeyMismatch("duplicate oracle key: " + r.key());
  }
  std::set<std::string> seen;
  std::ostringstream rep;
  int failures = 0;
  for (const auto& m : mc_rows) {
    const std::string key = m.key();
    if (!seen.insert(key).second)
      throw KeyMismatch("duplicate sampler key: " + key);
    auto it = oracle_by_key.find(key);
    if (it == oracle_by_key.end())
      throw KeyMismatch("no oracle row for key: " + key);
    const double exact = it->second->mean;
    double z;
    if (m.stderr_mean > 0) {
      z = (m.mean - exact) / m.stderr_mean;
    } else {
      // degenerate estimator (every sample identical): allow only the
      // eigensolver's residual-scale roundoff
      const double tol = 1e-10 * std::max(1.0, std::abs(exact));
      z = (std::abs(m.mean - exact) <= tol)
              ? 0.0
              : std::numeric_limits<double>::infinity();
    }
    const bool pass = std::abs(z) <= 3.0;
    if (!pass) ++failures;
    rep << (pass ? "PASS" : "FAIL") << " z=" << format_g12(z)
        << " mc=" << format_g12(m.mean) << " exact=" << format_g12(exact)
        << " stderr=" << format_g12(m.stderr_mean) << "  " << m.observable
        << (m.args.empty() ? "" : "(" + m.args + ")") << " @ L=" << m.L
        << " beta=" << format_g12(m.beta) << " Q=" << format_g12(m.Q)
        << " bc=" << m.bc << '\n';
  }
  for (const auto& r : or_rows) {
    if (!seen.count(r.key()))
      throw KeyMismatch("no sampler row for key: " + r.key());
  }
  rep << "compare: " << mc_rows.size() << " keys, " << failures
      << " failure(s)\n";
  std::cout << rep.str();
  if (out_name) write_text_atomic(join_path(cli.out_dir, *out_name),
                                  rep.str());
  return failures == 0 ? 0 : 5;
}

int run_command(int (*fn)(const CliOptions&), const CliOptions& cli) {
  try {
    return fn(cli);
  } catch (const DimensionCap& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace loopmc
