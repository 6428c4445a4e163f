#include "loopmc/observables.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "loopmc/csv.hpp"

namespace loopmc {

namespace {

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

std::map<std::string, double> parse_args(const std::string& args) {
  std::map<std::string, double> kv;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("bad observable argument '" + item + "' (want k=v)");
    const std::string key = item.substr(0, eq);
    try {
      kv[key] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("bad numeric value in observable argument '" + item +
                        "'");
    }
  }
  return kv;
}

double take(std::map<std::string, double>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw ConfigError("observable argument '" + key + "' is required");
  const double v = it->second;
  kv.erase(it);
  return v;
}

double take_or(std::map<std::string, double>& kv, const std::string& key,
               double dflt) {
  auto it = kv.find(key);
  if (it == kv.end()) return dflt;
  const double v = it->second;
  kv.erase(it);
  return v;
}

int as_int(double v, const std::string& key) {
  const long r = std::lround(v);
  if (std::abs(v - r) > 1e-9)
    throw ConfigError("observable argument '" + key + "' must be an integer");
  return static_cast<int>(r);
}

}  // namespace

ObservableSpec ObservableSpec::parse(const std::string& name,
                                     const std::string& args) {
  ObservableSpec o;
  auto kv = parse_args(args);
  if (name == "connectivity" || name == "spin_spin") {
    o.kind = name == "connectivity" ? Kind::Connectivity : Kind::SpinSpin;
    o.u = as_int(take(kv, "u"), "u");
    o.v = as_int(take(kv, "v"), "v");
    o.t = take_or(kv, "t", 0.0);
  } else if (name == "dimer_order") {
    o.kind = Kind::DimerOrder;
    o.pair_index = as_int(take_or(kv, "n", 0.0), "n");
  } else if (name == "stagg_mag_raw") {
    o.kind = Kind::StaggMagRaw;
  } else if (name == "stagg_mag_rb") {
    o.kind = Kind::StaggMagRb;
  } else if (name == "boundary_mag") {
    o.kind = Kind::BoundaryMag;
    o.u = as_int(take(kv, "u"), "u");
  } else if (name == "boundary_touch") {
    o.kind = Kind::BoundaryTouch;
    o.ell = as_int(take(kv, "ell"), "ell");
    o.t = take(kv, "t");
  } else if (name == "corr_length") {
    o.kind = Kind::CorrLength;
    o.r_lo = as_int(take_or(kv, "r_lo", 2.0), "r_lo");
    o.r_hi = as_int(take_or(kv, "r_hi", 0.0), "r_hi");
  } else if (name == "nesting_count") {
    o.kind = Kind::NestingCount;
    o.x = take(kv, "x");
    o.t = take_or(kv, "t", 0.0);
  } else if (name == "rung_count") {
    o.kind = Kind::RungCount;
  } else {
    throw ConfigError("unknown observable '" + name + "'");
  }
  if (!kv.empty())
    throw ConfigError("observable '" + name + "' got unexpected argument '" +
                      kv.begin()->first + "'");
  return o;
}

std::string ObservableSpec::name() const {
  switch (kind) {
    case Kind::Connectivity: return "connectivity";
    case Kind::SpinSpin: return "spin_spin";
    case Kind::DimerOrder: return "dimer_order";
    case Kind::StaggMagRaw: return "stagg_mag_raw";
    case Kind::StaggMagRb: return "stagg_mag_rb";
    case Kind::BoundaryMag: return "boundary_mag";
    case Kind::BoundaryTouch: return "boundary_touch";
    case Kind::NestingCount: return "nesting_count";
    case Kind::RungCount: return "rung_count";
    case Kind::CorrLength: return "corr_length";
  }
  return "?";
}

std::string ObservableSpec::args_text() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Connectivity:
    case Kind::SpinSpin:
      os << "u=" << u << ";v=" << v << ";t=" << format_g12(t);
      break;
    case Kind::DimerOrder:
      os << "n=" << pair_index;
      break;
    case Kind::BoundaryMag:
      os << "u=" << u;
      break;
    case Kind::BoundaryTouch:
      os << "ell=" << ell << ";t=" << format_g12(t);
      break;
    case Kind::NestingCount:
      os << "x=" << format_g12(x) << ";t=" << format_g12(t);
      break;
    case Kind::CorrLength:
      os << "r_lo=" << r_lo << ";r_hi=" << r_hi;
      break;
    case Kind::StaggMagRaw:
    case Kind::StaggMagRb:
    case Kind::RungCount:
      break;
  }
  return os.str();
}

bool ObservableSpec::needs_orientation() const {
  return kind == Kind::StaggMagRaw || kind == Kind::BoundaryMag;
}

bool ObservableSpec::needs_clusters() const {
  return kind == Kind::BoundaryTouch;
}

void ObservableSpec::validate(const ModelParams& p) const {
  const SpaceTimeBox box = make_box(p);
  auto check_site = [&](int s) {
    if (s < box.site_lo() || s > box.site_hi())
      throw OutOfRange("observable site " + std::to_string(s) +
                       " outside the chain");
  };
  auto check_time = [&](double tt) {
    if (tt < box.t_lo() || tt >= box.t_hi())
      throw OutOfRange("observable time outside [-beta/2, beta/2)");
  };
  switch (kind) {
    case Kind::Connectivity:
      check_site(u);
      check_site(v);
      check_time(t);
      break;
    case Kind::SpinSpin:
      check_site(u);
      check_site(v);
      check_time(t);
      p.spin();  // requires integer sqrt(Q)
      break;
    case Kind::DimerOrder:
      check_site(2 * pair_index - 1);
      check_site(2 * pair_index + 1);
      break;
    case Kind::StaggMagRaw:
    case Kind::StaggMagRb:
      p.lam();  // orientations exist only for sqrt(Q) >= 2
      break;
    case Kind::BoundaryMag:
      if (p.bc != Bc::CappedAlternating)
        throw NotApplicable("boundary_mag reads the seeded boundary spin and "
                            "needs the capped box");
      if (u != box.site_lo() && u != box.site_hi())
        throw OutOfRange("boundary_mag site must be -L+1 or L");
      p.lam();
      break;
    case Kind::BoundaryTouch:
      if (p.bc != Bc::CappedAlternating)
        throw NotApplicable("boundary_touch needs a wired outer region");
      if (ell < 1 || ell > p.L - 1)
        throw OutOfRange("boundary_touch needs 1 <= ell <= L-1");
      if (t <= 0 || t > p.beta / 2)
        throw OutOfRange("boundary_touch needs 0 < t <= beta/2");
      break;
    case Kind::NestingCount:
      if (x < box.site_lo() - 1.0 || x > box.site_hi() + 1.0)
        throw OutOfRange("nesting_count x outside the box");
      check_time(t);
      break;
    case Kind::RungCount:
      break;
    case Kind::CorrLength: {
      if (r_lo < 1) throw OutOfRange("corr_length needs r_lo >= 1");
      const int hi = r_hi > 0 ? r_hi : p.L / 2;
      if (hi < r_lo || hi > box.n_lines() - 1)
        throw OutOfRange("corr_length window [r_lo, r_hi] is empty or wider "
                         "than the chain");
      break;
    }
  }
}

double ObservableSpec::eval(const SampleView& s) const {
  const LoopDecomposition& dec = *s.dec;
  switch (kind) {
    case Kind::Connectivity:
      return same_loop(dec, u, 0.0, v, t) ? 1.0 : 0.0;
    case Kind::SpinSpin: {
      const double S = s.params->spin();
      const double cs = S * (S + 1.0) / 3.0;
      return same_loop(dec, u, 0.0, v, t) ? parity_sign(u - v) * cs : 0.0;
    }
    case Kind::DimerOrder: {
      const double left =
          same_loop(dec, 2 * pair_index - 1, 0.0, 2 * pair_index, 0.0) ? 1 : 0;
      const double right =
          same_loop(dec, 2 * pair_index, 0.0, 2 * pair_index + 1, 0.0) ? 1 : 0;
      return left - right;
    }
    case Kind::StaggMagRaw: {
      const auto& box = dec.box;
      double acc = 0;
      for (int site = box.site_lo(); site <= box.site_hi(); ++site)
        acc += parity_sign(site) * s.orient->tau(site, 0.0);
      return acc / box.n_lines();
    }
    case Kind::StaggMagRb: {
      const auto& box = dec.box;
      const double th = std::tanh(s.params->lam());
      double acc = 0;
      for (int site = box.site_lo(); site <= box.site_hi(); ++site)
        acc += parity_sign(site) * th * dec.plus_dir_at(site, 0.0);
      return acc / box.n_lines();
    }
    case Kind::BoundaryMag:
      return s.orient->tau(u, 0.0);
    case Kind::BoundaryTouch: {
      // The A-region through (1/2,0) reaches the nested-box boundary unless
      // the region is bounded (not wired to the outside) and every one of its
      // column intervals sits strictly inside the nested box.
      const ClusterDecomposition& cl = *s.clusters;
      const SpaceTimeBox& box = cl.box;
      const int center = box.L - 1;  // the column over (0,1)
      const int id0 = cl.cluster_at_column(center, 0.0);
      if (id0 == cl.outside_cluster) return 1.0;
      for (int c = 0; c < box.n_columns(); ++c) {
        if (box.column_type(c) != ColumnType::A) continue;
        const auto& ts = cl.cuts[c];
        const int k = static_cast<int>(ts.size());
        for (int i = 0; i <= k; ++i) {
          if (cl.interval_cluster[c][i] != id0) continue;
          const double a = (i == 0) ? box.t_lo() : ts[i - 1];
          const double b = (i == k) ? box.t_hi() : ts[i];
          const bool inside =
              std::abs(c - center) < ell && a > -t && b < t;
          if (!inside) return 1.0;
        }
      }
      return 0.0;
    }
    case Kind::NestingCount:
      return encircling_count(dec, x, t);
    case Kind::RungCount:
      return dec.config.total();
    case Kind::CorrLength:
      break;  // derived from the whole run, never from one sample
  }
  throw std::logic_error("corr_length has no per-sample value");
}

double mean_connectivity_at_distance(const LoopDecomposition& dec, int r) {
  const SpaceTimeBox& box = dec.box;
  if (r < 1 || r > box.n_lines() - 1)
    throw OutOfRange("separation outside the chain");
  double acc = 0;
  int n = 0;
  for (int u = box.site_lo(); u + r <= box.site_hi(); ++u) {
    acc += same_loop(dec, u, 0.0, u + r, 0.0) ? 1.0 : 0.0;
    ++n;
  }
  return acc / n;
}

CorrFit fit_correlation_length(
    const std::vector<std::pair<double, double>>& separation_value,
    const std::vector<double>& value_stderr) {
  const bool weighted = !value_stderr.empty();
  if (weighted && value_stderr.size() != separation_value.size())
    throw InsufficientData("stderr list does not match the point list");

  std::vector<double> xs, ys, ws;
  for (std::size_t i = 0; i < separation_value.size(); ++i) {
    const auto [r, p] = separation_value[i];
    if (p <= 0) continue;
    double w = 1.0;
    if (weighted) {
      const double sig = value_stderr[i] / p;  // stderr of log p
      if (!(sig > 0)) continue;  // an exact point would get infinite weight
      w = 1.0 / (sig * sig);
    }
    xs.push_back(r);
    ys.push_back(std::log(p));
    ws.push_back(w);
  }
  const int n = static_cast<int>(xs.size());
  if (n < 3)
    throw InsufficientData("correlation length fit needs >= 3 positive points");

  double wsum = 0, xbar = 0, ybar = 0;
  for (int i = 0; i < n; ++i) {
    wsum += ws[i];
    xbar += ws[i] * xs[i];
    ybar += ws[i] * ys[i];
  }
  xbar /= wsum;
  ybar /= wsum;
  double sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    const double dx = xs[i] - xbar;
    const double dy = ys[i] - ybar;
    sxx += ws[i] * dx * dx;
    sxy += ws[i] * dx * dy;
    syy += ws[i] * dy * dy;
  }
  if (sxx <= 0)
    throw InsufficientData("correlation length fit is degenerate");
  const double slope = sxy / sxx;

  double ss_res = 0;
  for (int i = 0; i < n; ++i) {
    const double resid = ys[i] - ybar - slope * (xs[i] - xbar);
    ss_res += ws[i] * resid * resid;
  }
  CorrFit fit;
  fit.n_points = n;
  fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  // Slope variance: exact from the weights when they are true 1/sigma^2,
  // residual-based otherwise.
  const double var_slope =
      weighted ? 1.0 / sxx : (n > 2 ? ss_res / (n - 2) / sxx : 0.0);
  if (slope >= 0) {
    fit.xi = std::numeric_limits<double>::infinity();
    fit.xi_stderr = 0;
    return fit;
  }
  fit.xi = -1.0 / slope;
  fit.xi_stderr = std::sqrt(var_slope) / (slope * slope);
  return fit;
}

}  // namespace loopmc
