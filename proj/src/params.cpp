#include "loopmc/params.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace loopmc {

namespace {

constexpr double kRelTol = 1e-12;

bool close_rel(double a, double b) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kRelTol * scale;
}

}  // namespace

std::string bc_name(Bc bc) {
  switch (bc) {
    case Bc::CappedAlternating: return "capped";
    case Bc::PeriodicTime: return "periodic_time";
    case Bc::PeriodicBoth: return "periodic_both";
  }
  return "?";
}

Bc bc_from_name(const std::string& name) {
  if (name == "capped") return Bc::CappedAlternating;
  if (name == "periodic_time") return Bc::PeriodicTime;
  if (name == "periodic_both") return Bc::PeriodicBoth;
  throw ConfigError("unknown bc '" + name +
                    "' (expected capped | periodic_time | periodic_both)");
}

double ModelParams::spin() const {
  if (!has_spin)
    throw NotApplicable("spin S undefined: sqrt(Q) = " +
                        std::to_string(sqrt_q) + " is not a positive integer");
  return S;
}

double ModelParams::lam() const {
  if (!has_xxz)
    throw NotApplicable("lambda undefined: sqrt(Q) = " +
                        std::to_string(sqrt_q) + " < 2");
  return lambda;
}

ModelParams normalize_params(const ParamInput& in, int L, double beta, Bc bc) {
  if (L < 1) throw OutOfRange("L must be >= 1");
  if (bc == Bc::PeriodicBoth && L < 2)
    throw NotApplicable("periodic_both needs L >= 2 (distinct wrap column)");
  if (!(beta > 0)) throw OutOfRange("beta must be > 0");
  if (!in.S && !in.Q && !in.lambda && !in.delta)
    throw ConfigError("at least one of S, Q, lambda, Delta must be given");

  // Each given field maps to sqrt(Q); all candidates must agree.
  struct Candidate {
    const char* name;
    double sqrt_q;
  };
  std::vector<Candidate> cand;

  if (in.S) {
    double S = *in.S;
    double twoS = 2.0 * S;
    if (S < 0 || std::abs(twoS - std::round(twoS)) > 1e-9)
      throw OutOfRange("S must be a non-negative half-integer");
    cand.push_back({"S", 2.0 * S + 1.0});
  }
  if (in.Q) {
    if (*in.Q < 1.0) throw OutOfRange("Q must be >= 1");
    cand.push_back({"Q", std::sqrt(*in.Q)});
  }
  if (in.delta) {
    if (*in.delta < 1.0) throw OutOfRange("Delta must be >= 1");
    cand.push_back({"Delta", 2.0 * *in.delta});
  }
  if (in.lambda) {
    cand.push_back({"lambda", 2.0 * std::cosh(*in.lambda)});
  }

  for (size_t i = 1; i < cand.size(); ++i) {
    if (!close_rel(cand[0].sqrt_q, cand[i].sqrt_q)) {
      std::ostringstream os;
      os << "inconsistent parameters: " << cand[0].name << " implies sqrt(Q) = "
         << cand[0].sqrt_q << " but " << cand[i].name << " implies "
         << cand[i].sqrt_q;
      throw Inconsistent(os.str());
    }
  }

  ModelParams p;
  p.sqrt_q = cand[0].sqrt_q;
  p.Q = in.Q ? *in.Q : p.sqrt_q * p.sqrt_q;
  p.L = L;
  p.beta = beta;
  p.bc = bc;

  double spin = (p.sqrt_q - 1.0) / 2.0;
  p.has_spin = std::abs(2.0 * spin - std::round(2.0 * spin)) <= 1e-9 &&
               p.sqrt_q >= 1.0 - kRelTol;
  p.S = p.has_spin ? std::round(2.0 * spin) / 2.0 : 0.0;

  p.has_xxz = p.sqrt_q >= 2.0 - kRelTol;
  if (p.has_xxz) {
    if (in.lambda) {
      p.lambda = *in.lambda;  // sign preserved
    } else {
      double c = std::max(1.0, p.sqrt_q / 2.0);
      p.lambda = std::acosh(c);
    }
    p.delta = std::cosh(p.lambda);
  } else {
    p.lambda = 0.0;
    p.delta = 1.0;
  }
  return p;
}

SpaceTimeBox make_box(int L, double beta, Bc bc) {
  if (L < 1) throw OutOfRange("L must be >= 1");
  if (bc == Bc::PeriodicBoth && L < 2)
    throw NotApplicable("periodic_both needs L >= 2 (distinct wrap column)");
  if (!(beta > 0)) throw OutOfRange("beta must be > 0");
  SpaceTimeBox b;
  b.L = L;
  b.beta = beta;
  b.bc = bc;
  return b;
}

}  // namespace loopmc
