#pragma once

#include <optional>
#include <string>

#include "loopmc/errors.hpp"

namespace loopmc {

// Boundary condition of the space-time box.
//  CappedAlternating: open chain, loops closed at t = +-beta/2 by caps over
//                     every other column starting from the left-most one.
//  PeriodicTime:      open chain, time direction identified (cylinder).
//  PeriodicBoth:      periodic chain and periodic time (torus).
enum class Bc { CappedAlternating, PeriodicTime, PeriodicBoth };

enum class ColumnType { A, B };

std::string bc_name(Bc bc);
Bc bc_from_name(const std::string& name);

// One consistent parameter point.  The defining relation is
//     sqrt(Q) = 2S + 1 = e^lambda + e^(-lambda),   Delta = cosh(lambda).
// S exists only when sqrt(Q) is a positive integer; lambda/Delta exist only
// when sqrt(Q) >= 2.  lambda keeps its sign when given explicitly; derived
// values use the lambda >= 0 branch.
struct ModelParams {
  double Q = 4.0;
  double sqrt_q = 2.0;
  bool has_spin = true;
  double S = 0.5;  // valid iff has_spin
  bool has_xxz = true;
  double lambda = 0.0;  // valid iff has_xxz
  double delta = 1.0;   // valid iff has_xxz

  int L = 2;
  double beta = 1.0;
  Bc bc = Bc::CappedAlternating;

  // Throws NotApplicable with a readable message if the field is absent.
  double spin() const;
  double lam() const;
};

struct ParamInput {
  std::optional<double> S;
  std::optional<double> Q;
  std::optional<double> lambda;
  std::optional<double> delta;
};

// Completes a partial parameter set and validates consistency to 1e-12
// (relative).  Throws OutOfRange / Inconsistent / ConfigError.
ModelParams normalize_params(const ParamInput& in, int L, double beta, Bc bc);

// Geometry of the box: sites -L+1..L (2L vertical lines), columns = edges.
// Column index c has lower site -L+1+c; the wrap column (PeriodicBoth only)
// has index 2L-1 and joins sites L and -L+1.
struct SpaceTimeBox {
  int L = 1;
  double beta = 1.0;
  Bc bc = Bc::CappedAlternating;

  int n_lines() const { return 2 * L; }
  int n_columns() const { return bc == Bc::PeriodicBoth ? 2 * L : 2 * L - 1; }
  int site_lo() const { return -L + 1; }
  int site_hi() const { return L; }
  int line_of_site(int u) const { return u + L - 1; }
  int site_of_line(int li) const { return li - L + 1; }

  int column_lower_site(int c) const { return -L + 1 + c; }  // wrap: == L
  int column_upper_site(int c) const {
    return c == 2 * L - 1 ? -L + 1 : -L + 2 + c;
  }
  ColumnType column_type(int c) const {
    // A columns are (2n, 2n+1): even lower site.
    int lo = column_lower_site(c);
    return ((lo % 2) == 0) ? ColumnType::A : ColumnType::B;
  }

  bool time_periodic() const { return bc != Bc::CappedAlternating; }
  bool space_periodic() const { return bc == Bc::PeriodicBoth; }

  // Caps sit over columns 0, 2, ..., 2L-2 (one per site pair, L in total).
  bool is_capped_column(int c) const {
    return bc == Bc::CappedAlternating && (c % 2) == 0;
  }
  int n_cap_columns() const { return bc == Bc::CappedAlternating ? L : 0; }
  // Lines paired by a cap differ in the lowest bit of the line index.
  int cap_partner_line(int li) const { return li ^ 1; }

  // Column adjacent to site u on its left/right; -1 if none.
  int left_column_of_site(int u) const {
    if (u > site_lo()) return u + L - 2;
    return space_periodic() ? 2 * L - 1 : -1;
  }
  int right_column_of_site(int u) const {
    if (u < site_hi()) return u + L - 1;
    return space_periodic() ? 2 * L - 1 : -1;
  }

  double t_lo() const { return -beta / 2; }
  double t_hi() const { return beta / 2; }
  // Total intensity of the background Poisson process (columns x time).
  double total_intensity() const { return n_columns() * beta; }
};

SpaceTimeBox make_box(int L, double beta, Bc bc);
inline SpaceTimeBox make_box(const ModelParams& p) {
  return make_box(p.L, p.beta, p.bc);
}

}  // namespace loopmc
