#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pottssos/periodic_solver.hpp"

namespace pottssos {

// Lower-bound guarantee on the number of non-translation-invariant
// period-2 measures at k = 2.
enum class PhaseLabel {
  two_plus,             // D > band, b < 0
  one_plus_degenerate,  // |D| <= band, b < 0
  none_guaranteed,
};

std::string_view to_string(PhaseLabel label);
// Inverse of to_string; throws DomainError on unknown text.
PhaseLabel phase_label_from_string(std::string_view text);

struct PhasePoint {
  double theta = 0.0;
  double r = 0.0;
  double D_std = 0.0;
  double b = 0.0;
  int n_fixed_points = 0;
  // Unordered cycles found by the numeric solver (observed, not guaranteed).
  int n_two_cycles = 0;
  PhaseLabel label = PhaseLabel::none_guaranteed;
};

struct GridRange {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  // Evenly spaced nodes including both ends; steps == 1 yields {min}.
  std::vector<double> nodes() const;
  // Throws DomainError when min <= 0, steps < 1 or max < min.
  void validate(std::string_view name) const;
};

struct GridSpec {
  GridRange theta;
  GridRange r;
  // When set, r is ignored and every node uses r = theta^2.
  bool r_equals_theta_squared = false;

  void validate() const;
  std::size_t node_count() const;
};

struct SpecialLineValues {
  double D = 0.0;
  double b = 0.0;
};

// Classification at k = 2 with observed fixed-point and cycle counts.
PhasePoint classify(double theta, double r);

// D and b on r = theta^2 from their factored forms:
//   D = -16 theta^8 (theta^2 - 1)^2 (3 theta^4 + 10 theta^3 + 6 theta^2 - 1)
//   b =   4 theta^4 (theta^4 + 5 theta^3 + 4 theta^2 - 1)
SpecialLineValues special_line(double theta);

// 3 theta^4 + 10 theta^3 + 6 theta^2 - 1.
double theta_D_polynomial(double theta);

// Root of theta_D_polynomial in (0, 1) by bisection until the bracket is
// narrower than tol. Throws DomainError for tol < 1e-14.
double find_theta_D(double tol = 1e-12);

// Theta-major, row-major. Nodes are evaluated on a worker pool and written
// back in grid order, so the output does not depend on the thread count.
std::vector<PhasePoint> scan_grid(const GridSpec& grid, unsigned threads = 0);

// r in {0.05, 0.10, ..., 5.00}.
std::vector<double> default_potts_r_values();

// Values of r for which the numeric solver finds a non-degenerate cycle at
// theta = 1, k = 2. Pure Potts admits none, so this is expected empty.
std::vector<double> potts_line_audit(const std::vector<double>& r_values);

}  // namespace pottssos
