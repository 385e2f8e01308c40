#pragma once

// Period-2 (sublattice-alternating) solutions of the m = 2 compatibility
// system, the scalar reduction f on the (z0, t0) = (1, 1) branch, and the
// closed-form k = 2 analysis of f(f(z)) = z.

#include <array>
#include <utility>
#include <vector>

#include "pottssos/model.hpp"

namespace pottssos {

// z = exp of the even-sublattice field, t = exp of the odd-sublattice field.
struct Period2Point {
  double z0 = 1.0;
  double z1 = 1.0;
  double t0 = 1.0;
  double t1 = 1.0;
};

// Ordered assignment (z1 on the even sublattice, t1 on the odd one) with
// z0 = t0 = 1. A degenerate entry marks the D = 0 tangency, where z1 == t1.
struct TwoCycle {
  double z1 = 1.0;
  double t1 = 1.0;
  bool degenerate = false;

  Period2Point point() const { return {1.0, z1, 1.0, t1}; }
};

// a z^2 + b z + c, whose positive roots are the two-cycle points at k = 2.
struct QuadraticCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct DiscriminantReport {
  double D_std = 0.0;    // b^2 - 4ac
  double D_paper = 0.0;  // b^2 - ac, reported for comparison
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  // |D_std| <= band is treated as D = 0.
  double band = 0.0;
  bool two_real_positive = false;  // D_std > 0 and b < 0

  bool degenerate() const;  // |D_std| <= band and b < 0
};

struct SolverTolerances {
  // Relative distance under which two roots are the same root.
  double dedup_rel = 1e-8;
  // Grid half-width in ln z and panel count for bracketing.
  double log_half_width = 13.815510557964274;  // ln(1e6)
  int panels = 4096;
  double bisection_rel = 1e-13;
  // Use bracketing for fixed points even at k = 2.
  bool force_bracketing = false;
};

// (z0 - rhs0, z1 - rhs1, t0 - rhs2, t1 - rhs3) for the m = 2 system.
// Throws UnsupportedDimensionError unless params.m() == 2.
std::array<double, 4> period2_residual(const Period2Point& p, const ModelParams& params);
double max_abs(const std::array<double, 4>& v);

// f(z) = ((2 theta + r z) / (theta^2 + theta z + r))^k.
double reduced_map(double z, const ModelParams& params);
double reduced_map_derivative(double z, const ModelParams& params);
// f(f(z)) - z.
double two_cycle_equation(double z, const ModelParams& params);

// Printed k = 2 coefficients, evaluated term by term.
QuadraticCoeffs quadratic_coeffs(double theta, double r);

// Independent route to the same quadratic: divide the numerator of
// f(f(z)) - z by that of f(z) - z and rescale. Throws ConsistencyError if the
// division leaves a non-negligible remainder.
struct QuadraticOracleResult {
  QuadraticCoeffs coeffs;
  double remainder_rel = 0.0;  // max |R| / max |P|
  double scale = 0.0;          // factor applied to the raw quotient
  std::vector<double> raw_quotient;
};
QuadraticOracleResult quadratic_coeffs_oracle_detail(double theta, double r);
QuadraticCoeffs quadratic_coeffs_oracle(double theta, double r);

DiscriminantReport discriminant(double theta, double r);

// Positive fixed points of f, ascending. k = 2 goes through the cubic
// (2 theta + r z)^2 - z (theta^2 + theta z + r)^2; other k use bracketing.
std::vector<double> solve_fixed_points(const ModelParams& params,
                                       const SolverTolerances& tol = {});

// Closed-form two-cycles at k = 2, m = 2: both ordered assignments of the
// single cycle when D > 0, b < 0, a single degenerate entry inside the
// D = 0 band, otherwise nothing.
std::vector<TwoCycle> solve_two_cycles_k2(double theta, double r);

// Two-cycles for any k by bracketing f(f(z)) - z on a log grid, removing
// fixed points, and pairing the remaining roots through f.
std::vector<TwoCycle> solve_two_cycles_numeric(const ModelParams& params,
                                               const SolverTolerances& tol = {});

// Unordered cycles in a list of ordered assignments (each cycle appears
// twice, a degenerate entry once).
int count_unordered_cycles(const std::vector<TwoCycle>& cycles);

// (even-sublattice field, odd-sublattice field) = ((0, ln z1), (0, ln t1)).
std::pair<BoundaryField, BoundaryField> fields_from_cycle(const TwoCycle& c);

}  // namespace pottssos
