#include "pottssos/periodic_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "pottssos/errors.hpp"
#include "pottssos/polynomial.hpp"

namespace pottssos {

namespace {

void require_m2(const ModelParams& params) {
  if (params.m() != 2) {
    throw UnsupportedDimensionError("period-2 analysis is defined for m = 2 only, got m = " +
                                    std::to_string(params.m()));
  }
}

void require_positive(double theta, double r) {
  if (!(theta > 0.0) || !std::isfinite(theta) || !(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("theta and r must be positive and finite");
  }
}

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

std::vector<double> dedup_sorted(std::vector<double> xs, double rel) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) {
    if (out.empty() || !close_rel(out.back(), x, rel)) out.push_back(x);
  }
  return out;
}

// Sign-change bracketing of g over z = exp(u), u on a uniform grid plus any
// extra nodes, then bisection in u and a Newton polish in z.
std::vector<double> log_grid_roots(const std::function<double(double)>& g,
                                   const std::function<double(double)>& dg, double u_lo,
                                   double u_hi, int panels, const std::vector<double>& extra_u,
                                   const SolverTolerances& tol) {
  std::vector<double> nodes;
  nodes.reserve(static_cast<std::size_t>(panels) + 1 + extra_u.size());
  for (int i = 0; i <= panels; ++i) {
    nodes.push_back(u_lo + (u_hi - u_lo) * static_cast<double>(i) / panels);
  }
  for (double u : extra_u) {
    if (u > u_lo && u < u_hi) nodes.push_back(u);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = g(std::exp(nodes[i]));

  std::vector<double> roots;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (values[i] == 0.0) {
      roots.push_back(std::exp(nodes[i]));
      continue;
    }
    if (i + 1 == nodes.size() || values[i + 1] == 0.0) continue;
    if ((values[i] < 0.0) == (values[i + 1] < 0.0)) continue;

    double lo = nodes[i];
    double hi = nodes[i + 1];
    const bool lo_negative = values[i] < 0.0;
    while (hi - lo > tol.bisection_rel) {
      const double mid = 0.5 * (lo + hi);
      const double v = g(std::exp(mid));
      if (v == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((v < 0.0) == lo_negative) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    double z = std::exp(0.5 * (lo + hi));
    const double z_lo = std::exp(nodes[i]);
    const double z_hi = std::exp(nodes[i + 1]);
    for (int it = 0; it < 3; ++it) {
      const double d = dg(z);
      if (d == 0.0 || !std::isfinite(d)) break;
      const double next = z - g(z) / d;
      if (!(next >= z_lo && next <= z_hi) || std::abs(g(next)) > std::abs(g(z))) break;
      z = next;
    }
    roots.push_back(z);
  }
  return dedup_sorted(std::move(roots), tol.dedup_rel);
}

// ln z window that contains the image of f, so every fixed point and every
// two-cycle point lies inside.
std::pair<double, double> search_window(const ModelParams& params, const SolverTolerances& tol) {
  const double at_zero = std::log(reduced_map(0.0, params));
  const double theta = params.theta();
  const double at_infinity = params.k() * std::log(params.r() / theta);
  const double lo = std::min({-tol.log_half_width, at_zero - 1.0, at_infinity - 1.0});
  const double hi = std::max({tol.log_half_width, at_zero + 1.0, at_infinity + 1.0});
  return {lo, hi};
}

}  // namespace

std::array<double, 4> period2_residual(const Period2Point& p, const ModelParams& params) {
  require_m2(params);
  if (!(p.z0 > 0.0 && p.z1 > 0.0 && p.t0 > 0.0 && p.t1 > 0.0)) {
    throw DomainError("period-2 point components must be positive");
  }
  const double th = params.theta();
  const double th2 = th * th;
  const double r = params.r();
  const int k = params.k();

  // Grouped so that at z0 = t0 = 1 the first and third numerators are the
  // same floating-point sums as their denominators.
  const double den_z = th * p.t1 + (th2 * p.t0 + r);
  const double den_t = th * p.z1 + (th2 * p.z0 + r);
  const double rhs0 = std::pow((th * p.t1 + (r * p.t0 + th2)) / den_z, k);
  const double rhs1 = std::pow((th * p.t0 + r * p.t1 + th) / den_z, k);
  const double rhs2 = std::pow((th * p.z1 + (r * p.z0 + th2)) / den_t, k);
  const double rhs3 = std::pow((th * p.z0 + r * p.z1 + th) / den_t, k);
  return {p.z0 - rhs0, p.z1 - rhs1, p.t0 - rhs2, p.t1 - rhs3};
}

double max_abs(const std::array<double, 4>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double reduced_map(double z, const ModelParams& params) {
  require_m2(params);
  const double th = params.theta();
  const double r = params.r();
  return std::pow((2.0 * th + r * z) / (th * th + th * z + r), params.k());
}

double reduced_map_derivative(double z, const ModelParams& params) {
  require_m2(params);
  const double th = params.theta();
  const double r = params.r();
  const double den = th * th + th * z + r;
  const double u = (2.0 * th + r * z) / den;
  const double du = (r * th * th + r * r - 2.0 * th * th) / (den * den);
  return params.k() * std::pow(u, params.k() - 1) * du;
}

double two_cycle_equation(double z, const ModelParams& params) {
  return reduced_map(reduced_map(z, params), params) - z;
}

QuadraticCoeffs quadratic_coeffs(double theta, double r) {
  require_positive(theta, r);
  const double t = theta;
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t, t6 = t5 * t, t7 = t6 * t,
               t8 = t7 * t;
  const double r2 = r * r, r3 = r2 * r, r4 = r3 * r;

  QuadraticCoeffs q;
  q.a = t6 + 2 * t4 * r + t2 * r2 + r4 + 2 * t * r3 + 2 * t3 * r2;
  q.b = 2 * t7 + 6 * t5 * r + 6 * t3 * r2 + 6 * t * r3 - 4 * t4 + t4 * r2 + 8 * t2 * r2 +
        2 * t2 * r3 + 8 * t4 * r + r4;
  q.c = 4 * t2 * r2 + 4 * t6 * r + r4 + 6 * t4 * r2 + 4 * t2 * r3 + t8 + 4 * t5 * r +
        8 * t3 * r2 + 4 * t * r3;
  return q;
}

QuadraticOracleResult quadratic_coeffs_oracle_detail(double theta, double r) {
  require_positive(theta, r);
  // Extended precision: the degree-5 numerator spans many orders of
  // magnitude at small theta, and long division in double loses the
  // remainder test there.
  using Poly = BasicPolynomial<long double>;
  const long double t = theta;
  const long double rr = r;
  // f(z) = N(z)^2 / M(z)^2 at k = 2.
  const Poly N{2 * t, rr};
  const Poly M{t * t + rr, t};
  const Poly z{0.0L, 1.0L};
  const Poly N2 = N * N;
  const Poly M2 = M * M;

  // f(f(z)) = (2t M^2 + r N^2)^2 / (t^2 M^2 + t N^2 + r M^2)^2.
  const Poly outer_num = 2 * t * M2 + rr * N2;
  const Poly outer_den = t * t * M2 + t * N2 + rr * M2;
  const Poly P = outer_num * outer_num - z * (outer_den * outer_den);
  const Poly Q = N2 - z * M2;

  const auto div = divide(P, Q);
  QuadraticOracleResult out;
  out.remainder_rel = static_cast<double>(div.remainder.max_abs_coeff() / P.max_abs_coeff());
  if (!(out.remainder_rel < 1e-9)) {
    std::ostringstream msg;
    msg << "f(f(z)) - z is not divisible by f(z) - z at theta=" << theta << ", r=" << r
        << " (relative remainder " << out.remainder_rel << ")";
    throw ConsistencyError(msg.str());
  }
  if (div.quotient.degree() != 2) {
    throw ConsistencyError("deflated two-cycle polynomial is not quadratic");
  }
  for (long double c : div.quotient.coeffs()) out.raw_quotient.push_back(static_cast<double>(c));
  const long double scale = quadratic_coeffs(theta, r).a / div.quotient.leading();
  out.scale = static_cast<double>(scale);
  out.coeffs = {static_cast<double>(scale * div.quotient.coeff(2)),
                static_cast<double>(scale * div.quotient.coeff(1)),
                static_cast<double>(scale * div.quotient.coeff(0))};
  return out;
}

QuadraticCoeffs quadratic_coeffs_oracle(double theta, double r) {
  return quadratic_coeffs_oracle_detail(theta, r).coeffs;
}

bool DiscriminantReport::degenerate() const { return std::abs(D_std) <= band && b < 0.0; }

DiscriminantReport discriminant(double theta, double r) {
  const QuadraticCoeffs q = quadratic_coeffs(theta, r);
  DiscriminantReport rep;
  rep.a = q.a;
  rep.b = q.b;
  rep.c = q.c;
  // a = A^2 and c = C^2 with the polynomials below, and b - 2AC equals
  // -(r theta^2 + r^2 - 2 theta^2)^2. Hence b^2 - 4ac = -s^2 (b + 2AC), which
  // keeps full relative accuracy where b^2 and 4ac nearly cancel.
  const double t = theta;
  const double s = r * t * t + r * r - 2.0 * t * t;
  const double A = t * t * t + t * r + r * r;
  const double C = r * r + 2.0 * r * t * t + 2.0 * r * t + t * t * t * t;
  rep.D_std = -s * s * (q.b + 2.0 * A * C);
  if (rep.D_std == 0.0) rep.D_std = 0.0;  // no -0 in reports
  rep.D_paper = q.b * q.b - q.a * q.c;
  rep.band = 1e-12 * std::max(q.b * q.b, std::abs(4.0 * q.a * q.c));
  rep.two_real_positive = rep.D_std > 0.0 && q.b < 0.0;
  return rep;
}

std::vector<double> solve_fixed_points(const ModelParams& params, const SolverTolerances& tol) {
  require_m2(params);
  const auto h = [&](double z) { return reduced_map(z, params) - z; };
  const auto dh = [&](double z) { return reduced_map_derivative(z, params) - 1.0; };

  std::vector<double> roots;
  if (params.k() == 2 && !tol.force_bracketing) {
    const double th = params.theta();
    const double r = params.r();
    const double s = th * th + r;
    const Polynomial cubic{-4.0 * th * th, s * s - 4.0 * th * r, 2.0 * th * s - r * r, th * th};
    for (double z : positive_real_roots(cubic)) {
      const double d = dh(z);
      if (d != 0.0) z -= h(z) / d;
      roots.push_back(z);
    }
    roots = dedup_sorted(std::move(roots), tol.dedup_rel);
  } else {
    const auto [lo, hi] = search_window(params, tol);
    roots = log_grid_roots(h, dh, lo, hi, tol.panels, {}, tol);
  }
  if (roots.empty()) {
    std::ostringstream msg;
    msg << "no fixed point of f found at theta=" << params.theta() << ", r=" << params.r()
        << ", k=" << params.k();
    throw ConsistencyError(msg.str());
  }
  return roots;
}

std::vector<TwoCycle> solve_two_cycles_k2(double theta, double r) {
  const ModelParams params = ModelParams::from_activities(theta, r, 2, 2);
  const DiscriminantReport rep = discriminant(theta, r);

  const auto g = [&](double z) { return two_cycle_equation(z, params); };
  const auto dg = [&](double z) {
    return reduced_map_derivative(reduced_map(z, params), params) *
               reduced_map_derivative(z, params) -
           1.0;
  };
  const auto check = [&](const TwoCycle& c) {
    const double res = max_abs(period2_residual(c.point(), params));
    if (!(res < 1e-9)) {
      std::ostringstream msg;
      msg << "two-cycle (" << c.z1 << ", " << c.t1 << ") at theta=" << theta << ", r=" << r
          << " fails the period-2 system (residual " << res << ")";
      throw ConsistencyError(msg.str());
    }
  };

  if (rep.degenerate()) {
    // Double root: f'(z) = -1 there, so Newton on f(z) - z is well posed.
    double z = -rep.b / (2.0 * rep.a);
    for (int it = 0; it < 4; ++it) {
      z -= (reduced_map(z, params) - z) / (reduced_map_derivative(z, params) - 1.0);
    }
    const TwoCycle c{z, z, true};
    check(c);
    return {c};
  }
  if (!rep.two_real_positive) return {};

  const double q = -0.5 * (rep.b - std::sqrt(rep.D_std));  // b < 0
  double za = rep.c / q;
  double zb = q / rep.a;
  for (double* z : {&za, &zb}) {
    const double d = dg(*z);
    if (d != 0.0) *z -= g(*z) / d;
  }
  if (za > zb) std::swap(za, zb);

  const std::vector<TwoCycle> out{{za, zb, false}, {zb, za, false}};
  for (const TwoCycle& c : out) check(c);
  return out;
}

std::vector<TwoCycle> solve_two_cycles_numeric(const ModelParams& params,
                                               const SolverTolerances& tol) {
  require_m2(params);
  const std::vector<double> fixed = solve_fixed_points(params, tol);

  const auto g = [&](double z) { return two_cycle_equation(z, params); };
  const auto dg = [&](double z) {
    return reduced_map_derivative(reduced_map(z, params), params) *
               reduced_map_derivative(z, params) -
           1.0;
  };

  // Cycle points bifurcating off a fixed point can share a panel with it;
  // nodes just either side of each fixed point split them apart.
  std::vector<double> extra;
  for (double z : fixed) {
    extra.push_back(std::log(z) - 1e-7);
    extra.push_back(std::log(z) + 1e-7);
  }
  const auto [lo, hi] = search_window(params, tol);
  std::vector<double> roots;
  for (double z : log_grid_roots(g, dg, lo, hi, tol.panels, extra, tol)) {
    const bool is_fixed = std::any_of(fixed.begin(), fixed.end(),
                                      [&](double f) { return close_rel(z, f, tol.dedup_rel); });
    if (!is_fixed) roots.push_back(z);
  }

  constexpr double pair_rel = 1e-7;
  std::vector<TwoCycle> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const double image = reduced_map(roots[i], params);
    std::size_t match = roots.size();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i && !used[j] && close_rel(roots[j], image, pair_rel)) {
        match = j;
        break;
      }
    }
    if (match == roots.size()) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "two-cycle root z=" << roots[i] << " has image " << image
          << " outside the root set (theta=" << params.theta() << ", r=" << params.r()
          << ", k=" << params.k() << ")";
      throw ConsistencyError(msg.str());
    }
    used[i] = used[match] = true;
    const double za = std::min(roots[i], roots[match]);
    const double zb = std::max(roots[i], roots[match]);
    out.push_back({za, zb, false});
    out.push_back({zb, za, false});
  }
  return out;
}

int count_unordered_cycles(const std::vector<TwoCycle>& cycles) {
  int ordered = 0;
  int degenerate = 0;
  for (const TwoCycle& c : cycles) (c.degenerate ? degenerate : ordered) += 1;
  return ordered / 2 + degenerate;
}

std::pair<BoundaryField, BoundaryField> fields_from_cycle(const TwoCycle& c) {
  if (!(c.z1 > 0.0) || !(c.t1 > 0.0)) throw DomainError("two-cycle values must be positive");
  return {BoundaryField({0.0, std::log(c.z1)}), BoundaryField({0.0, std::log(c.t1)})};
}

}  // namespace pottssos
