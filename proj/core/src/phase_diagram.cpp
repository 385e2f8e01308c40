#include "pottssos/phase_diagram.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <thread>

#include "pottssos/errors.hpp"

namespace pottssos {

std::string_view to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::two_plus:
      return "TWO_PLUS";
    case PhaseLabel::one_plus_degenerate:
      return "ONE_PLUS_DEGENERATE";
    case PhaseLabel::none_guaranteed:
      return "NONE_GUARANTEED";
  }
  return "NONE_GUARANTEED";
}

PhaseLabel phase_label_from_string(std::string_view text) {
  for (PhaseLabel l : {PhaseLabel::two_plus, PhaseLabel::one_plus_degenerate,
                       PhaseLabel::none_guaranteed}) {
    if (to_string(l) == text) return l;
  }
  throw DomainError("unknown phase label '" + std::string(text) + "'");
}

std::vector<double> GridRange::nodes() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  if (steps == 1) {
    out.push_back(min);
    return out;
  }
  for (int i = 0; i < steps; ++i) {
    out.push_back(i + 1 == steps ? max : min + (max - min) * i / (steps - 1));
  }
  return out;
}

void GridRange::validate(std::string_view name) const {
  const std::string n(name);
  if (!(min > 0.0) || !std::isfinite(min)) throw DomainError(n + " min must be positive");
  if (!std::isfinite(max) || max < min) throw DomainError(n + " max must be >= min");
  if (steps < 1) throw DomainError(n + " steps must be >= 1");
}

void GridSpec::validate() const {
  theta.validate("theta");
  if (!r_equals_theta_squared) r.validate("r");
}

std::size_t GridSpec::node_count() const {
  const auto t = static_cast<std::size_t>(theta.steps);
  return r_equals_theta_squared ? t : t * static_cast<std::size_t>(r.steps);
}

PhasePoint classify(double theta, double r) {
  const DiscriminantReport rep = discriminant(theta, r);
  const ModelParams params = ModelParams::from_activities(theta, r, 2, 2);

  PhasePoint p;
  p.theta = theta;
  p.r = r;
  p.D_std = rep.D_std;
  p.b = rep.b;
  p.n_fixed_points = static_cast<int>(solve_fixed_points(params).size());
  p.n_two_cycles = count_unordered_cycles(solve_two_cycles_numeric(params));
  if (rep.degenerate()) {
    p.label = PhaseLabel::one_plus_degenerate;
  } else if (rep.D_std > rep.band && rep.b < 0.0) {
    p.label = PhaseLabel::two_plus;
  } else {
    p.label = PhaseLabel::none_guaranteed;
  }
  return p;
}

SpecialLineValues special_line(double theta) {
  if (!(theta > 0.0)) throw DomainError("theta must be positive");
  const double t = theta;
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t8 = t4 * t4;
  const double s = t2 - 1.0;
  return {-16.0 * t8 * s * s * theta_D_polynomial(t), 4.0 * t4 * (t4 + 5.0 * t3 + 4.0 * t2 - 1.0)};
}

double theta_D_polynomial(double theta) {
  const double t = theta;
  return ((3.0 * t + 10.0) * t + 6.0) * t * t - 1.0;
}

double find_theta_D(double tol) {
  if (!(tol >= 1e-14) || !std::isfinite(tol)) {
    throw DomainError("tolerance must be >= 1e-14");
  }
  // p(0) = -1, p(1) = 18, and p is increasing on (0, 1).
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (theta_D_polynomial(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<PhasePoint> scan_grid(const GridSpec& grid, unsigned threads) {
  grid.validate();
  std::vector<std::pair<double, double>> nodes;
  nodes.reserve(grid.node_count());
  for (double t : grid.theta.nodes()) {
    if (grid.r_equals_theta_squared) {
      nodes.emplace_back(t, t * t);
    } else {
      for (double r : grid.r.nodes()) nodes.emplace_back(t, r);
    }
  }

  std::vector<PhasePoint> out(nodes.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, nodes.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  const auto worker = [&] {
    for (std::size_t i = next++; i < nodes.size() && !failed; i = next++) {
      try {
        out[i] = classify(nodes[i].first, nodes[i].second);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<double> default_potts_r_values() {
  std::vector<double> out;
  for (int i = 1; i <= 100; ++i) out.push_back(0.05 * i);
  return out;
}

std::vector<double> potts_line_audit(const std::vector<double>& r_values) {
  std::vector<double> violations;
  for (double r : r_values) {
    const ModelParams params = ModelParams::from_activities(1.0, r, 2, 2);
    const auto cycles = solve_two_cycles_numeric(params);
    const bool found = std::any_of(cycles.begin(), cycles.end(),
                                   [](const TwoCycle& c) { return !c.degenerate; });
    if (found) violations.push_back(r);
  }
  return violations;
}

}  // namespace pottssos
