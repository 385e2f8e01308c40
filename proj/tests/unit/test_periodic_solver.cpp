#include <doctest.h>

#include <cmath>
#include <random>

#include "pottssos/errors.hpp"
#include "pottssos/periodic_solver.hpp"

using namespace pottssos;

namespace {

ModelParams act(double theta, double r, int k = 2) {
  return ModelParams::from_activities(theta, r, 2, k);
}

// Reference cycle at theta = 0.3, r = 0.09 (30-digit root of the printed
// quadratic, cross-checked against f(f(z)) = z).
constexpr double kCycleLow = 0.53128750113729600;
constexpr double kCycleHigh = 3.6434657019712946;

}  // namespace

TEST_CASE("period-2 residual examples") {
  const auto r = period2_residual({1, 1, 1, 1}, act(1.0, 1.0));
  for (double x : r) CHECK(x == 0.0);

  const auto p = act(2.0, 3.0);
  const auto res = period2_residual({1.0, 0.4, 1.0, 7.0}, p);
  CHECK(res[0] == 0.0);
  CHECK(res[2] == 0.0);
  CHECK(std::abs(res[1]) > 0.0);

  CHECK_THROWS_AS(period2_residual({1, 1, 1, 1}, ModelParams::from_activities(1, 1, 3)),
                  UnsupportedDimensionError);
  CHECK_THROWS_AS(period2_residual({1, -1, 1, 1}, p), DomainError);
}

TEST_CASE("unit branch vanishes identically") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> a(0.01, 5.0);
  std::uniform_real_distribution<double> z(0.001, 100.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = act(a(rng), a(rng), 1 + trial % 4);
    const auto res = period2_residual({1.0, z(rng), 1.0, z(rng)}, p);
    worst = std::max({worst, std::abs(res[0]), std::abs(res[2])});
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("reduced map") {
  const auto unit = act(1.0, 1.0);
  for (double z : {0.0, 0.3, 1.0, 17.0}) CHECK(reduced_map(z, unit) == doctest::Approx(1.0));
  CHECK(reduced_map(1.0, act(2.0, 3.0)) == doctest::Approx(49.0 / 81.0).epsilon(1e-15));
  CHECK(reduced_map(0.0, act(0.5, 0.25)) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("reduced map derivative sign") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> a(0.05, 3.0);
  std::uniform_real_distribution<double> lz(-5.0, 5.0);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double th = a(rng), r = a(rng);
    const double s = r * th * th + r * r - 2 * th * th;
    if (std::abs(s) < 1e-6) continue;
    const auto p = act(th, r, 1 + trial % 3);
    const double z = std::exp(lz(rng));
    const double h = 1e-6 * z;
    const double fd = (reduced_map(z + h, p) - reduced_map(z - h, p)) / (2 * h);
    CHECK((fd > 0) == (s > 0));
    CHECK(reduced_map_derivative(z, p) == doctest::Approx(fd).epsilon(1e-5));
    ++checked;
  }
  CHECK(checked > 90);
}

TEST_CASE("two-cycle equation") {
  CHECK(two_cycle_equation(1.0, act(1.0, 1.0)) == 0.0);
  const auto p = act(0.3, 0.09);
  CHECK(std::abs(two_cycle_equation(kCycleLow, p)) < 1e-12);
  CHECK(std::abs(two_cycle_equation(kCycleHigh, p)) < 1e-12);
}

TEST_CASE("printed quadratic") {
  const auto q = quadratic_coeffs(1.0, 1.0);
  CHECK(q.a == 9.0);
  CHECK(q.b == 36.0);
  CHECK(q.c == 36.0);
  CHECK(quadratic_coeffs(2.0, 3.0).a == 529.0);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> a(0.01, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double th = a(rng), r = a(rng);
    const auto c = quadratic_coeffs(th, r);
    CHECK(c.a > 0.0);
    CHECK(c.c > 0.0);
    const double sq = th * th * th + th * r + r * r;
    CHECK(c.a == doctest::Approx(sq * sq).epsilon(1e-12));
  }
}

TEST_CASE("quadratic oracle by polynomial division") {
  const auto unit = quadratic_coeffs_oracle_detail(1.0, 1.0);
  CHECK(unit.coeffs.a == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(unit.coeffs.b == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(unit.coeffs.c == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(unit.remainder_rel < 1e-12);

  // Leading terms: -theta^2 (theta^3 + theta r + r^2)^2 over -theta^2.
  const auto d = quadratic_coeffs_oracle_detail(2.0, 3.0);
  CHECK(d.raw_quotient[2] == doctest::Approx(529.0).epsilon(1e-12));
  CHECK(d.scale == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> a(0.05, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double th = a(rng), r = a(rng);
    const auto o = quadratic_coeffs_oracle_detail(th, r);
    const auto q = quadratic_coeffs(th, r);
    CHECK(o.remainder_rel < 1e-9);
    CHECK(o.coeffs.a == doctest::Approx(q.a).epsilon(1e-9));
    CHECK(o.coeffs.b == doctest::Approx(q.b).epsilon(1e-9));
    CHECK(o.coeffs.c == doctest::Approx(q.c).epsilon(1e-9));
  }
}

TEST_CASE("discriminant") {
  const auto d1 = discriminant(1.0, 1.0);
  CHECK(d1.D_std == 0.0);
  CHECK(d1.b == 36.0);
  CHECK_FALSE(d1.two_real_positive);
  CHECK_FALSE(d1.degenerate());  // b > 0
  CHECK(d1.D_paper == 36.0 * 36.0 - 9.0 * 36.0);

  // Factored forms on r = theta^2, evaluated independently here.
  const auto special = [](double t) {
    const double D = -16 * std::pow(t, 8) * std::pow(t * t - 1, 2) *
                     (3 * std::pow(t, 4) + 10 * std::pow(t, 3) + 6 * t * t - 1);
    const double b = 4 * std::pow(t, 4) * (std::pow(t, 4) + 5 * std::pow(t, 3) + 4 * t * t - 1);
    return std::pair{D, b};
  };
  const auto d3 = discriminant(0.3, 0.09);
  CHECK(d3.D_std == doctest::Approx(special(0.3).first).epsilon(1e-9));
  CHECK(d3.D_std == doctest::Approx(1.4404404661920006e-4).epsilon(1e-9));
  CHECK(d3.b == doctest::Approx(-0.01609956).epsilon(1e-12));
  CHECK(d3.two_real_positive);

  const auto d5 = discriminant(0.5, 0.25);
  CHECK(d5.D_std == doctest::Approx(-0.068115234375).epsilon(1e-9));
  CHECK(d5.D_std == doctest::Approx(special(0.5).first).epsilon(1e-9));
  CHECK_FALSE(d5.two_real_positive);
}

TEST_CASE("discriminant equals b^2 - 4ac") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> a(0.05, 3.0);
  for (int i = 0; i < 500; ++i) {
    const double th = a(rng), r = a(rng);
    const auto d = discriminant(th, r);
    const double naive = d.b * d.b - 4.0 * d.a * d.c;
    CHECK(std::abs(d.D_std - naive) <= 1e-13 * std::max(d.b * d.b, 4.0 * d.a * d.c));
    CHECK(d.two_real_positive == (d.D_std > 0.0 && d.b < 0.0));
    CHECK(d.band == 1e-12 * std::max(d.b * d.b, 4.0 * d.a * d.c));
  }
}

TEST_CASE("fixed points") {
  CHECK(solve_fixed_points(act(1.0, 1.0)) == std::vector<double>{1.0});
  for (double r : {0.1, 0.5, 2.0, 7.0}) {
    const auto fp = solve_fixed_points(act(1.0, r));
    bool has_one = false;
    for (double z : fp) has_one |= std::abs(z - 1.0) < 1e-12;
    CHECK(has_one);
  }
  const auto fp = solve_fixed_points(act(2.0, 3.0));
  REQUIRE(fp.size() == 1);
  CHECK(fp[0] > 0.4);
  CHECK(fp[0] < 0.5);
  CHECK(fp[0] == doctest::Approx(0.46200264837997167).epsilon(1e-14));

  CHECK_THROWS_AS(solve_fixed_points(ModelParams::from_activities(1, 1, 3)),
                  UnsupportedDimensionError);
}

TEST_CASE("fixed points: cubic roots match bracketing and a brute-force count") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> a(0.05, 3.0);
  SolverTolerances bracketing;
  bracketing.force_bracketing = true;
  for (int i = 0; i < 100; ++i) {
    const auto p = act(a(rng), a(rng));
    const auto fp = solve_fixed_points(p);
    REQUIRE_FALSE(fp.empty());
    const auto fb = solve_fixed_points(p, bracketing);
    REQUIRE(fb.size() == fp.size());
    for (std::size_t j = 0; j < fp.size(); ++j) {
      CHECK(fb[j] == doctest::Approx(fp[j]).epsilon(1e-10));
    }
    for (double z : fp) CHECK(std::abs(reduced_map(z, p) - z) < 1e-10 * std::max(1.0, z));
    // Brute-force count of sign changes on a fine log grid.
    int changes = 0;
    double prev = reduced_map(1e-6, p) - 1e-6;
    for (int j = 1; j <= 200000; ++j) {
      const double z = std::exp(std::log(1e-6) + j * (std::log(1e12) / 200000));
      const double v = reduced_map(z, p) - z;
      if ((v < 0) != (prev < 0)) ++changes;
      prev = v;
    }
    CHECK(changes == static_cast<int>(fp.size()));
  }
}

TEST_CASE("fixed points for other k") {
  for (int k : {1, 3, 4}) {
    const auto p = act(0.4, 0.7, k);
    const auto fp = solve_fixed_points(p);
    REQUIRE_FALSE(fp.empty());
    for (double z : fp) CHECK(std::abs(reduced_map(z, p) - z) < 1e-10 * std::max(1.0, z));
  }
  CHECK(solve_fixed_points(act(1.0, 1.0, 5)).size() == 1);
}

TEST_CASE("closed-form two-cycles") {
  const auto cycles = solve_two_cycles_k2(0.3, 0.09);
  REQUIRE(cycles.size() == 2);
  CHECK(count_unordered_cycles(cycles) == 1);
  CHECK(cycles[0].z1 == doctest::Approx(kCycleLow).epsilon(1e-12));
  CHECK(cycles[0].t1 == doctest::Approx(kCycleHigh).epsilon(1e-12));
  CHECK(cycles[1].z1 == cycles[0].t1);
  CHECK(cycles[1].t1 == cycles[0].z1);
  const auto p = act(0.3, 0.09);
  for (const auto& c : cycles) {
    CHECK_FALSE(c.degenerate);
    CHECK(max_abs(period2_residual(c.point(), p)) < 1e-9);
    CHECK(std::abs(reduced_map(c.z1, p) - c.t1) < 1e-12);
  }

  CHECK(solve_two_cycles_k2(1.0, 1.0).empty());
  CHECK(solve_two_cycles_k2(0.5, 0.25).empty());
}

TEST_CASE("numeric two-cycles agree with closed form") {
  const auto numeric = solve_two_cycles_numeric(act(0.3, 0.09));
  const auto closed = solve_two_cycles_k2(0.3, 0.09);
  REQUIRE(numeric.size() == closed.size());
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    CHECK(numeric[i].z1 == doctest::Approx(closed[i].z1).epsilon(1e-8));
    CHECK(numeric[i].t1 == doctest::Approx(closed[i].t1).epsilon(1e-8));
  }
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) CHECK(solve_two_cycles_numeric(act(1.0, r)).empty());
  for (int k = 1; k <= 5; ++k) CHECK(solve_two_cycles_numeric(act(1.0, 1.0, k)).empty());
}

TEST_CASE("cycle validity and criterion") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> a(0.05, 3.0);
  std::uniform_real_distribution<double> small(0.02, 0.5);
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    // Bias half the samples toward small activities where cycles live.
    const double th = i % 2 ? a(rng) : small(rng);
    const double r = i % 2 ? a(rng) : th * th * (0.5 + small(rng) * 2);
    const auto p = act(th, r);
    const auto cycles = solve_two_cycles_numeric(p);
    for (const auto& c : cycles) {
      CHECK(std::abs(two_cycle_equation(c.z1, p)) < 1e-10);
      CHECK(std::abs(reduced_map(c.z1, p) - c.z1) > 1e-8 * c.z1);
    }
    if (!cycles.empty()) {
      ++found;
      const auto d = discriminant(th, r);
      CHECK(d.D_std > 0.0);
      CHECK(d.b < 0.0);
    }
  }
  CHECK(found > 0);
}

TEST_CASE("numeric cycles for k != 2") {
  // k = 3 at small activities: f is strongly decreasing and period doubling
  // occurs; whatever is found must be a genuine cycle.
  for (int k : {1, 3, 4}) {
    for (double th : {0.1, 0.2, 0.3}) {
      const auto p = act(th, th * th, k);
      for (const auto& c : solve_two_cycles_numeric(p)) {
        CHECK(std::abs(reduced_map(c.z1, p) - c.t1) < 1e-8 * c.t1);
        CHECK(std::abs(reduced_map(c.t1, p) - c.z1) < 1e-8 * c.z1);
        CHECK(max_abs(period2_residual(c.point(), p)) < 1e-9 * std::max(1.0, c.z1 + c.t1));
      }
    }
  }
}

TEST_CASE("fields from cycle") {
  const auto [even, odd] = fields_from_cycle({std::exp(1.0), std::exp(2.0), false});
  CHECK(even[0] == 0.0);
  CHECK(even[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(odd[0] == 0.0);
  CHECK(odd[1] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(fields_from_cycle({0.0, 1.0, false}), DomainError);
}
